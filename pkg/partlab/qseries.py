# -*- coding: utf8 -*-
########################################################################################
# This file is part of partlab.                                                        #
# Full BSD 3-Clause license available in the LICENSE file at the repository root.     #
########################################################################################
'''
Truncated formal power series in ``q`` over the integers, and the partition generating
functions built from them.

A series of order ``N`` knows its coefficients of ``q^0, ..., q^N`` exactly and nothing
beyond, so reading a coefficient above ``N`` is an error rather than a zero.  Combining
two series keeps the smaller order.

The infinite product ``(q)_inf = prod_{m >= 1} (1 - q^m)`` is represented at order
``N`` by ``(q)_N``: every factor with ``m > N`` is ``1`` modulo ``q^(N + 1)``.
'''

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from . import spt
from . import utils
from .exceptions import SeriesError, SeriesOrderError, UnknownSelectorError


class TruncatedSeries:
    '''
    An immutable power series ``sum_{i=0}^{order} c_i q^i``.

    **Parameters**
        ``coefficients`` (iterable of int)
            ``c_0, ..., c_order``; at least one is required.
    '''

    __slots__ = ("_coefficients",)

    def __init__(self, coefficients: Iterable[int]):
        coefficients = tuple(coefficients)
        if not coefficients:
            raise SeriesError("A truncated series needs at least its constant coefficient.")
        for c in coefficients:
            utils.require_int("coefficient", c)
        self._coefficients = coefficients

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.monomial(0, order)

    @classmethod
    def monomial(cls, power: int, order: int, coeff: int = 1) -> "TruncatedSeries":
        ''' ``coeff * q^power`` at ``order`` (``0`` when ``power > order``). '''
        utils.require_int("order", order, minimum=0)
        utils.require_int("power", power, minimum=0)
        coefficients = [0] * (order + 1)
        if power <= order:
            coefficients[power] = coeff
        return cls(coefficients)

    @property
    def coefficients(self) -> Tuple[int, ...]:
        return self._coefficients

    @property
    def order(self) -> int:
        return len(self._coefficients) - 1

    def __len__(self):
        return len(self._coefficients)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return self._coefficients[index]
        if index < 0 or index > self.order:
            raise SeriesOrderError("Coefficient {0} requested from a series of order {1}.".format(
                index, self.order
            ))
        return self._coefficients[index]

    def __iter__(self):
        return iter(self._coefficients)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coefficients == other._coefficients

    def __hash__(self):
        return hash(self._coefficients)

    def __repr__(self):
        return "TruncatedSeries({0!r})".format(list(self._coefficients))

    def __str__(self):
        terms = []
        for power, c in enumerate(self._coefficients):
            if c == 0:
                continue
            if power == 0:
                terms.append(str(c))
            elif power == 1:
                terms.append("{0}q".format(c))
            else:
                terms.append("{0}q^{1}".format(c, power))
        return "{0} + O(q^{1})".format(" + ".join(terms) or "0", self.order + 1)

    ####################################################################################
    # Ring operations                                                                  #
    ####################################################################################
    def _common(self, other):
        order = min(self.order, other.order)
        return self._coefficients[:order + 1], other._coefficients[:order + 1]

    def __add__(self, other):
        if isinstance(other, int):
            other = TruncatedSeries.monomial(0, self.order, other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        mine, theirs = self._common(other)
        return TruncatedSeries(x + y for x, y in zip(mine, theirs))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-c for c in self._coefficients)

    def __sub__(self, other):
        if isinstance(other, (int, TruncatedSeries)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries(other * c for c in self._coefficients)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    ####################################################################################
    # Structured operations                                                            #
    ####################################################################################
    def truncate(self, order: int) -> "TruncatedSeries":
        ''' The same series at a lower (or equal) order. '''
        utils.require_int("order", order, minimum=0)
        if order > self.order:
            raise SeriesOrderError("Cannot raise the order of a series from {0} to {1}.".format(
                self.order, order
            ))
        return TruncatedSeries(self._coefficients[:order + 1])

    def shift(self, power: int) -> "TruncatedSeries":
        ''' ``q^power`` times this series, at the same order. '''
        utils.require_int("power", power, minimum=0)
        if power > self.order:
            return TruncatedSeries.monomial(0, self.order, 0)
        return TruncatedSeries((0,) * power + self._coefficients[:len(self) - power])

    def times_one_minus(self, step: int) -> "TruncatedSeries":
        ''' Multiply by ``1 - q^step`` without a full Cauchy product. '''
        utils.require_int("step", step, minimum=1)
        c = self._coefficients
        return TruncatedSeries(c[i] - (c[i - step] if i >= step else 0) for i in range(len(c)))

    def over_one_minus(self, step: int) -> "TruncatedSeries":
        ''' Divide by ``1 - q^step``, i.e. multiply by ``sum_j q^(j step)``. '''
        utils.require_int("step", step, minimum=1)
        out = list(self._coefficients)
        for i in range(step, len(out)):
            out[i] += out[i - step]
        return TruncatedSeries(out)

    def power(self, exponent: int) -> "TruncatedSeries":
        ''' This series to a nonnegative integer power by repeated squaring. '''
        utils.require_int("exponent", exponent, minimum=0)
        result = TruncatedSeries.one(self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result


def mul(s1: TruncatedSeries, s2: TruncatedSeries) -> TruncatedSeries:
    ''' The Cauchy product truncated to ``min(s1.order, s2.order)``. '''
    a, b = s1._common(s2)
    order = len(a) - 1
    out = [0] * (order + 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j in range(order - i + 1):
            out[i + j] += x * b[j]
    return TruncatedSeries(out)


def invert(s: TruncatedSeries) -> TruncatedSeries:
    '''
    The multiplicative inverse of ``s`` to the same order.

    **Raises**
        :class:`~partlab.exceptions.SeriesError`
            When the constant coefficient is not ``1`` or ``-1`` (the inverse would not
            have integer coefficients).
    '''
    c0 = s[0]
    if c0 not in (1, -1):
        raise SeriesError("Only series with constant coefficient +1 or -1 are invertible, got {0}.".format(c0))
    a = s.coefficients
    out = [c0]
    # a_0 b_n = -sum_{i=1}^{n} a_i b_{n-i}, and 1 / a_0 == a_0
    for n in range(1, len(a)):
        out.append(-c0 * sum(a[i] * out[n - i] for i in range(1, n + 1)))
    return TruncatedSeries(out)


def pochhammer_q(n: int, order: int) -> TruncatedSeries:
    '''
    ``(q)_n = prod_{m=1}^{n} (1 - q^m)`` at ``order``; ``(q)_0 = 1``.

    Factors with ``m > order`` are ``1`` at this order and skipped.
    '''
    utils.require_int("n", n, minimum=0)
    utils.require_int("order", order, minimum=0)
    result = TruncatedSeries.one(order)
    for m in range(1, min(n, order) + 1):
        result = result.times_one_minus(m)
    return result


def euler_product(order: int) -> TruncatedSeries:
    ''' ``(q)_inf`` at ``order``. '''
    return pochhammer_q(order, order)


def _partition_series(order):
    # 1 / (q)_inf, one geometric series per part size
    result = TruncatedSeries.one(order)
    for m in range(1, order + 1):
        result = result.over_one_minus(m)
    return result


def gf_p_coefficients(order: int) -> List[int]:
    '''
    The coefficients of ``1 / (q)_inf`` up to ``q^order``; entry ``n`` is ``p(n)``.
    '''
    utils.require_int("order", order, minimum=0)
    return list(_partition_series(order).coefficients)


def _smallest_part_sum(order, weight, exponent):
    # sum_{n=1}^{order} weight(n) (q^n (q)_{n-1} / (1 - q^n))^exponent
    total = TruncatedSeries.monomial(0, order, 0)
    prefix = TruncatedSeries.one(order)  # (q)_{n-1}
    for n in range(1, order + 1):
        term = prefix.shift(n).over_one_minus(n)
        total = total + term.power(exponent) * weight(n)
        prefix = prefix.times_one_minus(n)
    return total


GF_SPT_VARIANTS = {
    (0, 1): lambda n: 1,
    (1, 1): lambda n: n,
}
''' The spt generating functions with a known closed form, ``(a, b) -> weight``. '''


def gf_spt(variant: Tuple[int, int], order: int) -> List[int]:
    '''
    Coefficients of ``(1 / (q)_inf) sum_{n >= 1} w(n) q^n (q)_{n-1} / (1 - q^n)``
    up to ``q^order``, with ``w(n) = 1`` for the ``(0, 1)`` variant and ``w(n) = n``
    for ``(1, 1)``.  Entry ``n >= 1`` is ``spt_(a,b)(n)``.

    **Raises**
        :class:`~partlab.exceptions.UnknownSelectorError`
            For any other variant.
    '''
    variant = tuple(variant)
    if variant not in GF_SPT_VARIANTS:
        raise UnknownSelectorError("generating function variant", variant, GF_SPT_VARIANTS)
    utils.require_int("order", order, minimum=0)
    series = _partition_series(order) * _smallest_part_sum(order, GF_SPT_VARIANTS[variant], 1)
    return list(series.coefficients)


@dataclass(frozen=True)
class ConjectureReport:
    '''
    The coefficients of ``(1 / (q)_inf) sum_n n^a (q^n (q)_{n-1} / (1 - q^n))^b``
    next to ``spt_(a,b)(n)`` for ``1 <= n <= order``.

    ``rows`` holds ``(n, series_value, spt_value)``.
    '''
    a: int
    b: int
    order: int
    rows: Tuple[Tuple[int, int, int], ...]
    first_mismatch: Optional[int]

    @property
    def agrees(self) -> bool:
        return self.first_mismatch is None


def conjecture_report(a: int, b: int, order: int) -> ConjectureReport:
    '''
    Compare the candidate generating function for ``spt_(a,b)`` against the exact
    values.  Nothing is asserted, the report says where (if anywhere) they first differ.

    **Raises**
        :class:`~partlab.exceptions.DomainError`
            Unless ``a >= 0``, ``b >= 1`` and ``order >= 1``.
    '''
    utils.require_int("a", a, minimum=0)
    utils.require_int("b", b, minimum=1)
    utils.require_int("order", order, minimum=1)
    params = spt.SptParams(a, b)

    start = utils.get_time()
    series = _partition_series(order) * _smallest_part_sum(order, lambda n: n ** a, b)
    rows = tuple((n, series[n], spt.spt_total(params, n)) for n in range(1, order + 1))
    first_mismatch = next((n for n, lhs, rhs in rows if lhs != rhs), None)
    end = utils.get_time()

    # << verboseBuild
    utils.verbose_log("conjecture_report({0}, {1}, {2}): first mismatch {3}, {4}.".format(
        a, b, order, first_mismatch, utils.time_string(start, end)
    ), utils.AnsiColors.DIM_CYAN)
    return ConjectureReport(a, b, order, rows, first_mismatch)
