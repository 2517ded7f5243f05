# -*- coding: utf8 -*-
########################################################################################
# This file is part of partlab.                                                        #
# Full BSD 3-Clause license available in the LICENSE file at the repository root.     #
########################################################################################
'''
The generalized smallest parts function

.. code-block:: none

   spt_(a,b)(n) = sum over partitions L of n of sigma(L)^a * count(L)^b

where ``sigma`` is the smallest part and ``count`` its multiplicity.  ``(0, 1)`` is
the classical spt function.

Restricted to ``k`` parts, a partition with smallest part ``m`` appearing ``k - v``
times becomes a partition of ``n - k m`` into ``v`` parts after subtracting ``m`` from
every part, which gives

.. code-block:: none

   spt_(a,b)(n, k) = floor(n/k)^a * [k | n] * (k^b - (k-1)^b)
                   + sum_{m=1}^{floor(n/k)} m^a sum_{v=1}^{k-1} (k-v)^b p(n - k m, v)

The bracket ``[k | n]`` is written ``floor(k floor(n/k) / n)``.  The first term fixes
up the partition with ``k`` equal parts, which the double sum counts through the
convention ``p(0, 1) = 1`` with multiplicity ``k - 1`` instead of ``k``.
'''

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

from . import partition_fn
from . import utils
from .exceptions import DomainError, UnknownSelectorError


@dataclass(frozen=True)
class SptParams:
    ''' The exponents ``a`` (on the smallest part) and ``b`` (on its multiplicity). '''
    a: int
    b: int

    def __post_init__(self):
        utils.require_int("a", self.a, minimum=0)
        utils.require_int("b", self.b, minimum=0)

    def __str__(self):
        return "({0},{1})".format(self.a, self.b)


def _divides_indicator(n, k):
    return (k * (n // k)) // n


def _multiplicity_gap(k, b):
    # k^b - (k-1)^b, where the single part of a k = 1 partition counts once
    if k == 1:
        return 1
    return k ** b - (k - 1) ** b


def smallest_part_tail(params: SptParams, n: int, k: int) -> int:
    ''' ``sum_{m=1}^{floor(n/k)} m^a sum_{v=1}^{k-1} (k-v)^b p(n - k m, v)``. '''
    a, b = params.a, params.b
    total = 0
    for m in range(1, n // k + 1):
        inner = 0
        for v in range(1, k):
            inner += (k - v) ** b * partition_fn.p_recursive(n - k * m, v)
        total += m ** a * inner
    return total


def _degenerate(n, k):
    if n == 0 and k == 1:
        return 1
    if n < 1 or k < 1 or k > n:
        return 0
    return None


def spt_nk(params: SptParams, n: int, k: int) -> int:
    '''
    ``spt_(a,b)(n, k)``, the generalized spt function over partitions with ``k`` parts.

    ``spt_(a,b)(0, 1) = 1`` by convention; out of range ``(n, k)`` give ``0``.
    '''
    utils.require_int("n", n)
    utils.require_int("k", k)
    fixed = _degenerate(n, k)
    if fixed is not None:
        return fixed
    head = (n // k) ** params.a * _divides_indicator(n, k) * _multiplicity_gap(k, params.b)
    return head + smallest_part_tail(params, n, k)


def spt_total(params: SptParams, n: int) -> int:
    '''
    ``spt_(a,b)(n) = sum_{k=1}^{n} spt_(a,b)(n, k)``.

    **Raises**
        :class:`~partlab.exceptions.DomainError`
            When ``n < 1``, the function is only defined on partitions of ``n >= 1``.
    '''
    utils.require_int("n", n)
    if n < 1:
        raise DomainError("spt_total is defined for n >= 1, but got n={0}.".format(n))
    return sum(spt_nk(params, n, k) for k in range(1, n + 1))


########################################################################################
# Special cases.  Each one is evaluated from its own display rather than through
# spt_nk so that the two can be checked against each other.
########################################################################################
def _spt10(n, k, exponent):
    if k == 1:
        return n
    total = 0
    for m in range(1, n // k + 1):
        total += m * sum(partition_fn.p_recursive(n - k * m, v) for v in range(1, k))
    return total


def _spta0(n, k, exponent):
    if k == 1:
        return n ** exponent
    total = 0
    for m in range(1, n // k + 1):
        total += m ** exponent * sum(partition_fn.p_recursive(n - k * m, v) for v in range(1, k))
    return total


def _spt01(n, k, exponent):
    total = _divides_indicator(n, k)
    for m in range(1, n // k + 1):
        total += sum((k - v) * partition_fn.p_recursive(n - k * m, v) for v in range(1, k))
    return total


def _spt0b(n, k, exponent):
    total = _divides_indicator(n, k) * _multiplicity_gap(k, exponent)
    for m in range(1, n // k + 1):
        total += sum((k - v) ** exponent * partition_fn.p_recursive(n - k * m, v) for v in range(1, k))
    return total


def _spt11(n, k, exponent):
    total = (n // k) * _divides_indicator(n, k)
    for m in range(1, n // k + 1):
        total += m * sum((k - v) * partition_fn.p_recursive(n - k * m, v) for v in range(1, k))
    return total


SPECIAL_FORMS = {
    "spt10": (_spt10, False),
    "spta0": (_spta0, True),
    "spt01": (_spt01, False),
    "spt0b": (_spt0b, True),
    "spt11": (_spt11, False),
}
''' ``form -> (evaluator, needs an extra exponent)``. '''


def special_form_params(form: str, exponent: Optional[int] = None) -> SptParams:
    ''' The :class:`SptParams` a special form computes, e.g. ``"spt0b", 3 -> (0, 3)``. '''
    if form not in SPECIAL_FORMS:
        raise UnknownSelectorError("spt form", form, SPECIAL_FORMS)
    return {
        "spt10": lambda: SptParams(1, 0),
        "spta0": lambda: SptParams(exponent, 0),
        "spt01": lambda: SptParams(0, 1),
        "spt0b": lambda: SptParams(0, exponent),
        "spt11": lambda: SptParams(1, 1),
    }[form]()


def spt_special(form: str, n: int, k: int, exponent: Optional[int] = None) -> int:
    '''
    Evaluate one of the special case formulas for ``spt_(a,b)(n, k)``.

    **Parameters**
        ``form`` (str)
            ``"spt10"``, ``"spta0"``, ``"spt01"``, ``"spt0b"`` or ``"spt11"``.

        ``n``, ``k`` (int)
            The integer and the number of parts.

        ``exponent`` (int or None)
            ``a`` for ``"spta0"`` and ``b`` for ``"spt0b"``; must be ``None`` otherwise.

    **Raises**
        :class:`~partlab.exceptions.UnknownSelectorError`
            For an unknown ``form``.

        :class:`~partlab.exceptions.DomainError`
            When ``exponent`` is missing, negative, or given to a form without one.
    '''
    if form not in SPECIAL_FORMS:
        raise UnknownSelectorError("spt form", form, SPECIAL_FORMS)
    evaluator, needs_exponent = SPECIAL_FORMS[form]
    if needs_exponent:
        if exponent is None:
            raise DomainError("The `{0}` form needs an exponent.".format(form))
        utils.require_int("exponent", exponent, minimum=0)
    elif exponent is not None:
        raise DomainError("The `{0}` form takes no exponent, but got {1}.".format(form, exponent))
    utils.require_int("n", n)
    utils.require_int("k", k)
    fixed = _degenerate(n, k)
    if fixed is not None:
        return fixed
    return evaluator(n, k, exponent)


########################################################################################
# Comparisons with p(n, k)                                                             #
########################################################################################
@dataclass(frozen=True)
class InequalityWitness:
    ''' Both sides of ``p(n, k) <= spt_(a,b)(n, k)`` (``k = None`` for totals). '''
    params: SptParams
    n: int
    k: Optional[int]
    p_value: int
    spt_value: int

    @property
    def holds(self) -> bool:
        return self.p_value <= self.spt_value

    @property
    def equal(self) -> bool:
        return self.p_value == self.spt_value


def check_inequality(params: SptParams, n: int, k: int) -> InequalityWitness:
    ''' Compare ``p(n, k)`` with ``spt_(a,b)(n, k)``. '''
    return InequalityWitness(params, n, k, partition_fn.p_recursive(n, k), spt_nk(params, n, k))


def check_inequality_total(params: SptParams, n: int) -> InequalityWitness:
    '''
    Compare ``p(n)`` with ``spt_(a,b)(n)`` for ``n >= 1``.

    The two are equal exactly when ``a = b = 0`` or ``n = 1``.
    '''
    return InequalityWitness(params, n, None, partition_fn.p_total(n), spt_total(params, n))


@dataclass(frozen=True)
class TotalComparison:
    ''' ``spt_first(n)`` against ``spt_second(n)``. '''
    n: int
    first: int
    second: int

    @property
    def at_most(self) -> bool:
        return self.first <= self.second


def compare_totals(first: SptParams, second: SptParams, n_lo: int, n_hi: int) -> List[TotalComparison]:
    '''
    Tabulate whether ``spt_first(n) <= spt_second(n)`` for ``n_lo <= n <= n_hi``.

    This only reports, it asserts nothing about which exponent pairs are ordered.
    '''
    utils.require_int("n_lo", n_lo, minimum=1)
    utils.require_int("n_hi", n_hi, minimum=n_lo)
    return [TotalComparison(n, spt_total(first, n), spt_total(second, n)) for n in range(n_lo, n_hi + 1)]
