# -*- coding: utf8 -*-
########################################################################################
# This file is part of partlab.                                                        #
# Full BSD 3-Clause license available in the LICENSE file at the repository root.     #
########################################################################################
'''
Formulas for ``p(n, k)``, the number of partitions of ``n`` into exactly ``k`` parts,
and ``p(n)``.

**Conventions**
    ``p(0, 1) = p(0) = 1``, ``p(n, 1) = 1`` for ``n >= 1`` and ``p(n, k) = 0``
    whenever ``n < 0``, ``k < 1`` or ``k > n`` (except ``(0, 1)``).  Every function
    in this module is total on the integers under these conventions.

**Recursive formula** (:func:`~partlab.partition_fn.p_recursive`)
    ``p(n, k) = sum_{m=1}^{floor(n/k)} sum_{v=1}^{k-1} p(n - k m, v)``.  Subtracting
    the smallest part ``m`` from every part leaves a partition of ``n - k m`` into the
    ``v`` parts that were larger than ``m``.

**Closed form** (:func:`~partlab.partition_fn.p_closed`)
    For ``k >= 3`` a ``(k - 2)``-fold nested sum over multiplicities ``m_k, ..., m_3``
    of the parts ``k, ..., 3`` of the conjugate partition, with innermost summand
    ``floor((2 + n - sum_{j=3}^{k} j m_j) / 2)`` counting the ways to fill in the
    remaining ones and twos.  ``m_k`` starts at ``1``, the others at ``0``, and each
    upper bound is ``floor((n - sum_{j > i} j m_j) / i)``.  The nested sum is described
    by a :class:`~partlab.partition_fn.MultiSumSpec` and evaluated by
    :func:`~partlab.partition_fn.eval_multisum`.

**Independent oracle** (:func:`~partlab.partition_fn.p_pentagonal`)
    Euler's pentagonal number recurrence for ``p(n)``.
'''

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import configs
from . import numtheory
from . import utils
from .exceptions import BudgetExceededError, DomainError, UnknownSelectorError


########################################################################################
# Nested sums                                                                          #
########################################################################################
@dataclass(frozen=True)
class MultiSumSpec:
    '''
    Declarative description of a nested sum with index dependent bounds.

    The first (outermost) index runs from ``outer_start``, every other one from
    ``inner_start``; each runs up to ``upper_bound(position, prefix, weight)`` where
    ``prefix`` holds the values of the enclosing indices and ``weight`` is
    ``sum(weights[i] * prefix[i])``.  An upper bound below the lower bound is an empty
    range, contributing ``0``.  Once every index is assigned,
    ``summand(indices, weight)`` is added to the total.

    **Attributes**
        ``depth`` (int)
            Number of nested indices, at least ``1``.

        ``outer_start`` (int), ``inner_start`` (int)
            The lower bounds.

        ``upper_bound`` (callable)
            ``(position, prefix, weight) -> int``.

        ``summand`` (callable)
            ``(indices, weight) -> int``.

        ``weights`` (sequence of int or None)
            Per position coefficients of the running weight, ``None`` keeps it ``0``.
    '''
    depth: int
    outer_start: int
    inner_start: int
    upper_bound: Callable[[int, Tuple[int, ...], int], int]
    summand: Callable[[Tuple[int, ...], int], int]
    weights: Optional[Sequence[int]] = None


def eval_multisum(spec: MultiSumSpec, budget: Optional[int] = None) -> int:
    '''
    Evaluate ``spec`` exactly by iterative descent.

    **Parameters**
        ``spec`` (:class:`~partlab.partition_fn.MultiSumSpec`)
            The nested sum.

        ``budget`` (int or None)
            Maximum number of summand evaluations, ``None`` for no limit.

    **Raises**
        :class:`~partlab.exceptions.DomainError`
            When ``spec.depth < 1``.

        :class:`~partlab.exceptions.BudgetExceededError`
            When more than ``budget`` summands would be evaluated.
    '''
    depth = spec.depth
    if depth < 1:
        raise DomainError("A nested sum needs at least one index, got depth={0}.".format(depth))
    weights = spec.weights if spec.weights is not None else (0,) * depth
    if len(weights) != depth:
        raise DomainError("Expected {0} weights, got {1}.".format(depth, len(weights)))

    total = 0
    evaluations = 0
    indices: List[int] = []
    # partial[i] is the running weight of indices[:i]
    partial = [0]
    his: List[int] = []

    lo = spec.outer_start
    hi = spec.upper_bound(0, (), 0)
    indices.append(lo)
    his.append(hi)
    while indices:
        pos = len(indices) - 1
        if indices[pos] > his[pos]:
            # exhausted this level, step the enclosing index
            indices.pop()
            his.pop()
            partial.pop()
            if indices:
                indices[-1] += 1
            continue
        weight = partial[pos] + weights[pos] * indices[pos]
        if pos == depth - 1:
            evaluations += 1
            if budget is not None and evaluations > budget:
                raise BudgetExceededError("termBudget", evaluations, budget,
                                          "The nested sum needs more summand evaluations than allowed.")
            total += spec.summand(tuple(indices), weight)
            indices[pos] += 1
            continue
        prefix = tuple(indices)
        partial.append(weight)
        indices.append(spec.inner_start)
        his.append(spec.upper_bound(pos + 1, prefix, weight))
    return total


def closed_form_spec(n: int, k: int) -> MultiSumSpec:
    '''
    The nested sum for ``p(n, k)`` with ``k >= 3``.

    Position ``i`` holds the multiplicity ``m_{k - i}``, so the weights are
    ``k, k - 1, ..., 3`` and the innermost index is ``m_3``.
    '''
    utils.require_int("k", k, minimum=3)
    utils.require_int("n", n)
    weights = tuple(range(k, 2, -1))

    def upper_bound(position, prefix, weight):
        return (n - weight) // weights[position]

    def summand(indices, weight):
        return (2 + n - weight) // 2

    return MultiSumSpec(
        depth=k - 2,
        outer_start=1,
        inner_start=0,
        upper_bound=upper_bound,
        summand=summand,
        weights=weights,
    )


def closed_form_terms(n: int, k: int) -> int:
    '''
    Exact number of summands :func:`~partlab.partition_fn.eval_multisum` evaluates for
    :func:`~partlab.partition_fn.closed_form_spec` ``(n, k)``.

    That is the number of ``(m_k >= 1, m_{k-1}, ..., m_3 >= 0)`` with
    ``sum j m_j <= n``, counted by a coin-change table over the parts ``3..k``.
    '''
    if k < 3 or n < k:
        return 0
    ways = [0] * (n + 1)
    ways[0] = 1
    for part in range(3, k):
        for total in range(part, n + 1):
            ways[total] += ways[total - part]
    # m_k >= 1 consumes at least k, the parts 3..k-1 fill at most n - k more;
    # further copies of k are the shifts by multiples of k.
    terms = 0
    for copies in range(1, n // k + 1):
        terms += sum(ways[:n - copies * k + 1])
    return terms


########################################################################################
# Memoization                                                                          #
########################################################################################
class MemoTable:
    '''
    A thread safe ``(n, k) -> p(n, k)`` cache.

    Reads do not take the lock.  Writes are idempotent: an existing entry is never
    replaced, so a lost race only costs a recomputation.
    '''

    def __init__(self):
        self._values: Dict[Tuple[int, int], int] = {}
        self._lock = threading.Lock()

    def get(self, key):
        return self._values.get(key)

    def put(self, key, value):
        with self._lock:
            return self._values.setdefault(key, value)

    def __contains__(self, key):
        return key in self._values

    def __len__(self):
        return len(self._values)

    def clear(self):
        with self._lock:
            self._values.clear()


_memo = MemoTable()
''' The per-process cache shared by every recursive evaluation. '''

_pentagonal_cache: List[int] = [1]
_pentagonal_lock = threading.Lock()


def _convention(n, k):
    # The value fixed by convention, or None when the formula applies.
    if n == 0 and k == 1:
        return 1
    if n < 1 or k < 1 or k > n:
        return 0
    if k == 1:
        return 1
    return None


########################################################################################
# p(n, k)                                                                              #
########################################################################################
def p_recursive(n: int, k: int) -> int:
    '''
    ``p(n, k)`` by the recursive formula with memoization.

    The table is filled bottom-up in increasing ``n`` so that no call recurses, which
    keeps ``k`` in the hundreds well away from the interpreter's recursion limit.
    '''
    utils.require_int("n", n)
    utils.require_int("k", k)
    fixed = _convention(n, k)
    if fixed is not None:
        return fixed
    cached = _memo.get((n, k))
    if cached is not None:
        return cached

    for row in range(2, n + 1):
        for parts in range(2, min(k, row) + 1):
            if (row, parts) in _memo:
                continue
            total = 0
            for m in range(1, row // parts + 1):
                rest = row - parts * m
                for smaller in range(1, min(parts - 1, max(rest, 1)) + 1):
                    fixed = _convention(rest, smaller)
                    total += fixed if fixed is not None else _memo.get((rest, smaller))
            _memo.put((row, parts), total)

    # << verboseBuild
    utils.verbose_log("p_recursive: memo holds {0} entries after p({1}, {2}).".format(len(_memo), n, k),
                      utils.AnsiColors.DIM_CYAN)
    return _memo.get((n, k))


def p_closed(n: int, k: int) -> int:
    '''
    ``p(n, k)`` by the nested closed form.

    ``k = 1`` and ``k = 2`` are the constants ``1`` and ``floor(n / 2)``; ``k >= 3``
    goes through :func:`~partlab.partition_fn.eval_multisum`.

    **Raises**
        :class:`~partlab.exceptions.BudgetExceededError`
            When ``k > configs.closedFormMaxParts`` and the exact number of summands is
            above ``configs.termBudget``.
    '''
    utils.require_int("n", n)
    utils.require_int("k", k)
    fixed = _convention(n, k)
    if fixed is not None:
        return fixed
    if k == 2:
        return n // 2

    terms = closed_form_terms(n, k)
    if terms > configs.termBudget:
        if k > configs.closedFormMaxParts:
            raise BudgetExceededError(
                "closedFormMaxParts", terms, configs.termBudget,
                "p_closed({n}, {k}) has k above closedFormMaxParts={guard} and needs more than "
                "termBudget summands.".format(n=n, k=k, guard=configs.closedFormMaxParts)
            )
        # << verboseBuild
        utils.verbose_log("p_closed({0}, {1}): {2} summands exceed termBudget, k is within the guard.".format(
            n, k, terms
        ), utils.AnsiColors.BOLD_YELLOW)
    return eval_multisum(closed_form_spec(n, k))


def p_pentagonal(n: int) -> int:
    '''
    ``p(n)`` by Euler's pentagonal number recurrence
    ``p(n) = sum_{j>=1} (-1)^(j+1) [p(n - j(3j-1)/2) + p(n - j(3j+1)/2)]``.
    '''
    utils.require_int("n", n)
    if n < 0:
        return 0
    if n < len(_pentagonal_cache):
        return _pentagonal_cache[n]
    with _pentagonal_lock:
        values = _pentagonal_cache
        for m in range(len(values), n + 1):
            total = 0
            j = 1
            while True:
                first = m - j * (3 * j - 1) // 2
                if first < 0:
                    break
                second = m - j * (3 * j + 1) // 2
                term = values[first] + (values[second] if second >= 0 else 0)
                total += term if j % 2 else -term
                j += 1
            values.append(total)
    return _pentagonal_cache[n]


P_TOTAL_STRATEGIES = ("recursive", "closed", "pentagonal")
''' The strategies understood by :func:`~partlab.partition_fn.p_total`. '''


def p_total(n: int, strategy: str = "recursive") -> int:
    '''
    ``p(n) = sum_k p(n, k)`` with ``p(0) = 1``.

    **Parameters**
        ``n`` (int)
            Nonnegative integer (negative ``n`` gives ``0``).

        ``strategy`` (str)
            ``"recursive"`` (default), ``"closed"`` or ``"pentagonal"``.
    '''
    utils.require_int("n", n)
    if strategy not in P_TOTAL_STRATEGIES:
        raise UnknownSelectorError("strategy", strategy, P_TOTAL_STRATEGIES)
    if n < 0:
        return 0
    if n == 0:
        return 1
    if strategy == "pentagonal":
        return p_pentagonal(n)
    if strategy == "closed":
        return sum(p_closed(n, k) for k in range(1, n + 1))
    # one call fills every row, the sum is then pure lookups
    p_recursive(n, n)
    return sum(p_recursive(n, k) for k in range(1, n + 1))


########################################################################################
# Small k closed forms                                                                 #
########################################################################################
def _nearest_k2(n):
    return numtheory.nearest_int(Fraction(2 * n - 1, 4))


def _parity_k2(n):
    value = Fraction(2 * n - 1 + numtheory.parity_sign(n), 4)
    return _as_int(value, "parity", n)


def _nearest_k3(n):
    return numtheory.nearest_int(Fraction(n * n, 12))


def _trig_k3(n):
    value = (6 * n * n - 7 - 9 * numtheory.parity_sign(n) + 16 * numtheory.cos_two_pi_thirds(n)) / 72
    return _as_int(Fraction(value), "trig", n)


def _as_int(value, form, n):
    if value.denominator != 1:
        raise DomainError("The {0} form gave the non-integer {1} at n={2}.".format(form, value, n))
    return value.numerator


SMALL_K_FORMS = {
    (1, "floor"):   lambda n: 1,
    (1, "nearest"): lambda n: 1,
    (2, "floor"):   lambda n: n // 2,
    (2, "nearest"): _nearest_k2,
    (2, "parity"):  _parity_k2,
    (3, "nearest"): _nearest_k3,
    (3, "trig"):    _trig_k3,
}
''' ``(k, form) -> evaluator`` for :func:`~partlab.partition_fn.p_small_k`. '''


def p_small_k(n: int, k: int, form: str) -> int:
    '''
    ``p(n, k)`` for ``k <= 3`` from one of the classical closed forms.

    **Parameters**
        ``n`` (int)
            The integer being partitioned; ``n <= 0`` follows the usual conventions.

        ``k`` (int)
            ``1``, ``2`` or ``3``.

        ``form`` (str)
            ``"floor"`` (k = 1, 2), ``"nearest"`` (k = 1, 2, 3), ``"parity"`` (k = 2)
            or ``"trig"`` (k = 3).

    **Raises**
        :class:`~partlab.exceptions.UnknownSelectorError`
            For any other ``(k, form)`` combination.
    '''
    utils.require_int("n", n)
    evaluator = SMALL_K_FORMS.get((k, form))
    if evaluator is None:
        choices = ["k={0} form={1}".format(kk, ff) for kk, ff in SMALL_K_FORMS]
        raise UnknownSelectorError("small-k form", "k={0} form={1}".format(k, form), choices)
    if n < 1:
        return _convention(n, k)
    return evaluator(n)
