# -*- coding: utf8 -*-
########################################################################################
# This file is part of partlab.                                                        #
# Full BSD 3-Clause license available in the LICENSE file at the repository root.     #
########################################################################################
'''
Brute-force partition enumeration and the oracles built on top of it.

Nothing in here uses a formula: every count is the size of an explicit enumeration.
The formula modules (:mod:`~partlab.partition_fn`, :mod:`~partlab.spt`,
:mod:`~partlab.relprime`) are all tested against these functions.

Partitions are written with nondecreasing parts and generated in lexicographic order.
The only partition of ``0`` is the empty one, which is yielded for ``(n, k) = (0, 1)``.

The counting oracles refuse requests that would visit more partitions than
``p(configs.enumerationMaxN)``, see :func:`~partlab.enumeration.check_enumeration_budget`.
'''

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterator, Set, Tuple

from . import configs
from . import partition_fn
from . import utils
from .exceptions import BudgetExceededError, DomainError


@dataclass(frozen=True)
class Partition:
    '''
    A partition written as a nondecreasing tuple of positive parts.

    ``k`` of the empty partition of ``0`` is ``1`` by convention.
    '''
    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = self.parts
        if any(not isinstance(part, int) or part < 1 for part in parts):
            raise DomainError("Partition parts must be positive integers: {0}".format(parts))
        if any(parts[i] > parts[i + 1] for i in range(len(parts) - 1)):
            raise DomainError("Partition parts must be nondecreasing: {0}".format(parts))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def k(self) -> int:
        return len(self.parts) or 1

    def is_empty(self) -> bool:
        return not self.parts

    @classmethod
    def _trusted(cls, parts):
        # skips validation for tuples produced by the generator
        p = object.__new__(cls)
        object.__setattr__(p, "parts", parts)
        return p


@dataclass(frozen=True)
class SmallestPartStat:
    ''' Value (``sigma``) and multiplicity (``count``) of a partition's smallest part. '''
    sigma: int
    count: int


def _descend(remaining, slots, smallest, prefix):
    if slots == 1:
        if remaining >= smallest:
            yield prefix + (remaining,)
        return
    # the current part is at most remaining / slots or the tail cannot stay >= it
    for part in range(smallest, remaining // slots + 1):
        yield from _descend(remaining - part, slots - 1, part, prefix + (part,))


def partitions(n: int, k: int) -> Iterator[Partition]:
    '''
    Yield every partition of ``n`` into exactly ``k`` parts in lexicographic order.

    Degenerate inputs (``n < 0``, ``k < 1``, ``k > n``) yield nothing, except that
    ``(0, 1)`` yields the empty partition.
    '''
    utils.require_int("n", n)
    utils.require_int("k", k)
    if n == 0 and k == 1:
        yield Partition(())
        return
    if n < 1 or k < 1 or k > n:
        return
    for parts in _descend(n, k, 1, ()):
        yield Partition._trusted(parts)


def all_partitions(n: int) -> Iterator[Partition]:
    ''' Every partition of ``n``, grouped by number of parts ``k = 1, ..., n``. '''
    utils.require_int("n", n, minimum=0)
    if n == 0:
        yield Partition(())
        return
    for k in range(1, n + 1):
        yield from partitions(n, k)


def gcd_of(p: Partition) -> int:
    ''' The greatest common divisor of the parts of a nonempty partition. '''
    if p.is_empty():
        raise DomainError("The empty partition has no gcd.")
    return reduce(math.gcd, p.parts)


def smallest_part_stat(p: Partition) -> SmallestPartStat:
    ''' The smallest part of a nonempty partition and its multiplicity. '''
    if p.is_empty():
        raise DomainError("The empty partition has no smallest part.")
    sigma = p.parts[0]
    count = 1
    # parts are sorted, so the smallest part is a prefix run
    while count < len(p.parts) and p.parts[count] == sigma:
        count += 1
    return SmallestPartStat(sigma=sigma, count=count)


########################################################################################
# Budget guard                                                                         #
########################################################################################
def enumeration_limit() -> int:
    ''' The largest number of partitions a counting oracle is allowed to visit. '''
    return partition_fn.p_pentagonal(configs.enumerationMaxN)


def check_enumeration_budget(estimate: int, what: str) -> None:
    '''
    Refuse to enumerate ``estimate`` partitions if that is above
    :func:`~partlab.enumeration.enumeration_limit`.

    **Raises**
        :class:`~partlab.exceptions.BudgetExceededError`
            With ``guard="enumerationMaxN"``.
    '''
    limit = enumeration_limit()
    if estimate > limit:
        raise BudgetExceededError(
            "enumerationMaxN", estimate, limit,
            "Brute-force {what} is an oracle, use the formula modules for inputs this large.".format(what=what)
        )
    # << verboseBuild
    utils.verbose_log("enumeration: {what} visits {estimate} partitions.".format(what=what, estimate=estimate),
                      utils.AnsiColors.DIM_CYAN)


def _guarded_partitions(n, k):
    check_enumeration_budget(partition_fn.p_recursive(n, k), "p({0}, {1})".format(n, k))
    return partitions(n, k)


def _guarded_all_partitions(n):
    check_enumeration_budget(partition_fn.p_total(n), "p({0})".format(n))
    return all_partitions(n)


########################################################################################
# Counting oracles                                                                     #
########################################################################################
def brute_p(n: int, k: int) -> int:
    ''' ``p(n, k)`` by counting :func:`~partlab.enumeration.partitions`. '''
    return sum(1 for _ in _guarded_partitions(n, k))


def brute_p_total(n: int) -> int:
    ''' ``p(n)`` by counting :func:`~partlab.enumeration.all_partitions`. '''
    if n < 0:
        return 0
    return sum(1 for _ in _guarded_all_partitions(n))


def _spt_weight(p, a, b):
    stat = smallest_part_stat(p)
    return stat.sigma ** a * stat.count ** b


def brute_spt(a: int, b: int, n: int) -> int:
    '''
    ``spt_(a,b)(n)``: the sum of ``sigma^a * count^b`` over every partition of ``n``.

    The empty partition of ``0`` contributes nothing.
    '''
    utils.require_int("a", a, minimum=0)
    utils.require_int("b", b, minimum=0)
    if n < 1:
        return 0
    return sum(_spt_weight(p, a, b) for p in _guarded_all_partitions(n))


def brute_spt_nk(a: int, b: int, n: int, k: int) -> int:
    ''' :func:`~partlab.enumeration.brute_spt` restricted to partitions with ``k`` parts. '''
    utils.require_int("a", a, minimum=0)
    utils.require_int("b", b, minimum=0)
    if n == 0 and k == 1:
        return 1
    return sum(_spt_weight(p, a, b) for p in _guarded_partitions(n, k))


def _is_relatively_prime(p):
    # The empty partition of 0 counts as relatively prime, so p_Psi(0, 1) = 1.
    return p.is_empty() or gcd_of(p) == 1


def brute_lambda(n: int, k: int) -> int:
    ''' ``Lambda(n, k)``: partitions of ``n`` into ``k`` parts whose gcd exceeds ``1``. '''
    return sum(1 for p in _guarded_partitions(n, k) if not _is_relatively_prime(p))


def brute_ppsi(n: int, k: int) -> int:
    ''' ``p_Psi(n, k)``: partitions of ``n`` into ``k`` parts whose gcd is ``1``. '''
    return sum(1 for p in _guarded_partitions(n, k) if _is_relatively_prime(p))


def brute_lambda_total(n: int) -> int:
    if n < 0:
        return 0
    return sum(1 for p in _guarded_all_partitions(n) if not _is_relatively_prime(p))


def brute_ppsi_total(n: int) -> int:
    if n < 0:
        return 0
    return sum(1 for p in _guarded_all_partitions(n) if _is_relatively_prime(p))


def gcd_set(n: int, k: int) -> Set[int]:
    ''' ``{gcd_of(p) for p in partitions(n, k)}``, empty when ``k`` is out of range. '''
    if n < 1 or k < 1 or k > n:
        return set()
    return {gcd_of(p) for p in _guarded_partitions(n, k)}
