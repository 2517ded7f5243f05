# -*- coding: utf8 -*-
########################################################################################
# This file is part of partlab.                                                        #
# Full BSD 3-Clause license available in the LICENSE file at the repository root.     #
########################################################################################
'''
Partitions that are, and are not, relatively prime.

``Lambda(n, k)`` counts the partitions of ``n`` into ``k`` parts whose parts share a
common factor ``> 1`` and ``p_Psi(n, k) = p(n, k) - Lambda(n, k)`` counts the rest.

A partition all of whose parts are divisible by ``m`` is ``m`` times a partition of
``n / m``, so ``Lambda_m(n, k) = p(n / m, k)`` when ``m | n``.  Summing over the
divisors of ``n`` overcounts every partition divisible by several of them, and the
inclusion-exclusion principle corrects this: a set of divisors ``m_1 < ... < m_i``
contributes ``(-1)^(i+1) p(n / lcm, k)``, and only sets with ``lcm <= n / k``
contribute at all.

Two independent routes are provided:

- :func:`~partlab.relprime.lambda_inclexcl` walks the divisor sets (collapsed onto
  their lcm, see :func:`~partlab.relprime.chain_weights`);
- :func:`~partlab.relprime.lambda_mobius` uses ``p_Psi(n, k) = sum_{d | n} mu(d)
  p(n / d, k)``.

**Conventions**
    ``Lambda(0, k) = Lambda(1, k) = 0``, ``Lambda(n, 1) = 1`` for ``n > 1``,
    ``p_Psi(0, 1) = p_Psi(1, 1) = 1``.
'''

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Iterator, Tuple

from . import enumeration
from . import numtheory
from . import partition_fn
from . import utils
from .exceptions import DomainError, UnknownSelectorError


@dataclass(frozen=True)
class DivisorChain:
    '''
    A strictly increasing set of divisors ``> 1`` of some ``n`` and their lcm.

    Every ``members`` entry divides ``n``, and so does ``lcm``.
    '''
    members: Tuple[int, ...]
    lcm: int

    @property
    def sign(self) -> int:
        ''' The inclusion-exclusion sign ``(-1)^(len(members) + 1)``. '''
        return 1 if len(self.members) % 2 else -1


########################################################################################
# Lambda_m(n, k)                                                                       #
########################################################################################
def _require_modulus(m):
    utils.require_int("m", m)
    if m < 1:
        raise DomainError("`m` must be a positive integer, but was {0}.".format(m))


def lambda_divisible(m: int, n: int, k: int) -> int:
    '''
    ``Lambda_m(n, k)``: partitions of ``n`` into ``k`` parts that are all divisible by
    ``m``.  Equal to ``p(n / m, k)`` when ``m | n`` and ``0`` otherwise.

    **Raises**
        :class:`~partlab.exceptions.DomainError`
            When ``m < 1``.
    '''
    _require_modulus(m)
    utils.require_int("n", n)
    utils.require_int("k", k)
    if n < 0 or n % m:
        return 0
    return partition_fn.p_recursive(n // m, k)


def lambda_divisible_total(m: int, n: int) -> int:
    ''' ``Lambda_m(n) = p(n / m)`` when ``m | n``, else ``0``. '''
    _require_modulus(m)
    utils.require_int("n", n)
    if n < 0 or n % m:
        return 0
    return partition_fn.p_total(n // m)


########################################################################################
# Inclusion-exclusion over divisor chains                                              #
########################################################################################
def _chain_candidates(n, bound):
    return [d for d in numtheory.divisors(n) if 1 < d <= bound]


def divisor_chains(n: int, bound: int) -> Iterator[DivisorChain]:
    '''
    Every :class:`~partlab.relprime.DivisorChain` of ``n`` with ``lcm <= bound``.

    Depth-first in increasing divisor order.  The lcm never decreases as a chain grows,
    so a branch is cut as soon as its lcm exceeds ``bound``.

    .. note::

       The number of chains grows like ``2 ** d(n)``, this is meant for inspection
       and tests.  :func:`~partlab.relprime.lambda_inclexcl` uses
       :func:`~partlab.relprime.chain_weights` instead.
    '''
    utils.require_int("n", n, minimum=1)
    utils.require_int("bound", bound)
    candidates = _chain_candidates(n, bound)

    def walk(start, members, lcm):
        for idx in range(start, len(candidates)):
            extended = math.lcm(lcm, candidates[idx])
            if extended > bound:
                continue
            chain = members + (candidates[idx],)
            yield DivisorChain(chain, extended)
            yield from walk(idx + 1, chain, extended)

    yield from walk(0, (), 1)


def chain_weights(n: int, bound: int) -> Dict[int, int]:
    '''
    Collapse :func:`~partlab.relprime.divisor_chains` onto lcm classes.

    **Return**
        ``dict``
            ``lcm -> sum of (-1)^(i+1)`` over the chains with that lcm (``i`` the chain
            length).  Classes whose weights cancel are dropped.  The result only
            depends on ``n`` and ``bound``, and the weight of ``L`` works out to
            ``-mu(L)``.
    '''
    utils.require_int("n", n, minimum=1)
    utils.require_int("bound", bound)
    # The empty chain sits at lcm 1 with weight -1; extending a chain flips its sign.
    weights: Dict[int, int] = {1: -1}
    for d in _chain_candidates(n, bound):
        for lcm, weight in list(weights.items()):
            extended = math.lcm(lcm, d)
            if extended <= bound:
                weights[extended] = weights.get(extended, 0) - weight
    return {lcm: weight for lcm, weight in weights.items() if lcm > 1 and weight}


def lambda_inclexcl(n: int, k: int) -> int:
    '''
    ``Lambda(n, k)`` by inclusion-exclusion over the divisors of ``n``.

    **Parameters**
        ``n`` (int)
            Nonnegative integer; ``n <= 1`` gives ``0``.

        ``k`` (int)
            Number of parts; out of range ``k`` gives ``0`` and ``k = 1`` gives ``1``.
    '''
    utils.require_int("n", n)
    utils.require_int("k", k)
    if n <= 1 or k < 1 or k > n:
        return 0
    if k == 1:
        return 1
    total = 0
    for lcm, weight in chain_weights(n, n // k).items():
        total += weight * partition_fn.p_recursive(n // lcm, k)
    return total


def lambda_mobius(n: int, k: int) -> int:
    '''
    ``Lambda(n, k) = p(n, k) - sum_{d | n} mu(d) p(n / d, k)``.

    **Raises**
        :class:`~partlab.exceptions.DomainError`
            When ``n < 1``.
    '''
    utils.require_int("k", k)
    relatively_prime = sum(
        numtheory.mobius(d) * partition_fn.p_recursive(n // d, k)
        for d in numtheory.divisors(n)
    )
    return partition_fn.p_recursive(n, k) - relatively_prime


LAMBDA_STRATEGIES = {
    "mobius":   (None, "lambda_mobius"),
    "inclexcl": (None, "lambda_inclexcl"),
    "brute":    (enumeration, "brute_lambda"),
}
'''
``strategy -> (module, function name)``.  ``None`` is this module.  Resolved on every
call, so replacing a function on its module is seen by every dispatcher.
'''


def _strategy_function(strategy):
    if strategy not in LAMBDA_STRATEGIES:
        raise UnknownSelectorError("strategy", strategy, LAMBDA_STRATEGIES)
    module, name = LAMBDA_STRATEGIES[strategy]
    if module is None:
        return globals()[name]
    return getattr(module, name)


def lambda_count(n: int, k: int, strategy: str = "mobius") -> int:
    '''
    ``Lambda(n, k)`` by ``"mobius"`` (default), ``"inclexcl"`` or ``"brute"``.

    Every strategy gives ``0`` for ``n <= 0``.
    '''
    func = _strategy_function(strategy)
    utils.require_int("n", n)
    if n <= 0:
        return 0
    return func(n, k)


def lambda_total(n: int, strategy: str = "mobius") -> int:
    ''' ``Lambda(n) = sum_k Lambda(n, k)``. '''
    utils.require_int("n", n)
    return sum(lambda_count(n, k, strategy) for k in range(1, n + 1))


########################################################################################
# p_Psi                                                                                #
########################################################################################
def p_psi(n: int, k: int, strategy: str = "mobius") -> int:
    ''' ``p_Psi(n, k) = p(n, k) - Lambda(n, k)``, with ``p_Psi(0, 1) = 1``. '''
    utils.require_int("n", n)
    utils.require_int("k", k)
    if n == 0:
        return 1 if k == 1 else 0
    return partition_fn.p_recursive(n, k) - lambda_count(n, k, strategy)


def p_psi_total(n: int, strategy: str = "mobius") -> int:
    ''' ``p_Psi(n) = sum_k p_Psi(n, k)``; ``p_Psi(0) = 1`` and ``0`` for ``n < 0``. '''
    utils.require_int("n", n)
    if n < 0:
        return 0
    if n == 0:
        return 1
    return partition_fn.p_total(n) - lambda_total(n, strategy)
