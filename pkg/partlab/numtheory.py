# -*- coding: utf8 -*-
########################################################################################
# This file is part of partlab.                                                        #
# Full BSD 3-Clause license available in the LICENSE file at the repository root.     #
########################################################################################
'''
Exact integer and rational utilities: factorization, divisors, the Möbius function,
the Euler / Jordan / Dedekind totients, the floor-sum divisor count and the nearest
integer function.

Rational values are :class:`python:fractions.Fraction` instances, which are always kept
in lowest terms with a positive denominator.  Factorization is plain trial division,
comfortably fast for ``n <= 10 ** 9``.
'''

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Dict, Iterable, List, Union

from .exceptions import DomainError, HalfIntegerError
from .utils import require_int

FactorMap = Dict[int, int]
'''
``prime -> exponent`` for a single positive integer.  Keys are inserted (and therefore
iterated) in strictly increasing order, ``1`` maps to ``{}``.
'''

Rational = Fraction
''' Exact rational number, always in lowest terms. '''


def _require_positive(n):
    require_int("n", n)
    if n < 1:
        raise DomainError("`n` must be a positive integer, but was {0}.".format(n))
    return n


def factorize(n: int) -> FactorMap:
    '''
    Factor ``n`` by trial division.

    **Parameters**
        ``n`` (int)
            Positive integer.

    **Return**
        :data:`~partlab.numtheory.FactorMap`
            The prime factorization, e.g. ``factorize(12) == {2: 2, 3: 1}``.

    **Raises**
        :class:`~partlab.exceptions.DomainError`
            When ``n < 1``.
    '''
    _require_positive(n)
    factors: FactorMap = {}
    remaining = n
    for p in (2, 3):
        while remaining % p == 0:
            factors[p] = factors.get(p, 0) + 1
            remaining //= p
    # 6k +- 1 wheel
    p = 5
    while p * p <= remaining:
        for candidate in (p, p + 2):
            while remaining % candidate == 0:
                factors[candidate] = factors.get(candidate, 0) + 1
                remaining //= candidate
        p += 6
    if remaining > 1:
        factors[remaining] = factors.get(remaining, 0) + 1
    return factors


def is_prime(n: int) -> bool:
    ''' Trial-division primality test; ``False`` for everything below ``2``. '''
    require_int("n", n)
    if n < 2:
        return False
    return factorize(n) == {n: 1}


def divisors(n: int) -> List[int]:
    '''
    All positive divisors of ``n`` in increasing order.

    **Raises**
        :class:`~partlab.exceptions.DomainError`
            When ``n < 1``.
    '''
    _require_positive(n)
    small, large = [], []
    for i in range(1, math.isqrt(n) + 1):
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
    return small + large[::-1]


def divisor_count(n: int) -> int:
    ''' ``d(n)`` as the product of ``exponent + 1`` over the factorization. '''
    count = 1
    for exponent in factorize(n).values():
        count *= exponent + 1
    return count


def lcm_of(values: Iterable[int]) -> int:
    ''' Least common multiple of ``values``, ``1`` for no values. '''
    return reduce(math.lcm, values, 1)


def jordan_totient(m: int, n: int) -> int:
    '''
    Jordan's totient of order ``m``: ``n^m * prod_{p | n} (1 - p^-m)``.

    Evaluated as ``prod p^(m e) - p^(m (e - 1))`` over the factorization so that only
    integers are involved.

    **Parameters**
        ``m`` (int)
            The order, ``m >= 1``.

        ``n`` (int)
            Positive integer.

    **Raises**
        :class:`~partlab.exceptions.DomainError`
            When ``n < 1`` or ``m < 1``.
    '''
    require_int("m", m, minimum=1)
    result = 1
    for p, e in factorize(n).items():
        result *= p ** (m * e) - p ** (m * (e - 1))
    return result


def euler_phi(n: int) -> int:
    ''' Euler's totient, ``jordan_totient(1, n)``. '''
    return jordan_totient(1, n)


def dedekind_psi(n: int) -> int:
    ''' Dedekind's psi function ``n * prod_{p | n} (1 + 1/p)``. '''
    result = 1
    for p, e in factorize(n).items():
        result *= p ** (e - 1) * (p + 1)
    return result


def mobius(n: int) -> int:
    ''' The Möbius function: ``0`` for non square-free ``n``, else ``(-1)^omega(n)``. '''
    factors = factorize(n)
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def divisor_count_floor(n: int) -> int:
    '''
    Count the divisors of ``n`` as ``sum_{k=1}^{n} floor(k floor(n/k) / n)``.

    Each summand is ``1`` exactly when ``k | n``.
    '''
    _require_positive(n)
    return sum((k * (n // k)) // n for k in range(1, n + 1))


def nearest_int(x: Union[Fraction, int]) -> int:
    '''
    The nearest integer ``<x>`` to an exact rational.

    **Parameters**
        ``x`` (:class:`python:fractions.Fraction` or int)
            The value to round.

    **Return**
        ``int``
            The unique ``z`` with ``|x - z| < 1/2``.

    **Raises**
        :class:`~partlab.exceptions.HalfIntegerError`
            When ``x`` is exactly halfway between two integers.
    '''
    if isinstance(x, float):
        raise DomainError("`nearest_int` only accepts exact values, but got the float {0!r}.".format(x))
    x = Fraction(x)
    if x.denominator == 2:
        raise HalfIntegerError("The nearest integer of {0} is undefined (exact half).".format(x))
    return math.floor(x + Fraction(1, 2))


def cos_two_pi_thirds(n: int) -> Fraction:
    ''' ``cos(2 pi n / 3)`` exactly: ``1`` when ``3 | n``, otherwise ``-1/2``. '''
    require_int("n", n)
    return Fraction(1) if n % 3 == 0 else Fraction(-1, 2)


def parity_sign(n: int) -> int:
    ''' ``(-1)^n``. '''
    require_int("n", n)
    return -1 if n % 2 else 1
