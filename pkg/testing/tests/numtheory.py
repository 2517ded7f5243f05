# -*- coding: utf8 -*-
########################################################################################
# This file is part of partlab.                                                        #
# Full BSD 3-Clause license available in the LICENSE file at the repository root.     #
########################################################################################
"""
Tests for :mod:`partlab.numtheory`, with :mod:`sympy` as the reference.
"""
import math
import re
from fractions import Fraction

import pytest
import sympy

from partlab import numtheory
from partlab.exceptions import DomainError, HalfIntegerError


def reference_mobius(n):
    factors = sympy.factorint(n)
    if any(e > 1 for e in factors.values()):
        return 0
    return (-1) ** len(factors)


def reference_j2(n):
    """Count the pairs ``1 <= x, y <= n`` with ``gcd(x, y, n) = 1``."""
    return sum(1 for x in range(1, n + 1) for y in range(1, n + 1) if math.gcd(math.gcd(x, y), n) == 1)


@pytest.mark.parametrize("n", list(range(1, 301)) + [2 ** 31 - 1, 600851475143, 10 ** 9 + 8])
def test_factorize(n):
    """:func:`~partlab.numtheory.factorize` matches :func:`sympy.factorint`."""
    factors = numtheory.factorize(n)
    assert factors == {int(p): int(e) for p, e in sympy.factorint(n).items()}
    assert list(factors) == sorted(factors)


def test_factorize_one():
    assert numtheory.factorize(1) == {}


@pytest.mark.parametrize("n", [0, -1, -12])
def test_nonpositive_rejected(n):
    """Everything defined on positive integers raises for ``n < 1``."""
    for func in (numtheory.factorize, numtheory.divisors, numtheory.euler_phi, numtheory.dedekind_psi,
                 numtheory.mobius, numtheory.divisor_count_floor):
        with pytest.raises(DomainError) as exc_info:
            func(n)
        exc_info.match(re.escape("`n` must be a positive integer, but was {0}.".format(n)))


def test_non_integer_rejected():
    with pytest.raises(DomainError) as exc_info:
        numtheory.divisors(6.0)
    exc_info.match(re.escape("`n` must be an integer, but was `6.0`."))
    with pytest.raises(DomainError):
        numtheory.factorize(True)


@pytest.mark.parametrize("n", range(1, 201))
def test_divisors(n):
    divisors = numtheory.divisors(n)
    assert divisors == [int(d) for d in sympy.divisors(n)]
    assert numtheory.divisor_count(n) == len(divisors)


@pytest.mark.parametrize("n", range(1, 201))
def test_totients(n):
    """Euler's totient, the Möbius function and Dedekind's psi."""
    assert numtheory.euler_phi(n) == int(sympy.totient(n))
    assert numtheory.mobius(n) == reference_mobius(n)
    psi = Fraction(n)
    for p in sympy.primefactors(n):
        psi *= 1 + Fraction(1, p)
    assert numtheory.dedekind_psi(n) == psi


@pytest.mark.parametrize("n", range(1, 41))
def test_jordan_totient_counts_pairs(n):
    assert numtheory.jordan_totient(2, n) == reference_j2(n)
    assert numtheory.jordan_totient(1, n) == numtheory.euler_phi(n)


def test_jordan_totient_product():
    """``J2(n) = phi(n) psi(n)``."""
    for n in range(1, 500):
        assert numtheory.jordan_totient(2, n) == numtheory.euler_phi(n) * numtheory.dedekind_psi(n)


def test_jordan_totient_order():
    with pytest.raises(DomainError) as exc_info:
        numtheory.jordan_totient(0, 5)
    exc_info.match(re.escape("`m` must be at least 1, but was 0."))


def test_known_values():
    assert numtheory.jordan_totient(2, 4) == 12
    assert numtheory.jordan_totient(3, 2) == 7
    assert numtheory.dedekind_psi(6) == 12
    assert numtheory.dedekind_psi(1) == 1
    assert numtheory.mobius(1) == 1
    assert numtheory.mobius(12) == 0
    assert numtheory.mobius(30) == -1
    assert numtheory.divisor_count_floor(30) == 8
    assert numtheory.divisor_count_floor(1) == 1
    assert numtheory.lcm_of([4, 6, 10]) == 60
    assert numtheory.lcm_of([]) == 1
    assert numtheory.is_prime(97)
    assert not numtheory.is_prime(1)
    assert not numtheory.is_prime(91)


@pytest.mark.parametrize("n", range(1, 301))
def test_divisor_count_floor(n):
    assert numtheory.divisor_count_floor(n) == numtheory.divisor_count(n) == int(sympy.divisor_count(n))


@pytest.mark.slow
def test_divisor_count_floor_slow():
    for n in range(301, 10 ** 4 + 1):
        assert numtheory.divisor_count_floor(n) == numtheory.divisor_count(n), n


def test_mobius_sums_over_divisors():
    """The Möbius function sums to zero over the divisors of every n > 1."""
    for n in range(1, 1001):
        total = sum(numtheory.mobius(d) for d in numtheory.divisors(n))
        assert total == (1 if n == 1 else 0), n


def test_euler_phi_counts_coprimes():
    for n in range(1, 501):
        assert numtheory.euler_phi(n) == sum(1 for x in range(1, n + 1) if math.gcd(x, n) == 1), n


@pytest.mark.parametrize("x,expected", [
    (Fraction(25, 12), 2),
    (Fraction(64, 12), 5),
    (Fraction(-1, 6), 0),
    (Fraction(-5, 6), -1),
    (Fraction(7, 4), 2),
    (Fraction(9, 4), 2),
    (3, 3),
])
def test_nearest_int(x, expected):
    assert numtheory.nearest_int(x) == expected


def test_nearest_int_edge_cases():
    with pytest.raises(HalfIntegerError) as exc_info:
        numtheory.nearest_int(Fraction(5, 2))
    exc_info.match(re.escape("The nearest integer of 5/2 is undefined (exact half)."))

    # a half integer is still a domain error for callers that only know that class
    with pytest.raises(DomainError):
        numtheory.nearest_int(Fraction(-1, 2))

    with pytest.raises(DomainError) as exc_info:
        numtheory.nearest_int(0.25)
    exc_info.match("only accepts exact values")


def test_trig_and_parity():
    assert [numtheory.cos_two_pi_thirds(n) for n in range(0, 6)] == [
        1, Fraction(-1, 2), Fraction(-1, 2), 1, Fraction(-1, 2), Fraction(-1, 2)
    ]
    assert [numtheory.parity_sign(n) for n in range(-2, 3)] == [1, -1, 1, -1, 1]
