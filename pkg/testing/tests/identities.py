# -*- coding: utf8 -*-
########################################################################################
# This file is part of partlab.                                                        #
# Full BSD 3-Clause license available in the LICENSE file at the repository root.     #
########################################################################################
"""
Tests for the identity registry and verifier in :mod:`partlab.identities`.
"""
import re
from fractions import Fraction

import pytest

from partlab import identities
from partlab.exceptions import DomainError, UnknownSelectorError
from partlab.identities import IdentityCheck, Mismatch

registered_ids = [
    "EB-PHI", "EB-J2", "HARDY-SUM", "HARDY-PHI", "HARDY-J2", "HONS-P3", "HONS-J2", "HONS-PHI",
    "W-P2A", "W-P2B", "W-P3", "W-PHI", "W-PHI-NEAREST", "W-PHI-TRIG", "W-J2", "W-J2-NEAREST",
    "W-J2-PARITY", "COMB-PHI", "COMB-J2", "PSI-A", "PSI-B", "PSI-C",
]
"""Every identity, in registry order."""


def test_registry():
    assert identities.identity_ids() == registered_ids
    assert identities.registry() is identities.registry()
    for check in identities.registry():
        assert check.window >= 1
        assert check.description
        # one documented exception for every n below the window
        assert [e.n for e in check.known_exceptions] == list(range(1, check.window))


def test_lookup():
    assert identities.lookup("EB-PHI").window == 3
    with pytest.raises(UnknownSelectorError) as exc_info:
        identities.lookup("NOPE")
    exc_info.match(re.escape("Unknown identity `NOPE`, expected one of: EB-PHI, EB-J2,"))


@pytest.mark.parametrize("identity_id", registered_ids)
def test_identity_holds(identity_id):
    report = identities.verify(identity_id, 1, 300)
    assert report.passed, report.mismatches
    assert (report.n_lo, report.n_hi) == (1, 300)
    assert report.elapsed >= 0


def test_nearest_int_arguments_never_half():
    """No nearest integer taken by the identities falls on an exact half."""
    for n in range(-12, 1501):
        for argument in (Fraction((n + 3) ** 2, 12), Fraction(n * n, 12), Fraction(2 * n - 1, 4)):
            assert argument.denominator != 2, (n, argument)
        assert identities._hardy(n) == round(Fraction((n + 3) ** 2, 12))
        assert identities._honsberger(n) == round(Fraction(n * n, 12))
        assert identities._nearest_p2(n) == round(Fraction(2 * n - 1, 4))


@pytest.mark.slow
@pytest.mark.parametrize("identity_id", registered_ids)
def test_identity_holds_slow(identity_id):
    assert identities.verify(identity_id, 301, 1500).passed


@pytest.mark.parametrize("identity_id", registered_ids)
def test_known_exceptions(identity_id):
    """Below the window the sides differ exactly as documented, and nothing fails."""
    check = identities.lookup(identity_id)
    report = identities.verify(identity_id, 1, 10)
    assert report.passed
    assert [(m.n, m.lhs, m.rhs) for m in report.informational] == [
        (e.n, e.lhs, e.rhs) for e in check.known_exceptions
    ]


def test_exception_values():
    assert identities.lookup("HARDY-PHI").evaluate(1) == (1, Fraction(-1, 6))
    assert identities.lookup("HARDY-PHI").evaluate(3) == (2, Fraction(8, 3))
    assert identities.lookup("PSI-C").evaluate(3) == (4, 6)
    assert identities.lookup("EB-J2").evaluate(3) == (8, 12)
    # 2 (p(1,2) - Lambda(1,2)) = 0 makes the right hand side undefined
    assert identities.lookup("PSI-A").evaluate(1) == (1, None)
    assert identities.lookup("PSI-A").evaluate(2) == (3, Fraction(3, 2))
    assert identities.lookup("PSI-A").evaluate(12) == (24, 24)


def test_undefined_side_never_agrees():
    report = identities.verify("PSI-A", 1, 1)
    assert report.passed
    assert report.informational == (Mismatch(1, Fraction(1), None),)


def test_verify_errors():
    with pytest.raises(DomainError) as exc_info:
        identities.verify("EB-PHI", 0, 5)
    exc_info.match(re.escape("Need 1 <= n_lo <= n_hi, but got n_lo=0 and n_hi=5."))
    with pytest.raises(DomainError):
        identities.verify("EB-PHI", 6, 5)
    with pytest.raises(UnknownSelectorError):
        identities.verify("EB-PSI", 1, 5)
    with pytest.raises(DomainError):
        identities.lookup("EB-PHI").evaluate(0)


def test_mismatch_reported(monkeypatch):
    """An identity that breaks above its window fails the report."""
    broken = IdentityCheck(
        "BROKEN", "n = n, except at 7",
        lambda n: Fraction(n), lambda n: Fraction(n + (n == 7) - (n == 1)),
        2, (),
    )
    monkeypatch.setattr(identities, "registry", lambda: (broken,))
    report = identities.verify("BROKEN", 1, 9)
    assert not report.passed
    assert report.mismatches == (Mismatch(7, Fraction(7), Fraction(8)),)
    assert report.informational == (Mismatch(1, Fraction(1), Fraction(0)),)
    assert [r.identity_id for r in identities.verify_all(1, 3)] == ["BROKEN"]
