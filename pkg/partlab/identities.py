# -*- coding: utf8 -*-
########################################################################################
# This file is part of partlab.                                                        #
# Full BSD 3-Clause license available in the LICENSE file at the repository root.     #
########################################################################################
'''
Identities linking ``p(n, 2)``, ``p(n, 3)``, ``Lambda(n, 2)`` and ``Lambda(n, 3)`` to
Euler's totient ``phi``, Jordan's totient ``J2`` and Dedekind's ``psi``.

Every identity is an :class:`~partlab.identities.IdentityCheck`: two exact evaluators
and the first ``n`` from which the two sides agree (its *window*).  The values of both
sides for every ``n`` below the window are recorded as
:class:`~partlab.identities.KnownException` entries, so a change in either side is
noticed even where the identity does not hold.

The windows are empirical: each was fixed by evaluating the identity over
``1 <= n <= 100`` and recording the failing prefix.

``<x>`` is :func:`~partlab.numtheory.nearest_int`.  The ``<(n + 3)^2 / 12>``,
``<n^2 / 12>`` and ``<(2n - 1) / 4>`` arguments can never be exact halves (no square is
``6 mod 12``).
'''

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, List, Optional, Tuple

from . import numtheory
from . import partition_fn
from . import relprime
from . import utils
from .exceptions import DomainError, UnknownSelectorError

Value = Optional[Fraction]
''' An identity side evaluated at ``n``; ``None`` when it divides by zero. '''


@dataclass(frozen=True)
class KnownException:
    ''' The two (different) sides of an identity at an ``n`` below its window. '''
    n: int
    lhs: Value
    rhs: Value


@dataclass(frozen=True)
class Mismatch:
    n: int
    lhs: Value
    rhs: Value


@dataclass(frozen=True)
class IdentityCheck:
    '''
    One identity ``lhs(n) == rhs(n)``, expected to hold for every ``n >= window``.

    **Attributes**
        ``id`` (str)
            Stable identifier, e.g. ``"EB-PHI"``.

        ``description`` (str)
            The identity written out.

        ``lhs``, ``rhs`` (callable)
            ``n -> Fraction or None``, exact for every ``n >= 1``.

        ``window`` (int)
            The smallest ``n`` the identity holds from.

        ``known_exceptions`` (tuple of :class:`~partlab.identities.KnownException`)
            One entry per ``1 <= n < window``.
    '''
    id: str
    description: str
    lhs: Callable[[int], Value]
    rhs: Callable[[int], Value]
    window: int
    known_exceptions: Tuple[KnownException, ...] = ()

    def evaluate(self, n: int) -> Tuple[Value, Value]:
        ''' Both sides at ``n``. '''
        utils.require_int("n", n, minimum=1)
        return self.lhs(n), self.rhs(n)


@dataclass(frozen=True)
class VerificationReport:
    '''
    The outcome of :func:`~partlab.identities.verify`.

    ``mismatches`` are failures (``n >= window``).  ``informational`` holds the
    disagreements below the window, which are expected and never fail a report.
    '''
    identity_id: str
    n_lo: int
    n_hi: int
    mismatches: Tuple[Mismatch, ...]
    informational: Tuple[Mismatch, ...]
    elapsed: float = field(compare=False)

    @property
    def passed(self) -> bool:
        return not self.mismatches


########################################################################################
# Building blocks, all exact.                                                          #
########################################################################################
def _p2(n):
    return Fraction(partition_fn.p_recursive(n, 2))


def _p3(n):
    return Fraction(partition_fn.p_recursive(n, 3))


def _lam2(n):
    return Fraction(relprime.lambda_count(n, 2))


def _lam3(n):
    return Fraction(relprime.lambda_count(n, 3))


def _phi(n):
    return Fraction(numtheory.euler_phi(n))


def _j2(n):
    return Fraction(numtheory.jordan_totient(2, n))


def _psi(n):
    return Fraction(numtheory.dedekind_psi(n))


def _hardy(n):
    # p(n, 1) + p(n, 2) + p(n, 3)
    return Fraction(numtheory.nearest_int(Fraction((n + 3) ** 2, 12)))


def _honsberger(n):
    return Fraction(numtheory.nearest_int(Fraction(n * n, 12)))


def _nearest_p2(n):
    return Fraction(numtheory.nearest_int(Fraction(2 * n - 1, 4)))


def _parity_p2(n):
    return Fraction(2 * n - 1 + numtheory.parity_sign(n), 4)


def _trig_p3(n):
    sign = numtheory.parity_sign(n)
    return (6 * n * n - 7 - 9 * sign + 16 * numtheory.cos_two_pi_thirds(n)) / 72


def _psi_a_rhs(n):
    denominator = 2 * (_p2(n) - _lam2(n))
    if denominator == 0:
        return None
    return _j2(n) / denominator


def _exceptions(*rows):
    return tuple(
        KnownException(n, None if lhs is None else Fraction(lhs), None if rhs is None else Fraction(rhs))
        for n, lhs, rhs in rows
    )


# shared prefixes of the phi and J2 identities that only fail at the smallest n
_PHI_EXCEPTIONS = _exceptions((1, 1, 0), (2, 1, 2))
_J2_EXCEPTIONS = _exceptions((1, 1, 0), (2, 3, 0), (3, 8, 12))


@lru_cache(maxsize=None)
def registry() -> Tuple[IdentityCheck, ...]:
    '''
    Every registered identity, in a fixed order.  The registry is built once and is
    immutable.
    '''
    return (
        IdentityCheck(
            "EB-PHI", "phi(n) = 2 (p(n,2) - Lambda(n,2))",
            _phi, lambda n: 2 * (_p2(n) - _lam2(n)),
            3, _PHI_EXCEPTIONS,
        ),
        IdentityCheck(
            "EB-J2", "J2(n) = 12 (p(n,3) - Lambda(n,3))",
            _j2, lambda n: 12 * (_p3(n) - _lam3(n)),
            4, _J2_EXCEPTIONS,
        ),
        IdentityCheck(
            "HARDY-SUM", "p(n,1) + p(n,2) + p(n,3) = <(n+3)^2/12>",
            lambda n: Fraction(partition_fn.p_recursive(n, 1)) + _p2(n) + _p3(n), _hardy,
            1,
        ),
        IdentityCheck(
            "HARDY-PHI", "phi(n) = 2 (<(n+3)^2/12> - Lambda(n,2) - Lambda(n,3) - 1 - J2(n)/12)",
            _phi, lambda n: 2 * (_hardy(n) - _lam2(n) - _lam3(n) - 1 - _j2(n) / 12),
            4, _exceptions((1, 1, Fraction(-1, 6)), (2, 1, Fraction(3, 2)), (3, 2, Fraction(8, 3))),
        ),
        IdentityCheck(
            "HARDY-J2", "J2(n) = 12 (<(n+3)^2/12> - Lambda(n,2) - Lambda(n,3) - 1 - phi(n)/2)",
            _j2, lambda n: 12 * (_hardy(n) - _lam2(n) - _lam3(n) - 1 - _phi(n) / 2),
            4, _exceptions((1, 1, -6), (2, 3, 6), (3, 8, 12)),
        ),
        IdentityCheck(
            "HONS-P3", "p(n,3) = <n^2/12>",
            _p3, _honsberger,
            1,
        ),
        IdentityCheck(
            "HONS-J2", "J2(n) = 12 (<n^2/12> - Lambda(n,3))",
            _j2, lambda n: 12 * (_honsberger(n) - _lam3(n)),
            4, _J2_EXCEPTIONS,
        ),
        IdentityCheck(
            "HONS-PHI", "phi(n) = 2 (<(n+3)^2/12> - Lambda(n,2) - 1 - <n^2/12>)",
            _phi, lambda n: 2 * (_hardy(n) - _lam2(n) - 1 - _honsberger(n)),
            3, _PHI_EXCEPTIONS,
        ),
        IdentityCheck(
            "W-P2A", "p(n,2) = <(2n-1)/4>",
            _p2, _nearest_p2,
            1,
        ),
        IdentityCheck(
            "W-P2B", "p(n,2) = (2n - 1 + (-1)^n)/4",
            _p2, _parity_p2,
            1,
        ),
        IdentityCheck(
            "W-P3", "p(n,3) = (6n^2 - 7 - 9(-1)^n + 16 cos(2 pi n/3))/72",
            _p3, _trig_p3,
            1,
        ),
        IdentityCheck(
            "W-PHI", "phi(n) = n + ((-1)^n - 1)/2 - 2 Lambda(n,2)",
            _phi, lambda n: n + Fraction(numtheory.parity_sign(n) - 1, 2) - 2 * _lam2(n),
            3, _PHI_EXCEPTIONS,
        ),
        IdentityCheck(
            "W-PHI-NEAREST", "phi(n) = 2 (<(2n-1)/4> - Lambda(n,2))",
            _phi, lambda n: 2 * (_nearest_p2(n) - _lam2(n)),
            3, _PHI_EXCEPTIONS,
        ),
        IdentityCheck(
            "W-PHI-TRIG",
            "phi(n) = 2 (<(n+3)^2/12> - Lambda(n,2) - 1 - (6n^2 - 7 - 9(-1)^n + 16 cos(2 pi n/3))/72)",
            _phi, lambda n: 2 * (_hardy(n) - _lam2(n) - 1 - _trig_p3(n)),
            3, _PHI_EXCEPTIONS,
        ),
        IdentityCheck(
            "W-J2", "J2(n) = n^2 + (16 cos(2 pi n/3) - 7 - 9(-1)^n)/6 - 12 Lambda(n,3)",
            _j2,
            lambda n: (n * n + (16 * numtheory.cos_two_pi_thirds(n) - 7 - 9 * numtheory.parity_sign(n)) / 6
                       - 12 * _lam3(n)),
            4, _J2_EXCEPTIONS,
        ),
        IdentityCheck(
            "W-J2-NEAREST", "J2(n) = 12 (<(n+3)^2/12> - Lambda(n,3) - 1 - <(2n-1)/4>)",
            _j2, lambda n: 12 * (_hardy(n) - _lam3(n) - 1 - _nearest_p2(n)),
            4, _J2_EXCEPTIONS,
        ),
        IdentityCheck(
            "W-J2-PARITY", "J2(n) = 12 (<(n+3)^2/12> - Lambda(n,3) - 1 - (2n - 1 + (-1)^n)/4)",
            _j2, lambda n: 12 * (_hardy(n) - _lam3(n) - 1 - _parity_p2(n)),
            4, _J2_EXCEPTIONS,
        ),
        IdentityCheck(
            "COMB-PHI", "phi(n) = 2 (<(n+3)^2/12> - Lambda(n,2) - 1 - p(n,3))",
            _phi, lambda n: 2 * (_hardy(n) - _lam2(n) - 1 - _p3(n)),
            3, _PHI_EXCEPTIONS,
        ),
        IdentityCheck(
            "COMB-J2", "J2(n) = 12 (<(n+3)^2/12> - Lambda(n,3) - 1 - p(n,2))",
            _j2, lambda n: 12 * (_hardy(n) - _lam3(n) - 1 - _p2(n)),
            4, _J2_EXCEPTIONS,
        ),
        IdentityCheck(
            "PSI-A", "psi(n) = J2(n) / (2 (p(n,2) - Lambda(n,2)))",
            _psi, _psi_a_rhs,
            3, _exceptions((1, 1, None), (2, 3, Fraction(3, 2))),
        ),
        IdentityCheck(
            "PSI-B", "psi(n) phi(n) = 12 (p(n,3) - Lambda(n,3))",
            lambda n: _psi(n) * _phi(n), lambda n: 12 * (_p3(n) - _lam3(n)),
            4, _exceptions((1, 1, 0), (2, 3, 0), (3, 8, 12)),
        ),
        IdentityCheck(
            "PSI-C", "psi(n) = 12 (p(n,3) - Lambda(n,3)) / phi(n)",
            _psi, lambda n: 12 * (_p3(n) - _lam3(n)) / _phi(n),
            4, _exceptions((1, 1, 0), (2, 3, 0), (3, 4, 6)),
        ),
    )


def identity_ids() -> List[str]:
    return [check.id for check in registry()]


def lookup(identity_id: str) -> IdentityCheck:
    '''
    The registered identity called ``identity_id``.

    **Raises**
        :class:`~partlab.exceptions.UnknownSelectorError`
            When no identity has that id.
    '''
    for check in registry():
        if check.id == identity_id:
            return check
    raise UnknownSelectorError("identity", identity_id, identity_ids())


def verify(identity_id: str, n_lo: int, n_hi: int) -> VerificationReport:
    '''
    Evaluate both sides of an identity at every ``n_lo <= n <= n_hi``.

    **Parameters**
        ``identity_id`` (str)
            A registered id, see :func:`~partlab.identities.registry`.

        ``n_lo``, ``n_hi`` (int)
            The inclusive range, ``1 <= n_lo <= n_hi``.

    **Return**
        :class:`~partlab.identities.VerificationReport`
            Disagreements at ``n >= window`` are mismatches, the ones below the window
            are informational.

    **Raises**
        :class:`~partlab.exceptions.UnknownSelectorError`
            For an unknown ``identity_id``.

        :class:`~partlab.exceptions.DomainError`
            Unless ``1 <= n_lo <= n_hi``.
    '''
    check = lookup(identity_id)
    utils.require_int("n_lo", n_lo)
    utils.require_int("n_hi", n_hi)
    if not 1 <= n_lo <= n_hi:
        raise DomainError("Need 1 <= n_lo <= n_hi, but got n_lo={0} and n_hi={1}.".format(n_lo, n_hi))

    start = utils.get_time()
    mismatches = []
    informational = []
    for n in range(n_lo, n_hi + 1):
        lhs, rhs = check.evaluate(n)
        # an undefined side never agrees
        if lhs is not None and rhs is not None and lhs == rhs:
            continue
        row = Mismatch(n, lhs, rhs)
        if n < check.window:
            informational.append(row)
        else:
            mismatches.append(row)
    end = utils.get_time()

    # << verboseBuild
    utils.verbose_log("verify({0}, {1}, {2}): {3} mismatches in {4}.".format(
        identity_id, n_lo, n_hi, len(mismatches), utils.time_string(start, end)
    ), utils.AnsiColors.BOLD_RED if mismatches else utils.AnsiColors.DIM_CYAN)
    return VerificationReport(identity_id, n_lo, n_hi, tuple(mismatches), tuple(informational), end - start)


def verify_all(n_lo: int, n_hi: int) -> List[VerificationReport]:
    ''' :func:`~partlab.identities.verify` for every registered identity. '''
    return [verify(check.id, n_lo, n_hi) for check in registry()]
