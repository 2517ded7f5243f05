# -*- coding: utf8 -*-
########################################################################################
# This file is part of partlab.                                                        #
# Full BSD 3-Clause license available in the LICENSE file at the repository root.     #
########################################################################################
'''
The function / strategy registry shared by the command line and the Sphinx table
generator.

A request names a function (``--fn``), the points to evaluate it at and optionally a
strategy.  Functions with a number of parts ``k`` that are requested without one are
expanded to every ``k`` in ``1..n``.  Strategies are resolved on the library modules
each time a point is evaluated.
'''

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import groupby
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import configs
from . import enumeration
from . import numtheory
from . import partition_fn
from . import relprime
from . import spt
from . import utils
from .exceptions import DomainError, UnknownSelectorError


@dataclass(frozen=True)
class FunctionInfo:
    '''
    How a function selector is evaluated.

    **Attributes**
        ``description`` (str)
            One line shown by ``--help`` and in table titles.

        ``k_mode`` (str)
            ``"required"`` (expanded over every ``k`` when missing), ``"optional"``
            (the total when missing) or ``"none"``.

        ``uses_exponents`` (bool)
            Whether ``a`` and ``b`` apply (``spt`` only).

        ``strategies`` (tuple of str)
            Accepted strategies, the first is the default.  Empty when there is only
            one way to evaluate the function.

        ``evaluate`` (callable)
            ``(n, k, a, b, strategy) -> int``.
    '''
    description: str
    k_mode: str
    uses_exponents: bool
    strategies: Tuple[str, ...]
    evaluate: Callable[[int, Optional[int], Optional[int], Optional[int], Optional[str]], int]

    @property
    def default_strategy(self) -> Optional[str]:
        return self.strategies[0] if self.strategies else None


def _eval_p(n, k, a, b, strategy):
    if strategy == "brute":
        return enumeration.brute_p_total(n)
    return partition_fn.p_total(n, strategy)


def _eval_pk(n, k, a, b, strategy):
    if strategy == "closed":
        return partition_fn.p_closed(n, k)
    if strategy == "brute":
        return enumeration.brute_p(n, k)
    return partition_fn.p_recursive(n, k)


def _eval_spt(n, k, a, b, strategy):
    params = spt.SptParams(a, b)
    if k is None:
        if strategy == "brute":
            return enumeration.brute_spt(a, b, n)
        return spt.spt_total(params, n)
    if strategy == "brute":
        return enumeration.brute_spt_nk(a, b, n, k)
    return spt.spt_nk(params, n, k)


def _eval_lambda(n, k, a, b, strategy):
    return relprime.lambda_count(n, k, strategy)


def _eval_ppsi(n, k, a, b, strategy):
    return relprime.p_psi(n, k, strategy)


def _positive(func):
    def evaluate(n, k, a, b, strategy):
        if n < 1:
            raise DomainError("`n` must be a positive integer, but was {0}.".format(n))
        return func(n)
    return evaluate


FUNCTIONS: Dict[str, FunctionInfo] = {
    "p":      FunctionInfo("the partition function p(n)", "none", False,
                           ("recursive", "closed", "pentagonal", "brute"), _eval_p),
    "pk":     FunctionInfo("partitions into exactly k parts p(n, k)", "required", False,
                           ("recursive", "closed", "brute"), _eval_pk),
    "spt":    FunctionInfo("the generalized smallest parts function spt_(a,b)", "optional", True,
                           ("recursive", "brute"), _eval_spt),
    "lambda": FunctionInfo("partitions into k parts that are not relatively prime", "required", False,
                           ("mobius", "inclexcl", "brute"), _eval_lambda),
    "ppsi":   FunctionInfo("relatively prime partitions into k parts", "required", False,
                           ("mobius", "inclexcl", "brute"), _eval_ppsi),
    "phi":    FunctionInfo("Euler's totient", "none", False, (),
                           _positive(lambda n: numtheory.euler_phi(n))),
    "j2":     FunctionInfo("Jordan's totient of order 2", "none", False, (),
                           _positive(lambda n: numtheory.jordan_totient(2, n))),
    "psi":    FunctionInfo("Dedekind's psi function", "none", False, (),
                           _positive(lambda n: numtheory.dedekind_psi(n))),
    "d":      FunctionInfo("the number of divisors", "none", False, (),
                           _positive(lambda n: numtheory.divisor_count_floor(n))),
}
''' Every function selector understood by :func:`~partlab.compute.evaluate`. '''

STRATEGIES = ("recursive", "closed", "pentagonal", "brute", "mobius", "inclexcl")
''' The union of every function's strategies. '''

ORACLE_FUNCTIONS = ("p", "pk", "spt", "lambda", "ppsi")
''' Functions with more than one strategy, which ``oracle-diff`` cross-checks. '''


def function_info(fn: str) -> FunctionInfo:
    if fn not in FUNCTIONS:
        raise UnknownSelectorError("function", fn, FUNCTIONS)
    return FUNCTIONS[fn]


@dataclass(frozen=True)
class Point:
    ''' One requested evaluation.  ``k``, ``a``, ``b`` and ``strategy`` may be ``None``. '''
    fn: str
    n: int
    k: Optional[int] = None
    a: Optional[int] = None
    b: Optional[int] = None
    strategy: Optional[str] = None


@dataclass(frozen=True)
class Record:
    ''' An evaluated :class:`~partlab.compute.Point`. '''
    fn: str
    n: int
    k: Optional[int]
    a: Optional[int]
    b: Optional[int]
    strategy: Optional[str]
    value: int

    FIELDS = ("fn", "n", "k", "a", "b", "strategy", "value")

    def as_strings(self) -> Dict[str, Optional[str]]:
        '''
        The record with ``value`` as a decimal string and the rest unchanged, the
        serialization used for json-lines output.
        '''
        return {
            "fn": self.fn,
            "n": self.n,
            "k": self.k,
            "a": self.a,
            "b": self.b,
            "strategy": self.strategy,
            "value": str(self.value),
        }


def make_point(fn: str, n: int, k: Optional[int] = None, a: Optional[int] = None, b: Optional[int] = None,
               strategy: Optional[str] = None) -> Point:
    '''
    Validate a request and fill in defaults.

    ``a`` and ``b`` default to ``0`` and ``1`` for ``spt`` and must be absent for every
    other function; ``strategy`` defaults to the function's first strategy.

    **Raises**
        :class:`~partlab.exceptions.UnknownSelectorError`
            For an unknown function or a strategy the function does not have.

        :class:`~partlab.exceptions.DomainError`
            For arguments that do not apply to the function.
    '''
    info = function_info(fn)
    utils.require_int("n", n)
    if k is not None:
        if info.k_mode == "none":
            raise DomainError("`{0}` does not take a number of parts.".format(fn))
        utils.require_int("k", k)
    if info.uses_exponents:
        a = 0 if a is None else utils.require_int("a", a, minimum=0)
        b = 1 if b is None else utils.require_int("b", b, minimum=0)
    elif a is not None or b is not None:
        raise DomainError("`{0}` does not take the exponents a and b.".format(fn))
    if strategy is None:
        strategy = info.default_strategy
    elif strategy not in info.strategies:
        raise UnknownSelectorError("strategy for `{0}`".format(fn), strategy, info.strategies or ("(none)",))
    return Point(fn, n, k, a, b, strategy)


def expand(fn: str, n_lo: int, n_hi: int, k: Optional[int] = None, a: Optional[int] = None,
           b: Optional[int] = None, strategy: Optional[str] = None) -> List[Point]:
    '''
    Every point of a sweep over ``n_lo <= n <= n_hi`` in ``(n, k)`` order.  A function
    that requires ``k`` and is given none is evaluated at every ``1 <= k <= max(n, 1)``.
    '''
    info = function_info(fn)
    utils.require_int("n_lo", n_lo)
    utils.require_int("n_hi", n_hi)
    if n_lo > n_hi:
        raise DomainError("Need n_lo <= n_hi, but got n_lo={0} and n_hi={1}.".format(n_lo, n_hi))
    points = []
    for n in range(n_lo, n_hi + 1):
        if k is None and info.k_mode == "required":
            ks = range(1, max(n, 1) + 1)
        else:
            ks = (k,)
        for each_k in ks:
            points.append(make_point(fn, n, each_k, a, b, strategy))
    return points


def evaluate(point: Point) -> Record:
    ''' Evaluate a single validated point. '''
    info = function_info(point.fn)
    value = info.evaluate(point.n, point.k, point.a, point.b, point.strategy)
    return Record(point.fn, point.n, point.k, point.a, point.b, point.strategy, value)


########################################################################################
# Parallel sweeps                                                                      #
########################################################################################
def config_snapshot() -> Dict[str, object]:
    ''' The current values of every non-Sphinx configuration key. '''
    return {key: getattr(configs, key) for key in sorted(configs.available_keys())}


def _evaluate_batch(snapshot, points):
    # Runs in a worker process, which starts from the default configuration.
    configs.apply_configurations(snapshot, source="worker configuration")
    return [evaluate(point) for point in points]


def resolve_jobs(jobs: Optional[int] = None) -> int:
    ''' ``jobs``, else :data:`~partlab.configs.jobs`, else the number of cores. '''
    if jobs is None:
        jobs = configs.jobs
    if jobs is None:
        jobs = os.cpu_count() or 1
    return jobs


def run(points: Sequence[Point], jobs: Optional[int] = None) -> List[Record]:
    '''
    Evaluate ``points`` and return the records in the same order.

    Points are batched by ``n`` and spread over a process pool of ``jobs`` workers
    (see :func:`~partlab.compute.resolve_jobs`).  With one worker, or one batch, the
    work stays in this process.
    '''
    batches = [list(group) for _, group in groupby(points, key=lambda point: point.n)]
    workers = min(resolve_jobs(jobs), len(batches))
    start = utils.get_time()
    if workers <= 1:
        records = [evaluate(point) for point in points]
    else:
        snapshot = config_snapshot()
        records = []
        with ProcessPoolExecutor(max_workers=workers) as executor:
            for batch in executor.map(_evaluate_batch, [snapshot] * len(batches), batches):
                records.extend(batch)
    end = utils.get_time()
    # << verboseBuild
    utils.verbose_log("Evaluated {0} points with {1} worker(s) in {2}.".format(
        len(points), max(workers, 1), utils.time_string(start, end)
    ), utils.AnsiColors.DIM_CYAN)
    return records


########################################################################################
# Oracle comparison                                                                    #
########################################################################################
@dataclass(frozen=True)
class OracleRow:
    ''' The value every strategy gave at one ``(n, k)``. '''
    fn: str
    n: int
    k: Optional[int]
    a: Optional[int]
    b: Optional[int]
    values: Tuple[Tuple[str, int], ...]

    @property
    def agrees(self) -> bool:
        return len({value for _, value in self.values}) <= 1


def oracle_diff(fn: str, n_lo: int, n_hi: int, k: Optional[int] = None, a: Optional[int] = None,
                b: Optional[int] = None, jobs: Optional[int] = None) -> List[OracleRow]:
    '''
    Evaluate ``fn`` with every one of its strategies over a sweep.

    **Return**
        ``list`` of :class:`~partlab.compute.OracleRow`
            One row per point in ``(n, k)`` order, agreeing or not.

    **Raises**
        :class:`~partlab.exceptions.UnknownSelectorError`
            When ``fn`` is not one of :data:`~partlab.compute.ORACLE_FUNCTIONS`.
    '''
    if fn not in ORACLE_FUNCTIONS:
        raise UnknownSelectorError("oracle function", fn, ORACLE_FUNCTIONS)
    strategies = function_info(fn).strategies
    base = expand(fn, n_lo, n_hi, k, a, b)
    points = [
        Point(point.fn, point.n, point.k, point.a, point.b, strategy)
        for point in base for strategy in strategies
    ]
    records = run(points, jobs)
    rows = []
    for idx, point in enumerate(base):
        chunk = records[idx * len(strategies):(idx + 1) * len(strategies)]
        values = tuple((r.strategy, r.value) for r in chunk)
        rows.append(OracleRow(fn, point.n, point.k, point.a, point.b, values))
    return rows
