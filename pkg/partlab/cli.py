# -*- coding: utf8 -*-
########################################################################################
# This file is part of partlab.                                                        #
# Full BSD 3-Clause license available in the LICENSE file at the repository root.     #
########################################################################################
'''
The ``partlab`` command line.

.. code-block:: console

   $ partlab compute --fn pk --n 11 --k 3
   $ partlab compute --fn spt --a 3 --b 2 --n 5
   $ partlab table --fn lambda --n-lo 1 --n-hi 30 --k 2 --format csv
   $ partlab oracle-diff --fn p --n-lo 0 --n-hi 40
   $ partlab verify-identities --n-lo 1 --n-hi 500
   $ partlab gf-check --a 0 --b 1 --n 40

**Exit codes**
    ``0`` success, ``1`` a verification found a mismatch, ``2`` a usage or
    configuration error.  Nothing else.

**Output**
    ``--format human`` (default) is for reading.  ``--format json`` writes one object
    per line with the keys ``fn, n, k, a, b, strategy, value`` and the value as a
    decimal string; ``--format csv`` writes the same columns under a header row.  Both
    machine formats are byte-for-byte deterministic.
'''

from __future__ import annotations

import csv
import io
import json
import sys
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

import click
from sphinx.errors import ConfigError

from . import __version__
from . import compute
from . import configs
from . import identities
from . import qseries
from . import spt
from . import utils
from .exceptions import PartlabError

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

FORMATS = ("human", "json", "csv")


@dataclass
class RunConfig:
    '''
    Everything one invocation asked for.  ``overrides`` are configuration keys applied
    through :func:`~partlab.configs.apply_configurations` before the command runs.
    '''
    command: str
    fn: Optional[str] = None
    n_lo: Optional[int] = None
    n_hi: Optional[int] = None
    k: Optional[int] = None
    a: Optional[int] = None
    b: Optional[int] = None
    strategy: Optional[str] = None
    output_format: str = "human"
    overrides: Dict[str, object] = field(default_factory=dict)
    jobs: Optional[int] = None
    identity: Optional[str] = None


########################################################################################
# Output                                                                               #
########################################################################################
def _echo(msg=""):
    click.echo(msg)


def _echo_csv(header, rows):
    # csv needs a real file object, build the text first and echo it in one piece
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    click.echo(buffer.getvalue(), nl=False)


def _blank(value):
    return "" if value is None else value


def _human_record(record):
    args = [str(record.n)] if record.k is None else [str(record.n), str(record.k)]
    name = record.fn
    if record.a is not None:
        name = "{0}_({1},{2})".format(name, record.a, record.b)
    line = "{0}({1}) = {2}".format(name, ", ".join(args), record.value)
    if record.strategy:
        line = "{0}  [{1}]".format(line, record.strategy)
    return line


def emit_records(records: Sequence[compute.Record], output_format: str) -> None:
    ''' Write ``records`` to stdout in ``output_format``. '''
    if output_format == "json":
        for record in records:
            _echo(json.dumps(record.as_strings()))
    elif output_format == "csv":
        rows = []
        for record in records:
            row = record.as_strings()
            rows.append([_blank(row[key]) for key in compute.Record.FIELDS])
        _echo_csv(compute.Record.FIELDS, rows)
    else:
        for record in records:
            _echo(_human_record(record))


def _fail(msg):
    click.echo(utils.critical(msg), err=True)
    return EXIT_USAGE


def _apply(config):
    overrides = dict(config.overrides)
    if config.jobs is not None:
        overrides["jobs"] = config.jobs
    configs.apply_configurations(overrides, source="command line")


########################################################################################
# Commands                                                                             #
########################################################################################
def cmd_compute(config: RunConfig) -> int:
    '''
    Print one record per requested point, in ``(n, k)`` order.  ``table`` is the same
    command over a range of ``n``.
    '''
    _apply(config)
    points = compute.expand(config.fn, config.n_lo, config.n_hi, config.k, config.a, config.b, config.strategy)
    if config.output_format == "human" and len(points) > 1:
        # << verboseBuild
        utils.verbose_log("Evaluating {0} points of `{1}`.".format(len(points), config.fn),
                          utils.AnsiColors.BOLD_BLUE)
    records = compute.run(points, config.jobs)
    emit_records(records, config.output_format)
    return EXIT_OK


def cmd_oracle_diff(config: RunConfig) -> int:
    ''' Run every strategy for ``config.fn`` and print the points where they disagree. '''
    _apply(config)
    rows = compute.oracle_diff(config.fn, config.n_lo, config.n_hi, config.k, config.a, config.b, config.jobs)
    bad = [row for row in rows if not row.agrees]
    if config.output_format == "human":
        for row in bad:
            values = ", ".join("{0}={1}".format(strategy, value) for strategy, value in row.values)
            where = "n={0}".format(row.n) if row.k is None else "n={0}, k={1}".format(row.n, row.k)
            _echo(utils.critical("{0}({1}): {2}".format(row.fn, where, values), output_stream=sys.stdout))
        summary = "{0} of {1} points disagree.".format(len(bad), len(rows))
        _echo(utils.critical(summary, output_stream=sys.stdout) if bad else
              utils.progress("All {0} points agree across {1}.".format(
                  len(rows), ", ".join(compute.function_info(config.fn).strategies))))
    else:
        records = []
        for row in bad:
            for strategy, value in row.values:
                records.append(compute.Record(row.fn, row.n, row.k, row.a, row.b, strategy, value))
        emit_records(records, config.output_format)
    return EXIT_MISMATCH if bad else EXIT_OK


def _value_string(value):
    return "undefined" if value is None else str(value)


def cmd_verify_identities(config: RunConfig) -> int:
    ''' One :class:`~partlab.identities.VerificationReport` per identity. '''
    _apply(config)
    ids = [config.identity] if config.identity else identities.identity_ids()
    for identity_id in ids:
        identities.lookup(identity_id)
    reports = [identities.verify(identity_id, config.n_lo, config.n_hi) for identity_id in ids]
    if config.output_format == "csv":
        rows = []
        for report in reports:
            for kind, found in (("mismatch", report.mismatches), ("informational", report.informational)):
                for m in found:
                    rows.append((report.identity_id, m.n, _value_string(m.lhs), _value_string(m.rhs), kind))
        _echo_csv(("identity", "n", "lhs", "rhs", "kind"), rows)
    for report in reports:
        if config.output_format == "json":
            _echo(json.dumps({
                "identity": report.identity_id,
                "n_lo": report.n_lo,
                "n_hi": report.n_hi,
                "passed": report.passed,
                "mismatches": [
                    [m.n, _value_string(m.lhs), _value_string(m.rhs)] for m in report.mismatches
                ],
                "informational": [
                    [m.n, _value_string(m.lhs), _value_string(m.rhs)] for m in report.informational
                ],
            }))
        elif config.output_format == "human":
            status = utils.progress if report.passed else utils.critical
            _echo(status("{0}: {1} mismatches over [{2}, {3}] ({4}).".format(
                report.identity_id, len(report.mismatches), report.n_lo, report.n_hi,
                utils.time_string(0, report.elapsed)
            ), output_stream=sys.stdout))
            for m in report.informational:
                _echo(utils.prefix("    ", "n={0}: {1} vs {2} (below the window)".format(
                    m.n, _value_string(m.lhs), _value_string(m.rhs)
                )))
            for m in report.mismatches:
                _echo(utils.prefix("    ", "n={0}: {1} vs {2}".format(
                    m.n, _value_string(m.lhs), _value_string(m.rhs)
                )))
    return EXIT_OK if all(report.passed for report in reports) else EXIT_MISMATCH


def cmd_gf_check(config: RunConfig) -> int:
    '''
    Print a :func:`~partlab.qseries.conjecture_report`.  Only the two variants with a
    known generating function can fail, every other ``(a, b)`` is report only.
    '''
    _apply(config)
    report = qseries.conjecture_report(config.a, config.b, config.n_hi)
    cited = (config.a, config.b) in qseries.GF_SPT_VARIANTS
    if config.output_format == "json":
        for n, series_value, spt_value in report.rows:
            _echo(json.dumps({"a": report.a, "b": report.b, "n": n,
                              "series": str(series_value), "spt": str(spt_value),
                              "agrees": series_value == spt_value}))
    elif config.output_format == "csv":
        _echo_csv(("a", "b", "n", "series", "spt", "agrees"), [
            (report.a, report.b, n, series_value, spt_value, series_value == spt_value)
            for n, series_value, spt_value in report.rows
        ])
    else:
        for n, series_value, spt_value in report.rows:
            mark = "" if series_value == spt_value else "  <-- differs"
            _echo("n={0}: series {1}, spt {2}{3}".format(n, series_value, spt_value, mark))
        if report.agrees:
            _echo(utils.progress("(a, b) = ({0}, {1}): agrees up to q^{2}.".format(
                report.a, report.b, report.order
            )))
        else:
            _echo(utils.info("(a, b) = ({0}, {1}): first differs at n = {2}.".format(
                report.a, report.b, report.first_mismatch
            )))
    if cited and not report.agrees:
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_spt_compare(config: RunConfig, second: spt.SptParams) -> int:
    ''' Tabulate ``spt_(a,b)(n)`` against ``spt_(a2,b2)(n)``; always report only. '''
    _apply(config)
    first = spt.SptParams(config.a, config.b)
    rows = spt.compare_totals(first, second, config.n_lo, config.n_hi)
    if config.output_format == "json":
        for row in rows:
            _echo(json.dumps({"n": row.n, "first": str(row.first), "second": str(row.second),
                              "at_most": row.at_most}))
    elif config.output_format == "csv":
        _echo_csv(("n", "first", "second", "at_most"),
                  [(row.n, row.first, row.second, row.at_most) for row in rows])
    else:
        for row in rows:
            relation = "<=" if row.at_most else ">"
            _echo("n={0}: spt_{1} = {2} {3} spt_{4} = {5}".format(
                row.n, first, row.first, relation, second, row.second
            ))
    return EXIT_OK


########################################################################################
# click                                                                                #
########################################################################################
def _run(func, *args):
    try:
        code = func(*args)
    except (PartlabError, ConfigError) as e:
        code = _fail("{0}: {1}".format(type(e).__name__, e))
    sys.exit(code)


def _format_option(func):
    return click.option("--format", "output_format", type=click.Choice(FORMATS), default="human",
                        show_default=True, help="Output format.")(func)


def _jobs_option(func):
    return click.option("--jobs", type=int, default=None,
                        help="Worker processes for sweeps (default: one per core).")(func)


def _range(n, n_lo, n_hi):
    if n is not None:
        if n_lo is not None or n_hi is not None:
            raise click.UsageError("Give either --n or --n-lo/--n-hi, not both.")
        return n, n
    if n_lo is None or n_hi is None:
        raise click.UsageError("Give --n, or both --n-lo and --n-hi.")
    return n_lo, n_hi


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(version=__version__, prog_name="partlab")
@click.option("--verbose", is_flag=True, help="Print diagnostics to stderr.")
@click.option("--no-color", is_flag=True, help="Never colorize output that is not going to a terminal.")
@click.option("--budget", type=int, default=None, help="Summand evaluations allowed per closed-form call.")
@click.option("--max-parts", type=int, default=None, help="Closed-form guard on the number of parts.")
@click.option("--enumeration-max-n", type=int, default=None,
              help="Brute-force oracles refuse work larger than p(N).")
@click.pass_context
def cli(ctx, verbose, no_color, budget, max_parts, enumeration_max_n):
    '''
    Exact partition counting: p(n, k), spt, relatively prime partitions, totient
    identities and q-series checks.
    '''
    overrides = {}
    if verbose:
        overrides["verboseBuild"] = True
    if no_color:
        overrides["alwaysColorize"] = False
    if budget is not None:
        overrides["termBudget"] = budget
    if max_parts is not None:
        overrides["closedFormMaxParts"] = max_parts
    if enumeration_max_n is not None:
        overrides["enumerationMaxN"] = enumeration_max_n
    ctx.obj = overrides


@cli.command("compute")
@click.option("--fn", type=click.Choice(sorted(compute.FUNCTIONS)), required=True, help="The function.")
@click.option("--n", type=int, required=True, help="The integer.")
@click.option("--k", type=int, default=None, help="Number of parts (all k when omitted).")
@click.option("--a", type=int, default=None, help="spt exponent on the smallest part (default 0).")
@click.option("--b", type=int, default=None, help="spt exponent on its multiplicity (default 1).")
@click.option("--strategy", type=click.Choice(compute.STRATEGIES), default=None, help="How to compute it.")
@_format_option
@click.pass_obj
def compute_command(overrides, fn, n, k, a, b, strategy, output_format):
    ''' Compute single values. '''
    config = RunConfig("compute", fn, n, n, k, a, b, strategy, output_format, overrides, jobs=1)
    _run(cmd_compute, config)


@cli.command("table")
@click.option("--fn", type=click.Choice(sorted(compute.FUNCTIONS)), required=True, help="The function.")
@click.option("--n-lo", type=int, required=True, help="First n.")
@click.option("--n-hi", type=int, required=True, help="Last n.")
@click.option("--k", type=int, default=None, help="Number of parts (all k when omitted).")
@click.option("--a", type=int, default=None, help="spt exponent on the smallest part (default 0).")
@click.option("--b", type=int, default=None, help="spt exponent on its multiplicity (default 1).")
@click.option("--strategy", type=click.Choice(compute.STRATEGIES), default=None, help="How to compute it.")
@_format_option
@_jobs_option
@click.pass_obj
def table_command(overrides, fn, n_lo, n_hi, k, a, b, strategy, output_format, jobs):
    ''' Sweep a function over a range of n. '''
    config = RunConfig("table", fn, n_lo, n_hi, k, a, b, strategy, output_format, overrides, jobs)
    _run(cmd_compute, config)


@cli.command("oracle-diff")
@click.option("--fn", type=click.Choice(compute.ORACLE_FUNCTIONS), required=True, help="The function.")
@click.option("--n", type=int, default=None, help="A single n.")
@click.option("--n-lo", type=int, default=None, help="First n.")
@click.option("--n-hi", type=int, default=None, help="Last n.")
@click.option("--k", type=int, default=None, help="Number of parts (all k when omitted).")
@click.option("--a", type=int, default=None, help="spt exponent on the smallest part (default 0).")
@click.option("--b", type=int, default=None, help="spt exponent on its multiplicity (default 1).")
@_format_option
@_jobs_option
@click.pass_obj
def oracle_diff_command(overrides, fn, n, n_lo, n_hi, k, a, b, output_format, jobs):
    ''' Cross-check every strategy (brute force included) and print disagreements. '''
    n_lo, n_hi = _range(n, n_lo, n_hi)
    config = RunConfig("oracle-diff", fn, n_lo, n_hi, k, a, b, None, output_format, overrides, jobs)
    _run(cmd_oracle_diff, config)


@cli.command("verify-identities")
@click.option("--identity", type=str, default=None, help="Only this identity (default: all).")
@click.option("--n", type=int, default=None, help="A single n.")
@click.option("--n-lo", type=int, default=None, help="First n.")
@click.option("--n-hi", type=int, default=None, help="Last n.")
@_format_option
@click.pass_obj
def verify_identities_command(overrides, identity, n, n_lo, n_hi, output_format):
    ''' Verify the totient identities; values below each window are informational. '''
    n_lo, n_hi = _range(n, n_lo, n_hi)
    config = RunConfig("verify-identities", n_lo=n_lo, n_hi=n_hi, output_format=output_format,
                       overrides=overrides, identity=identity)
    _run(cmd_verify_identities, config)


@cli.command("gf-check")
@click.option("--a", type=int, required=True, help="Exponent on the smallest part.")
@click.option("--b", type=int, required=True, help="Exponent on its multiplicity, at least 1.")
@click.option("--n", type=int, required=True, help="Series order.")
@_format_option
@click.pass_obj
def gf_check_command(overrides, a, b, n, output_format):
    ''' Compare the candidate spt_(a,b) generating function with the exact values. '''
    config = RunConfig("gf-check", n_lo=1, n_hi=n, a=a, b=b, output_format=output_format, overrides=overrides)
    _run(cmd_gf_check, config)


@cli.command("spt-compare")
@click.option("--a", type=int, required=True, help="First exponent pair, smallest part.")
@click.option("--b", type=int, required=True, help="First exponent pair, multiplicity.")
@click.option("--a2", type=int, required=True, help="Second exponent pair, smallest part.")
@click.option("--b2", type=int, required=True, help="Second exponent pair, multiplicity.")
@click.option("--n-lo", type=int, required=True, help="First n (at least 1).")
@click.option("--n-hi", type=int, required=True, help="Last n.")
@_format_option
@click.pass_obj
def spt_compare_command(overrides, a, b, a2, b2, n_lo, n_hi, output_format):
    ''' Report whether spt_(a,b)(n) <= spt_(a2,b2)(n) over a range. '''
    config = RunConfig("spt-compare", n_lo=n_lo, n_hi=n_hi, a=a, b=b, output_format=output_format,
                       overrides=overrides)
    try:
        second = spt.SptParams(a2, b2)
    except PartlabError as e:
        sys.exit(_fail("{0}: {1}".format(type(e).__name__, e)))
    _run(cmd_spt_compare, config, second)


def main(argv: Optional[List[str]] = None) -> None:
    '''
    Console script entry point.  click reports its own usage errors with exit code
    ``2``, which is also what :class:`~partlab.exceptions.PartlabError` maps to.
    '''
    cli.main(args=argv, prog_name="partlab")


if __name__ == "__main__":
    main()
