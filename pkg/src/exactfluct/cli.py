"""Command-line front end writing CSV.

Subcommands: ``omega``, ``fluct``, ``ce-fluct``, ``figure``, ``verify``.
Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget error.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import __version__, verify
from .ensembles import ce_fluctuation_fes, ce_stats_at, invert_mean_excitation
from .errors import BudgetExceededError, DomainError, UnsupportedStatisticsError
from .fes import Statistics, closed_form, enumerate_fes
from .microcanonical import FluctuationSeries, distribution, fluctuation_series, ground_state_stats
from .oracle import check_budget

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
DEFAULT_BUDGET = 10**7

FIGURES = {
    "1": {"N": 30, "g": ["1"], "n_max": 6000, "ce": "mixture"},
    "3a": {"N": 5, "g": ["1", "3/4", "1/4", "0"], "n_max": 200, "symbols": ["3/4", "1/4"]},
    "3b": {"N": 10, "g": ["1", "8/9", "1/9", "0"], "n_max": 200},
    "4a": {"N": 5, "g": ["3/4", "1/4"], "n_max": 200, "ce": "interpolated"},
    "4b": {"N": 10, "g": ["8/9", "1/9"], "n_max": 200, "ce": "interpolated"},
}
SYMBOL_N_MAX = 16


class _Table:
    """CSV rows with a one-line ``#`` metadata header."""

    def __init__(self, header, meta: str, digits: int):
        self.header = header
        self.meta = meta
        self.digits = digits
        self.rows = []

    def add(self, *values):
        self.rows.append([self._fmt(v) for v in values])

    def _fmt(self, v):
        if isinstance(v, int):
            return str(v)
        if isinstance(v, Fraction):
            return f"{v.numerator}/{v.denominator}" if v.denominator != 1 else str(v.numerator)
        return f"{float(v):.{self.digits}g}"

    def render(self) -> str:
        buf = io.StringIO()
        buf.write(f"# {self.meta}\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.header)
        writer.writerows(self.rows)
        return buf.getvalue()


def _meta(command: str, **params) -> str:
    parts = [f"exactfluct {__version__}", command]
    parts += [f"{k}={v}" for k, v in params.items() if v is not None]
    return " ".join(parts)


def _emit(table: _Table, out: str | None):
    text = table.render()
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _check_cells(n_max: int, N: int, budget: int):
    cells = (n_max + 1) * N
    if cells > budget:
        raise BudgetExceededError(f"sweep needs {cells} table cells, budget is {budget}")


def _has_closed_form(stats: Statistics, N: int) -> bool:
    try:
        closed_form(stats, N)
    except UnsupportedStatisticsError:
        return False
    return True


def cmd_omega(args) -> _Table:
    if _has_closed_form(args.stats, args.N):
        d = distribution(args.n, args.N, args.stats)
    else:
        d = enumerate_fes(args.n, args.N, args.stats.g, budget=args.budget)
    table = _Table(["N_ex", "omega"], _meta("omega", stats=args.stats, N=args.N, n=args.n), args.digits)
    for k, w in enumerate(d.omega, start=1):
        table.add(k, w)
    return table


def _enumerated_series(n_max: int, N: int, stats: Statistics, budget: int) -> FluctuationSeries:
    # fail before doing any work if the whole sweep is over budget
    total = sum(check_budget(n, N, None) for n in range(n_max + 1))
    if total > budget:
        raise BudgetExceededError(f"enumerating n <= {n_max} at N={N} visits {total} partitions, budget is {budget}")
    stats_rows = [ground_state_stats(enumerate_fes(n, N, stats.g, budget=None)) for n in range(n_max + 1)]
    return FluctuationSeries(
        N,
        stats,
        np.arange(n_max + 1),
        np.array([s.mean_excited for s in stats_rows]),
        np.array([s.fluctuation for s in stats_rows]),
    )


def cmd_fluct(args) -> _Table:
    _check_cells(args.n_max, args.N, args.budget)
    if _has_closed_form(args.stats, args.N):
        series = fluctuation_series(args.n_max, args.N, args.stats)
    else:
        series = _enumerated_series(args.n_max, args.N, args.stats, args.budget)
    meta = _meta("fluct", stats=args.stats, N=args.N, n_max=args.n_max, digits=args.digits)
    table = _Table(["n", "mean_excited", "delta_N0"], meta, args.digits)
    for n, mean, fluct in series.rows():
        table.add(int(n), mean, fluct)
    return table


def _ce_fluctuation(x: float, N: int, stats: Statistics) -> float:
    if stats.kind == "fes":
        return ce_fluctuation_fes(x, N, stats.g)[1]
    return ce_stats_at(x, N, stats).ce_stats.fluctuation


def ce_curve(n_max: int, N: int, stats: Statistics):
    """``(n, x, delta_N0_CE)`` for ``n = 0..n_max`` at matched mean excitation."""
    yield 0, 0.0, 0.0
    for n in range(1, n_max + 1):
        x = invert_mean_excitation(n, N, stats)
        yield n, x, _ce_fluctuation(x, N, stats)


def cmd_ce_fluct(args) -> _Table:
    meta = _meta("ce-fluct", stats=args.stats, N=args.N, x=args.x, n_max=args.n_max, digits=args.digits)
    if args.x is not None:
        point = ce_stats_at(args.x, args.N, args.stats)
        table = _Table(["x", "mean_excitation", "mean_excited", "delta_N0_CE"], meta, args.digits)
        table.add(args.x, point.mean_excitation, point.ce_stats.mean_excited, _ce_fluctuation(args.x, args.N, args.stats))
        return table
    _check_cells(args.n_max, args.N, args.budget)
    table = _Table(["n", "x", "delta_N0_CE"], meta, args.digits)
    for n, x, fluct in ce_curve(args.n_max, args.N, args.stats):
        table.add(n, x, fluct)
    return table


def _g_tag(g: str) -> str:
    return "g" + g.replace("/", "-")


def figure_tables(fig: str, n_max: int | None = None, digits: int = 12, budget: int = DEFAULT_BUDGET) -> dict[str, _Table]:
    """All CSV tables for one figure, keyed by file name."""
    layout = FIGURES[fig]
    N = layout["N"]
    n_max = layout["n_max"] if n_max is None else n_max
    _check_cells(n_max, N, budget)
    tables = {}
    for g in layout["g"]:
        stats = Statistics.fes(g)
        meta = _meta("figure", id=fig, N=N, g=g, n_max=n_max, digits=digits)
        series = fluctuation_series(n_max, N, stats)
        mce = _Table(["n", "delta_N0"], meta, digits)
        for n, _, fluct in series.rows():
            mce.add(int(n), fluct)
        suffix = "_mce" if "ce" in layout else ""
        tables[f"fig{fig}_N{N}_{_g_tag(g)}{suffix}.csv"] = mce
        if "ce" in layout:
            ce = _Table(["n", "delta_N0_CE"], meta + f" ce={layout['ce']}", digits)
            for n, _, fluct in ce_curve(n_max, N, stats):
                ce.add(n, fluct)
            tables[f"fig{fig}_N{N}_{_g_tag(g)}_ce.csv"] = ce
    for g in layout.get("symbols", []):
        meta = _meta("figure", id=fig, N=N, g=g, n_max=SYMBOL_N_MAX, method="enumeration")
        sym = _Table(["n", "delta_N0"], meta, digits)
        for n in range(1, SYMBOL_N_MAX + 1):
            sym.add(n, ground_state_stats(enumerate_fes(n, N, g, budget=budget)).fluctuation)
        tables[f"fig{fig}_N{N}_{_g_tag(g)}_enum.csv"] = sym
    return tables


def cmd_figure(args) -> dict[str, _Table]:
    return figure_tables(args.id, args.n_max, args.digits, args.budget)


def cmd_verify(args):
    suites = verify.SUITES if args.suite == "all" else (args.suite,)
    ok = True
    for suite in suites:
        for check in verify.run(suite):
            print(f"[{suite}] {check.line()}")
            ok &= check.passed
    return EXIT_OK if ok else EXIT_VERIFY


def _statistics(text: str) -> Statistics:
    try:
        return Statistics.parse(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _unit_interval(text: str) -> float:
    x = float(text)
    if not 0 < x < 1:
        raise argparse.ArgumentTypeError(f"x must lie in (0, 1), got {text}")
    return x


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--digits", type=int, default=12, help="significant digits for reals")
    common.add_argument("--out", default=None, help="output file ('-' or omitted: stdout); directory for figure")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max table cells or enumerated partitions")

    parser = argparse.ArgumentParser(prog="exactfluct", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"exactfluct {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("omega", parents=[common], help="multiplicities omega(n, N_ex, N)")
    p.add_argument("--stats", type=_statistics, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("fluct", parents=[common], help="microcanonical fluctuation sweep")
    p.add_argument("--stats", type=_statistics, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)

    p = sub.add_parser("ce-fluct", parents=[common], help="canonical fluctuation at x or along n")
    p.add_argument("--stats", type=_statistics, required=True)
    p.add_argument("--N", type=int, required=True)
    grid = p.add_mutually_exclusive_group(required=True)
    grid.add_argument("--x", type=_unit_interval)
    grid.add_argument("--n-max", type=int)

    p = sub.add_parser("figure", parents=[common], help="CSV datasets for a figure")
    p.add_argument("id", choices=sorted(FIGURES))
    p.add_argument("--n-max", type=int, default=None)

    p = sub.add_parser("verify", help="run an invariant suite")
    p.add_argument("suite", choices=verify.SUITES + ("all",))
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("N", "n", "n_max"):
        value = getattr(args, name, None)
        if value is not None and value < (1 if name == "N" else 0):
            parser.error(f"--{name.replace('_', '-')} out of range: {value}")
    try:
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "figure":
            tables = cmd_figure(args)
            outdir = Path(args.out or ".")
            outdir.mkdir(parents=True, exist_ok=True)
            for name, table in tables.items():
                (outdir / name).write_text(table.render())
                print(outdir / name)
            return EXIT_OK
        handler = {"omega": cmd_omega, "fluct": cmd_fluct, "ce-fluct": cmd_ce_fluct}[args.command]
        _emit(handler(args), args.out)
    except BudgetExceededError as exc:
        print(f"exactfluct: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (DomainError, UnsupportedStatisticsError) as exc:
        print(f"exactfluct: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
