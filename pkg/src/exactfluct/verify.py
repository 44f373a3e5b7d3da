"""Invariant suites shared by the ``verify`` command and the test-suite."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .ensembles import ce_stats_at
from .fes import Statistics, enumerate_fes
from .microcanonical import distribution, multiplicity_columns
from .oracle import boltzmann_moments, log_boltzmann_tail_bound, oracle_multiplicities
from .partitions import bounded_multiplicity_direct, hole_partition_function, partition_table

SUITES = ("identities", "oracle", "fes", "ensembles")


@dataclass
class Check:
    name: str
    checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def expect(self, ok: bool, detail=None):
        self.checks += 1
        if not ok:
            self.failures.append(detail)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name}: {self.checks} checks, {len(self.failures)} failures"
        if self.failures:
            text += f" (first: {self.failures[0]})"
        return text


def statistics_grid(N: int) -> list[tuple[str, Statistics]]:
    """Every statistics with a closed form at ``N`` particles."""
    grid = [("bose", Statistics.bose()), ("fermi", Statistics.fermi())]
    if N >= 3:
        grid.append(("g=(N-2)/(N-1)", Statistics.fes(Fraction(N - 2, N - 1))))
    if N >= 2:
        grid.append(("g=1/(N-1)", Statistics.fes(Fraction(1, N - 1))))
    return grid


def identities(max_N: int = 30, max_n: int = 200) -> list[Check]:
    """Multiplicities summed over N_ex reproduce Omega(n, N)."""
    table = partition_table(max_n, max_N)
    out = {}
    for N in range(1, max_N + 1):
        for label, stats in statistics_grid(N):
            check = out.setdefault(label, Check(f"sum_Nex omega = Omega(n,N) [{label}]"))
            cols = multiplicity_columns(max_n, N, stats)
            for n in range(1, max_n + 1):
                total = sum(c[n] for c in cols)
                check.expect(total == table[n, N], (N, n, total, table[n, N]))
    return list(out.values())


def oracle(max_N: int = 8, max_n: int = 40, max_hole_N: int = 12) -> list[Check]:
    """Closed forms against brute-force enumeration."""
    fermi = Check("particle-hole fermi multiplicity = Durfee-square count")
    bose = Check("bose multiplicity = exact-parts count")
    zeros = Check("omega_F(n, N_ex, N) = 0 iff n < N_ex^2")
    for N in range(1, max_N + 1):
        for n in range(max_n + 1):
            for stats, check in ((Statistics.fermi(), fermi), (Statistics.bose(), bose)):
                got = distribution(n, N, stats).omega
                want = oracle_multiplicities(n, N, stats).omega
                check.expect(got == want, (N, n, got, want))
                if stats.kind == "fermi":
                    for k, w in enumerate(want, start=1):
                        zeros.expect((w == 0) == (n < k * k), (N, n, k, w))
    holes = Check("hole recursion = bounded-partition DP")
    symmetry = Check("hole table palindromic, sums to C(N, N_ex)")
    for N in range(1, max_hole_N + 1):
        for k in range(1, N + 1):
            h = hole_partition_function(N, k).full()
            for i, c in enumerate(h):
                holes.expect(c == bounded_multiplicity_direct(i, k, N - k), (N, k, i))
            symmetry.expect(h == h[::-1] and sum(h) == comb(N, k), (N, k))
    return [fermi, bose, zeros, holes, symmetry]


def fes(max_N: int = 5, max_n: int = 16) -> list[Check]:
    """FES closed forms against the quasiparticle enumerator."""
    near_fermi = Check("g=(N-2)/(N-1) closed form = enumerator")
    near_bose = Check("g=1/(N-1) closed form = enumerator")
    for N in range(2, max_N + 1):
        for n in range(max_n + 1):
            cases = [(Fraction(1, N - 1), near_bose)]
            if N >= 3:
                cases.append((Fraction(N - 2, N - 1), near_fermi))
            for g, check in cases:
                got = distribution(n, N, Statistics.fes(g)).omega
                want = enumerate_fes(n, N, g).omega
                check.expect(got == want, (N, n, str(g), got, want))
    return [near_fermi, near_bose]


def ensembles(max_N: int = 4, xs=(0.2, 0.5, 0.8), rtol: float = 1e-10) -> list[Check]:
    """Shell-mixture canonical statistics against a direct Boltzmann sum."""
    check = Check(f"canonical mixture = microstate Boltzmann sum (rtol {rtol:g})")
    for stats in (Statistics.bose(), Statistics.fermi()):
        for N in range(1, max_N + 1):
            for x in xs:
                cut = 0
                while log_boltzmann_tail_bound(x, N, cut) > math.log(1e-14):
                    cut += 1
                ref = boltzmann_moments(x, N, stats, cut)
                got = ce_stats_at(x, N, stats).ce_stats
                for key, value in (("mean_excited", got.mean_excited), ("variance", got.variance)):
                    err = abs(value - ref[key]) / abs(ref[key])
                    check.expect(err < rtol, (str(stats), N, x, key, err))
    return [check]


def run(suite: str) -> list[Check]:
    return {"identities": identities, "oracle": oracle, "fes": fes, "ensembles": ensembles}[suite]()
