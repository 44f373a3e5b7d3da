"""Brute-force validators.

Everything here enumerates states explicitly and is exponential in the
problem size. It exists to check the closed-form pipeline at desk scale.

An excitation of ``N`` particles by ``n`` quanta is a partition
``lam_1 >= lam_2 >= ...`` of ``n`` into at most ``N`` parts, ``lam_j`` being the
shift applied to the ``j``-th particle counted from the top. For bosons every
nonzero part is an excited particle. For fermions particle ``j`` ends up
above the Fermi level iff ``lam_j >= j``, so the number of excited fermions is
the side of the partition's Durfee square.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .errors import BudgetExceededError, UnsupportedStatisticsError
from .partitions import partition_table

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class PartitionShape:
    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p <= 0 for p in self.parts):
            raise ValueError("parts must be positive")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("parts must be non-increasing")

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)


def _partitions(n: int, max_part: int, slots: int, prefix: list[int]) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield tuple(prefix)
        return
    if slots == 0:
        return
    # first part must be at least ceil(n / slots) for the rest to fit
    lowest = -(-n // slots)
    for first in range(min(n, max_part), lowest - 1, -1):
        prefix.append(first)
        yield from _partitions(n - first, first, slots - 1, prefix)
        prefix.pop()


def enumerate_partitions(n: int, max_parts: int) -> Iterator[tuple[int, ...]]:
    """Yield each partition of ``n`` into at most ``max_parts`` parts once.

    Partitions are non-increasing tuples, produced in decreasing
    lexicographic order: ``(2,)`` before ``(1, 1)``.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return _partitions(n, n, max_parts, [])


def durfee_side(parts) -> int:
    """Largest ``s`` with ``parts[s-1] >= s`` (0 for the empty partition)."""
    if isinstance(parts, PartitionShape):
        parts = parts.parts
    s = 0
    for j, lam in enumerate(parts, start=1):
        if lam < j:
            break
        s = j
    return s


def check_budget(n: int, N: int, budget: int | None) -> int:
    count = partition_table(n, N)[n, N]
    if budget is not None and count > budget:
        raise BudgetExceededError(
            f"{count} partitions of n={n} into at most {N} parts exceeds the budget of {budget}"
        )
    return count


def oracle_multiplicities(n: int, N: int, statistics, budget: int | None = DEFAULT_BUDGET):
    """Tally ``omega(n, N_ex, N)`` by classifying every enumerated microstate."""
    from .fes import enumerate_fes
    from .microcanonical import MultiplicityDistribution

    if statistics.kind == "fes":
        return enumerate_fes(n, N, statistics.g, budget=budget)
    check_budget(n, N, budget)
    classify = len if statistics.kind == "bose" else durfee_side
    omega = [0] * N
    for parts in enumerate_partitions(n, N):
        n_ex = classify(parts)
        if n_ex:
            omega[n_ex - 1] += 1
    return MultiplicityDistribution(n, N, statistics, tuple(omega))


def _occupations(N: int, max_excitation: int, fermi: bool) -> Iterator[tuple[int, ...]]:
    # Occupied single-particle levels (0-based), sorted ascending.
    # Fermions: strictly increasing; bosons: non-decreasing.
    step = 1 if fermi else 0
    ground = N * (N - 1) // 2 if fermi else 0
    budget = max_excitation + ground
    levels: list[int] = []

    def rec(lowest: int, remaining: int, energy: int):
        if remaining == 0:
            yield tuple(levels)
            return
        level = lowest
        while True:
            # cheapest completion with the next particle placed at `level`
            cheapest = energy + remaining * level + step * remaining * (remaining - 1) // 2
            if cheapest > budget:
                return
            levels.append(level)
            yield from rec(level + step, remaining - 1, energy + level)
            levels.pop()
            level += 1

    yield from rec(0, N, 0)


def microstate_census(N: int, statistics, max_excitation: int) -> Counter:
    """Count microstates by ``(n, N_ex)`` for all excitations ``n <= max_excitation``.

    Works directly on occupied oscillator levels, without any partition
    machinery.
    """
    if statistics.kind not in ("bose", "fermi"):
        raise UnsupportedStatisticsError("microstate census supports bose and fermi only")
    fermi = statistics.kind == "fermi"
    ground = N * (N - 1) // 2 if fermi else 0
    threshold = N if fermi else 1
    census: Counter = Counter()
    for occ in _occupations(N, max_excitation, fermi):
        n = sum(occ) - ground
        n_ex = sum(1 for level in occ if level >= threshold)
        census[n, n_ex] += 1
    return census


def boltzmann_moments(x: float, N: int, statistics, max_excitation: int) -> dict[str, float]:
    """Canonical moments of ``N_ex`` from a direct Boltzmann sum over microstates.

    Returns ``mean_excited``, ``second_moment``, ``variance`` and
    ``mean_excitation``; ``weight_at_cutoff`` reports the relative Boltzmann
    weight of the last shell kept, as a truncation diagnostic.
    """
    census = microstate_census(N, statistics, max_excitation)
    z = m1 = m2 = e1 = 0.0
    shell = [0.0] * (max_excitation + 1)
    for (n, n_ex), count in sorted(census.items()):
        w = count * x**n
        shell[n] += w
        z += w
        m1 += w * n_ex
        m2 += w * n_ex * n_ex
        e1 += w * n
    mean = m1 / z
    second = m2 / z
    return {
        "mean_excited": mean,
        "second_moment": second,
        "variance": second - mean * mean,
        "mean_excitation": e1 / z,
        "weight_at_cutoff": shell[-1] / z,
    }


def log_boltzmann_tail_bound(x: float, N: int, n: int) -> float:
    """Log of ``sum_{m>n} C(m+N-1, N-1) x**m``, an upper bound on the dropped weight.

    Valid once the binomial term ratio ``x (m+N)/(m+1)`` is below one.
    """
    ratio = x * (n + 1 + N) / (n + 2)
    if ratio >= 1:
        return math.inf
    first = math.lgamma(n + N + 1) - math.lgamma(N) - math.lgamma(n + 2) + (n + 1) * math.log(x)
    return first - math.log1p(-ratio)
