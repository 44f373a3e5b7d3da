"""Microcanonical multiplicities and ground-state number fluctuations.

``omega(n, N_ex, N)`` counts the microstates of ``N`` particles in a 1D
harmonic trap carrying ``n`` excitation quanta (hbar*omega = 1) with exactly
``N_ex`` particles lifted out of the T=0 ground-state configuration.

Bosons follow from ``Omega`` directly. Fermions are split into a particle
sector above the Fermi level and a hole sector below it; the two sectors are
convolved, each reduced to a bosonic partition count after removing its
minimum energy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import DomainError
from .partitions import divide_by_one_minus_power, hole_partition_function, partition_table

__all__ = [
    "MultiplicityDistribution",
    "GroundStateStats",
    "FluctuationSeries",
    "bose_multiplicity",
    "fermi_multiplicity",
    "particle_min_quanta",
    "hole_min_quanta",
    "distribution",
    "ground_state_stats",
    "multiplicity_columns",
    "bose_columns",
    "fermi_columns",
    "fluctuation_series",
    "moment_sums",
]


@dataclass(frozen=True)
class MultiplicityDistribution:
    """``omega[N_ex - 1]`` for ``N_ex = 1..N`` at fixed ``(n, N, statistics)``."""

    n: int
    N: int
    statistics: object
    omega: tuple[int, ...]

    def __post_init__(self):
        if len(self.omega) != self.N:
            raise ValueError(f"omega has {len(self.omega)} entries, expected N={self.N}")

    @property
    def total(self) -> int:
        return sum(self.omega)

    def __getitem__(self, n_ex: int) -> int:
        if not 1 <= n_ex <= self.N:
            raise IndexError(f"N_ex={n_ex} outside 1..{self.N}")
        return self.omega[n_ex - 1]

    def probabilities(self) -> list[Fraction]:
        total = self.total
        if total == 0:
            return [Fraction(0)] * self.N
        return [Fraction(w, total) for w in self.omega]


@dataclass(frozen=True)
class GroundStateStats:
    mean_excited: float
    second_moment: float
    fluctuation: float

    @property
    def variance(self) -> float:
        return self.fluctuation**2


@dataclass(frozen=True)
class FluctuationSeries:
    """Ground-state statistics along a sweep ``n = 0..n_max``."""

    N: int
    statistics: object
    n: np.ndarray
    mean_excited: np.ndarray
    fluctuation: np.ndarray

    def rows(self):
        return zip(self.n.tolist(), self.mean_excited.tolist(), self.fluctuation.tolist())


def particle_min_quanta(n_ex: int) -> int:
    """Cheapest way to lift ``n_ex`` fermions from the Fermi level into distinct levels above it."""
    return n_ex * (n_ex + 1) // 2


def hole_min_quanta(n_ex: int) -> int:
    """Cheapest way to bring ``n_ex`` fermions up to the Fermi level (the top one is already there)."""
    return n_ex * (n_ex - 1) // 2


def _check_counts(n: int, n_ex: int, N: int):
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    if N < 1:
        raise DomainError(f"N must be positive, got {N}")
    if not 1 <= n_ex <= N:
        raise DomainError(f"N_ex={n_ex} must lie in 1..N={N}")


def bose_multiplicity(n: int, n_ex: int, N: int) -> int:
    _check_counts(n, n_ex, N)
    if n < n_ex:
        return 0
    return partition_table(n - n_ex, n_ex)[n - n_ex, n_ex]


def fermi_multiplicity(n: int, n_ex: int, N: int) -> int:
    """Number of ways to excite exactly ``n_ex`` of ``N`` fermions with ``n`` quanta."""
    _check_counts(n, n_ex, N)
    d_p = particle_min_quanta(n_ex)
    d_h = hole_min_quanta(n_ex)
    spare = n - d_p - d_h
    if spare < 0:
        return 0
    holes = hole_partition_function(N, n_ex, max_energy=spare)
    column = partition_table(spare, n_ex).column(n_ex)
    total = 0
    # n_p runs over [d_p, n - d_h]; i = n_h - d_h is the spare hole energy
    for i in range(min(spare, holes.max_energy) + 1):
        total += holes[i] * column[spare - i]
    return total


def distribution(n: int, N: int, statistics) -> MultiplicityDistribution:
    """Fill ``omega(n, N_ex, N)`` for ``N_ex = 1..N``."""
    from .fes import closed_form, fes_multiplicity_near_bose, fes_multiplicity_near_fermi

    if n < 0 or N < 1:
        raise DomainError(f"need n >= 0 and N >= 1, got n={n}, N={N}")
    single = {
        "bose": bose_multiplicity,
        "fermi": fermi_multiplicity,
        "near_fermi": fes_multiplicity_near_fermi,
        "near_bose": fes_multiplicity_near_bose,
    }[closed_form(statistics, N)]
    omega = tuple(single(n, k, N) for k in range(1, N + 1))
    return MultiplicityDistribution(n, N, statistics, omega)


def moment_sums(omega) -> tuple[int, int, int]:
    """Exact ``(sum w, sum w*k, sum w*k**2)`` over ``k = 1..len(omega)``."""
    s0 = s1 = s2 = 0
    for k, w in enumerate(omega, start=1):
        s0 += w
        s1 += w * k
        s2 += w * k * k
    return s0, s1, s2


def _stats_from_sums(s0: int, s1: int, s2: int) -> GroundStateStats:
    if s0 == 0:
        return GroundStateStats(0.0, 0.0, 0.0)
    # single rounding at the end; the variance is a difference of near-equal terms
    var_num = s2 * s0 - s1 * s1
    return GroundStateStats(s1 / s0, s2 / s0, math.sqrt(var_num / (s0 * s0)))


def ground_state_stats(d: MultiplicityDistribution) -> GroundStateStats:
    """Mean, second moment and standard deviation of ``N_ex`` at fixed ``n``.

    At ``n = 0`` nothing can be excited and all three are zero.
    """
    return _stats_from_sums(*moment_sums(d.omega))


def bose_columns(n_max: int, N: int) -> list[list[int]]:
    """``cols[k-1][n] = omega_B(n, k, N)`` for ``n <= n_max``."""
    table = partition_table(n_max, N)
    cols = []
    for k in range(1, N + 1):
        if k > n_max:
            cols.append([0] * (n_max + 1))
            continue
        src = table.column(k)
        cols.append([0] * k + src[: n_max + 1 - k])
    return cols


@lru_cache(maxsize=64)
def _fermi_columns(n_max: int, N: int) -> tuple[tuple[int, ...], ...]:
    cols = []
    for k in range(1, N + 1):
        start = k * k
        if start > n_max:
            cols.append((0,) * (n_max + 1))
            continue
        holes = hole_partition_function(N, k, max_energy=n_max - start)
        span = min(holes.max_energy, n_max - start)
        poly = [0] * (n_max + 1)
        for i in range(span + 1):
            poly[start + i] = holes[i]
        # convolve with Omega(., k) = coefficients of prod_{j<=k} 1/(1-x^j)
        for j in range(1, k + 1):
            poly = divide_by_one_minus_power(poly, j)
        cols.append(tuple(poly))
    return tuple(cols)


def fermi_columns(n_max: int, N: int) -> list[list[int]]:
    """``cols[k-1][n] = omega_F(n, k, N)`` for every ``n <= n_max`` in one pass.

    Same particle/hole convolution as :func:`fermi_multiplicity`, but the
    convolution with ``Omega(., k)`` is applied to the whole shifted hole
    polynomial at once.
    """
    return [list(c) for c in _fermi_columns(n_max, N)]


def multiplicity_columns(n_max: int, N: int, statistics) -> list[list[int]]:
    """Columns ``cols[k-1][n] = omega(n, k, N)`` for ``n = 0..n_max``."""
    from .fes import closed_form, near_bose_columns, near_fermi_columns

    kind = closed_form(statistics, N)
    if kind == "bose":
        return bose_columns(n_max, N)
    if kind == "fermi":
        return fermi_columns(n_max, N)
    if kind == "near_fermi":
        return near_fermi_columns(n_max, N)
    return near_bose_columns(n_max, N)


def fluctuation_series(n_max: int, N: int, statistics) -> FluctuationSeries:
    """``<N_ex>`` and ``delta N_0`` for every ``n`` in ``0..n_max``."""
    cols = multiplicity_columns(n_max, N, statistics)
    means = np.zeros(n_max + 1)
    flucts = np.zeros(n_max + 1)
    for n in range(n_max + 1):
        st = _stats_from_sums(*moment_sums(c[n] for c in cols))
        means[n] = st.mean_excited
        flucts[n] = st.fluctuation
    return FluctuationSeries(N, statistics, np.arange(n_max + 1), means, flucts)
