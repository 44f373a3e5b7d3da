"""Fractional exclusion statistics in a 1D harmonic trap.

Ideal FES particles with exclusion parameter ``g`` (0 = bosons, 1 = fermions)
have the quasiparticle spectrum obtained from the fermionic one by pulling
each level down by ``(1 - g)`` times the number of particles below it:

    eps_i = (k_i - 1/2) - (1 - g) (i - 1),   k_1 < k_2 < ... < k_N.

A particle counts as excited only if it sits strictly above the topmost
quasiparticle level of the ground state.

Closed-form multiplicities are known for ``g = (N-2)/(N-1)`` and
``g = 1/(N-1)``; for any other rational ``g`` only the explicit enumerator
below is available.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .errors import ConsistencyError, DomainError, UnsupportedStatisticsError
from .microcanonical import (
    MultiplicityDistribution,
    bose_columns,
    bose_multiplicity,
    fermi_columns,
    fermi_multiplicity,
)
from .oracle import DEFAULT_BUDGET, check_budget, enumerate_partitions

__all__ = [
    "Statistics",
    "QuasiparticleState",
    "fes_ground_state_energy",
    "fes_multiplicity_near_fermi",
    "fes_multiplicity_near_bose",
    "near_fermi_columns",
    "near_bose_columns",
    "enumerate_fes",
    "discrete_g_grid",
    "plateau_representative",
    "classification_breakpoints",
    "closed_form",
]


def _as_exact(g) -> Fraction:
    if isinstance(g, str):
        g = Fraction(g.strip())
    elif isinstance(g, Rational):
        g = Fraction(g)
    else:
        raise DomainError(f"g must be an exact rational (int, Fraction or 'p/q'), got {g!r}")
    if not 0 <= g <= 1:
        raise DomainError(f"g must lie in [0, 1], got {g}")
    return g


@dataclass(frozen=True)
class Statistics:
    """Particle statistics: ``bose``, ``fermi`` or ``fes`` with exact ``g``."""

    kind: str
    g: Fraction | None = None

    def __post_init__(self):
        if self.kind not in ("bose", "fermi", "fes"):
            raise DomainError(f"unknown statistics {self.kind!r}")
        if self.kind == "fes":
            object.__setattr__(self, "g", _as_exact(self.g))
        elif self.g is not None:
            raise DomainError(f"{self.kind} statistics take no g")

    @classmethod
    def bose(cls) -> "Statistics":
        return cls("bose")

    @classmethod
    def fermi(cls) -> "Statistics":
        return cls("fermi")

    @classmethod
    def fes(cls, g) -> "Statistics":
        return cls("fes", g)

    @classmethod
    def parse(cls, text: str) -> "Statistics":
        """Parse ``bose``, ``fermi`` or ``fes:p/q``."""
        text = text.strip().lower()
        if text in ("bose", "fermi"):
            return cls(text)
        if text.startswith("fes:"):
            try:
                g = Fraction(text[4:])
            except (ValueError, ZeroDivisionError) as exc:
                raise DomainError(f"bad exclusion parameter in {text!r}") from exc
            return cls("fes", g)
        raise DomainError(f"statistics must be bose, fermi or fes:p/q, got {text!r}")

    @property
    def exclusion(self) -> Fraction:
        """The exclusion parameter ``g`` (0 for bosons, 1 for fermions)."""
        if self.kind == "bose":
            return Fraction(0)
        if self.kind == "fermi":
            return Fraction(1)
        return self.g

    def __str__(self) -> str:
        if self.kind == "fes":
            return f"fes:{self.g.numerator}/{self.g.denominator}"
        return self.kind


def closed_form(statistics, N: int) -> str:
    """Name of the closed-form route for ``statistics`` at ``N`` particles.

    One of ``bose``, ``fermi``, ``near_fermi`` (g = (N-2)/(N-1)) or
    ``near_bose`` (g = 1/(N-1)).
    """
    if statistics.kind != "fes":
        return statistics.kind
    g = statistics.g
    if g == 0:
        return "bose"
    if g == 1:
        return "fermi"
    if N >= 2 and g == Fraction(1, N - 1):
        return "near_bose"
    if N >= 3 and g == Fraction(N - 2, N - 1):
        return "near_fermi"
    raise UnsupportedStatisticsError(
        f"no closed form for g={g} at N={N}; supported: bose, fermi, fes:0, fes:1, "
        f"fes:{N - 2}/{N - 1}, fes:1/{N - 1} (use enumerate_fes for other g)"
    )


def fes_ground_state_energy(N: int, g) -> Fraction:
    """Ground-state energy ``g N (N-1)/2 + N/2`` in units of hbar*omega."""
    g = _as_exact(g)
    return g * N * (N - 1) / 2 + Fraction(N, 2)


@dataclass(frozen=True)
class QuasiparticleState:
    """``N`` fermions on oscillator levels ``k_1 < ... < k_N`` (1-based)."""

    levels: tuple[int, ...]

    def __post_init__(self):
        if any(k < 1 for k in self.levels):
            raise ValueError("levels are 1-based")
        if any(a >= b for a, b in zip(self.levels, self.levels[1:])):
            raise ValueError("levels must be strictly increasing")

    @classmethod
    def from_shifts(cls, parts, N: int) -> "QuasiparticleState":
        """Lift the ground state by a partition, largest part on the top particle."""
        if len(parts) > N:
            raise ValueError(f"{len(parts)} parts for {N} particles")
        shifts = list(parts) + [0] * (N - len(parts))
        return cls(tuple(i + shifts[N - i] for i in range(1, N + 1)))

    @property
    def N(self) -> int:
        return len(self.levels)

    @property
    def excitation(self) -> int:
        return sum(k - i for i, k in enumerate(self.levels, start=1))

    def quasi_energies(self, g) -> tuple[Fraction, ...]:
        g = _as_exact(g)
        half = Fraction(1, 2)
        return tuple(k - half - (1 - g) * (i - 1) for i, k in enumerate(self.levels, start=1))

    @staticmethod
    def fermi_level(N: int, g) -> Fraction:
        """Top quasiparticle level of the ground state."""
        g = _as_exact(g)
        return N - Fraction(1, 2) - (1 - g) * (N - 1)

    def n_excited(self, g) -> int:
        top = self.fermi_level(self.N, g)
        return sum(1 for e in self.quasi_energies(g) if e > top)


def fes_multiplicity_near_fermi(n: int, n_ex: int, N: int) -> int:
    """``omega_g(n, n_ex, N)`` at ``g = (N-2)/(N-1)``.

    Difference of fermionic multiplicities at ``n + N`` quanta for ``N`` and
    ``N - 1`` particles. At ``n = 0`` the ground state has no excited
    particles, so every entry is zero.
    """
    if N < 3:
        raise DomainError(f"g=(N-2)/(N-1) needs N >= 3, got N={N}")
    if not 1 <= n_ex <= N:
        raise DomainError(f"N_ex={n_ex} must lie in 1..N={N}")
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    if n == 0:
        return 0
    smaller = fermi_multiplicity(n + N, n_ex, N - 1) if n_ex < N else 0
    value = fermi_multiplicity(n + N, n_ex, N) - smaller
    if value < 0:
        raise ConsistencyError(f"negative near-fermi multiplicity {value} at n={n}, N_ex={n_ex}, N={N}")
    return value


def fes_multiplicity_near_bose(n: int, n_ex: int, N: int) -> int:
    """``omega_g(n, n_ex, N)`` at ``g = 1/(N-1)``, built from bosonic counts."""
    if N < 2:
        raise DomainError(f"g=1/(N-1) needs N >= 2, got N={N}")
    if not 1 <= n_ex <= N:
        raise DomainError(f"N_ex={n_ex} must lie in 1..N={N}")
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    if n_ex < N - 1:
        return bose_multiplicity(n, n_ex, N)
    if n_ex == N - 1:
        extra = bose_multiplicity(n - 1, n_ex, N) if n >= 1 else 0
        return bose_multiplicity(n, n_ex, N) + extra
    return bose_multiplicity(n - N, N, N) if n >= N else 0


def near_fermi_columns(n_max: int, N: int) -> list[list[int]]:
    """Sweep version of :func:`fes_multiplicity_near_fermi` for ``n = 0..n_max``."""
    if N < 3:
        raise DomainError(f"g=(N-2)/(N-1) needs N >= 3, got N={N}")
    big = fermi_columns(n_max + N, N)
    small = fermi_columns(n_max + N, N - 1)
    cols = []
    for k in range(1, N + 1):
        a = big[k - 1]
        b = small[k - 1] if k < N else None
        col = [0] * (n_max + 1)
        for n in range(1, n_max + 1):
            value = a[n + N] - (b[n + N] if b is not None else 0)
            if value < 0:
                raise ConsistencyError(f"negative near-fermi multiplicity {value} at n={n}, N_ex={k}, N={N}")
            col[n] = value
        cols.append(col)
    return cols


def near_bose_columns(n_max: int, N: int) -> list[list[int]]:
    """Sweep version of :func:`fes_multiplicity_near_bose` for ``n = 0..n_max``."""
    if N < 2:
        raise DomainError(f"g=1/(N-1) needs N >= 2, got N={N}")
    bose = bose_columns(n_max, N)
    cols = [list(c) for c in bose[: N - 2]]
    b = bose[N - 2]
    cols.append([b[n] + (b[n - 1] if n >= 1 else 0) for n in range(n_max + 1)])
    top = bose[N - 1]
    cols.append([top[n - N] if n >= N else 0 for n in range(n_max + 1)])
    return cols


def enumerate_fes(n: int, N: int, g, budget: int | None = DEFAULT_BUDGET) -> MultiplicityDistribution:
    """Count ``omega_g(n, N_ex, N)`` by walking every fermionic microstate.

    Each partition of ``n`` into at most ``N`` parts lifts the top particles of
    the fermionic ground state; the resulting levels are mapped to
    quasiparticle energies and compared, exactly, with the ground-state top
    level. Refuses when the number of microstates exceeds ``budget``.
    """
    g = _as_exact(g)
    if n < 0 or N < 1:
        raise DomainError(f"need n >= 0 and N >= 1, got n={n}, N={N}")
    check_budget(n, N, budget)
    p, q = g.numerator, g.denominator
    # all energies scaled by q and shifted by 1/2, so comparisons stay in integers
    top = q * N - (q - p) * (N - 1)
    omega = [0] * N
    for parts in enumerate_partitions(n, N):
        n_ex = 0
        # parts[j] lifts particle i = N - j; lower particles are unshifted and below the top level
        for j, lam in enumerate(parts):
            i = N - j
            if q * (i + lam) - (q - p) * (i - 1) > top:
                n_ex += 1
        if n_ex:
            omega[n_ex - 1] += 1
    return MultiplicityDistribution(n, N, Statistics.fes(g), tuple(omega))


def discrete_g_grid(N: int) -> list[Fraction]:
    """``1, (N-2)/(N-1), ..., 1/(N-1), 0``: the g values with an integral Fermi level."""
    if N < 2:
        raise DomainError(f"grid needs N >= 2, got N={N}")
    return [Fraction(N - i, N - 1) for i in range(1, N + 1)]


def plateau_representative(g, N: int) -> Fraction:
    """Grid value at the closed lower end of the grid interval containing ``g``.

    Intervals are ``(N-i-1)/(N-1) <= g < (N-i)/(N-1)``; ``g = 1`` is its own
    point. Multiplicities are constant on the two outer intervals only; see
    :func:`classification_breakpoints` for where they actually change.
    """
    g = _as_exact(g)
    if N < 2:
        raise DomainError(f"plateaus need N >= 2, got N={N}")
    return Fraction((g * (N - 1)).__floor__(), N - 1)


def classification_breakpoints(N: int) -> list[Fraction]:
    """Every ``g`` in ``[0, 1]`` at which some multiplicity can change.

    Particle ``j`` from the top with shift ``lam`` is excited iff
    ``lam > g (j - 1)``, so thresholds are ``lam/(j-1)`` with ``j <= N``: the
    Farey fractions of order ``N - 1``. Multiplicities are constant on each
    half-open gap ``[t_k, t_{k+1})`` between consecutive breakpoints.
    """
    if N < 1:
        raise DomainError(f"need N >= 1, got N={N}")
    d = max(N - 1, 1)
    return sorted({Fraction(a, b) for b in range(1, d + 1) for a in range(b + 1)})
