"""Canonical-ensemble comparison curves.

The canonical ensemble at Boltzmann factor ``x = exp(-beta)`` is a mixture of
microcanonical shells weighted by ``Omega(n, N) x**n``. Ground-state energy
prefactors cancel from every normalized quantity and are left out.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .errors import DomainError, TableRangeError
from .microcanonical import GroundStateStats, multiplicity_columns

__all__ = [
    "ThermalPoint",
    "ce_stats_at",
    "ce_fluctuation_fes",
    "invert_mean_excitation",
    "mean_excitation",
    "excitation_variance",
    "log_partition_function",
    "TAIL_TOLERANCE",
]

TAIL_TOLERANCE = 1e-12
X_CEILING = 1 - 1e-12


@dataclass(frozen=True)
class ThermalPoint:
    x: float
    mean_excitation: float
    ce_stats: GroundStateStats

    @property
    def beta(self) -> float:
        return -math.log(self.x)


def _beta(x: float) -> float:
    if not 0 < x < 1:
        raise DomainError(f"x must lie in (0, 1), got {x}")
    return -math.log(x)


def log_partition_function(x: float, N: int) -> float:
    """``log prod_{j=1..N} 1/(1 - x**j)``."""
    beta = _beta(x)
    return -sum(math.log(-math.expm1(-j * beta)) for j in range(1, N + 1))


def _mean_from_beta(beta: float, N: int) -> float:
    return sum(j / math.expm1(j * beta) for j in range(1, N + 1))


def mean_excitation(x: float, N: int) -> float:
    """Canonical mean number of excitation quanta, ``sum_j j x^j / (1 - x^j)``."""
    return _mean_from_beta(_beta(x), N)


def excitation_variance(x: float, N: int) -> float:
    """Canonical variance of the excitation quanta."""
    beta = _beta(x)
    total = 0.0
    for j in range(1, N + 1):
        e = math.expm1(j * beta)
        total += j * j * (e + 1) / (e * e)
    return total


class _ShellData:
    """Per-shell ``log Omega(n, N)``, ``<N_ex>`` and ``<N_ex^2>`` as float arrays."""

    def __init__(self, N: int, statistics):
        self.N = N
        self.statistics = statistics
        self.n_max = -1
        self.log_omega = np.empty(0)
        self.mean = np.empty(0)
        self.second = np.empty(0)
        self.lock = threading.Lock()

    def ensure(self, n_max: int):
        if n_max <= self.n_max:
            return
        with self.lock:
            if n_max <= self.n_max:
                return
            n_max = max(n_max, 2 * self.n_max)
            cols = multiplicity_columns(n_max, self.N, self.statistics)
            log_omega = np.empty(n_max + 1)
            mean = np.zeros(n_max + 1)
            second = np.zeros(n_max + 1)
            for n in range(n_max + 1):
                s0 = s1 = s2 = 0
                for k, col in enumerate(cols, start=1):
                    w = col[n]
                    s0 += w
                    s1 += w * k
                    s2 += w * k * k
                if n == 0:
                    # the ground state: one microstate, nothing excited
                    log_omega[0] = 0.0
                    continue
                log_omega[n] = math.log(s0)
                mean[n] = s1 / s0
                second[n] = s2 / s0
            self.log_omega, self.mean, self.second = log_omega, mean, second
            self.n_max = n_max


_shell_lock = threading.Lock()
_shells: dict[tuple, _ShellData] = {}


def _shell_data(N: int, statistics) -> _ShellData:
    key = (N, statistics)
    with _shell_lock:
        data = _shells.get(key)
        if data is None:
            data = _ShellData(N, statistics)
            _shells[key] = data
    return data


def _cutoff_guess(x: float, N: int) -> int:
    mu = mean_excitation(x, N)
    sigma = math.sqrt(excitation_variance(x, N))
    return int(mu + 12 * sigma + 16 * N + 64)


def ce_stats_at(x: float, N: int, statistics, tol: float = TAIL_TOLERANCE) -> ThermalPoint:
    """Canonical ground-state statistics at Boltzmann factor ``x``.

    The shell series is cut at the first ``n`` where the kept Boltzmann weight
    reaches ``1 - tol`` of the exact partition function.
    """
    beta = _beta(x)
    log_z = log_partition_function(x, N)
    data = _shell_data(N, statistics)
    n_cap = _cutoff_guess(x, N)
    for _ in range(64):
        data.ensure(n_cap)
        n = np.arange(n_cap + 1)
        weights = np.exp(data.log_omega[: n_cap + 1] - beta * n - log_z)
        kept = np.cumsum(weights)
        hits = np.nonzero(kept >= 1 - tol)[0]
        if hits.size:
            cut = int(hits[0]) + 1
            break
        n_cap *= 2
    else:
        raise TableRangeError(f"canonical series at x={x}, N={N} did not converge")
    w = weights[:cut] / kept[cut - 1]
    mean = float(w @ data.mean[:cut])
    second = float(w @ data.second[:cut])
    fluct = math.sqrt(max(second - mean * mean, 0.0))
    return ThermalPoint(x, float(w @ n[:cut]), GroundStateStats(mean, second, fluct))


def ce_fluctuation_fes(x: float, N: int, g) -> tuple[float, float]:
    """Canonical FES fluctuation as ``g`` times the Fermi plus ``1 - g`` times the Bose variance.

    Returns ``(variance, fluctuation)``.
    """
    from fractions import Fraction

    from .fes import Statistics

    g = Fraction(g)
    if not 0 <= g <= 1:
        raise DomainError(f"g must lie in [0, 1], got {g}")
    var_f = ce_stats_at(x, N, Statistics.fermi()).ce_stats.variance
    var_b = ce_stats_at(x, N, Statistics.bose()).ce_stats.variance
    variance = float(g) * var_f + float(1 - g) * var_b
    return variance, math.sqrt(variance)


def invert_mean_excitation(target_n: float, N: int, statistics=None) -> float:
    """Boltzmann factor ``x`` whose canonical mean excitation equals ``target_n``.

    The mean excitation depends only on ``Omega(n, N)``, so the answer is the
    same for every statistics; the argument is accepted for symmetry.
    """
    if not target_n > 0:
        raise DomainError(f"target_n must be positive, got {target_n}")
    beta_lo = -math.log(X_CEILING)
    if _mean_from_beta(beta_lo, N) < target_n:
        raise TableRangeError(f"<n>={target_n} unreachable for x < {X_CEILING} at N={N}")
    beta_hi = max(1.0, 3.0 - math.log(target_n))
    tol = 1e-9 * max(1.0, target_n)
    beta = brentq(lambda b: _mean_from_beta(b, N) - target_n, beta_lo, beta_hi, xtol=1e-300, rtol=1e-15, maxiter=500)
    x = math.exp(-beta)
    if abs(mean_excitation(x, N) - target_n) >= tol:
        raise TableRangeError(f"could not match <n>={target_n} to {tol:g} at N={N}")
    return x
