"""Exact tables of restricted partition counts.

Two families of counts are kept here:

* ``Omega(n, N)``: partitions of ``n`` into at most ``N`` parts. This is the
  coefficient of ``x**n`` in ``prod_{j=1..N} 1/(1 - x**j)`` and is shared by
  bosons, fermions and FES particles in a 1D harmonic trap.
* ``Omega_h(i, N_ex)``: partitions of ``i`` into at most ``N_ex`` parts, each
  part at most ``N_H = N - N_ex``. These are the coefficients of the partition
  function of ``N_ex`` bosons on ``N_H + 1`` equally spaced levels, i.e. the
  states available to ``N_ex`` holes below the Fermi level.

All arithmetic is on Python ints, so nothing overflows or rounds.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from itertools import accumulate

from .errors import ConsistencyError, DomainError, TableRangeError

__all__ = [
    "PartitionTable",
    "BoundedPartitionTable",
    "canonical_multiplicity",
    "partition_table",
    "hole_partition_function",
    "bounded_multiplicity_direct",
    "divide_by_one_minus_power",
    "clear_tables",
]


def divide_by_one_minus_power(coeffs: list[int], j: int) -> list[int]:
    """Return the coefficients of ``P(x) / (1 - x**j)`` truncated to ``len(coeffs)``.

    Division by ``1 - x**j`` is a running sum along each residue class mod ``j``.
    """
    out = list(coeffs)
    for r in range(min(j, len(out))):
        out[r::j] = accumulate(out[r::j])
    return out


class PartitionTable:
    """Memoized ``Omega(n, N)`` for ``0 <= n <= max_n`` and ``0 <= N <= max_parts``.

    Columns are stored only up to ``N = max_n``: a partition of ``n`` never has
    more than ``n`` parts, so ``Omega(n, N) = Omega(n, n)`` for ``N > n``.
    """

    def __init__(self, max_n: int, max_parts: int):
        if max_n < 0 or max_parts < 0:
            raise ValueError("max_n and max_parts must be non-negative")
        self.max_n = max_n
        self.max_parts = max_parts
        stored = min(max_parts, max_n)
        col = [1] + [0] * max_n
        cols = [col]
        for N in range(1, stored + 1):
            col = divide_by_one_minus_power(col, N)
            cols.append(col)
        self._cols = cols

    def column(self, N: int) -> list[int]:
        """Return ``[Omega(0, N), ..., Omega(max_n, N)]`` (shared; do not mutate)."""
        if not 0 <= N <= self.max_parts:
            raise TableRangeError(f"N={N} outside table (max_parts={self.max_parts})")
        return self._cols[min(N, len(self._cols) - 1)]

    def __getitem__(self, key: tuple[int, int]) -> int:
        n, N = key
        return canonical_multiplicity(self, n, N)

    def covers(self, max_n: int, max_parts: int) -> bool:
        return max_n <= self.max_n and max_parts <= self.max_parts

    def __repr__(self) -> str:
        return f"PartitionTable(max_n={self.max_n}, max_parts={self.max_parts})"


def canonical_multiplicity(table: PartitionTable, n: int, N: int) -> int:
    """Number of partitions of ``n`` into at most ``N`` parts, read from ``table``."""
    if not 0 <= n <= table.max_n:
        raise TableRangeError(f"n={n} outside table (max_n={table.max_n})")
    if not 0 <= N <= table.max_parts:
        raise TableRangeError(f"N={N} outside table (max_parts={table.max_parts})")
    return table._cols[min(N, n, len(table._cols) - 1)][n]


_table_lock = threading.Lock()
_shared_table = PartitionTable(64, 64)


def partition_table(max_n: int, max_parts: int) -> PartitionTable:
    """Return a shared table covering at least ``(max_n, max_parts)``.

    The table grows geometrically in ``n`` so that sweeps stay linear overall.
    """
    global _shared_table
    table = _shared_table
    if table.covers(max_n, max_parts):
        return table
    with _table_lock:
        table = _shared_table
        if not table.covers(max_n, max_parts):
            new_n = max(max_n, table.max_n * 2) if max_n > table.max_n else table.max_n
            new_parts = max(max_parts, table.max_parts)
            table = PartitionTable(new_n, new_parts)
            _shared_table = table
    return table


@dataclass(frozen=True)
class BoundedPartitionTable:
    """Coefficients ``Omega_h(i, n_ex)`` of the ``n_ex``-hole partition function.

    ``counts`` may be truncated below the full degree ``n_ex * level_cap``;
    lookups use the palindromic symmetry to reach the upper half.
    """

    n_ex: int
    level_cap: int
    counts: tuple[int, ...]

    @property
    def max_energy(self) -> int:
        return self.n_ex * self.level_cap

    @property
    def complete(self) -> bool:
        return len(self.counts) == self.max_energy + 1

    def __getitem__(self, i: int) -> int:
        top = self.max_energy
        if i < 0 or i > top:
            return 0
        if i < len(self.counts):
            return self.counts[i]
        if top - i < len(self.counts):
            return self.counts[top - i]
        raise TableRangeError(
            f"Omega_h({i}, {self.n_ex}) beyond truncated table (computed up to {len(self.counts) - 1})"
        )

    def full(self) -> list[int]:
        """All ``max_energy + 1`` coefficients, filled in by symmetry where needed."""
        return [self[i] for i in range(self.max_energy + 1)]


def _times_level_sum(poly: list[int], j: int, levels: int) -> list[int]:
    # poly(x) * (1 + x**j + ... + x**(j*(levels-1))), truncated to len(poly)
    acc = divide_by_one_minus_power(poly, j)
    shift = j * levels
    if shift >= len(acc):
        return acc
    return acc[:shift] + [a - b for a, b in zip(acc[shift:], acc)]


def _hole_coefficients(level_cap: int, n_ex: int, degree: int) -> list[int]:
    levels = level_cap + 1
    size = degree + 1
    Z = [[1] + [0] * degree]
    for m in range(1, n_ex + 1):
        total = [0] * size
        for j in range(1, m + 1):
            term = _times_level_sum(Z[m - j], j, levels)
            total = [a + b for a, b in zip(total, term)]
        row = []
        for d, value in enumerate(total):
            q, r = divmod(value, m)
            if r or q < 0:
                raise ConsistencyError(
                    f"hole recursion gave non-integral coefficient {value}/{m} "
                    f"at x^{d} (N_H={level_cap}, N_ex={m})"
                )
            row.append(q)
        Z.append(row)
    return Z[n_ex]


_hole_lock = threading.Lock()
_hole_cache: dict[tuple[int, int], BoundedPartitionTable] = {}


def hole_partition_function(N: int, n_ex: int, max_energy: int | None = None) -> BoundedPartitionTable:
    """Coefficient table of the ``n_ex``-hole partition function for ``N`` fermions.

    Built from the multi-boson recursion
    ``Z_m(x) = (1/m) sum_{j=1..m} Z_1(x**j) Z_{m-j}(x)`` with
    ``Z_1(x) = 1 + x + ... + x**N_H`` and ``Z_0 = 1``. The ``1/m`` division is
    checked to be exact at every coefficient.

    With ``max_energy`` set, only coefficients up to that power are guaranteed.
    """
    if not 1 <= n_ex <= N:
        raise DomainError(f"need 1 <= n_ex <= N, got n_ex={n_ex}, N={N}")
    level_cap = N - n_ex
    top = n_ex * level_cap
    half = top // 2
    want = half if max_energy is None else min(max(max_energy, 0), half)
    key = (N, n_ex)
    cached = _hole_cache.get(key)
    if cached is not None and len(cached.counts) > want:
        return cached
    with _hole_lock:
        cached = _hole_cache.get(key)
        if cached is not None and len(cached.counts) > want:
            return cached
        coeffs = _hole_coefficients(level_cap, n_ex, want)
        if want == half:
            # mirror the lower half to complete the palindrome
            coeffs = coeffs + coeffs[: top - half][::-1]
        table = BoundedPartitionTable(n_ex, level_cap, tuple(coeffs))
        _hole_cache[key] = table
    return table


def bounded_multiplicity_direct(i: int, max_parts: int, max_part: int) -> int:
    """Partitions of ``i`` into at most ``max_parts`` parts, each ``<= max_part``.

    Plain knapsack DP over part sizes; used to cross-check the hole recursion.
    """
    if i < 0:
        return 0
    if i == 0:
        return 1
    # ways[c][s]: partitions of s into exactly c parts drawn from sizes seen so far
    ways = [[0] * (i + 1) for _ in range(max_parts + 1)]
    ways[0][0] = 1
    for v in range(1, min(max_part, i) + 1):
        for c in range(1, max_parts + 1):
            prev, cur = ways[c - 1], ways[c]
            for s in range(v, i + 1):
                cur[s] += prev[s - v]
    return sum(ways[c][i] for c in range(max_parts + 1))


def clear_tables():
    """Drop the shared partition table and every cached hole table."""
    global _shared_table
    with _table_lock:
        _shared_table = PartitionTable(64, 64)
    with _hole_lock:
        _hole_cache.clear()
