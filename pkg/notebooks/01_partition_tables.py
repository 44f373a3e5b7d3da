# %% [markdown]
# # Partition tables
#
# Every quantity in this package comes from two integer tables:
#
# * `Omega(n, N)` counts partitions of `n` into at most `N` parts. It is the
#   number of microstates of `N` trapped particles carrying `n` quanta above the
#   ground state, for any statistics.
# * `Omega_h(i, N_ex)` counts partitions of `i` into at most `N_ex` parts of
#   size at most `N - N_ex`. These are the hole configurations left behind when
#   `N_ex` fermions leave the filled sea.

# %%
from math import comb

from exactfluct.partitions import bounded_multiplicity_direct, hole_partition_function, partition_table

table = partition_table(20, 6)
for N in range(1, 7):
    print(N, [table[n, N] for n in range(13)])

# %% [markdown]
# Adding a column divides the generating function by `1 - x**N`, so each
# column is a running sum of the previous one with stride `N`. Everything is a
# Python int: at `n = 6000, N = 100` the count has 75 digits and no rounding.

# %%
big = partition_table(6000, 100)[6000, 100]
print(len(str(big)), str(big)[:20] + "...")

# %% [markdown]
# ## Hole tables
#
# The hole coefficients form a palindrome summing to `C(N, N_ex)`. They come
# from the multi-boson recursion with exact integer division; a plain knapsack
# DP gives the same numbers.

# %%
N, k = 8, 3
holes = hole_partition_function(N, k).full()
print(holes)
print(sum(holes) == comb(N, k), holes == holes[::-1])
print(holes == [bounded_multiplicity_direct(i, k, N - k) for i in range(len(holes))])

# %% [markdown]
# Large sweeps only need the low end of a hole table, so it can be truncated;
# the top half is reached by symmetry.

# %%
t = hole_partition_function(60, 30, max_energy=20)
print(len(t.counts), t.max_energy, t[t.max_energy - 5] == t[5])
