# %% [markdown]
# # Fractional exclusion statistics
#
# Quasiparticles with exclusion `g` sit at `k - 1/2 - (1 - g) N_k`, where `N_k`
# counts particles below level `k`. A particle counts as excited when it lies
# strictly above the top quasiparticle of the ground state.

# %%
from fractions import Fraction

from exactfluct import Statistics, distribution, enumerate_fes
from exactfluct.fes import classification_breakpoints, discrete_g_grid

print(enumerate_fes(3, 5, Fraction(1, 2)).omega)

# %% [markdown]
# Two grid values have closed forms: `g = (N-2)/(N-1)` from fermionic counts
# and `g = 1/(N-1)` from bosonic ones. They agree with the enumerator.

# %%
N = 5
for g in (Fraction(3, 4), Fraction(1, 4)):
    stats = Statistics.fes(g)
    same = all(distribution(n, N, stats).omega == enumerate_fes(n, N, g).omega for n in range(17))
    print(g, same)

# %% [markdown]
# ## Where multiplicities change
#
# Lifting the `j`-th particle from the top by `lam` quanta excites it iff
# `lam > g (j - 1)`. The thresholds are therefore the fractions with
# denominator at most `N - 1`, a finer set than the grid `1, (N-2)/(N-1), ...`.
# The two outer grid intervals contain no extra thresholds and are genuine
# plateaus; the inner ones are split.

# %%
for N in (4, 5):
    grid = set(discrete_g_grid(N))
    extra = [str(t) for t in classification_breakpoints(N) if t not in grid]
    print(N, "extra breakpoints:", extra)

# %%
N, n = 4, 3
for g in ("1/3", "5/12", "1/2", "7/12"):
    print(g, enumerate_fes(n, N, g).omega)
