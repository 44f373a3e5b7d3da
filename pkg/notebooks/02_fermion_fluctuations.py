# %% [markdown]
# # Ground-state fluctuations of trapped fermions and bosons
#
# With `n` quanta shared by `N` particles, every microstate is equally likely.
# Splitting microstates by the number `N_ex` of particles that left the ground
# state gives a distribution whose variance is the ground-state number
# fluctuation.

# %%
import numpy as np

from exactfluct import Statistics, distribution, ground_state_stats
from exactfluct.microcanonical import fluctuation_series
from exactfluct.oracle import oracle_multiplicities

fermi, bose = Statistics.fermi(), Statistics.bose()
for stats in (bose, fermi):
    d = distribution(12, 6, stats)
    print(stats, d.omega, d.total)

# %% [markdown]
# For fermions `N_ex` is the side of the Durfee square of the partition, which
# gives a brute-force check on the hole/particle split.

# %%
print(oracle_multiplicities(12, 6, fermi).omega == distribution(12, 6, fermi).omega)

# %% [markdown]
# ## Sweeps
#
# The fluctuation grows from zero at `n = 0`. Bosons start higher, fermions
# catch up and cross once.

# %%
for N in (5, 10):
    f = fluctuation_series(200, N, fermi).fluctuation
    b = fluctuation_series(200, N, bose).fluctuation
    diff = f - b
    nz = np.nonzero(np.abs(diff) > 1e-12)[0]
    cross = nz[np.nonzero(np.diff(np.sign(diff[nz])))[0] + 1]
    print(f"N={N}: fermions overtake bosons at n={cross.tolist()}")

# %%
series = fluctuation_series(6000, 30, fermi)
for n in (0, 10, 100, 1000, 6000):
    print(n, round(series.mean_excited[n], 4), round(series.fluctuation[n], 4))

# %%
print(ground_state_stats(distribution(2, 2, bose)))
