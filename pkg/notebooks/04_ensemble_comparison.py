# %% [markdown]
# # Microcanonical versus canonical
#
# The canonical ensemble mixes microcanonical shells with weight
# `Omega(n, N) x**n`. To put both on one axis, each `n` is paired with the `x`
# whose canonical mean excitation equals `n`.

# %%
import numpy as np

from exactfluct import Statistics, ce_fluctuation_fes, ce_stats_at, invert_mean_excitation
from exactfluct.ensembles import mean_excitation
from exactfluct.microcanonical import fluctuation_series

fermi = Statistics.fermi()
N = 30
mce = fluctuation_series(6000, N, fermi).fluctuation
for n in (10, 100, 1000, 6000):
    x = invert_mean_excitation(n, N)
    ce = ce_stats_at(x, N, fermi).ce_stats.fluctuation
    print(f"n={n:5d} x={x:.6f} <n>={mean_excitation(x, N):.3f} MCE={mce[n]:.5f} CE={ce:.5f} gap={(ce - mce[n]) / mce[n]:.3%}")

# %% [markdown]
# The canonical value sits above the microcanonical one everywhere. At
# `n = 6000` the gap under this energy matching is about 7.7%.
#
# ## Exclusion statistics
#
# For general `g` the canonical variance is interpolated linearly between the
# Bose and Fermi variances at the same `x`.

# %%
x = invert_mean_excitation(50, 10)
for g in ("0", "1/9", "8/9", "1"):
    var, fl = ce_fluctuation_fes(x, 10, g)
    print(g, round(fl, 5))

# %%
xs = np.array([1e-6, 1e-3, 0.1, 0.5])
print([round(ce_stats_at(x, 10, fermi).ce_stats.fluctuation, 6) for x in xs])
