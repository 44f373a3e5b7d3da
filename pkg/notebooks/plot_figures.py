# %% [markdown]
# # Plotting figure data
#
# Generate the CSVs first, e.g. `exactfluct figure 3a --out figdata`, then run
# this script with the directory as argument. Needs matplotlib, which the
# package itself does not depend on.

# %%
import csv
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def read_curve(path):
    with open(path) as fh:
        rows = [r for r in csv.reader(line for line in fh if not line.startswith("#"))]
    return [float(r[0]) for r in rows[1:]], [float(r[1]) for r in rows[1:]]


# %%
def plot_dir(data_dir: Path):
    groups = {}
    for path in sorted(data_dir.glob("fig*.csv")):
        groups.setdefault(path.name.split("_")[0], []).append(path)
    for fig, paths in groups.items():
        ax = plt.figure(figsize=(6, 4)).gca()
        for path in paths:
            n, d = read_curve(path)
            label = path.stem.split("_", 2)[2]
            if path.stem.endswith("_enum"):
                ax.plot(n, d, "o", mfc="none", label=label)
            else:
                ax.plot(n, d, "--" if path.stem.endswith("_ce") else "-", label=label)
        ax.set_xlabel("n")
        ax.set_ylabel(r"$\delta N_0$")
        ax.legend(fontsize=8)
        out = data_dir / f"{fig}.png"
        plt.savefig(out, dpi=120, bbox_inches="tight")
        plt.close()
        print(out)


# %%
if __name__ == "__main__":
    plot_dir(Path(sys.argv[1] if len(sys.argv) > 1 else "figdata"))
