# %% [markdown]
# # Empirical distance to uniform from 100 000 samples
#
# Draw 100 000 posets for n = 4 (m = 16) and n = 5 (m = 25), tally them, and
# compute the plug-in total variation distance to the uniform law over all
# 219 / 4231 labelled posets. Unsampled posets count with frequency zero.
# Takes about half a minute per size.

# %%
import sys

import numpy as np

from randposet import sample_posets
from randposet.oracle import enumerate_posets
from randposet.stats import SampleHistogram, empirical_tv

samples = int(sys.argv[1]) if len(sys.argv) > 1 else 100_000
hists = {}
for n in (4, 5):
    M = enumerate_posets(n).M
    h = SampleHistogram(n).update(sample_posets(n, samples, seed=20240615))
    hists[n] = (h, M)
    print(f"n={n} m={n * n}: {len(h)}/{M} posets seen, empirical tv = {empirical_tv(h, M):.4f}")

# %% [markdown]
# Part of that distance is pure sampling noise. For a perfectly uniform
# sampler the same statistic would be roughly:

# %%
rng = np.random.default_rng(0)
for n, (h, M) in hists.items():
    counts = np.bincount(rng.integers(0, M, samples), minlength=M)
    print(f"n={n}: uniform baseline tv = {0.5 * np.abs(counts / samples - 1 / M).sum():.4f}")

# %% [markdown]
# Histograms with posets in sorted key order, so the picture is
# reproducible. Written to PNG if matplotlib is around.

# %%
try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, axes = plt.subplots(2, 1, figsize=(10, 6))
    for ax, (n, (h, M)) in zip(axes, hists.items()):
        counts = [h.counts[k] for k in sorted(h.counts)]
        ax.bar(range(len(counts)), counts, width=1.0)
        ax.axhline(samples / M, color="k", lw=0.8)
        ax.set_title(f"n={n}, m={n * n}")
    fig.tight_layout()
    fig.savefig("histograms.png", dpi=120)
    print("wrote histograms.png")
