"""
Normalized entropy around simulated change points
=================================================

Six segments with different distributions and well separated levels are
concatenated, the sliding-window normalized entropy is computed with
``delta = 100`` and ``k = round(ln delta) = 5``, and the series and the
entropy are drawn on a shared time axis.

Every change shows up as a valley roughly one window long: as soon as a
single sample from the new level enters the window, the bin range stretches
and the old samples pile into one bin.
"""

import numpy as np

from entropycpd import WindowParams, entropy_sequence, table1_fixture

x, truth = table1_fixture(seed=0)
params = WindowParams(100)
h = entropy_sequence(x, params)
print("bins:", params.k, " entropy values:", len(h), " change points:", truth.change_points)

# entropy just before, at, and half a window after each change
for cp in truth.change_points:
    print(f"t={cp:5d}  before {h.at(cp - 1):.3f}  at {h.at(cp):.3f}  +50 {h.at(cp + 50):.3f}")

##############################################################################
# Plot (requires matplotlib)

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    t = np.arange(1, len(x) + 1)
    fig, (ax0, ax1) = plt.subplots(2, 1, sharex=True, figsize=(9, 5))
    ax0.plot(t, x, lw=0.6)
    ax0.set_ylabel("value")
    ax1.plot(h.times, h.values, color="C1", lw=0.8)
    ax1.set_ylabel("normalized entropy")
    ax1.set_xlabel("t")
    for cp in truth.change_points:
        for ax in (ax0, ax1):
            ax.axvline(cp, color="k", ls=":", lw=0.8)
    fig.tight_layout()
    fig.savefig("simulated_changes.png", dpi=120)
    print("saved simulated_changes.png")
