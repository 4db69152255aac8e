"""
Spread maps over (gamma_min, C)
===============================

Each cell counts how many of 100 pixels on [0, 1] the post-transient
orbit visits: 1 for a fixed point, tens for chaos. For the linear map
gamma_min only rescales the orbit, while for the tanh map it erodes the
chaotic regions.
"""
# %%
import time

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from tanhmap import CSweepSpec, Linear, Tanh, spread_sweep, write_spread_pgm
from tanhmap.spread import default_gamma_min_axis

g_axis, c_axis = default_gamma_min_axis(), CSweepSpec().grid()

# %%
fig, axes = plt.subplots(1, 3, figsize=(13, 4), sharey=True)
for ax, (label, shape) in zip(axes, (("linear", Linear()), ("A_Y=5", Tanh(5.0)), ("A_Y=7.5", Tanh(7.5)))):
    start = time.perf_counter()
    res = spread_sweep(shape, 1.0, g_axis, c_axis, workers=4)
    print(f"{label}: {time.perf_counter() - start:.1f}s")
    im = ax.pcolormesh(c_axis, g_axis, res.matrix, cmap="jet", vmin=0, vmax=100, shading="auto")
    ax.set_title(label)
    ax.set_xlabel("C")
    if label == "A_Y=5":
        write_spread_pgm(res, "spread_a5.pgm")
        band = c_axis >= 2.2
        print("mean spread, gamma_min=0 vs 0.05:",
              res.matrix[0, band].mean(), res.matrix[50, band].mean())
axes[0].set_ylabel("gamma_min")
fig.colorbar(im, ax=axes, label="occupied pixels (%)")
fig.savefig("spread_maps.png", dpi=120)
