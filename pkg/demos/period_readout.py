"""
Small periods at C = 3.5
========================

With A_Y = 5 and gamma_max = 1, moving gamma_min from 0 to 0.018 to 0.02
turns an aperiodic orbit into a 6-cycle and then a 3-cycle.
"""
# %%
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from tanhmap import GrowthRange, MapParams, OrbitSpec, Tanh, detect_period, lyapunov, sample_orbit

fig, ax = plt.subplots(figsize=(7, 3.5))
for gamma_min, color in ((0.0, "k"), (0.018, "b"), (0.02, "r")):
    params = MapParams(Tanh(5.0), GrowthRange(gamma_min, 1.0), 3.5)
    sample = sample_orbit(params)
    cls = detect_period(params)
    print(f"gamma_min={gamma_min}: {cls}, lyapunov={lyapunov(params):+.4f}")
    ax.plot(sample.values, "-o", color=color, ms=3, lw=0.8, label=f"{gamma_min}: {cls}")
ax.set_xlabel("iteration after transient")
ax.set_ylabel("Y_n")
ax.legend(fontsize=8)
fig.savefig("period_readout.png", dpi=120)

# %%
# The readout is a property of the attractor, not of the seed.
for y0 in (0.1, 0.3, 0.7, 0.9):
    print(y0, detect_period(MapParams(Tanh(5.0), GrowthRange(0.02, 1.0), 3.5), OrbitSpec(y0)))
