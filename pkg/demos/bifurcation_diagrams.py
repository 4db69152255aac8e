"""
Bifurcation diagrams
====================

1000 transient iterations are dropped and the next 50 values are plotted
against C. A tiny gamma_min is enough to break up the wide chaotic bands
of the gamma_min = 0 diagram into small-period islands.
"""
# %%
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from tanhmap import CSweepSpec, GrowthRange, Tanh, classify_sweep, envelope_check, find_onsets, sweep_c

sweep = CSweepSpec(1.0, 4.0, 601)

# %%
# Onsets for gamma_min = 0 land near C = 1.75 (doubling) and 2.15 (chaos).
rep = find_onsets(classify_sweep(Tanh(5.0), GrowthRange(0.0, 1.0), sweep, workers=4))
print(rep)

# %%
fig, axes = plt.subplots(3, 1, figsize=(6, 9), sharex=True)
for ax, gamma_min in zip(axes, (0.0, 0.018, 0.02)):
    data = sweep_c(Tanh(5.0), GrowthRange(gamma_min, 1.0), sweep, workers=4)
    ax.plot(data.c.repeat(data.values.shape[1]), data.values.ravel(), ",k")
    ax.set_ylabel(f"Y_n  (gamma_min={gamma_min})")
axes[-1].set_xlabel("C")
fig.savefig("bifurcation_a5.png", dpi=120)

# %%
# Varying gamma_max instead: the orbit maximum tracks 0.3 * gamma_max * C.
fig, axes = plt.subplots(3, 1, figsize=(6, 9), sharex=True)
for ax, gamma_max in zip(axes, (1.0, 0.9, 0.8)):
    data = sweep_c(Tanh(5.0), GrowthRange(0.018, gamma_max), sweep, workers=4)
    ax.plot(data.c.repeat(data.values.shape[1]), data.values.ravel(), ",k")
    ax.plot(data.c, 0.3 * gamma_max * data.c, ":k")
    inside = [abs(r - 1) <= 0.1 for c, _, r in envelope_check(data, gamma_max) if c >= 2.6]
    ax.set_title(f"gamma_max={gamma_max}: {sum(inside)}/{len(inside)} maxima within 10%", fontsize=9)
axes[-1].set_xlabel("C")
fig.savefig("bifurcation_gamma_max.png", dpi=120)

# %%
# Steeper step, A_Y = 7.5: period 4 between C = 2.6 and 2.8 once gamma_min > 0.
fig, axes = plt.subplots(3, 1, figsize=(6, 9), sharex=True)
for ax, gamma_min in zip(axes, (0.0, 0.018, 0.02)):
    data = sweep_c(Tanh(7.5), GrowthRange(gamma_min, 1.0), sweep, workers=4)
    ax.plot(data.c.repeat(data.values.shape[1]), data.values.ravel(), ",k")
    ax.set_ylabel(f"gamma_min={gamma_min}")
fig.savefig("bifurcation_a7_5.png", dpi=120)
