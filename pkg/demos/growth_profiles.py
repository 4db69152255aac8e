"""
Growth rate and return map
==========================

The classic logistic map weighs C by ``1 - Y``. Replacing that line by a
tanh step keeps the endpoints roughly in place but makes the rate flat
near 0 and 1 and steep in the middle.
"""
# %%
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from tanhmap import GrowthRange, Linear, MapParams, Tanh, growth_rate, step

y = np.linspace(0, 1, 501)
profiles = {
    "tanh A_Y=5, [0, 1]": (Tanh(5.0), GrowthRange(0.0, 1.0)),
    "tanh A_Y=5, [0.1, 0.9]": (Tanh(5.0), GrowthRange(0.1, 0.9)),
    "tanh A_Y=7.5, [0, 1]": (Tanh(7.5), GrowthRange(0.0, 1.0)),
    "linear": (Linear(), GrowthRange(0.0, 1.0)),
}

# %%
# The tanh form is not renormalized: at A_Y=5 it starts at 0.9933, not 1.
print(growth_rate(Tanh(5.0), GrowthRange(), 0.0))

# %%
fig, (top, bottom) = plt.subplots(2, 1, figsize=(5, 7), sharex=True)
for label, (shape, bounds) in profiles.items():
    style = ":" if isinstance(shape, Linear) else "-"
    top.plot(y, growth_rate(shape, bounds, y), style, label=label)
    bottom.plot(y, step(MapParams(shape, bounds, 4.0), y), style)
top.set_ylabel("gamma(Y_n)")
bottom.set_ylabel("Y_{n+1} (C = 4)")
bottom.set_xlabel("Y_n")
top.legend(fontsize=8)
fig.savefig("growth_profiles.png", dpi=120)
