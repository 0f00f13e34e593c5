# %% [markdown]
# # Diffusion entropy analysis
#
# DEA scaling of iid Gaussian and alpha-stable noise. Gaussian noise gives
# delta = H = 1/2. Stable noise with index 1.5 gives delta = 1/1.5, while
# its finite-sample variance scaling still looks Gaussian, so the variance
# method alone cannot tell the two apart.

# %%
import numpy as np

from pathway_entropy import Indicator, classify, entropy_curve, fit_delta, generate, variance_scaling
from _common import plt, save

N = 2**16
series = {"gaussian": generate("gaussian", N, seed=7), "stable(1.5)": generate("stable", N, seed=3, index=1.5)}

# %%
fig, ax = plt.subplots()
for name, xi in series.items():
    for ind in (Indicator(), Indicator("mathai_extensive", 0.8), Indicator("mathai_extensive", 1.2)):
        curve = entropy_curve(xi, ind)
        fit = fit_delta(curve)
        print(f"{name:12s} {ind.kind:17s} alpha={ind.alpha}: delta = {fit.delta:.3f}")
        ax.semilogx(curve.t, curve.S, ".", label=f"{name} {ind.kind} {ind.alpha}")
    H, _ = variance_scaling(xi)
    print(f"{name:12s} H = {H:.3f}  class = {classify(H, fit_delta(entropy_curve(xi)).delta).name}")
ax.set_xlabel("t")
ax.set_ylabel("S(t)")
ax.legend(fontsize=7)
save(fig, "dea_curves.png")
