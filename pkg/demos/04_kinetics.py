# %% [markdown]
# # Fractional kinetics
#
# Exponential, Mittag-Leffler and pathway-mixed relaxation. The unconditional
# density equals the gamma mixture of the conditional Prabhakar laws. It
# tends to a stretched exponential as alpha -> 1+ and has a power-law tail.

# %%
import numpy as np

from pathway_entropy import (
    KineticsParams,
    exponential_decay,
    mixture_integral,
    ml_decay,
    stretched_exponential,
    unconditional_density,
)
from _common import plt, save

t = np.geomspace(1e-2, 1e3, 200)
fig, ax = plt.subplots()
ax.loglog(t, [exponential_decay(1, 1, ti) for ti in t], label="exp")
for nu in (0.3, 0.6, 0.9):
    ax.loglog(t, [ml_decay(1, 1, nu, ti) for ti in t], label=f"ML nu={nu}")
kp = KineticsParams(mu=1, nu=1, alpha_k=1.5)
ax.loglog(t, unconditional_density(kp, t), "k--", label="pathway alpha=1.5")
ax.set_ylim(1e-8, 2)
ax.set_xlabel("t")
ax.set_ylabel("N(t)/N0")
ax.legend()
save(fig, "relaxation.png")

# %%
for mu, nu, alpha in ((1, 0.5, 1.5), (2, 1, 2)):
    kp = KineticsParams(mu=mu, nu=nu, alpha_k=alpha)
    gaps = [abs(mixture_integral(kp, ti) - unconditional_density(kp, ti)) for ti in (0.25, 0.5, 1, 2)]
    print(f"mu={mu} nu={nu} alpha={alpha}: max mixture gap {max(gaps):.1e}")
near = KineticsParams(mu=2, nu=0.7, alpha_k=1 + 1e-4)
print("alpha=1+1e-4 vs stretched exp:", max(abs(unconditional_density(near, ti) - stretched_exponential(near, ti))
                                             for ti in (0.5, 1, 2)))
