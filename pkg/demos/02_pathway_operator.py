# %% [markdown]
# # The pathway fractional integral operator
#
# Closed-form images (Wright / Mittag-Leffler series) are compared with
# quadrature of the defining integral. The script also shows the alpha -> 1
# Laplace limit and the Riemann-Liouville special case.

# %%
import math

import numpy as np

from pathway_entropy import (
    BesselParams,
    PathwayParams,
    cross_check,
    laplace_limit,
    pathway_bessel,
    pathway_integral_numeric,
    pathway_power,
    pathway_trig,
    riemann_liouville_numeric,
    rl_cos,
)
from _common import plt, save

# %% [markdown]
# ## One point, three ways

# %%
params = PathwayParams(eta=2.0, alpha_pw=0.5, a=1.0)
rho, c, x = 1.5, 1.0, 1.2
closed = pathway_trig("cos", params, rho, c, x).value
numeric = pathway_integral_numeric(lambda t: t ** (rho - 1) * math.cos(c * t), params, x)
print(f"cos image: closed {closed:.15f}  quadrature {numeric:.15f}  diff {abs(closed - numeric):.1e}")
bp = BesselParams(p=0.5, b=1.0, c=1.0)
print(f"Bessel image: {pathway_bessel(params, rho, bp, x).value:.15f}")
print(f"power image (eta=1, alpha=0, rho=1, x=1): {pathway_power(PathwayParams(1, 0, 1), 1, 1)}")

# %% [markdown]
# ## Cross-check over the acceptance grids

# %%
for kind in ("power", "bessel", "cos", "cosh", "sin", "sinh"):
    r = cross_check(kind)
    print(f"{kind:6s} {r['points']:4d} points  max abs {r['max_abs']:.1e}  passed={r['passed']}")

# %% [markdown]
# ## alpha -> 1: the operator tends to a Laplace transform

# %%
alphas = 1 - np.geomspace(1e-1, 1e-5, 20)
gap = [abs(pathway_trig("sin", PathwayParams(2.0, a_, 1.0), rho, c, x).value
           / laplace_limit("sin", 1.0, 2.0, rho, x, c=c) - 1) for a_ in alphas]
fig, ax = plt.subplots()
ax.loglog(1 - alphas, gap, "o-")
ax.set_xlabel("1 - alpha")
ax.set_ylabel("relative gap to Laplace limit")
save(fig, "laplace_limit.png")

# %% [markdown]
# ## Riemann-Liouville integral of cos: x**eta E_{2,1+eta}(-x**2)

# %%
for eta in (0.5, 1.0, 2.0):
    xs = np.linspace(0.5, 5, 4)
    err = max(abs(rl_cos(eta, xi) - riemann_liouville_numeric(math.cos, eta, xi)) for xi in xs)
    print(f"eta={eta}: max |series - quadrature| = {err:.1e}")
print(f"rl_cos(1, 1) = {rl_cos(1, 1):.12f}, sin(1) = {math.sin(1):.12f}")
