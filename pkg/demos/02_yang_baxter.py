# %% [markdown]
# Which R-matrices exist
# ======================
#
# The Gamma-Gamma, Delta-Delta and Delta-Gamma R-matrices satisfy the
# Yang-Baxter equation against the row weights.  Gamma-Delta does not, and
# no choice of its free entries repairs it.

# %%
import random

from uturn import ybe

for kind in ("GG", "DD", "DG"):
    for fam in ("atom", "character"):
        print(kind, fam, "YBE holds:", ybe.verify_ybe(kind, fam))

# %% [markdown]
# A counterexample for the Gamma-Delta pair, with the default free entries
# and with random ones.

# %%
rng = random.Random(1)
for free in [ybe.DEFAULT_FREE] + [ybe.random_free(rng) for _ in range(3)]:
    c = ybe.refute_gamma_delta_ybe(free)
    print(free, c["boundary"], c["lhs"], "vs", c["rhs"])

# %% [markdown]
# The obstruction is a closed loop: on one boundary the right-hand side can
# close a loop of any color, so it grows with the number of colors.

# %%
for k in (2, 4):
    print(k, "colors:", *ybe.loop_sides(k))

# %% [markdown]
# Solving RLL = LLR for unknown entries at a random rational point gives a
# one-dimensional kernel for the three good pairs.  For Gamma-Delta the
# only solutions live on entries that never enter an equation.

# %%
for kind in ("GG", "DD", "DG", "GD"):
    dim, _, _ = ybe.solve_rll_kernel(kind, (3, 7))
    print(kind, "kernel", dim, "constrained", ybe.constrained_kernel_dimension(kind, (3, 7)))

# %% [markdown]
# Reflection and unitarity.

# %%
for t in "BC":
    print("reflection", t, ybe.verify_reflection_equation("atom", t))
print("unitarity beta =", ybe.verify_unitarity("GG"))
