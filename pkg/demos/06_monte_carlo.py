# %% [markdown]
# # Monte Carlo experiments
#
# Every sample draws from its own substream, so reports depend only on
# the configuration. Second and third moments come from mean Y and mean
# Y^2 via the size-bias identities.

# %%
import math

from edgeorder.montecarlo import SimConfig, disjoint_triple_frequency, render_json, run_experiment

rep = run_experiment(SimConfig(n=9, samples=1500, seed=0))
for k, e in rep.estimates.items():
    print(f"{k:16s} {e.mean:.4f} +- {e.stderr:.4f}   oracle {rep.oracle.get(k, '-')}")

# %% [markdown]
# Three uniform Hamiltonian paths are pairwise edge-disjoint with
# probability near e^-6.

# %%
d = disjoint_triple_frequency(100, 200_000, seed=0)
print(d["triple"].mean, math.exp(-6))

# %%
print(render_json(run_experiment(SimConfig(10, 400, 0, "dist-compare")))[:400])
