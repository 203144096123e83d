# %% [markdown]
# # The size-bias coupling
#
# Fix a path P0. Re-sorting the ranks on P0's edges along P0 makes P0
# increasing without touching any other edge. Counting again gives Y,
# whose law is X's law reweighted by k/n.

# %%
from fractions import Fraction

from edgeorder import Rng, build_size_biased_ordering, sample_uniform_ordering, sample_xyz
from edgeorder.oracle import exhaustive_size_bias

o = sample_uniform_ordering(6, Rng(3))
p0 = (0, 1, 2, 3, 4, 5)
print("P0 increasing before:", o.is_increasing(p0), "after:", build_size_biased_ordering(o, p0).is_increasing(p0))

# %% [markdown]
# Over all 720 orderings of K_4 the identity holds exactly.

# %%
hx, hy = exhaustive_size_bias(4)
for k in sorted(set(hx) | set(hy)):
    print(k, Fraction(hy.get(k, 0), 720), "vs", Fraction(k, 4) * Fraction(hx.get(k, 0), 720))

# %% [markdown]
# One coupled draw: X, Y and Z (paths edge-disjoint from P0).

# %%
print(sample_xyz(10, Rng(4)))
