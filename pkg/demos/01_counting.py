# %% [markdown]
# # Counting increasing Hamiltonian paths
#
# Give every edge of K_n a distinct rank. A directed Hamiltonian path is
# increasing when the ranks along it go up. X counts those paths; its
# mean over uniform orderings is exactly n.

# %%
import numpy as np

from edgeorder import (Rng, ccs_ordering, count_increasing_ham_paths, enumerate_increasing_ham_paths,
                       exact_altitude, longest_increasing_trail, sample_uniform_ordering)

o = sample_uniform_ordering(8, Rng(seed=1))
x = count_increasing_ham_paths(o).value
print("X =", x)
print("first few paths:", enumerate_increasing_ham_paths(o, cap=3))

# %% [markdown]
# The mean over random orderings should sit near n.

# %%
n = 9
xs = np.array([count_increasing_ham_paths(sample_uniform_ordering(n, Rng(2, i))).value for i in range(2000)])
print(f"mean X/n = {xs.mean() / n:.3f} +- {xs.std(ddof=1) / n / np.sqrt(len(xs)):.3f}")
print("fraction with X = 0:", np.mean(xs == 0))

# %% [markdown]
# Altitude is the longest increasing self-avoiding path. The XOR ordering
# of K_{2^d} keeps it short, while trails can run much longer.

# %%
for d in (2, 3):
    c = ccs_ordering(d)
    alt = exact_altitude(c)
    print(f"n={1 << d}: altitude {alt.length} via {alt.witness}, longest trail {longest_increasing_trail(c)}")
