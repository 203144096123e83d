# %% [markdown]
# # Exact moments by enumeration
#
# E X^k is a sum over k-tuples of paths of the chance that all are
# increasing, i.e. linear extensions of their edge chains divided by the
# factorial of the union size. Fixing the first path costs a factor n!.

# %%
from edgeorder.oracle import (brute_force_Tn, exact_moment, exhaustive_distribution, histogram_moment,
                              linear_extensions, tn_total)

print(linear_extensions((0, 1, 2), (1, 0, 2)))

for n in range(4, 11):
    m = exact_moment(n, 2).value
    print(f"n={n:2d}  E X^2/n^2 = {float(m / n**2):.4f}")

# %% [markdown]
# The third moment grows toward e^3 slowly; restricted sums trend to 1 and e^-3.

# %%
for n in range(3, 7):
    v = [float(exact_moment(n, 3, r).value / n**3) for r in (None, "c_disjoint_a", "bc_disjoint_a")]
    print(n, [round(x, 4) for x in v])

# %% [markdown]
# Two independent routes to the same rationals.

# %%
h = exhaustive_distribution(4)
print(histogram_moment(h, 2), exact_moment(4, 2).value)
print(tn_total(4, brute_force_Tn(4)), exact_moment(4, 3).value)
