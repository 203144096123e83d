# %% [markdown]
# # Limiting constants
#
# Good reduced graphs contribute e^3 to E X^3/n^3. Succession-free
# permutations give e^-2. Any 1-periodic measure tilted by a Gaussian
# reproduces the log-normal moments e^{k(k-1)/2}.

# %%
import math

from edgeorder.limits import (GoodClassKey, PeriodicMeasureSpec, kaplansky_ratio, lognormal_moment,
                              periodic_measure_moment, sum_good_limits, termwise_limit)

print(sum_good_limits(), math.exp(3))
print(sum_good_limits(("AC",)), sum_good_limits(("AB", "AC")), math.exp(-3))
print(termwise_limit(GoodClassKey(k_AB=1), (2, 0, 0)) / math.exp(-6))

# %%
for n in (5, 10, 20):
    print(n, kaplansky_ratio(n), math.exp(-2))

# %%
spec = PeriodicMeasureSpec("density", weights=(1.0, 4.0, 0.5), theta=0.3)
for k in range(-2, 5):
    print(k, periodic_measure_moment(spec, k), lognormal_moment(k))
