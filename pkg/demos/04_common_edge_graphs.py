# %% [markdown]
# # Common edge graphs of path triples
#
# Harvest three increasing paths from one ordering, keep the edges shared
# by at least two, collapse same-label runs and read off the statistics.

# %%
from edgeorder.ceg import check_claims, common_edge_graph, reduce, triple_stats, vertex_weights
from edgeorder.montecarlo import harvest_triples

for a, b, c, o in harvest_triples(8, 3, seed=2):
    g = common_edge_graph(a, b, c, o)
    rg = reduce(g)
    print("paths:", a, b, c)
    for e in rg.edges:
        print(f"  {e.membership:3s} {e.tail}->{e.head} signs={e.signs} run={e.run}")
    print("  stats:", triple_stats(a, b, c, o))
    print("  max weight:", max(vertex_weights(g).values(), default=0), " claims ok:", check_claims(a, b, c, o).ok)

# %% [markdown]
# A sweep of random triples never breaks the structural claims.

# %%
fails = sum(not check_claims(*t).ok for t in harvest_triples(8, 2000, seed=3))
print("failures in 2000 triples:", fails)
