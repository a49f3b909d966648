# Finding models numerically, and the one-dimensional case exactly.
#
# The search minimizes a hinge loss over many seeded restarts at once.  Any
# result it returns has passed the verifier with margins of at least 1e-6;
# NOT_FOUND is only evidence.

import random

from dotgraph.graph import disjoint_union, gen_named, gen_path
from dotgraph.model import verify_model
from dotgraph.recognition import (
    NotFound,
    SearchBudget,
    dot_dimension_at_most_1,
    random_threshold_graph,
    search_dpr,
)

budget = SearchBudget(restarts=40, iterations=3000)
for name, d in [("cycle(5)", 2), ("fan(5)", 2), ("claw", 2), ("J", 3), ("J", 2), ("anticycle(4)", 2)]:
    G = gen_named(name)
    res = search_dpr(G, d, budget, seed=0)
    if isinstance(res, NotFound):
        print(f"{name:>14} d={d}: not found (best residual {res.best_residual:.3g})")
    else:
        rep = verify_model(res, G)
        print(f"{name:>14} d={d}: found, edge margin {rep.min_edge_margin:.3g}")

# Dimension 1: at most two components with edges, each a threshold graph.
rng = random.Random(1)
T1, seq1 = random_threshold_graph(6, rng, prefix="a")
T2, seq2 = random_threshold_graph(5, rng, prefix="b")
print("\ncreation sequences:", seq1, seq2)
print("two threshold pieces:", dot_dimension_at_most_1(disjoint_union(T1, T2))[0])
print("P4:", dot_dimension_at_most_1(gen_path(4)))
edge = gen_path(2)
print("three edges:", dot_dimension_at_most_1(disjoint_union(edge, edge, edge))[1].reason)
