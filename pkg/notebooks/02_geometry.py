# From geometric intersection graphs to dot product models.
#
# Caps of equal size on a sphere turn into vectors by scaling each centre by
# 1/sqrt(cos theta).  Arcs are caps on the circle.  Disks go through the
# sphere by inverse stereographic projection after shrinking the picture.

import math

import numpy as np

from dotgraph.constructors import (
    ArcSet,
    CapSet,
    DiskSet,
    arcs_intersection_graph,
    arcs_to_model,
    caps_intersection_graph,
    caps_to_model,
    disks_intersection_graph,
    disks_to_model,
    fig1_J_arcs,
    GeometryError,
)
from dotgraph.graph import gen_cycle, gen_named, min_maximal_independent_set_size
from dotgraph.model import verify_model

rng = np.random.default_rng(7)

# Twelve caps on S^2.
X = rng.normal(size=(12, 3))
X /= np.linalg.norm(X, axis=1)[:, None]
caps = CapSet({f"c{i}": tuple(X[i]) for i in range(12)}, 0.8)
G = caps_intersection_graph(caps)
rep = verify_model(caps_to_model(caps), G)
print(f"caps: {G.m} intersecting pairs, model {rep.verdict}, margins {rep.min_edge_margin:.3g} / {rep.min_nonedge_deficit:.3g}")

# Ten arcs evenly spaced, each a bit wider than the gap: C10.
arcs = ArcSet({str(i): 2 * math.pi * i / 10 for i in range(10)}, 1.3 * 2 * math.pi / 10)
G = arcs_intersection_graph(arcs)
print("arcs give C10:", G.is_isomorphic(gen_cycle(10)), "| model", verify_model(arcs_to_model(arcs), G).verdict)
print("min maximal independent set of C10:", min_maximal_independent_set_size(G))

# The eight 105-degree arcs of J.  They realize J exactly, but arcs wider
# than a quarter circle are outside the cap construction.
J_arcs = fig1_J_arcs()
print("J from arcs:", arcs_intersection_graph(J_arcs) == gen_named("J"))
try:
    arcs_to_model(J_arcs)
except GeometryError as exc:
    print("as expected:", exc)

# Unit disks: a random cloud, lifted to 3 dimensions.
P = rng.uniform(0, 6, (20, 2))
disks = DiskSet({f"d{i}": tuple(P[i]) for i in range(20)})
G = disks_intersection_graph(disks)
M = disks_to_model(disks)
rep = verify_model(M, G)
print(f"disks: {G.m} edges, {M.dim}-d model {rep.verdict}, threshold {M.threshold}")
