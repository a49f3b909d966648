"""Dot product dimension 1: disjoint unions of at most two threshold graphs."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from ..graph import Graph, components, induced_subgraph

__all__ = ["DimOneWitness", "is_threshold", "threshold_peeling", "dot_dimension_at_most_1", "random_threshold_graph"]


def threshold_peeling(G: Graph) -> list[tuple[str, str]] | None:
    """Peel isolated or dominating vertices until none remain.

    Returns the peeling sequence as ``(vertex, "isolated" | "dominating")``
    pairs, or None when the process gets stuck (the graph is not threshold).
    """
    alive = set(G.vertices)
    deg = {v: G.degree(v) for v in G.vertices}
    seq = []
    while alive:
        k = len(alive)
        pick = None
        for v in G.vertices:
            if v in alive and (deg[v] == 0 or deg[v] == k - 1):
                pick = v
                break
        if pick is None:
            return None
        seq.append((pick, "isolated" if deg[pick] == 0 else "dominating"))
        alive.discard(pick)
        for w in G.adj[pick]:
            if w in alive:
                deg[w] -= 1
    return seq


def is_threshold(G: Graph) -> bool:
    return threshold_peeling(G) is not None


@dataclass
class DimOneWitness:
    """Two vertex parts, each inducing a threshold graph, with no edges between them."""

    parts: tuple[list[str], list[str]] = field(default_factory=lambda: ([], []))
    reason: str = ""


def dot_dimension_at_most_1(G: Graph) -> tuple[bool, DimOneWitness]:
    comps = components(G)
    with_edges = [c for c in comps if len(c) > 1]
    isolated = [c[0] for c in comps if len(c) == 1]
    if len(with_edges) > 2:
        return False, DimOneWitness(reason=f"{len(with_edges)} components contain edges")
    for c in with_edges:
        if not is_threshold(induced_subgraph(G, c)):
            return False, DimOneWitness(reason=f"component containing {c[0]!r} is not threshold")
    first = (with_edges[0] if with_edges else []) + isolated
    second = with_edges[1] if len(with_edges) > 1 else []
    return True, DimOneWitness(parts=(first, second), reason="ok")


def random_threshold_graph(n: int, rng: random.Random, prefix: str = "") -> tuple[Graph, str]:
    """Threshold graph from a random creation sequence.

    The sequence is a string over ``i`` (add isolated) and ``d`` (add
    dominating); the first symbol is always ``i``.
    """
    seq = "i" + "".join(rng.choice("id") for _ in range(n - 1))
    verts = [f"{prefix}{k}" for k in range(n)]
    edges = [(verts[j], verts[k]) for k, s in enumerate(seq) if s == "d" for j in range(k)]
    return Graph(verts, edges), seq
