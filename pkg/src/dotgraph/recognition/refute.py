"""Exhaustive ordering enumeration: refutation certificates for 2-d representations."""

from __future__ import annotations

import json
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from ..graph import Graph, GraphError, InstanceTooLarge, complement, gen_anticycle
from .ordering import IncrementalState, OrderingConstraintViolation

__all__ = [
    "RefutationCertificate",
    "refute_2dpr",
    "check_nested",
    "is_cobipartite",
    "MAX_REFUTE_VERTICES",
]

MAX_REFUTE_VERTICES = 11

NOTE_COBIPARTITE = (
    "unconditional: the graph is co-bipartite, so both cliques sit in sectors "
    "narrower than a right angle and every 2-d representation leaves an empty "
    "quadrant; cutting there gives a total angular order in which order- and "
    "vector-betweenness agree for every adjacent pair"
)
NOTE_CONDITIONAL = (
    "conditional: rules out 2-d representations whose angular order can be cut "
    "into a total order that no adjacent pair straddles (e.g. all vectors in a "
    "closed half-plane, or an empty sector of at least a right angle); it says "
    "nothing about representations that wrap around the origin"
)


def is_cobipartite(G: Graph) -> bool:
    H = complement(G)
    colour: dict[str, int] = {}
    for s in H.vertices:
        if s in colour:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in H.adj[u]:
                if w not in colour:
                    colour[w] = 1 - colour[u]
                    stack.append(w)
                elif colour[w] == colour[u]:
                    return False
    return True


@dataclass
class RefutationCertificate:
    graph_id: str
    n: int
    verdict: str
    orderings_examined: int
    survivors: list[tuple[str, ...]]
    semantics_note: str
    nodes_visited: int = 0
    pruned_prefixes: int = 0
    kind_counts: dict[str, int] = field(default_factory=dict)
    sample: list[tuple[tuple[str, ...], OrderingConstraintViolation]] = field(default_factory=list)
    log: list[tuple[tuple[str, ...], OrderingConstraintViolation]] | None = None

    @property
    def refuted(self) -> bool:
        return self.verdict == "REFUTED"

    def to_dict(self, include_log: bool = False) -> dict:
        doc = {
            "graph": self.graph_id,
            "n": self.n,
            "verdict": self.verdict,
            "orderings_examined": self.orderings_examined,
            "nodes_visited": self.nodes_visited,
            "pruned_prefixes": self.pruned_prefixes,
            "violation_kinds": dict(sorted(self.kind_counts.items())),
            "survivors": [list(s) for s in self.survivors],
            "semantics_note": self.semantics_note,
            "sample": [{"prefix": list(p), **v.to_dict()} for p, v in self.sample],
        }
        if include_log and self.log is not None:
            doc["log"] = [{"prefix": list(p), **v.to_dict()} for p, v in self.log]
        return doc

    def to_json(self, include_log: bool = False) -> str:
        return json.dumps(self.to_dict(include_log), indent=1)


def _explore(G: Graph, prefix: Sequence[int], keep_log: bool, sample_size: int):
    """Depth-first search below ``prefix``; returns partial certificate data."""
    st = IncrementalState(G)
    n = st.n
    survivors: list[tuple[int, ...]] = []
    kinds: Counter = Counter()
    events: list = []
    stats = {"nodes": 0, "pruned": 0}

    def record(viol):
        kinds[viol[0]] += 1
        if keep_log or len(events) < sample_size:
            events.append((tuple(st.order), viol))

    full = (1 << n) - 1
    placed = 0
    for v in prefix:
        stats["nodes"] += 1
        viol = st.push(v)
        placed |= 1 << v
        if viol:
            stats["pruned"] += 1
            record(viol)
            return survivors, kinds, events, stats

    def rec(rem: int):
        if not rem:
            # keep one of each reversal pair
            if st.order[0] < st.order[-1]:
                survivors.append(tuple(st.order))
            return
        m = rem
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            stats["nodes"] += 1
            viol = st.push(v)
            if viol is None:
                rec(rem & ~low)
            else:
                stats["pruned"] += 1
                record(viol)
            st.pop()

    rec(full & ~placed)
    return survivors, kinds, events, stats


def _explore_task(args):
    G, prefix, keep_log, sample_size = args
    return _explore(G, prefix, keep_log, sample_size)


def refute_2dpr(
    G: Graph,
    *,
    graph_id: str = "",
    max_n: int = MAX_REFUTE_VERTICES,
    workers: int = 1,
    log: bool = False,
    sample_size: int = 20,
) -> RefutationCertificate:
    """Enumerate vertex orders, pruning any prefix that already violates L1, L4 or a magnitude cycle.

    Orders are counted up to reversal (both directions violate the same
    constraints).  With ``workers > 1`` the tree is split by its first two
    vertices and the pieces are merged in a fixed order, so the certificate
    does not depend on scheduling.
    """
    if G.n > max_n:
        raise InstanceTooLarge(f"refutation is limited to {max_n} vertices, got {G.n}")
    if G.n == 0:
        raise GraphError("empty graph")
    n = G.n
    if n < 2:
        prefixes = [(0,)]
    else:
        prefixes = [(i, j) for i in range(n) for j in range(n) if i != j]
    tasks = [(G, p, log, sample_size) for p in prefixes]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_explore_task, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    else:
        parts = [_explore_task(t) for t in tasks]

    labels = list(G.vertices)
    survivors: list[tuple[str, ...]] = []
    kinds: Counter = Counter()
    events = []
    nodes = pruned = 0
    for surv, k, ev, stats in parts:
        survivors.extend(tuple(labels[i] for i in s) for s in surv)
        kinds.update(k)
        events.extend(ev)
        nodes += stats["nodes"]
        pruned += stats["pruned"]

    def to_violation(order, viol):
        kind, wit = viol
        names = tuple(labels[i] for i in wit)
        chain = names if kind in ("L3", "MAGNITUDE_CYCLE") else ()
        return tuple(labels[i] for i in order), OrderingConstraintViolation(kind, names, chain)

    converted = [to_violation(o, v) for o, v in events]
    survivors.sort(key=lambda s: [labels.index(x) for x in s])
    return RefutationCertificate(
        graph_id=graph_id,
        n=n,
        verdict="SURVIVORS" if survivors else "REFUTED",
        orderings_examined=math.factorial(n) // 2 if n > 1 else 1,
        survivors=survivors,
        semantics_note=NOTE_COBIPARTITE if is_cobipartite(G) else NOTE_CONDITIONAL,
        nodes_visited=nodes,
        pruned_prefixes=pruned,
        kind_counts=dict(kinds),
        sample=converted[:sample_size],
        log=converted if log else None,
    )


def _nested_conditions(n: int) -> list[tuple[str, str, str]]:
    """(condition, v-label, w-label) non-edge requirements of a nested order."""
    out = [("N1", "v1", "w1"), ("N1", "v1", "w2"), ("N1", "v2", "w1")]
    for i in range(2, n):
        for a, b in ((f"v{i}", f"w{i - 1}"), (f"v{i}", f"w{i + 1}"), (f"w{i}", f"v{i - 1}"), (f"w{i}", f"v{i + 1}")):
            out.append(("N2", a, b))
    out += [("N3", f"v{n - 1}", f"w{n}"), ("N3", f"v{n}", f"w{n}"), ("N3", f"v{n}", f"w{n - 1}")]
    return out


def check_nested(n: int, order: Sequence[str]) -> tuple[bool, str | None]:
    """Is ``order`` nested for A_2n?

    The order is read as v1 < ... < vn < wn < ... < w1: position p gets role
    ``v(p+1)`` for p < n and ``w(2n-p)`` otherwise.  Each pair that the
    nestedness conditions require to be a non-edge is looked up in A_2n.
    Returns ``(True, None)`` or ``(False, description of first failure)``.
    """
    A = gen_anticycle(n)
    if len(order) != 2 * n or set(order) != set(A.vertices):
        raise GraphError(f"order must list the {2 * n} vertices of A_{2 * n}")
    roles = {}
    for p, x in enumerate(order):
        roles[f"v{p + 1}" if p < n else f"w{2 * n - p}"] = x
    for cond, r1, r2 in _nested_conditions(n):
        x, y = roles[r1], roles[r2]
        if A.has_edge(x, y):
            return False, f"{cond}: {r1}{r2} (= {x}{y}) is an edge"
    return True, None
