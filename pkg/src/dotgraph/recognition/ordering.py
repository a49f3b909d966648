"""Order-based constraints on 2-dimensional representations.

A total order ``pi`` of the vertices stands in for the angular order of the
vectors.  Vertex ``b`` is *between* ``a`` and ``d`` when it sits strictly
inside them in ``pi``.  Three constraint families are checked:

L1
    edges ad, bc and non-edges ac, bd with b and c both between a and d.
L4
    an induced 4-cycle whose outermost pair (first and last in ``pi``) is
    adjacent; in a genuine representation the outer pair and the inner pair
    are the two diagonals.
MAGNITUDE_CYCLE
    For c between a and b with ab an edge and ac a non-edge the vector of
    b is strictly longer than the vector of c.  Collecting all such
    inferences as arcs b -> c, any directed cycle is a contradiction.  A
    2-cycle is reported as L3.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Sequence

from ..graph import Graph, GraphError

__all__ = [
    "OrderingConstraintViolation",
    "ordering_violations",
    "recheck_violation",
    "first_violation_on_append",
    "IncrementalState",
]

KINDS = ("L1", "L3", "L4", "MAGNITUDE_CYCLE", "NESTED")


@dataclass(frozen=True)
class OrderingConstraintViolation:
    kind: str
    witness: tuple[str, ...]
    chain: tuple[str, ...] = field(default=())

    def to_dict(self) -> dict:
        d = {"kind": self.kind, "witness": list(self.witness)}
        if self.chain:
            d["chain"] = list(self.chain)
        return d


def _check_perm(G: Graph, order: Sequence[str]) -> dict[str, int]:
    if len(order) != G.n or set(order) != set(G.vertices):
        raise GraphError("ordering is not a permutation of the vertex set")
    return {v: i for i, v in enumerate(order)}


def _magnitude_arcs(G: Graph, order: Sequence[str]) -> dict[tuple[str, str], tuple[str, str, str]]:
    """All magnitude inferences as arcs (b, c) -> supporting triple (a, b, c)."""
    arcs: dict[tuple[str, str], tuple[str, str, str]] = {}
    n = len(order)
    for i in range(n):
        for j in range(n):
            if abs(i - j) < 2:
                continue
            a, b = order[i], order[j]
            if not G.has_edge(a, b):
                continue
            lo, hi = min(i, j), max(i, j)
            for k in range(lo + 1, hi):
                c = order[k]
                if not G.has_edge(a, c):
                    arcs.setdefault((b, c), (a, b, c))
    return arcs


def _simple_cycles(arcs) -> list[list[str]]:
    import networkx as nx

    D = nx.DiGraph()
    D.add_edges_from(arcs)
    return [list(c) for c in nx.simple_cycles(D)]


def ordering_violations(G: Graph, order: Sequence[str]) -> list[OrderingConstraintViolation]:
    """Every L1, L4 and magnitude-cycle violation of ``order`` in ``G``.

    L1 witnesses are (a, b, c, d) with a before d in the order; each
    unordered inner pair is reported once.  L4 witnesses list the 4-cycle in
    order.  Magnitude cycles are the elementary cycles of the arc graph,
    rotated to start at their earliest vertex; length-2 cycles come out as
    L3 with witness (a, b, c, d) such that b -> c and c -> b are supported
    by (a, b, c) and (d, c, b).
    """
    pos = _check_perm(G, order)
    out: list[OrderingConstraintViolation] = []
    n = len(order)
    E = G.has_edge

    for i in range(n):
        for l in range(i + 3, n):
            a, d = order[i], order[l]
            if not E(a, d):
                continue
            inner = order[i + 1 : l]
            for b, c in combinations(inner, 2):
                for bb, cc in ((b, c), (c, b)):
                    if E(bb, cc) and not E(a, cc) and not E(bb, d):
                        out.append(OrderingConstraintViolation("L1", (a, bb, cc, d)))

    for quad in combinations(order, 4):
        sub = [(x, y) for x, y in combinations(quad, 2) if E(x, y)]
        if len(sub) != 4 or any(sum(v in e for e in sub) != 2 for v in quad):
            continue
        if E(quad[0], quad[3]):
            out.append(OrderingConstraintViolation("L4", tuple(quad)))

    arcs = _magnitude_arcs(G, order)
    for cyc in _simple_cycles(arcs):
        k = min(range(len(cyc)), key=lambda t: pos[cyc[t]])
        cyc = cyc[k:] + cyc[:k]
        if len(cyc) == 2:
            b, c = cyc
            a = arcs[(b, c)][0]
            d = arcs[(c, b)][0]
            out.append(OrderingConstraintViolation("L3", (a, b, c, d), tuple(cyc)))
        else:
            out.append(OrderingConstraintViolation("MAGNITUDE_CYCLE", tuple(cyc), tuple(cyc)))
    return out


def recheck_violation(G: Graph, order: Sequence[str], v: OrderingConstraintViolation) -> bool:
    """Independent re-validation of one reported violation.

    Works from the definitions only: positions and adjacency, no shared code
    with the enumerator.
    """
    pos = {u: i for i, u in enumerate(order)}
    E = G.has_edge
    w = v.witness
    if len(set(w)) != len(w) or any(u not in pos for u in w):
        return False

    def between(x, lo, hi):
        return min(pos[lo], pos[hi]) < pos[x] < max(pos[lo], pos[hi])

    if v.kind == "L1":
        a, b, c, d = w
        return (
            E(a, d) and E(b, c) and not E(a, c) and not E(b, d)
            and between(b, a, d) and between(c, a, d)
        )
    if v.kind == "L4":
        q = sorted(w, key=pos.__getitem__)
        edges = [(x, y) for x, y in combinations(q, 2) if E(x, y)]
        deg_ok = all(sum(x in e for e in edges) == 2 for x in q)
        return len(edges) == 4 and deg_ok and E(q[0], q[3])
    if v.kind in ("L3", "MAGNITUDE_CYCLE"):
        chain = v.chain or w
        if len(chain) < 2:
            return False

        def supported(b, c):
            # some a with c strictly between a and b, ab edge, ac non-edge
            return any(
                a not in (b, c) and E(a, b) and not E(a, c) and between(c, a, b)
                for a in order
            )

        return all(supported(chain[i], chain[(i + 1) % len(chain)]) for i in range(len(chain)))
    return False


class IncrementalState:
    """Bitmask state for prefix enumeration over a fixed graph.

    Vertices are indices 0..n-1.  ``push`` appends a vertex and returns the
    first violation that involves it (as a tuple ``(kind, witness indices)``)
    or None; all three constraint families only ever gain instances when the
    prefix grows, so a violation kills every extension.
    """

    def __init__(self, G: Graph):
        self.labels = list(G.vertices)
        idx = {v: i for i, v in enumerate(self.labels)}
        self.n = len(self.labels)
        self.nbr = [0] * self.n
        for v, ws in G.adj.items():
            m = 0
            for w in ws:
                m |= 1 << idx[w]
            self.nbr[idx[v]] = m
        self.order: list[int] = []
        self.pos = [-1] * self.n
        self.succ = [0] * self.n  # magnitude arcs u -> succ[u]
        self._undo: list[list[tuple[int, int]]] = []
        self.placed = 0

    def _reaches(self, src: int, dst: int) -> list[int] | None:
        """Path src -> ... -> dst in the arc graph, or None."""
        parent = {src: -1}
        stack = [src]
        while stack:
            u = stack.pop()
            if u == dst:
                path = [u]
                while parent[path[-1]] != -1:
                    path.append(parent[path[-1]])
                return path[::-1]
            m = self.succ[u]
            while m:
                low = m & -m
                w = low.bit_length() - 1
                m ^= low
                if w not in parent:
                    parent[w] = u
                    stack.append(w)
        return None

    def push(self, x: int):
        nbr = self.nbr
        nx_ = nbr[x]
        order = self.order
        k = len(order)
        placed = self.placed
        viol = None

        # after[i]: placed vertices at positions > i
        after = [0] * k
        acc = 0
        for i in range(k - 1, -1, -1):
            after[i] = acc
            acc |= 1 << order[i]

        # L1 with x as the last outer vertex
        for i, a in enumerate(order):
            if not (nx_ >> a) & 1:
                continue
            inner = after[i]
            cb = inner & ~nx_
            cc = inner & ~nbr[a]
            m = cb
            while m:
                low = m & -m
                b = low.bit_length() - 1
                m ^= low
                hit = nbr[b] & cc & ~low
                if hit:
                    c = (hit & -hit).bit_length() - 1
                    viol = ("L1", (a, b, c, x))
                    break
            if viol:
                break

        # L4: induced 4-cycle x-p-r-q with the earliest vertex adjacent to x
        if viol is None:
            non = placed & ~nx_
            m = non
            while m:
                low = m & -m
                r = low.bit_length() - 1
                m ^= low
                common = nx_ & nbr[r] & placed
                before_r = common & ~(after[self.pos[r]] | low)
                pm = before_r
                while pm:
                    plow = pm & -pm
                    p = plow.bit_length() - 1
                    pm ^= plow
                    q_m = common & ~nbr[p] & ~plow
                    if q_m:
                        q = (q_m & -q_m).bit_length() - 1
                        viol = ("L4", tuple(sorted((p, q, r, x), key=lambda v: self.pos[v] if v != x else k)))
                        break
                if viol:
                    break

        added: list[tuple[int, int]] = []
        if viol is None:
            # arcs x -> c: a before x, a ~ x, c between, a !~ c
            for i, a in enumerate(order):
                if (nx_ >> a) & 1:
                    cm = after[i] & ~nbr[a]
                    new = cm & ~self.succ[x]
                    if new:
                        self.succ[x] |= new
                        added.append((x, new))
            # arcs b -> c: b before x, x ~ b, c between, x !~ c
            for i, b in enumerate(order):
                if (nx_ >> b) & 1:
                    cm = after[i] & ~nx_
                    new = cm & ~self.succ[b]
                    if new:
                        self.succ[b] |= new
                        added.append((b, new))
                        mm = new
                        while mm and viol is None:
                            low = mm & -mm
                            c = low.bit_length() - 1
                            mm ^= low
                            path = self._reaches(c, b)
                            if path is not None:
                                cyc = (b,) + tuple(path[:-1])
                                kind = "L3" if len(cyc) == 2 else "MAGNITUDE_CYCLE"
                                viol = (kind, cyc)
                    if viol:
                        break

        order.append(x)
        self.pos[x] = k
        self.placed |= 1 << x
        self._undo.append(added)
        return viol

    def pop(self) -> None:
        x = self.order.pop()
        self.pos[x] = -1
        self.placed &= ~(1 << x)
        for u, m in self._undo.pop():
            self.succ[u] &= ~m


def first_violation_on_append(G: Graph, order: Sequence[str]):
    """Replay ``order`` through the incremental checker; first violation or None."""
    st = IncrementalState(G)
    idx = {v: i for i, v in enumerate(st.labels)}
    for v in order:
        viol = st.push(idx[v])
        if viol:
            return viol[0], tuple(st.labels[i] for i in viol[1])
    return None


def _brute_survivors(G: Graph) -> list[tuple[str, ...]]:
    """Unpruned reference: orders with no violation (both directions kept)."""
    return [p for p in permutations(G.vertices) if not ordering_violations(G, p)]
