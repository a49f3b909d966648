"""Labeled simple graphs, the named corpus, and small structural queries."""

from __future__ import annotations

import json
import re
from functools import cached_property
from itertools import combinations
from pathlib import Path
from typing import Iterable

import networkx as nx

__all__ = [
    "Graph",
    "GraphError",
    "InstanceTooLarge",
    "gen_anticycle",
    "gen_complete_minus_matching",
    "gen_cycle",
    "gen_path",
    "gen_complete",
    "gen_wheel",
    "gen_fan",
    "gen_grid",
    "gen_named",
    "is_path_or_cycle",
    "complement",
    "induced_subgraph",
    "components",
    "is_triangle_free",
    "min_maximal_independent_set_size",
    "disjoint_union",
    "load_graph",
    "save_graph",
]

MAX_MIS_VERTICES = 24


class GraphError(ValueError):
    pass


class InstanceTooLarge(GraphError):
    pass


class Graph:
    """Immutable simple undirected graph on string labels.

    Vertex order is kept (it is used for display and as a canonical
    enumeration order) but equality ignores it.
    """

    __slots__ = ("vertices", "edges", "__dict__")

    def __init__(self, vertices: Iterable[str], edges: Iterable[Iterable[str]] = ()):
        verts = tuple(str(v) for v in vertices)
        if len(set(verts)) != len(verts):
            raise GraphError("duplicate vertex labels")
        vset = set(verts)
        es = set()
        for e in edges:
            pair = tuple(e)
            if len(pair) != 2:
                raise GraphError(f"edge {pair!r} is not a pair")
            u, v = str(pair[0]), str(pair[1])
            if u == v:
                raise GraphError(f"self-loop at {u!r}")
            if u not in vset or v not in vset:
                raise GraphError(f"edge {u!r}-{v!r} uses an undeclared vertex")
            es.add(frozenset((u, v)))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", frozenset(es))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph, (self.vertices, self.edge_list()))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return set(self.vertices) == set(other.vertices) and self.edges == other.edges

    def __hash__(self):
        return hash((frozenset(self.vertices), self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> dict[str, frozenset[str]]:
        nbrs: dict[str, set[str]] = {v: set() for v in self.vertices}
        for e in self.edges:
            u, v = tuple(e)
            nbrs[u].add(v)
            nbrs[v].add(u)
        return {v: frozenset(s) for v, s in nbrs.items()}

    def has_edge(self, u: str, v: str) -> bool:
        return frozenset((u, v)) in self.edges

    def degree(self, v: str) -> int:
        return len(self.adj[v])

    def degrees(self) -> dict[str, int]:
        return {v: len(self.adj[v]) for v in self.vertices}

    def edge_list(self) -> list[tuple[str, str]]:
        """Edges as pairs ordered by vertex position, sorted."""
        pos = {v: i for i, v in enumerate(self.vertices)}
        pairs = [tuple(sorted(e, key=pos.__getitem__)) for e in self.edges]
        return sorted(pairs, key=lambda p: (pos[p[0]], pos[p[1]]))

    def relabel(self, mapping: dict[str, str]) -> "Graph":
        return Graph(
            [mapping.get(v, v) for v in self.vertices],
            [(mapping.get(u, u), mapping.get(v, v)) for u, v in self.edge_list()],
        )

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(self.vertices)
        G.add_edges_from(self.edge_list())
        return G

    @classmethod
    def from_networkx(cls, G: nx.Graph) -> "Graph":
        return cls([str(v) for v in G.nodes], [(str(u), str(v)) for u, v in G.edges])

    def is_isomorphic(self, other: "Graph") -> bool:
        if self.n != other.n or self.m != other.m:
            return False
        if sorted(self.degrees().values()) != sorted(other.degrees().values()):
            return False
        return nx.is_isomorphic(self.to_networkx(), other.to_networkx())


# ---------------------------------------------------------------------------
# generators


def gen_anticycle(n: int) -> Graph:
    """The anti-cycle A_2n on v1..vn, w1..wn.

    The complement is the 2n-cycle v1 w1 v2 w3 v4 ... which, read along the
    ordering v1 < ... < vn < wn < ... < w1, makes v1w1, v1w2, v2w1, vnwn and
    the pairs v_i w_{i+-1} the only non-edges.
    """
    if n < 3:
        raise GraphError(f"anti-cycle needs n >= 3, got {n}")
    vs = [f"v{i}" for i in range(1, n + 1)]
    ws = [f"w{i}" for i in range(1, n + 1)]
    non_edges = {frozenset(("v1", "w1")), frozenset((f"v{n}", f"w{n}"))}
    for i in range(1, n):
        non_edges.add(frozenset((f"v{i}", f"w{i + 1}")))
        non_edges.add(frozenset((f"v{i + 1}", f"w{i}")))
    verts = vs + ws
    edges = [p for p in combinations(verts, 2) if frozenset(p) not in non_edges]
    return Graph(verts, edges)


def gen_complete_minus_matching(n: int, k: int) -> Graph:
    """K_n minus the matching v1w1, ..., vkwk; other vertices are u1, u2, ..."""
    if k < 0 or 2 * k > n:
        raise GraphError(f"need 0 <= 2k <= n, got n={n}, k={k}")
    verts = [f"v{i}" for i in range(1, k + 1)] + [f"w{i}" for i in range(1, k + 1)]
    verts += [f"u{i}" for i in range(1, n - 2 * k + 1)]
    matching = {frozenset((f"v{i}", f"w{i}")) for i in range(1, k + 1)}
    return Graph(verts, [p for p in combinations(verts, 2) if frozenset(p) not in matching])


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    verts = [str(i) for i in range(1, n + 1)]
    return Graph(verts, [(verts[i], verts[(i + 1) % n]) for i in range(n)])


def gen_path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path needs n >= 1, got {n}")
    verts = [str(i) for i in range(1, n + 1)]
    return Graph(verts, [(verts[i], verts[i + 1]) for i in range(n - 1)])


def gen_complete(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete graph needs n >= 1, got {n}")
    verts = [str(i) for i in range(1, n + 1)]
    return Graph(verts, combinations(verts, 2))


def gen_wheel(n: int) -> Graph:
    """Wheel on n vertices in total: hub ``h`` plus the rim cycle 1..n-1."""
    if n < 4:
        raise GraphError(f"wheel needs n >= 4 vertices, got {n}")
    rim = gen_cycle(n - 1)
    return Graph(("h",) + rim.vertices, rim.edge_list() + [("h", v) for v in rim.vertices])


def gen_fan(n: int) -> Graph:
    """Fan on n vertices in total: hub ``h`` plus the path 1..n-1."""
    if n < 2:
        raise GraphError(f"fan needs n >= 2 vertices, got {n}")
    p = gen_path(n - 1)
    return Graph(("h",) + p.vertices, p.edge_list() + [("h", v) for v in p.vertices])


def gen_grid(r: int, c: int) -> Graph:
    """The r x c grid graph (r*c vertices labelled ``i,j``)."""
    if r < 1 or c < 1:
        raise GraphError(f"grid needs positive dimensions, got {r}x{c}")
    verts = [f"{i},{j}" for i in range(r) for j in range(c)]
    edges = [(f"{i},{j}", f"{i},{j + 1}") for i in range(r) for j in range(c - 1)]
    edges += [(f"{i},{j}", f"{i + 1},{j}") for i in range(r - 1) for j in range(c)]
    return Graph(verts, edges)


_J_EDGES = "s/t t/u u/v v/s w/x x/y y/z z/w s/w s/z t/w t/x u/x u/y v/y v/z"
_K_ATTACH = "y/b y/c v/b v/d w/c w/d u/a u/c x/a x/d z/a z/b"


def _graph_J() -> Graph:
    return Graph("stuvwxyz", [e.split("/") for e in _J_EDGES.split()])


def _graph_K() -> Graph:
    clique = ["a", "b", "c", "d"]
    edges = list(combinations(clique, 2)) + [e.split("/") for e in _K_ATTACH.split()]
    return Graph(clique + list("uvwxyz"), edges)


def _claw() -> Graph:
    return Graph(["l1", "l2", "l3", "h"], [("h", "l1"), ("h", "l2"), ("h", "l3")])


def _bi4wheel() -> Graph:
    # octahedron; the matching 1-6, 2-5, 3-4 is removed
    verts = [str(i) for i in range(1, 7)]
    missing = {frozenset(p) for p in (("1", "6"), ("2", "5"), ("3", "4"))}
    return Graph(verts, [p for p in combinations(verts, 2) if frozenset(p) not in missing])


_FIXED = {"claw": _claw, "bi4wheel": _bi4wheel, "J": _graph_J, "K": _graph_K}
_PARAM = {
    "wheel": (gen_wheel, 1),
    "fan": (gen_fan, 1),
    "cycle": (gen_cycle, 1),
    "path": (gen_path, 1),
    "complete": (gen_complete, 1),
    "grid": (gen_grid, 2),
    "anticycle": (gen_anticycle, 1),
    "complete_minus_matching": (gen_complete_minus_matching, 2),
}
_NAME_RE = re.compile(r"^\s*([A-Za-z_0-9]+)\s*(?:\(([^)]*)\))?\s*$")


def gen_named(name: str, *params: int) -> Graph:
    """Build a corpus graph by name.

    ``name`` is one of claw, bi4wheel, J, K, or a parametrised family
    (wheel, fan, cycle, path, complete, grid, anticycle,
    complete_minus_matching). Parameters may be passed positionally or
    inline, e.g. ``gen_named("grid(3,3)")``.
    """
    m = _NAME_RE.match(name)
    if not m:
        raise GraphError(f"unknown graph name {name!r}")
    key, inline = m.group(1), m.group(2)
    if inline is not None:
        if params:
            raise GraphError("parameters given twice")
        try:
            params = tuple(int(p) for p in inline.split(",") if p.strip())
        except ValueError:
            raise GraphError(f"bad parameters in {name!r}") from None
    if key in _FIXED:
        if params:
            raise GraphError(f"{key} takes no parameters")
        return _FIXED[key]()
    if key not in _PARAM:
        raise GraphError(f"unknown graph name {key!r}")
    fn, arity = _PARAM[key]
    if len(params) != arity:
        raise GraphError(f"{key} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


# ---------------------------------------------------------------------------
# structural queries


def complement(G: Graph) -> Graph:
    return Graph(G.vertices, [p for p in combinations(G.vertices, 2) if not G.has_edge(*p)])


def induced_subgraph(G: Graph, S: Iterable[str]) -> Graph:
    keep = set(S)
    missing = keep - set(G.vertices)
    if missing:
        raise GraphError(f"vertices not in graph: {sorted(missing)}")
    verts = [v for v in G.vertices if v in keep]
    return Graph(verts, [e for e in G.edge_list() if e[0] in keep and e[1] in keep])


def components(G: Graph) -> list[list[str]]:
    """Connected components, each in vertex order, ordered by first vertex."""
    seen: set[str] = set()
    comps = []
    for s in G.vertices:
        if s in seen:
            continue
        stack, comp = [s], {s}
        while stack:
            u = stack.pop()
            for w in G.adj[u]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append([v for v in G.vertices if v in comp])
    return comps


def is_triangle_free(G: Graph) -> bool:
    for e in G.edges:
        u, v = tuple(e)
        if G.adj[u] & G.adj[v]:
            return False
    return True


def is_path_or_cycle(G: Graph) -> bool:
    if G.n == 0 or len(components(G)) != 1:
        return False
    degs = sorted(G.degrees().values())
    if G.n == 1:
        return True
    if all(d == 2 for d in degs):
        return G.n >= 3
    return degs[:2] == [1, 1] and all(d == 2 for d in degs[2:])


def min_maximal_independent_set_size(G: Graph) -> int:
    """Smallest cardinality of a maximal independent set (exhaustive)."""
    if G.n > MAX_MIS_VERTICES:
        raise InstanceTooLarge(
            f"instance too large: {G.n} vertices (limit {MAX_MIS_VERTICES})"
        )
    if G.n == 0:
        return 0
    # maximal independent sets of G are the maximal cliques of its complement
    return min(len(c) for c in nx.find_cliques(complement(G).to_networkx()))


def disjoint_union(*graphs: Graph, prefixes: Iterable[str] | None = None) -> Graph:
    """Disjoint union; labels are prefixed ``g0:``, ``g1:``... unless given."""
    prefixes = list(prefixes) if prefixes is not None else [f"g{i}:" for i in range(len(graphs))]
    verts: list[str] = []
    edges: list[tuple[str, str]] = []
    for p, G in zip(prefixes, graphs):
        verts += [p + v for v in G.vertices]
        edges += [(p + u, p + v) for u, v in G.edge_list()]
    return Graph(verts, edges)


# ---------------------------------------------------------------------------
# file format


def graph_to_dict(G: Graph) -> dict:
    return {"vertices": list(G.vertices), "edges": [list(e) for e in G.edge_list()]}


def graph_from_dict(doc: dict) -> Graph:
    try:
        verts = doc["vertices"]
        raw_edges = doc["edges"]
    except (KeyError, TypeError) as exc:
        raise GraphError(f"graph document missing field {exc}") from None
    if not isinstance(verts, list) or not all(isinstance(v, str) for v in verts):
        raise GraphError("field 'vertices' must be a list of strings")
    if not isinstance(raw_edges, list):
        raise GraphError("field 'edges' must be a list of pairs")
    seen = set()
    for e in raw_edges:
        if not isinstance(e, list) or len(e) != 2 or not all(isinstance(x, str) for x in e):
            raise GraphError(f"field 'edges': {e!r} is not a 2-element string list")
        key = frozenset(e)
        if key in seen:
            raise GraphError(f"field 'edges': duplicate edge {e!r}")
        seen.add(key)
    return Graph(verts, raw_edges)


def save_graph(G: Graph, path) -> None:
    Path(path).write_text(json.dumps(graph_to_dict(G), indent=1) + "\n")


def load_graph(path) -> Graph:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise GraphError(f"{path}: not a valid graph document ({exc})") from None
    return graph_from_dict(doc)
