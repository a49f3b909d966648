"""Explicit dot-product representations and geometric constructions.

Rational constructions (matching families, A6, claw, bi-4-wheel, J in 3-d)
produce exact models.  Cap, arc and disk constructions are float models.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import Mapping

import numpy as np

from .graph import Graph
from .model import DEFAULT_BAND, VectorModel

__all__ = [
    "GeometryError",
    "CapSet",
    "ArcSet",
    "DiskSet",
    "rep_matching_paper",
    "rep_complete_minus_matching",
    "rep_anticycle6",
    "rep_claw",
    "rep_bi4wheel",
    "rep_J_3d",
    "caps_to_model",
    "arcs_to_model",
    "disks_to_model",
    "caps_intersection_graph",
    "arcs_intersection_graph",
    "disks_intersection_graph",
    "inverse_stereographic",
    "fig1_J_arcs",
    "load_geometry",
    "save_geometry",
]

F = Fraction
TWO_PI = 2 * math.pi
EPS_FLOOR = 2.0 ** -40


class GeometryError(ValueError):
    pass


# ---------------------------------------------------------------------------
# rational constructions


def _b_pow2(k: int) -> int:
    return 2**k - 1


def rep_matching_paper(m: int) -> VectorModel:
    """The literal matching construction with b(k) = 2^k - 1.

    Only m = 1 is a valid representation of K_2m minus a perfect matching:
    b(0) = 0 makes v1 = (1, 0), and then v1 . vj = 1/b(j) < 1 for j >= 2.
    Use :func:`rep_complete_minus_matching` for a working model.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    b = _b_pow2
    vecs = {}
    for i in range(1, m + 1):
        vecs[f"v{i}"] = (F(1, b(i)), F(b(i - 1)))
    for i in range(1, m + 1):
        vecs[f"w{i}"] = (F(b(i - 1)), F(1, b(i)))
    return VectorModel.build(vecs, 1)


def rep_complete_minus_matching(m: int, extra: int = 0) -> VectorModel:
    """Exact 2-d model of K_(2m+extra) minus the matching v1w1..vmwm.

    v_i = (3^-i, 3^(i-1)) and w_i = (3^(i-1), 3^-i) give v_i . w_i = 2/3 and
    at least 1 for every other pair; the extra vertices u1.. sit at (1, 1).
    """
    if m < 1 or extra < 0:
        raise ValueError(f"need m >= 1 and extra >= 0, got m={m}, extra={extra}")
    vecs = {}
    for i in range(1, m + 1):
        vecs[f"v{i}"] = (F(1, 3**i), F(3 ** (i - 1)))
    for i in range(1, m + 1):
        vecs[f"w{i}"] = (F(3 ** (i - 1)), F(1, 3**i))
    for j in range(1, extra + 1):
        vecs[f"u{j}"] = (F(1), F(1))
    return VectorModel.build(vecs, 1)


def rep_anticycle6() -> VectorModel:
    vecs = {
        "v1": (F(5), F(0)),
        "v2": (F(3), F(1, 6)),
        "v3": (F(1, 2), F(1, 4)),
        "w3": (F(1, 4), F(1, 2)),
        "w2": (F(1, 6), F(3)),
        "w1": (F(0), F(5)),
    }
    return VectorModel.build(vecs, 1)


def rep_claw() -> VectorModel:
    vecs = {"l1": (1, 1), "l2": (1, 1), "l3": (1, 1), "h": (2, 2)}
    return VectorModel.build(vecs, 3)


def rep_bi4wheel() -> VectorModel:
    pts = [(0, 5), (F(1, 5), 2), (F(1, 2), F(1, 2)), (F(1, 2), F(1, 2)), (2, F(1, 5)), (5, 0)]
    return VectorModel.build({str(i + 1): p for i, p in enumerate(pts)}, 1)


def rep_J_3d() -> VectorModel:
    # x and z are swapped relative to the order the vectors are usually listed
    # in; with that order x would meet s and v instead of t and u.
    vecs = {
        "s": (2, 0, 1),
        "t": (0, 2, 1),
        "u": (-2, 0, 1),
        "v": (0, -2, 1),
        "w": (1, 1, -1),
        "x": (-1, 1, -1),
        "y": (-1, -1, -1),
        "z": (1, -1, -1),
    }
    return VectorModel.build(vecs, 1)


# ---------------------------------------------------------------------------
# geometric inputs


@dataclass(frozen=True)
class CapSet:
    """Unit caps on S^k: unit centres in R^(k+1) and a shared angular diameter."""

    centres: Mapping[str, tuple]
    theta: float

    def __post_init__(self):
        if not self.centres:
            raise GeometryError("cap set is empty")
        if not 0 <= self.theta < math.pi / 2:
            raise GeometryError(f"theta must lie in [0, pi/2), got {self.theta}")
        dims = {len(c) for c in self.centres.values()}
        if len(dims) != 1 or dims.pop() < 2:
            raise GeometryError("cap centres must share one dimension >= 2")
        for k, c in self.centres.items():
            if abs(math.sqrt(sum(x * x for x in c)) - 1) > 1e-12:
                raise GeometryError(f"centre of cap {k!r} is not a unit vector")

    @property
    def labels(self) -> list[str]:
        return list(self.centres)

    def matrix(self) -> np.ndarray:
        return np.array([self.centres[k] for k in self.labels], dtype=float)


@dataclass(frozen=True)
class ArcSet:
    """Arcs of common angular width on the unit circle, given by centre angle."""

    centres: Mapping[str, float]
    width: float

    def __post_init__(self):
        if not self.centres:
            raise GeometryError("arc set is empty")
        if not 0 < self.width < math.pi:
            raise GeometryError(f"arc width must lie in (0, pi), got {self.width}")

    @property
    def labels(self) -> list[str]:
        return list(self.centres)


@dataclass(frozen=True)
class DiskSet:
    """Radius-1 disks in the plane, given by centre."""

    centres: Mapping[str, tuple]

    def __post_init__(self):
        if not self.centres:
            raise GeometryError("disk set is empty")
        pts = [tuple(map(float, c)) for c in self.centres.values()]
        if any(len(p) != 2 for p in pts):
            raise GeometryError("disk centres must be points in the plane")
        if len(set(pts)) != len(pts):
            raise GeometryError("disk centres must be pairwise distinct")

    @property
    def labels(self) -> list[str]:
        return list(self.centres)

    def matrix(self) -> np.ndarray:
        return np.array([self.centres[k] for k in self.labels], dtype=float)


def _pair_angles(C: np.ndarray) -> np.ndarray:
    """Angles between unit rows; atan2 form keeps small angles accurate."""
    G = np.clip(C @ C.T, -1.0, 1.0)
    sq = np.einsum("ij,ij->i", C, C)
    cross2 = np.maximum(sq[:, None] * sq[None, :] - (C @ C.T) ** 2, 0.0)
    return np.arctan2(np.sqrt(cross2), G)


def _circ_dist(a: float, b: float) -> float:
    d = abs(a - b) % TWO_PI
    return min(d, TWO_PI - d)


def caps_intersection_graph(C: CapSet, band: float = DEFAULT_BAND) -> Graph:
    """Closed caps of angular diameter theta meet iff their centres are within theta."""
    A = _pair_angles(C.matrix())
    labels = C.labels
    n = len(labels)
    return Graph(labels, [(labels[i], labels[j]) for i, j in combinations(range(n), 2) if A[i, j] <= C.theta + band])


def arcs_intersection_graph(A: ArcSet, band: float = DEFAULT_BAND) -> Graph:
    labels = A.labels
    edges = [
        (u, v) for u, v in combinations(labels, 2)
        if _circ_dist(A.centres[u], A.centres[v]) <= A.width + band
    ]
    return Graph(labels, edges)


def disks_intersection_graph(D: DiskSet, band: float = DEFAULT_BAND) -> Graph:
    labels = D.labels
    P = D.matrix()
    edges = [
        (labels[i], labels[j]) for i, j in combinations(range(len(labels)), 2)
        if math.dist(P[i], P[j]) <= 2 + band
    ]
    return Graph(labels, edges)


def caps_to_model(C: CapSet) -> VectorModel:
    """Scale every centre by 1/sqrt(cos theta); threshold 1."""
    s = 1.0 / math.sqrt(math.cos(C.theta))
    return VectorModel.build({k: tuple(float(x) * s for x in c) for k, c in C.centres.items()}, 1.0)


def arcs_to_model(A: ArcSet) -> VectorModel:
    """Treat each arc as a cap on S^1 with angular diameter equal to its width."""
    if A.width >= math.pi / 2:
        raise GeometryError(
            f"arc width {A.width:.6g} >= pi/2: each unit arc must cover less than a "
            "quarter of the circle for the cap construction"
        )
    caps = CapSet({k: (math.cos(a), math.sin(a)) for k, a in A.centres.items()}, A.width)
    return caps_to_model(caps)


def inverse_stereographic(P: np.ndarray, eps: float) -> np.ndarray:
    """Map plane points to S^2 after scaling by eps; the origin goes to the south pole."""
    P = np.asarray(P, dtype=float)
    r2 = eps * eps * np.einsum("ij,ij->i", P, P)
    out = np.empty((len(P), 3))
    out[:, 0] = 2 * eps * P[:, 0]
    out[:, 1] = 2 * eps * P[:, 1]
    out[:, 2] = r2 - 1
    return out / (r2 + 1)[:, None]


def disks_to_model(D: DiskSet, band: float = DEFAULT_BAND) -> VectorModel:
    """3-d model of a unit disk graph via caps on S^2.

    Centres are translated to the bounding-box midpoint, then pushed onto the
    sphere with a scale eps that is halved from 1 until every intersecting
    pair subtends a smaller angle than every disjoint pair.  The common cap
    diameter is the midpoint of that gap.
    """
    G = disks_intersection_graph(D, band=0.0)
    labels = D.labels
    P = D.matrix()
    P = P - (P.min(axis=0) + P.max(axis=0)) / 2
    n = len(labels)
    iu = np.triu_indices(n, 1)
    dist = np.linalg.norm(P[:, None, :] - P[None, :, :], axis=-1)[iu]
    is_edge = dist <= 2.0
    if np.any((np.abs(dist - 2.0) < band) & ~is_edge):
        raise GeometryError("disks are tangent-degenerate: a disjoint pair sits within the boundary band")

    eps = 1.0
    while True:
        S = inverse_stereographic(P, eps)
        ang = _pair_angles(S)[iu]
        max_e = ang[is_edge].max() if is_edge.any() else 0.0
        min_n = ang[~is_edge].min() if (~is_edge).any() else math.pi / 2
        theta = 0.5 * (max_e + min_n)
        if max_e < min_n and theta < math.pi / 2:
            break
        eps /= 2
        if eps < EPS_FLOOR:
            raise GeometryError(
                "could not separate intersecting from disjoint pairs (input too close to tangent)"
            )
    caps = CapSet({k: tuple(S[i] / np.linalg.norm(S[i])) for i, k in enumerate(labels)}, float(theta))
    M = caps_to_model(caps)
    assert set(M.labels) == set(G.vertices)
    return M


def fig1_J_arcs() -> ArcSet:
    """The unit circular-arc layout of J: eight 105-degree arcs.

    s, t, u, v start at 0, 90, 180, 270 degrees; w, x, y, z start at 127.5,
    37.5, -52.5, 217.5 degrees, matched to labels so the intersection graph
    is J itself (not merely isomorphic).
    """
    width = math.radians(105)
    half = width / 2
    starts = {"s": 0, "t": 90, "u": 180, "v": 270}
    blue = [127.5, 37.5, -52.5, 217.5]
    # each blue arc must meet exactly the two red arcs J prescribes
    reds = {k: (math.radians(a) + half) % TWO_PI for k, a in starts.items()}
    want = {"w": {"s", "t"}, "x": {"t", "u"}, "y": {"u", "v"}, "z": {"v", "s"}}
    blues = {}
    for b in blue:
        c = (math.radians(b) + half) % TWO_PI
        meets = {k for k, rc in reds.items() if _circ_dist(c, rc) <= width}
        label = next(k for k, s in want.items() if s == meets)
        blues[label] = c
    return ArcSet({**reds, **{k: blues[k] for k in "wxyz"}}, width)


# ---------------------------------------------------------------------------
# file format


def geometry_to_dict(obj) -> dict:
    if isinstance(obj, CapSet):
        return {"kind": "caps", "theta": obj.theta, "entries": [[k, *map(float, c)] for k, c in obj.centres.items()]}
    if isinstance(obj, ArcSet):
        return {"kind": "arcs", "width": obj.width, "entries": [[k, float(a)] for k, a in obj.centres.items()]}
    if isinstance(obj, DiskSet):
        return {"kind": "disks", "entries": [[k, *map(float, c)] for k, c in obj.centres.items()]}
    raise TypeError(f"not a geometry object: {obj!r}")


def geometry_from_dict(doc: dict):
    if not isinstance(doc, dict) or "kind" not in doc:
        raise GeometryError("geometry document missing field 'kind'")
    kind = doc["kind"]
    entries = doc.get("entries")
    if not isinstance(entries, list):
        raise GeometryError("field 'entries' must be a list")
    parsed: dict[str, tuple] = {}
    for e in entries:
        if not isinstance(e, list) or len(e) < 2 or not isinstance(e[0], str):
            raise GeometryError(f"field 'entries': bad entry {e!r}")
        if e[0] in parsed:
            raise GeometryError(f"field 'entries': duplicate label {e[0]!r}")
        try:
            parsed[e[0]] = tuple(float(x) for x in e[1:])
        except (TypeError, ValueError):
            raise GeometryError(f"field 'entries': non-numeric coordinate in {e!r}") from None
    if kind == "caps":
        if "theta" not in doc:
            raise GeometryError("caps document missing field 'theta'")
        return CapSet(parsed, float(doc["theta"]))
    if kind == "arcs":
        if "width" not in doc:
            raise GeometryError("arcs document missing field 'width'")
        if any(len(v) != 1 for v in parsed.values()):
            raise GeometryError("field 'entries': arcs take one angle each")
        return ArcSet({k: v[0] for k, v in parsed.items()}, float(doc["width"]))
    if kind == "disks":
        return DiskSet(parsed)
    raise GeometryError(f"field 'kind': unknown geometry kind {kind!r}")


def save_geometry(obj, path) -> None:
    Path(path).write_text(json.dumps(geometry_to_dict(obj), indent=1) + "\n")


def load_geometry(path):
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise GeometryError(f"{path}: not a valid geometry document ({exc})") from None
    return geometry_from_dict(doc)
