"""Vector models, the dot-product edge rule, and 2-d angular analysis.

Every model is homogeneous in its scalar kind: either all entries are exact
rationals (:class:`fractions.Fraction`) or all are floats.  Exact models are
compared with zero tolerance.  Float models classify pairs with the closed
rule ``dot >= t`` but pairs with ``|dot - t| < band`` are boundary pairs and
are reported separately.
"""

from __future__ import annotations

import json
import logging
import math
import numbers
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import Iterable, Mapping, Sequence, Union

from .graph import Graph, GraphError

__all__ = [
    "ModelError",
    "ModeMixError",
    "VectorModel",
    "Violation",
    "VerificationReport",
    "DEFAULT_BAND",
    "dot",
    "induced_graph",
    "boundary_pairs",
    "verify_model",
    "scale_model",
    "normalize_threshold",
    "angular_order",
    "is_between",
    "load_model",
    "save_model",
]

log = logging.getLogger(__name__)

DEFAULT_BAND = 1e-9

Scalar = Union[Fraction, float]


class ModelError(ValueError):
    pass


class ModeMixError(ModelError):
    pass


def _coerce(values: Iterable, exact: bool | None) -> tuple[list, bool]:
    """Convert to a homogeneous scalar list; ints follow the other entries."""
    vals = list(values)
    kinds = set()
    for x in vals:
        if isinstance(x, bool):
            raise ModelError(f"boolean is not a scalar: {x!r}")
        if isinstance(x, (Fraction, numbers.Integral)):
            if not isinstance(x, numbers.Integral):
                kinds.add("exact")
        elif isinstance(x, numbers.Real):
            kinds.add("float")
        else:
            raise ModelError(f"not a real scalar: {x!r}")
    if len(kinds) > 1:
        raise ModeMixError("model mixes exact rationals and floats")
    if exact is None:
        exact = kinds != {"float"}
    elif kinds and (("exact" in kinds) != exact):
        raise ModeMixError("model mixes exact rationals and floats")
    if exact:
        return [Fraction(x) for x in vals], True
    return [float(x) for x in vals], False


@dataclass(frozen=True)
class VectorModel:
    """d-dimensional vectors per vertex plus a positive threshold.

    Build with ``VectorModel.build(vectors, threshold)`` to get coercion and
    validation; the dataclass fields are already normalized.
    """

    dim: int
    threshold: Scalar
    vectors: Mapping[str, tuple]
    exact: bool

    @classmethod
    def build(cls, vectors: Mapping[str, Sequence], threshold=1, dim: int | None = None) -> "VectorModel":
        if not vectors:
            raise ModelError("vertex set is empty")
        items = [(str(k), list(v)) for k, v in vectors.items()]
        if dim is None:
            dim = len(items[0][1])
        if dim < 1:
            raise ModelError("dimension must be positive")
        flat = [threshold] + [x for _, v in items for x in v]
        for k, v in items:
            if len(v) != dim:
                raise ModelError(f"vector of {k!r} has length {len(v)}, expected {dim}")
        coerced, exact = _coerce(flat, None)
        t = coerced[0]
        if not t > 0:
            raise ModelError(f"threshold must be positive, got {t}")
        vecs = {}
        i = 1
        for k, _ in items:
            vecs[k] = tuple(coerced[i : i + dim])
            i += dim
        return cls(dim=dim, threshold=t, vectors=vecs, exact=exact)

    @property
    def labels(self) -> list[str]:
        return list(self.vectors)

    def __len__(self):
        return len(self.vectors)

    def dot(self, u: str, v: str) -> Scalar:
        return dot(self.vectors[u], self.vectors[v])

    def dots(self) -> dict[tuple[str, str], Scalar]:
        return {(u, v): self.dot(u, v) for u, v in combinations(self.labels, 2)}


def dot(a: Sequence, b: Sequence):
    if len(a) != len(b):
        raise ModelError("dimension mismatch")
    if a and (isinstance(a[0], float) != isinstance(b[0], float)):
        raise ModeMixError("dot product of exact and float vectors")
    if a and isinstance(a[0], float):
        return math.fsum(x * y for x, y in zip(a, b))
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def boundary_pairs(M: VectorModel, band: float = DEFAULT_BAND) -> list[tuple[str, str]]:
    """Float-model pairs whose dot lies within ``band`` of the threshold."""
    if M.exact:
        return []
    t = M.threshold
    return [p for p, d in M.dots().items() if abs(d - t) < band]


def induced_graph(M: VectorModel, band: float = DEFAULT_BAND) -> Graph:
    """Graph with an edge exactly where the dot product reaches the threshold.

    Float models treat boundary pairs as touching (edge), matching the closed
    geometric oracles, and log each one as a warning; :func:`boundary_pairs`
    lists them.
    """
    t = M.threshold
    if M.exact:
        edges = [p for p, d in M.dots().items() if d >= t]
    else:
        edges = [p for p, d in M.dots().items() if d > t - band]
        amb = boundary_pairs(M, band)
        if amb:
            log.warning("%d boundary pair(s) within %.1e of threshold: %s", len(amb), band, amb[:5])
    return Graph(M.labels, edges)


@dataclass(frozen=True)
class Violation:
    pair: tuple[str, str]
    expected_edge: bool
    dot: Scalar


@dataclass
class VerificationReport:
    """Outcome of checking a model against a graph.

    ``min_edge_margin`` is min over edges of dot - t and
    ``min_nonedge_deficit`` is min over non-edges of t - dot; either is None
    when the graph has no pair of that kind.  Boundary pairs (float models
    only) make the verdict ``"boundary-ambiguous"`` unless a clear violation
    already rejects the model.
    """

    verdict: str
    violations: list[Violation]
    min_edge_margin: Scalar | None
    min_nonedge_deficit: Scalar | None
    edge_margin_pair: tuple[str, str] | None = None
    nonedge_deficit_pairs: list[tuple[str, str]] = field(default_factory=list)
    boundary: list[tuple[str, str]] = field(default_factory=list)
    exact: bool = True

    @property
    def accepted(self) -> bool:
        return self.verdict == "accept"

    def to_dict(self) -> dict:
        fmt = _fmt_scalar
        return {
            "verdict": self.verdict,
            "exact": self.exact,
            "min_edge_margin": None if self.min_edge_margin is None else fmt(self.min_edge_margin),
            "edge_margin_pair": self.edge_margin_pair and list(self.edge_margin_pair),
            "min_nonedge_deficit": None if self.min_nonedge_deficit is None else fmt(self.min_nonedge_deficit),
            "nonedge_deficit_pairs": [list(p) for p in self.nonedge_deficit_pairs],
            "violations": [
                {"pair": list(v.pair), "expected": "edge" if v.expected_edge else "non-edge", "dot": fmt(v.dot)}
                for v in self.violations
            ],
            "boundary_pairs": [list(p) for p in self.boundary],
        }


def verify_model(M: VectorModel, G: Graph, band: float = DEFAULT_BAND) -> VerificationReport:
    """Check that ``M`` induces exactly ``G``; every misclassified pair is listed."""
    if set(M.labels) != set(G.vertices):
        extra = sorted(set(M.labels) - set(G.vertices))
        missing = sorted(set(G.vertices) - set(M.labels))
        raise GraphError(f"vertex sets differ (model only: {extra}, graph only: {missing})")
    t = M.threshold
    violations = []
    edge_margin = nonedge_def = None
    edge_pair = None
    def_pairs: list[tuple[str, str]] = []
    boundary = []
    for u, v in combinations(G.vertices, 2):
        d = M.dot(u, v)
        is_edge = G.has_edge(u, v)
        if not M.exact and abs(d - t) < band:
            boundary.append((u, v))
        if is_edge:
            margin = d - t
            if edge_margin is None or margin < edge_margin:
                edge_margin, edge_pair = margin, (u, v)
            if margin < 0 and (M.exact or margin <= -band):
                violations.append(Violation((u, v), True, d))
        else:
            deficit = t - d
            if nonedge_def is None or deficit < nonedge_def:
                nonedge_def, def_pairs = deficit, [(u, v)]
            elif deficit == nonedge_def:
                def_pairs.append((u, v))
            if deficit <= 0 and (M.exact or deficit <= -band):
                violations.append(Violation((u, v), False, d))
    if violations:
        verdict = "reject"
    elif boundary:
        verdict = "boundary-ambiguous"
    else:
        verdict = "accept"
    return VerificationReport(
        verdict=verdict,
        violations=violations,
        min_edge_margin=edge_margin,
        min_nonedge_deficit=nonedge_def,
        edge_margin_pair=edge_pair,
        nonedge_deficit_pairs=def_pairs,
        boundary=boundary,
        exact=M.exact,
    )


def _as_scalar(M: VectorModel, lam):
    if M.exact:
        if isinstance(lam, float):
            raise ModeMixError("exact model needs a rational scale factor")
        return Fraction(lam)
    return float(lam)


def scale_model(M: VectorModel, lam) -> VectorModel:
    """Multiply every vector by ``lam`` and the threshold by ``lam**2``."""
    lam = _as_scalar(M, lam)
    if not lam > 0:
        raise ModelError(f"scale factor must be positive, got {lam}")
    vecs = {k: tuple(lam * x for x in v) for k, v in M.vectors.items()}
    return VectorModel(M.dim, M.threshold * lam * lam, vecs, M.exact)


def _rational_sqrt(q: Fraction) -> Fraction | None:
    p, r = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if p * p == q.numerator and r * r == q.denominator:
        return Fraction(p, r)
    return None


def normalize_threshold(M: VectorModel) -> VectorModel:
    """Equivalent model with threshold 1.

    Exact models stay exact only when the threshold is a rational square;
    otherwise a :class:`ModelError` is raised and the caller should either
    pick a rational :func:`scale_model` factor or switch to floats.
    """
    if M.exact:
        root = _rational_sqrt(M.threshold)
        if root is None:
            raise ModelError(f"sqrt({M.threshold}) is irrational; threshold 1 needs a float model")
        return scale_model(M, 1 / root)
    return scale_model(M, 1.0 / math.sqrt(M.threshold))


def to_float(M: VectorModel) -> VectorModel:
    vecs = {k: tuple(float(x) for x in v) for k, v in M.vectors.items()}
    return VectorModel(M.dim, float(M.threshold), vecs, False)


# ---------------------------------------------------------------------------
# 2-d angular analysis


def _cross(a, b):
    return a[0] * b[1] - a[1] * b[0]


def _half(v) -> int:
    # 0 for angles in [0, pi), 1 for [pi, 2pi)
    return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1


def _cmp_angle(a, b) -> int:
    ha, hb = _half(a), _half(b)
    if ha != hb:
        return -1 if ha < hb else 1
    c = _cross(a, b)
    if c > 0:
        return -1
    if c < 0:
        return 1
    return 0


def _require_2d(M: VectorModel):
    if M.dim != 2:
        raise ModelError(f"angular analysis needs a 2-dimensional model, got dim={M.dim}")


def angular_order(M: VectorModel) -> tuple[list[str], bool]:
    """Vertices sorted by polar angle, and whether a closed half-plane holds them all.

    When a half-plane exists the order starts right after the first angular
    gap of at least pi (an empty open half-plane); otherwise it starts at
    angle 0.  Equal directions keep model order.  Exact for rational models.
    """
    from functools import cmp_to_key

    _require_2d(M)
    for k, v in M.vectors.items():
        if v[0] == 0 and v[1] == 0:
            raise ModelError(f"zero vector at {k!r}")
    labels = sorted(M.labels, key=cmp_to_key(lambda a, b: _cmp_angle(M.vectors[a], M.vectors[b])))
    vs = [M.vectors[k] for k in labels]
    n = len(labels)
    if all(_cross(vs[0], v) == 0 and dot(vs[0], v) > 0 for v in vs):
        return labels, True
    start = None
    for i in range(n):
        a, b = vs[i], vs[(i + 1) % n]
        c = _cross(a, b)
        if c < 0 or (c == 0 and dot(a, b) < 0):
            start = (i + 1) % n
            break
    if start is None:
        return labels, False
    return labels[start:] + labels[:start], True


def is_between(M: VectorModel, a: str, b: str, c: str) -> bool:
    """True iff the vector of ``b`` is a nonnegative combination of those of ``a`` and ``c``."""
    _require_2d(M)
    va, vb, vc = M.vectors[a], M.vectors[b], M.vectors[c]
    for k, v in ((a, va), (b, vb), (c, vc)):
        if v[0] == 0 and v[1] == 0:
            raise ModelError(f"betweenness undefined: zero vector at {k!r}")
    s = _cross(va, vc)
    if s == 0:
        if dot(va, vc) < 0:
            raise ModelError(f"betweenness undefined: {a!r} and {c!r} are antiparallel")
        return _cross(va, vb) == 0 and dot(va, vb) > 0
    if s < 0:
        va, vc, s = vc, va, -s
    return _cross(va, vb) >= 0 and _cross(vb, vc) >= 0


# ---------------------------------------------------------------------------
# file format


def _fmt_scalar(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return float(x)


def _parse_scalar(x, where: str):
    if isinstance(x, bool):
        raise ModelError(f"field {where!r}: booleans are not scalars")
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            raise ModelError(f"field {where!r}: bad rational {x!r}") from None
    if isinstance(x, (int, float)):
        return float(x)
    raise ModelError(f"field {where!r}: not a scalar: {x!r}")


def model_to_dict(M: VectorModel) -> dict:
    return {
        "dim": M.dim,
        "t": _fmt_scalar(M.threshold),
        "vectors": {k: [_fmt_scalar(x) for x in v] for k, v in M.vectors.items()},
    }


def model_from_dict(doc: dict) -> VectorModel:
    if not isinstance(doc, dict):
        raise ModelError("model document must be an object")
    for key in ("dim", "t", "vectors"):
        if key not in doc:
            raise ModelError(f"model document missing field {key!r}")
    dim = doc["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ModelError("field 'dim' must be a positive integer")
    if not isinstance(doc["vectors"], dict):
        raise ModelError("field 'vectors' must map labels to lists")
    t = _parse_scalar(doc["t"], "t")
    vecs = {}
    for k, v in doc["vectors"].items():
        if not isinstance(v, list):
            raise ModelError(f"field 'vectors.{k}' must be a list")
        vecs[k] = [_parse_scalar(x, f"vectors.{k}") for x in v]
    kinds = {isinstance(t, Fraction)} | {isinstance(x, Fraction) for v in vecs.values() for x in v}
    if len(kinds) > 1:
        raise ModeMixError("field 'vectors'/'t': exact (\"p/q\") and decimal scalars are mixed")
    return VectorModel.build(vecs, t, dim=dim)


def save_model(M: VectorModel, path) -> None:
    Path(path).write_text(json.dumps(model_to_dict(M), indent=1) + "\n")


def load_model(path) -> VectorModel:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ModelError(f"{path}: not a valid model document ({exc})") from None
    return model_from_dict(doc)
