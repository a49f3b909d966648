import math
from fractions import Fraction as F
from itertools import combinations

import numpy as np
import pytest

from dotgraph.constructors import (
    ArcSet,
    CapSet,
    DiskSet,
    GeometryError,
    arcs_intersection_graph,
    arcs_to_model,
    caps_intersection_graph,
    caps_to_model,
    disks_intersection_graph,
    disks_to_model,
    fig1_J_arcs,
    geometry_from_dict,
    geometry_to_dict,
    inverse_stereographic,
    load_geometry,
    rep_anticycle6,
    rep_bi4wheel,
    rep_claw,
    rep_complete_minus_matching,
    rep_J_3d,
    rep_matching_paper,
    save_geometry,
)
from dotgraph.graph import (
    gen_anticycle,
    gen_complete_minus_matching,
    gen_cycle,
    gen_named,
    gen_path,
    gen_wheel,
)
from dotgraph.model import induced_graph, verify_model


class TestMatching:
    def test_pow2_m1(self):
        M = rep_matching_paper(1)
        assert M.vectors == {"v1": (1, 0), "w1": (0, 1)}
        assert verify_model(M, gen_complete_minus_matching(2, 1)).accepted

    def test_pow2_m2_fails(self):
        M = rep_matching_paper(2)
        assert M.vectors["v1"] == (1, 0) and M.vectors["v2"] == (F(1, 3), 1)
        assert M.dot("v1", "v2") == F(1, 3)
        rep = verify_model(M, gen_complete_minus_matching(4, 2))
        assert rep.verdict == "reject"
        assert ("v1", "v2") in [v.pair for v in rep.violations]

    @pytest.mark.parametrize("m", range(1, 9))
    def test_pow2_matched_pairs_below_one(self, m):
        M = rep_matching_paper(m)
        for i in range(1, m + 1):
            assert M.dot(f"v{i}", f"w{i}") == F(2**i - 2, 2**i - 1) < 1

    @pytest.mark.parametrize("m", range(2, 11))
    def test_pow2_failure_is_localized(self, m):
        rep = verify_model(rep_matching_paper(m), gen_complete_minus_matching(2 * m, m))
        assert rep.violations
        for v in rep.violations:
            a, b = sorted(v.pair)
            assert v.expected_edge
            assert (a == "v1" and b.startswith("v")) or (a == "w1" and b.startswith("w"))

    def test_corrected_m1(self):
        M = rep_complete_minus_matching(1)
        assert M.vectors == {"v1": (F(1, 3), 1), "w1": (1, F(1, 3))}
        assert M.dot("v1", "w1") == F(2, 3)
        assert verify_model(M, gen_complete_minus_matching(2, 1)).accepted

    def test_corrected_m2_pairs(self):
        M = rep_complete_minus_matching(2)
        assert M.vectors["v2"] == (F(1, 9), 3) and M.vectors["w2"] == (3, F(1, 9))
        assert M.dot("v2", "w2") == F(2, 3)
        assert M.dot("v1", "v2") == F(1, 27) + 3
        assert M.dot("v1", "w2") == 1 + F(1, 9)
        assert verify_model(M, gen_complete_minus_matching(4, 2)).accepted

    def test_corrected_extra(self):
        M = rep_complete_minus_matching(1, 2)
        assert M.vectors["u1"] == M.vectors["u2"] == (1, 1)
        assert verify_model(M, gen_complete_minus_matching(4, 1)).accepted

    @pytest.mark.parametrize("m", [1, 2, 5, 12, 20])
    @pytest.mark.parametrize("extra", [0, 5])
    def test_corrected_family(self, m, extra):
        rep = verify_model(rep_complete_minus_matching(m, extra), gen_complete_minus_matching(2 * m + extra, m))
        assert rep.accepted and rep.exact


class TestFixed:
    def test_a6(self):
        assert verify_model(rep_anticycle6(), gen_anticycle(3)).accepted

    def test_claw(self):
        M = rep_claw()
        assert M.threshold == 3
        assert verify_model(M, gen_named("claw")).accepted

    def test_bi4wheel(self):
        assert verify_model(rep_bi4wheel(), gen_named("bi4wheel")).accepted

    def test_J_3d(self):
        M = rep_J_3d()
        assert M.dot("s", "w") == 1 and M.dot("s", "u") == -3 and M.dot("w", "y") == -1
        J = gen_named("J")
        # all 28 pairs, evaluated directly
        for u, v in combinations(J.vertices, 2):
            d = sum(x * y for x, y in zip(M.vectors[u], M.vectors[v]))
            assert (d >= 1) == J.has_edge(u, v), (u, v, d)
        assert verify_model(M, J).accepted

    def test_J_naive_correspondence_only_isomorphic(self):
        naive = [(2, 0, 1), (0, 2, 1), (-2, 0, 1), (0, -2, 1), (1, 1, -1), (1, -1, -1), (-1, -1, -1), (-1, 1, -1)]
        from dotgraph.model import VectorModel

        M = VectorModel.build(dict(zip("stuvwxyz", naive)), 1)
        J = gen_named("J")
        assert not verify_model(M, J).accepted
        assert induced_graph(M).is_isomorphic(J)


class TestCaps:
    def test_touching(self):
        th = 0.7
        C = CapSet({"a": (1.0, 0.0), "b": (math.cos(th), math.sin(th))}, th)
        M = caps_to_model(C)
        assert math.isclose(M.dot("a", "b"), 1.0, rel_tol=1e-12)
        assert induced_graph(M).has_edge("a", "b")
        assert caps_intersection_graph(C).has_edge("a", "b")

    def test_orthogonal(self):
        C = CapSet({"a": (1.0, 0.0), "b": (0.0, 1.0)}, math.pi / 3)
        M = caps_to_model(C)
        assert abs(M.dot("a", "b")) < 1e-15
        assert induced_graph(M).m == 0

    def test_single(self):
        G = induced_graph(caps_to_model(CapSet({"a": (0.0, 0.0, 1.0)}, 0.3)))
        assert G.n == 1 and G.m == 0

    def test_antipodal_disjoint(self):
        C = CapSet({"a": (1.0, 0.0), "b": (-1.0, 0.0)}, 1.0)
        assert caps_intersection_graph(C).m == 0

    def test_theta_range(self):
        with pytest.raises(GeometryError):
            CapSet({"a": (1.0, 0.0)}, math.pi / 2)
        with pytest.raises(GeometryError):
            CapSet({"a": (2.0, 0.0)}, 0.5)

    @pytest.mark.parametrize("seed", range(40))
    def test_random_equivalence(self, seed):
        rng = np.random.default_rng(seed)
        k = 1 + seed % 2
        n = int(rng.integers(2, 26))
        X = rng.normal(size=(n, k + 1))
        X /= np.linalg.norm(X, axis=1)[:, None]
        theta = float(rng.uniform(0.1, 1.4))
        C = CapSet({f"c{i}": tuple(X[i]) for i in range(n)}, theta)
        M = caps_to_model(C)
        rep = verify_model(M, caps_intersection_graph(C))
        assert rep.verdict in ("accept", "boundary-ambiguous")
        if rep.verdict == "accept":
            assert induced_graph(M) == caps_intersection_graph(C)


class TestArcs:
    def test_c8(self):
        A = ArcSet({str(i): 2 * math.pi * i / 8 for i in range(8)}, math.pi / 4)
        G = arcs_intersection_graph(A)
        assert G.is_isomorphic(gen_cycle(8))
        assert induced_graph(arcs_to_model(A)) == G

    def test_c5(self):
        A = ArcSet({str(i): 2 * math.pi * i / 5 for i in range(5)}, 2 * math.pi / 5)
        assert arcs_intersection_graph(A).is_isomorphic(gen_cycle(5))
        assert induced_graph(arcs_to_model(A)).is_isomorphic(gen_cycle(5))

    def test_single(self):
        assert induced_graph(arcs_to_model(ArcSet({"a": 1.0}, 0.5))).n == 1

    def test_wide_rejected(self):
        with pytest.raises(GeometryError, match="quarter"):
            arcs_to_model(ArcSet({"a": 0.0}, math.pi / 2))

    def test_fig1_is_J(self):
        A = fig1_J_arcs()
        assert math.isclose(math.degrees(A.width), 105)
        assert arcs_intersection_graph(A) == gen_named("J")
        with pytest.raises(GeometryError):
            arcs_to_model(A)


class TestDisks:
    def test_p3(self):
        D = DiskSet({"a": (0, 0), "b": (2, 0), "c": (4, 0)})
        G = disks_intersection_graph(D)
        assert G == gen_path(3).relabel({"1": "a", "2": "b", "3": "c"})
        M = disks_to_model(D)
        assert M.dim == 3
        assert verify_model(M, G).accepted

    def test_complete(self):
        D = DiskSet({"a": (0, 0), "b": (1, 0), "c": (0.5, 0.5)})
        M = disks_to_model(D)
        assert induced_graph(M).m == 3

    def test_wheel6(self):
        r = 1.5
        centres = {"h": (0.0, 0.0)}
        for i in range(5):
            a = 2 * math.pi * i / 5
            centres[str(i + 1)] = (r * math.cos(a), r * math.sin(a))
        D = DiskSet(centres)
        G = disks_intersection_graph(D)
        assert G == gen_wheel(6)
        assert verify_model(disks_to_model(D), G).accepted

    def test_tangent_degenerate(self):
        D = DiskSet({"a": (0, 0), "b": (2 + 1e-12, 0)})
        with pytest.raises(GeometryError, match="tangent"):
            disks_to_model(D)

    def test_projection_lands_on_sphere(self):
        P = np.random.default_rng(1).uniform(-5, 5, (20, 2))
        S = inverse_stereographic(P, 0.3)
        assert np.allclose(np.linalg.norm(S, axis=1), 1.0)
        assert np.allclose(inverse_stereographic(np.zeros((1, 2)), 1.0), [[0, 0, -1]])

    @pytest.mark.parametrize("seed", range(20))
    def test_random_equivalence(self, seed):
        rng = np.random.default_rng(1000 + seed)
        n = int(rng.integers(2, 31))
        P = rng.uniform(0, 8, (n, 2))
        D = DiskSet({f"d{i}": tuple(P[i]) for i in range(n)})
        d = np.linalg.norm(P[:, None] - P[None], axis=-1)[np.triu_indices(n, 1)]
        if np.min(np.abs(d - 2)) < 1e-6:
            pytest.skip("near-tangent instance")
        rep = verify_model(disks_to_model(D), disks_intersection_graph(D))
        assert rep.accepted


class TestGeometryFiles:
    @pytest.mark.parametrize(
        "obj",
        [
            CapSet({"a": (1.0, 0.0, 0.0), "b": (0.0, 1.0, 0.0)}, 0.4),
            ArcSet({"a": 0.0, "b": 1.0}, 0.5),
            DiskSet({"a": (0.0, 0.0), "b": (1.0, 2.0)}),
        ],
    )
    def test_round_trip(self, obj, tmp_path):
        save_geometry(obj, tmp_path / "g.geom")
        assert load_geometry(tmp_path / "g.geom") == obj

    def test_kind_field(self):
        assert geometry_to_dict(ArcSet({"a": 0.0}, 0.5))["kind"] == "arcs"
        with pytest.raises(GeometryError, match="kind"):
            geometry_from_dict({"kind": "hexagons", "entries": []})
        with pytest.raises(GeometryError, match="width"):
            geometry_from_dict({"kind": "arcs", "entries": [["a", 0.0]]})
