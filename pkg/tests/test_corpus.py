import math
import random

import numpy as np
import pytest

from dotgraph.constructors import arcs_intersection_graph, arcs_to_model
from dotgraph.corpus import (
    CheckResult,
    random_arc_set,
    random_cap_set,
    random_disk_set,
    random_rational_model,
    uca_corpus,
)
from dotgraph.graph import gen_named, is_path_or_cycle, is_triangle_free, min_maximal_independent_set_size
from dotgraph.model import verify_model
from dotgraph.recognition import (
    NotFound,
    SearchBudget,
    dot_dimension_at_most_1,
    is_cobipartite,
    random_threshold_graph,
    refute_2dpr,
    search_dpr,
)

SMALL_NAMES = [
    "claw", "bi4wheel", "J", "cycle(4)", "cycle(5)", "cycle(6)", "path(5)", "fan(5)", "wheel(6)",
    "anticycle(3)", "anticycle(4)", "complete(5)", "complete_minus_matching(6,3)", "grid(2,3)",
]
# refutation verdicts are unconditional only for these
COBIPARTITE = [name for name in SMALL_NAMES if is_cobipartite(gen_named(name))]


class TestUcaCorpus:
    @pytest.mark.parametrize("name, G, A", uca_corpus(), ids=[c[0] for c in uca_corpus()])
    def test_realization_matches(self, name, G, A):
        assert arcs_intersection_graph(A) == G

    def test_several_instances_have_large_independent_sets(self):
        big = [(name, A) for name, G, A in uca_corpus() if min_maximal_independent_set_size(G) >= 4]
        assert len(big) >= 3
        assert all(A.width < math.pi / 2 for _, A in big)

    def test_triangle_free_ones_are_paths_or_cycles(self):
        for name, G, _ in uca_corpus():
            if is_triangle_free(G):
                assert is_path_or_cycle(G), name


class TestGenerators:
    def test_rational_model_seeded(self):
        a = random_rational_model(random.Random(3), 6)
        b = random_rational_model(random.Random(3), 6)
        assert a == b and a.exact

    def test_halfplane(self):
        rng = random.Random(0)
        for _ in range(50):
            M = random_rational_model(rng, 5, halfplane=True)
            assert all(v[0] >= 0 and any(v) for v in M.vectors.values())

    def test_geometry_avoids_tangency(self):
        rng = np.random.default_rng(0)
        for _ in range(30):
            C = random_cap_set(rng)
            X = C.matrix()
            ang = np.arccos(np.clip(X @ X.T, -1, 1))[np.triu_indices(len(X), 1)]
            assert not np.any(np.abs(ang - C.theta) < 1e-6)
            D = random_disk_set(rng)
            P = D.matrix()
            d = np.linalg.norm(P[:, None] - P[None], axis=-1)[np.triu_indices(len(P), 1)]
            assert not np.any(np.abs(d - 2) < 1e-6)

    def test_arc_sets_narrow(self):
        rng = np.random.default_rng(1)
        for _ in range(20):
            A = random_arc_set(rng)
            assert A.width < math.pi / 2
            assert verify_model(arcs_to_model(A), arcs_intersection_graph(A)).accepted


def test_check_result_passed():
    r = CheckResult(0, "x")
    r.add("a", True)
    assert r.passed
    r.add("b", False, "why")
    assert not r.passed and r.failures() == [("b", False, "why")]


@pytest.mark.parametrize("seed", range(12))
def test_dim1_implies_search_dim1(seed):
    rng = random.Random(seed)
    G, _ = random_threshold_graph(rng.randint(1, 10), rng)
    assert dot_dimension_at_most_1(G)[0]
    M = search_dpr(G, 1, SearchBudget(restarts=50, iterations=2000), seed=seed)
    assert not isinstance(M, NotFound)
    assert verify_model(M, G).accepted


@pytest.mark.parametrize("name", COBIPARTITE)
def test_refutation_and_search_never_both(name):
    G = gen_named(name)
    cert = refute_2dpr(G)
    found = search_dpr(G, 2, SearchBudget(restarts=30, iterations=2000))
    assert not (cert.refuted and not isinstance(found, NotFound))
