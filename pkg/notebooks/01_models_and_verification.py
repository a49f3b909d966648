# Dot product models: build one, check it, break it.
#
# A model assigns each vertex a vector; u and v are adjacent exactly when
# their dot product reaches the threshold t.  With Fraction coordinates the
# check is exact, so a margin of 0 really means "on the threshold".

from fractions import Fraction

from dotgraph.constructors import rep_anticycle6, rep_complete_minus_matching, rep_matching_paper
from dotgraph.graph import gen_anticycle, gen_complete_minus_matching
from dotgraph.model import induced_graph, scale_model, to_float, verify_model

# The anti-cycle on 6 vertices (complement of C6) in the plane.
M = rep_anticycle6()
for label, vec in M.vectors.items():
    print(label, [str(x) for x in vec])

A6 = gen_anticycle(3)
rep = verify_model(M, A6)
print("verdict:", rep.verdict)
print("tightest edge:", rep.edge_margin_pair, "margin", rep.min_edge_margin)
print("tightest non-edges:", rep.nonedge_deficit_pairs, "deficit", rep.min_nonedge_deficit)

# Scaling vectors by lam and t by lam^2 leaves the graph alone.
M3 = scale_model(M, Fraction(3))
print("t after scaling by 3:", M3.threshold, "same graph:", induced_graph(M3) == A6)

# The float copy lands exactly on the threshold at (v2, w2), so the verifier
# refuses to call it either way.
print("float verdict:", verify_model(to_float(M), A6).verdict)

# K_2m minus a perfect matching.  With b(k) = 2^k - 1 the first vector is
# (1, 0) and v1 . v2 = 1/3, which misses the threshold.
bad = verify_model(rep_matching_paper(2), gen_complete_minus_matching(4, 2))
print("b(k) = 2^k - 1, m=2:", bad.verdict)
for v in bad.violations:
    print("   ", v.pair, "dot", v.dot)

# b(k) = 3^k keeps every cross pair above 1 and every matched pair at 2/3.
for m in (1, 2, 5, 10):
    ok = verify_model(rep_complete_minus_matching(m, extra=2), gen_complete_minus_matching(2 * m + 2, m))
    print(f"b(k) = 3^k, m={m}: {ok.verdict}, tightest non-edge deficit {ok.min_nonedge_deficit}")
