# Ruling out planar models by enumerating vertex orders.
#
# In a 2-d model the vectors come in an angular order.  Four patterns in
# that order are impossible (L1, L4 and cycles of forced length
# comparisons).  If every order of the vertices hits one, there is no 2-d
# model whose order is total, which is automatic for co-bipartite graphs.

from dotgraph.constructors import rep_anticycle6
from dotgraph.graph import gen_anticycle, gen_cycle, gen_named
from dotgraph.model import angular_order
from dotgraph.recognition import check_nested, ordering_violations, refute_2dpr

A8 = gen_anticycle(4)
order = ["v1", "v2", "v3", "v4", "w4", "w3", "w2", "w1"]
print("the natural order of A8 breaks:")
for v in ordering_violations(A8, order)[:3]:
    print("   ", v.kind, v.witness)

cert = refute_2dpr(A8, graph_id="A8")
print(cert.verdict, "after", cert.nodes_visited, "search nodes;", cert.pruned_prefixes, "prefixes pruned")
print("violations seen:", cert.kind_counts)
print(cert.semantics_note)

# A6 does have a planar model, and every surviving order is nested.
cert = refute_2dpr(gen_anticycle(3), graph_id="A6")
print("\nA6:", cert.verdict, len(cert.survivors), "orders survive")
for s in cert.survivors:
    print("   ", " ".join(s), "nested" if check_nested(3, s)[0] else "NOT nested")
print("order of the explicit model:", " ".join(angular_order(rep_anticycle6())[0]))

# J and K are not co-bipartite, so their verdict assumes a total order.
for name in ("J", "K"):
    c = refute_2dpr(gen_named(name), graph_id=name)
    print(f"\n{name}: {c.verdict} ({c.semantics_note.split(':')[0]})")

# C6 shows why that caveat matters: every planar model of C6 wraps around
# the origin, so no total order exists and the enumeration rules it out
# even though C6 is a 2-dot product graph.
c = refute_2dpr(gen_cycle(6), graph_id="C6")
print(f"\nC6: {c.verdict} ({c.semantics_note.split(':')[0]})")
