from __future__ import annotations

import json
import random

import pytest

from twc.certificate import Certificate
from twc.errors import GraphError, ResourceLimitError, VerificationError
from twc.generate import atlas_connected, connected_graphs
from twc.graph import Graph, family, orient, orient_arcs
from twc.matrices import IndexFunction, assemble, build_A, build_B
from twc.permanent import permanent
from twc.pind import (
    certify_pindA,
    pind_exhaustive,
    proof_orientation,
    reduce_for_pindB,
    verify_certificate,
    verify_lemma31,
)


def check_witness(mat, res):
    assert sum(res.multiplicities.values()) == mat.shape[0]
    assert max(res.multiplicities.values()) <= res.achieved
    value = permanent(assemble(mat, res.multiplicities))
    assert value == res.permanent_value != 0


def test_exhaustive_examples():
    b = build_B(orient(family("path:3")))
    res = pind_exhaustive(b, 2)
    assert res.achieved == 1 and res.multiplicities == {"e1": 1, "e2": 1} and res.permanent_value == -1

    a = build_A(orient(family("path:2")))
    res = pind_exhaustive(a, 2)
    assert res.achieved == 1 and res.multiplicities["v1"] == 1 and res.permanent_value == -1

    zero = build_B(orient(family("path:2")))
    for k in (1, 2, 5):
        assert pind_exhaustive(zero, k).exceeds


def test_two_triangles_needs_doubled_columns():
    b = build_B(orient(family("b1:3,3")))
    res = pind_exhaustive(b, 2)
    assert res.achieved == 2
    check_witness(b, res)


def test_exhaustive_limits():
    big = build_B(orient(family("cycle:13")))
    with pytest.raises(ResourceLimitError):
        pind_exhaustive(big, 2)
    with pytest.raises(ResourceLimitError) as info:
        pind_exhaustive(build_B(orient(family("b1:3,3"))), 2, max_leaves=1)
    assert info.value.progress["k"] in (1, 2)


def test_pind_invariant_under_reorientation():
    rng = random.Random(1)
    for g in connected_graphs(5):
        base = pind_exhaustive(build_B(orient(g)), 2)
        heads = [e[rng.randrange(2)] for e in g.edges]
        other = pind_exhaustive(build_B(orient(g, heads)), 2)
        assert base.achieved == other.achieved
        if base.achieved:
            # the same selection works, with the permanent changing sign only
            value = permanent(assemble(build_B(orient(g, heads)), base.multiplicities))
            assert abs(value) == abs(base.permanent_value)


def c4_setup():
    g = family("cycle:4")
    d = orient_arcs(g, [(1, 2), (2, 3), (3, 4), (1, 4)])
    return g, d


def test_orientation_check_accepts_c4():
    g, d = c4_setup()
    cert = verify_lemma31(g, {4}, d, [g.edge_index(1, 4)], IndexFunction.constant(g))
    assert cert.certified and cert.claim == "pind(A_G)=1"
    assert [cert.witness["margins"][str(v)] for v in (1, 2, 3, 4)] == [1, 0, 0, 1]


def test_orientation_check_rejects_empty_subdigraph_at_v4():
    g, d = c4_setup()
    with pytest.raises(VerificationError) as info:
        verify_lemma31(g, {4}, d, [], IndexFunction.constant(g))
    assert info.value.vertex == 4


def test_orientation_check_rejects_cycle_and_non_sink():
    g = family("cycle:3")
    cyc = orient_arcs(g, [(1, 2), (2, 3), (3, 1)])
    with pytest.raises(VerificationError, match="acyclic"):
        verify_lemma31(g, set(), cyc, [], IndexFunction.constant(g))
    g, d = c4_setup()
    with pytest.raises(VerificationError, match="sink"):
        verify_lemma31(g, {3}, d, [g.edge_index(1, 4)], IndexFunction.constant(g))


def test_orientation_check_requires_unit_edges():
    g, d = c4_setup()
    eta = IndexFunction.constant(g, edge=2)
    with pytest.raises(VerificationError):
        verify_lemma31(g, {4}, d, [g.edge_index(1, 4)], eta)


def test_orientation_check_with_edges_inside_x():
    # K3 with X = {2, 3}: the edge 2-3 is removed from D and must be covered
    # by the residual index function on G[X]
    g = family("complete:3")
    h = g.without_edges([g.edge_index(2, 3)])
    d = orient_arcs(h, [(1, 2), (1, 3)])
    cert = verify_lemma31(g, {2, 3}, d, [h.edge_index(1, 2)], IndexFunction.constant(g))
    assert cert.witness["eta_prime"] == {"2": 2, "3": 0}
    assert cert.witness["inner"]["permanent_value"] != 0


def test_two_triangles_proof_orientation():
    g = family("b1:3,3")
    po = proof_orientation(g)
    assert po.X == (po.roles["u"],)
    cert = verify_lemma31(g, po.X, po.digraph, po.sub_edges, IndexFunction.constant(g), claims=po.claims)
    u = po.roles["u"]
    assert po.digraph.in_degree(u, po.sub_edges) == 2 and po.digraph.in_degree(u) == 4
    assert not [t for t in cert.trace if t.get("vertex") == u and "degrees" in t.get("note", "")]


@pytest.mark.parametrize(
    "spec", ["cycle:3", "cycle:5", "cycle:8", "b1:3,4", "b2:3,3,2", "b2:4,3,3", "b3:1,1,1", "b3:1,1,2", "b3:2,3,1"]
)
def test_certify_pindA_bases(spec):
    cert = certify_pindA(family(spec))
    assert cert.certified and cert.method == "lemma31"
    assert verify_certificate(cert)


def test_certify_pindA_direct_hub_edge():
    k4_minus = Graph(4, ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4)))
    cert = certify_pindA(k4_minus)
    assert verify_certificate(cert)


def test_certify_pindA_strips_leaves():
    g = Graph(8, family("cycle:6").edges + ((1, 7), (7, 8)))
    cert = certify_pindA(g)
    assert [s["vertex"] for s in cert.trace if s.get("rule") == "pendant"] == [8, 7]
    assert verify_certificate(cert)
    assert pind_exhaustive(build_A(orient(g)), 1).achieved == 1


def test_certify_pindA_trees_and_limits():
    for spec in ("path:2", "path:6", "star:5"):
        cert = certify_pindA(family(spec))
        assert cert.method == "exhaustive" and verify_certificate(cert)
    with pytest.raises(GraphError, match="m <= n\\+1"):
        certify_pindA(family("complete:4"))


def test_certify_agrees_with_exhaustive_on_small_graphs():
    for g in atlas_connected(7):
        if g.m == 0 or g.m > g.n + 1 or g.m > 7:
            continue
        cert = certify_pindA(g)
        assert verify_certificate(cert)
        assert pind_exhaustive(build_A(orient(g)), 1).achieved == 1


def test_tampered_certificate_is_rejected():
    cert = certify_pindA(family("cycle:5"))
    data = json.loads(cert.to_json())
    data["witness"]["lemma31"]["sub_arcs"] = []
    with pytest.raises(VerificationError):
        verify_certificate(Certificate.from_dict(data))
    cert = reduce_for_pindB(family("b2:3,3,2"))
    cert.permanent_value = (cert.permanent_value or 0) + 1
    with pytest.raises(VerificationError):
        verify_certificate(cert)


def test_reduction_examples():
    c8 = reduce_for_pindB(family("cycle:8"))
    assert c8.certified and c8.trace[0]["rule"] == "thread4"
    assert verify_certificate(c8)
    b2 = reduce_for_pindB(family("b2:3,3,2"))
    assert b2.certified and verify_certificate(b2)
    # a spider with legs of length 1, 1, 2
    spider = Graph(5, ((1, 2), (1, 3), (1, 4), (4, 5)))
    assert reduce_for_pindB(spider).certified
    with pytest.raises(GraphError):
        reduce_for_pindB(family("path:2"))


def test_reduction_never_overclaims():
    checked = 0
    for g in connected_graphs(7):
        if g.m < 2:
            continue
        cert = reduce_for_pindB(g)
        if cert.certified:
            assert verify_certificate(cert)
            assert pind_exhaustive(build_B(orient(g)), 2).achieved is not None
        checked += 1
    assert checked > 100


def test_inconclusive_is_not_a_refutation():
    # with the row cap at 1 nothing can be searched
    cert = reduce_for_pindB(family("complete:4"), max_rows=1)
    assert cert.status == "inconclusive" and not cert.certified
    with pytest.raises(VerificationError):
        verify_certificate(cert)


def test_certificate_json_round_trip():
    cert = certify_pindA(family("b2:3,3,2"))
    text = cert.to_json()
    assert Certificate.from_dict(json.loads(text)).to_json() == text
