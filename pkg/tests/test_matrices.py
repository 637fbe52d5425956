from __future__ import annotations

import itertools
import random

import pytest

from twc.errors import GraphError
from twc.fixtures import B1_3_3_STORED, B1_3_3_STORED_SELECTION, K3_BLOCK
from twc.generate import random_connected_graph, random_orientation_heads
from twc.graph import Graph, family, orient, orient_arcs
from twc.matrices import IndexFunction, LabeledIntMatrix, assemble, build_A, build_B, clique_block_extend
from twc.permanent import permanent, permanent_naive


def test_A_of_K2():
    a = build_A(orient(family("path:2")))
    assert a.col_labels == ("v1", "v2", "e1")
    assert a.rows == ((-1, 1, 0),)


def test_A_of_P3_row_picks_up_edge_at_head():
    a = build_A(orient(family("path:3")))
    assert a.rows[0][a.col_labels.index("e2")] == 1


def test_isolated_vertex_column_is_zero():
    a = build_A(orient(Graph(3, ((1, 2),))))
    assert a.column("v3") == (0,)


def test_B_examples():
    assert build_B(orient(family("path:3"))).rows == ((0, 1), (-1, 0))
    assert build_B(orient(family("path:2"))).rows == ((0,),)


def test_B_of_two_triangles_matches_stored_matrix():
    g = Graph(5, ((3, 2), (2, 1), (1, 3), (1, 4), (5, 1), (4, 5)))
    d = orient_arcs(g, [(3, 2), (2, 1), (1, 3), (1, 4), (5, 1), (4, 5)])
    assert build_B(d).rows == B1_3_3_STORED.rows


def _canonical(rows):
    """Rows up to sign, as a sorted tuple."""
    out = []
    for r in rows:
        lead = next((x for x in r if x), 1)
        out.append(tuple(x * (1 if lead > 0 else -1) for x in r))
    return tuple(sorted(out))


def test_generated_b1_3_3_matches_fixture_up_to_relabelling():
    g = family("b1:3,3")
    target = _canonical(B1_3_3_STORED.rows)
    b = build_B(orient(g))
    found = False
    for perm in itertools.permutations(range(6)):
        rows = [[b.rows[perm[i]][perm[j]] for j in range(6)] for i in range(6)]
        if _canonical(rows) == target:
            found = True
            break
    assert found


def test_stored_selection_is_columns_1_2_4_doubled():
    assert assemble(B1_3_3_STORED, {"e1": 2, "e2": 2, "e4": 2}) == B1_3_3_STORED_SELECTION


def test_assemble_examples():
    p3 = family("path:3")
    a = build_A(orient(p3))
    ones = IndexFunction.constant(p3, vertex=0, edge=1)
    assert assemble(a, ones).rows == build_B(orient(p3)).rows
    dup = assemble(a, {"v2": 2})
    assert dup.columns() == [a.column("v2")] * 2
    with pytest.raises(GraphError, match="index function not valid"):
        assemble(a, {"v2": 1})


def test_index_function_domain_and_validity():
    g = family("path:3")
    eta = IndexFunction(g, {"v1": 1, "e2": 1})
    assert eta.valid() and eta.total() == 2
    assert not IndexFunction.constant(g).valid()
    assert eta <= IndexFunction.constant(g)
    with pytest.raises(GraphError):
        IndexFunction(g, {"v9": 1})
    with pytest.raises(GraphError):
        IndexFunction(g, {"v1": -1})


def test_matrix_invariants_random():
    rng = random.Random(8)
    for _ in range(100):
        g = random_connected_graph(rng, max_edges=10)
        if g.n > 8:
            continue
        d = orient(g, random_orientation_heads(g, rng))
        a, b = build_A(d), build_B(d)
        assert all(x in (-1, 0, 1) for r in a.rows for x in r)
        for r, rb in zip(a.rows, b.rows):
            assert sum(r[: g.n]) == 0
            assert r[g.n:] == rb
        i = rng.randrange(g.m)
        flipped = build_A(d.flipped(i))
        for k in range(g.m):
            expect = tuple(-x for x in a.rows[k]) if k == i else a.rows[k]
            assert flipped.rows[k] == expect


def test_text_round_trip():
    m = build_A(orient(family("cycle:4")))
    assert LabeledIntMatrix.from_text(m.to_text()) == m


def test_k3_block_and_permanent():
    assert permanent_naive(K3_BLOCK) == -4
    g = family("path:2")
    a = build_A(orient(g))
    for col in ("v1", "v2"):
        bp = a.select_columns([col])
        bpp, gp, _ = clique_block_extend(bp, g, 1)
        assert tuple(r[-3:] for r in bpp.rows[-3:]) == K3_BLOCK.rows
        assert all(x == 0 for r in bpp.rows[:1] for x in r[-3:])
        assert permanent(bpp) == permanent(bp) * -4
        assert gp.n == 4 and gp.m == 4


def test_clique_block_extend_rejects_bad_shape():
    g = family("path:3")
    a = build_A(orient(g))
    with pytest.raises(GraphError):
        clique_block_extend(a.select_columns(["v1"]), g, 1)
