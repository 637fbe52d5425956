from __future__ import annotations

import random

import networkx as nx
import pytest

from twc.errors import GraphError
from twc.generate import atlas_connected, random_connected_graph
from twc.graph import (
    Graph,
    build_graph,
    classify,
    edge_split,
    family,
    graph_operation,
    line_graph,
    orient,
    orient_arcs,
)


def iso(a: Graph, b: Graph) -> bool:
    ga, gb = nx.Graph(), nx.Graph()
    ga.add_nodes_from(a.vertices)
    ga.add_edges_from(a.edges)
    gb.add_nodes_from(b.vertices)
    gb.add_edges_from(b.edges)
    return nx.is_isomorphic(ga, gb)


def test_build_small_graphs():
    k2 = build_graph(2, [(1, 2)])
    assert (k2.n, k2.m) == (2, 1)
    k3 = build_graph(3, [(1, 2), (2, 3), (1, 3)])
    assert iso(k3, family("cycle:3"))


@pytest.mark.parametrize(
    "n, edges, message",
    [
        (3, [(1, 1)], "loop at vertex 1"),
        (3, [(1, 2), (2, 1)], "duplicate edge"),
        (3, [(1, 4)], "outside 1..3"),
    ],
)
def test_validation_names_offending_edge(n, edges, message):
    with pytest.raises(GraphError, match=message):
        build_graph(n, edges)


def test_family_shapes():
    b1 = family("b1:3,3")
    assert (b1.n, b1.m) == (5, 6)
    assert sorted(b1.degree_sequence()) == [2, 2, 2, 2, 4]
    assert iso(family("b3:1,1,1"), Graph(5, tuple((a, b) for a in (1, 2) for b in (3, 4, 5))))
    assert iso(family("cycle:4"), Graph(4, ((1, 2), (2, 3), (3, 4), (1, 4))))
    b2 = family("b2:3,4,3")
    assert (b2.n, b2.m) == (3 + 4 + 3 - 2, 3 + 4 + 3 - 2 + 1)


@pytest.mark.parametrize("spec", ["cycle:2", "b1:2,3", "b2:3,3,1", "b3:0,1,1", "wheel:5", "cycle"])
def test_family_rejects_bad_parameters(spec):
    with pytest.raises(GraphError):
        family(spec)


def test_line_graph_examples():
    assert iso(line_graph(family("path:3")), family("path:2"))
    assert iso(line_graph(family("complete:3")), family("cycle:3"))
    assert iso(line_graph(family("star:4")), family("complete:4"))
    assert iso(line_graph(family("cycle:5")), family("cycle:5"))


def test_line_graph_degree_law():
    rng = random.Random(11)
    for _ in range(200):
        g = random_connected_graph(rng, max_edges=12)
        if g.n > 10:
            continue
        lg = line_graph(g)
        for i, (u, v) in enumerate(g.edges):
            assert lg.degree(i + 1) == g.degree(u) + g.degree(v) - 2


def test_edge_split_examples():
    c4 = family("cycle:4")
    assert iso(edge_split(c4, c4.edge_index(1, 2), 1), family("path:5"))
    k2 = family("path:2")
    s = edge_split(k2, 0, 1)
    assert s.edges == ((1, 3),) and s.degree(2) == 0
    k3 = family("complete:3")
    assert iso(edge_split(k3, k3.edge_index(1, 2), 2), family("path:4"))
    with pytest.raises(GraphError):
        edge_split(k3, k3.edge_index(1, 2), 3)


def test_edge_split_preserves_edge_count():
    rng = random.Random(5)
    for _ in range(50):
        g = random_connected_graph(rng)
        i = rng.randrange(g.m)
        assert edge_split(g, i, g.edges[i][rng.randrange(2)]).m == g.m


def test_graph_operations():
    assert iso(graph_operation(family("path:2"), "R"), family("complete:3"))
    q = graph_operation(family("path:3"), "Q")
    assert (q.n, q.m) == (5, 5)
    assert iso(graph_operation(family("cycle:5"), "L"), family("cycle:5"))
    with pytest.raises(GraphError):
        graph_operation(Graph(3, ((1, 2),)), "R")


def test_classify_examples():
    # C6 with a 2-edge pendant path hung at vertex 1
    g = Graph(8, family("cycle:6").edges + ((1, 7), (7, 8)))
    cls = classify(g)
    assert cls.kind == "unicyclic"
    assert cls.k0[1] == 1 and cls.s_values["s"] == 1
    b1 = classify(family("b1:3,3"))
    assert b1.kind == "bicyclic-B1" and all(k == 0 for k in b1.k0.values())
    assert not any(b1.hanging_trees.values())
    assert classify(family("path:7")).kind == "tree"
    assert classify(family("b2:3,3,2")).kind == "bicyclic-B2"
    assert classify(family("b3:1,1,2")).kind == "bicyclic-B3"
    assert classify(family("complete:5")).kind == "other"
    with pytest.raises(GraphError):
        classify(Graph(3, ((1, 2),)))


def test_classify_kind_matches_edge_count_and_decomposition():
    for g in atlas_connected(7):
        cls = classify(g)
        expected = {g.n - 1: "tree", g.n: "unicyclic"}.get(g.m)
        if g.m == g.n + 1:
            assert cls.kind.startswith("bicyclic")
        elif expected:
            assert cls.kind == expected
        else:
            assert cls.kind == "other"
        if cls.kind in ("tree", "other"):
            continue
        # base edges plus hanging-tree edges partition E(G)
        tree_edges = [i for ts in cls.hanging_trees.values() for t in ts for i in t.edges]
        assert sorted(tree_edges + list(cls.base_edges)) == list(range(g.m))
        assert len(set(tree_edges)) == len(tree_edges)
        base = g.without_edges(tree_edges)
        assert sorted(v for v in base.vertices if base.degree(v)) == sorted(cls.base_vertices)


def test_orientation_examples():
    c4 = family("cycle:4")
    d = orient_arcs(c4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    assert d.is_acyclic() and d.sinks() == {4}
    c3 = orient_arcs(family("cycle:3"), [(1, 2), (2, 3), (3, 1)])
    assert not c3.is_acyclic() and c3.sinks() == set()
    k2 = orient(family("path:2"))
    assert k2.sinks() == {2} and k2.in_degree(2) == 1
    with pytest.raises(GraphError):
        orient(family("path:2"), [3])


def test_orientation_degree_sums():
    rng = random.Random(3)
    for _ in range(100):
        g = random_connected_graph(rng)
        d = orient(g, [e[rng.randrange(2)] for e in g.edges])
        assert sum(d.in_degree(v) for v in g.vertices) == g.m
        assert sum(d.out_degree(v) for v in g.vertices) == g.m
        for v in g.vertices:
            assert d.in_degree(v) + d.out_degree(v) == g.degree(v)
        if d.is_acyclic():
            assert d.sinks()
