"""Graph generators for exhaustive and randomized checks."""

from __future__ import annotations

import itertools
import random
from typing import Iterator

import networkx as nx

from .graph import Graph

__all__ = [
    "from_networkx",
    "labeled_trees",
    "random_tree",
    "random_connected_graph",
    "connected_graphs",
    "atlas_connected",
    "random_orientation_heads",
    "unicyclic_family_instance",
]


def from_networkx(h: nx.Graph) -> Graph:
    """Relabel nodes to 1..n in sorted order; edges sorted."""
    nodes = sorted(h.nodes())
    idx = {v: i + 1 for i, v in enumerate(nodes)}
    edges = sorted(tuple(sorted((idx[a], idx[b]))) for a, b in h.edges())
    return Graph(len(nodes), tuple(edges))


def _to_networkx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


def labeled_trees(n: int) -> Iterator[Graph]:
    """Every labeled tree on 1..n (n^(n-2) of them), via Prüfer sequences."""
    if n < 2:
        raise ValueError("labeled trees need n >= 2")
    if n == 2:
        yield Graph(2, ((1, 2),))
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield from_networkx(nx.from_prufer_sequence(list(seq)))


def random_tree(n: int, rng: random.Random) -> Graph:
    if n == 1:
        return Graph(1, ())
    if n == 2:
        return Graph(2, ((1, 2),))
    return from_networkx(nx.from_prufer_sequence([rng.randrange(n) for _ in range(n - 2)]))


def random_connected_graph(rng: random.Random, max_edges: int = 10, min_edges: int = 1) -> Graph:
    """A spanning random tree plus random extra edges; edge order shuffled."""
    m = rng.randint(min_edges, max_edges)
    # need n - 1 <= m <= n(n-1)/2
    candidates = [n for n in range(2, m + 2) if n * (n - 1) // 2 >= m]
    n = rng.choice(candidates)
    tree = random_tree(n, rng)
    edges = set(tree.edges)
    missing = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1) if (a, b) not in edges]
    edges.update(rng.sample(missing, m - len(edges)))
    order = list(edges)
    rng.shuffle(order)
    return Graph(n, tuple(order))


def connected_graphs(max_edges: int) -> list[Graph]:
    """All connected graphs with 1..max_edges edges, one per isomorphism class.

    Every connected graph with m+1 edges arises from one with m edges by
    adding an edge or a pendant vertex (delete a non-bridge edge, or a leaf),
    so growing level by level and deduplicating covers every class.
    """
    levels = [[nx.path_graph(2)]]
    for _ in range(max_edges - 1):
        seen: dict[str, list[nx.Graph]] = {}
        nxt = []
        for h in levels[-1]:
            k = h.number_of_nodes()
            grown = []
            for a in range(k):
                c = h.copy()
                c.add_edge(a, k)
                grown.append(c)
                for b in range(a + 1, k):
                    if not h.has_edge(a, b):
                        c = h.copy()
                        c.add_edge(a, b)
                        grown.append(c)
            for c in grown:
                key = nx.weisfeiler_lehman_graph_hash(c)
                bucket = seen.setdefault(key, [])
                if any(nx.is_isomorphic(c, o) for o in bucket):
                    continue
                bucket.append(c)
                nxt.append(c)
        levels.append(nxt)
    return [from_networkx(h) for level in levels for h in level]


def atlas_connected(max_n: int = 7) -> list[Graph]:
    """Every connected graph on 1..max_n vertices up to isomorphism (max_n <= 7)."""
    if max_n > 7:
        raise ValueError("the graph atlas only covers up to 7 vertices")
    return [
        from_networkx(h)
        for h in nx.graph_atlas_g()[1:]
        if h.number_of_nodes() <= max_n and nx.is_connected(h)
    ]


def random_orientation_heads(g: Graph, rng: random.Random) -> tuple[int, ...]:
    return tuple(e[rng.randrange(2)] for e in g.edges)


def unicyclic_family_instance(
    rng: random.Random, s_parity: int, *, max_edges: int = 12, max_tries: int = 10_000
) -> Graph:
    """Random unicyclic graph with n even, every hanging tree of >= 2 edges
    and the number of even-size hanging trees of parity ``s_parity``.

    A hanging tree of size t is a random tree on t vertices joined to a cycle
    vertex by one extra edge.
    """
    for _ in range(max_tries):
        l = rng.randint(3, 6)
        budget = max_edges - l
        sizes = []
        while budget >= 2 and rng.random() < 0.8:
            t = rng.randint(2, min(budget, 5))
            sizes.append(t)
            budget -= t
        s = sum(1 for t in sizes if t % 2 == 0)
        n = l + sum(sizes)
        if s % 2 != s_parity or n % 2:
            continue
        edges = [(i, i % l + 1) for i in range(1, l + 1)]
        nxt = l + 1
        for t in sizes:
            at = rng.randint(1, l)
            tree = random_tree(t, rng)
            shift = nxt - 1
            edges += [(a + shift, b + shift) for a, b in tree.edges]
            edges.append((at, shift + rng.randint(1, t)))
            nxt += t
        return Graph(n, tuple(edges))
    raise RuntimeError("could not generate a family instance")
