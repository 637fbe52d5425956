"""Graph representation, named families, structural decomposition and the
L / R / Q graph operations.

Vertices are ``1..n``.  Edges are unordered pairs kept in a stable list and
addressed by their 0-based position in that list; textual labels use the
1-based form ``e1, e2, ...``.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import GraphError

__all__ = [
    "Graph",
    "OrientedGraph",
    "HangingTree",
    "CyclicClassification",
    "build_graph",
    "family",
    "line_graph",
    "edge_split",
    "graph_operation",
    "classify",
    "orient",
    "orient_arcs",
    "two_core",
]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise GraphError(f"vertex count must be a positive integer, got {self.n!r}")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        seen: dict[frozenset, int] = {}
        for i, (u, v) in enumerate(edges):
            if u == v:
                raise GraphError(f"loop at vertex {u} (edge {i + 1})")
            for x in (u, v):
                if not 1 <= x <= self.n:
                    raise GraphError(
                        f"edge {i + 1} ({u},{v}) has endpoint {x} outside 1..{self.n}"
                    )
            key = frozenset((u, v))
            if key in seen:
                raise GraphError(
                    f"duplicate edge {u}-{v} (edges {seen[key] + 1} and {i + 1})"
                )
            seen[key] = i

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        """Neighbour sets indexed by vertex (index 0 unused)."""
        adj: list[set[int]] = [set() for _ in range(self.n + 1)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Incident edge indices per vertex (index 0 unused)."""
        inc: list[list[int]] = [[] for _ in range(self.n + 1)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def _edge_lookup(self) -> dict[frozenset, int]:
        return {frozenset(e): i for i, e in enumerate(self.edges)}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def edge_index(self, u: int, v: int) -> int:
        try:
            return self._edge_lookup[frozenset((u, v))]
        except KeyError:
            raise GraphError(f"no edge {u}-{v}") from None

    def has_edge(self, u: int, v: int) -> bool:
        return frozenset((u, v)) in self._edge_lookup

    def edges_adjacent(self, i: int, j: int) -> bool:
        return i != j and bool(set(self.edges[i]) & set(self.edges[j]))

    def components(self) -> list[list[int]]:
        seen = [False] * (self.n + 1)
        comps = []
        for s in self.vertices:
            if seen[s]:
                continue
            seen[s] = True
            comp, queue = [], deque([s])
            while queue:
                x = queue.popleft()
                comp.append(x)
                for y in self.adjacency[x]:
                    if not seen[y]:
                        seen[y] = True
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def adjacency_matrix(self) -> list[list[int]]:
        mat = [[0] * self.n for _ in range(self.n)]
        for u, v in self.edges:
            mat[u - 1][v - 1] = mat[v - 1][u - 1] = 1
        return mat

    def induced_subgraph(self, keep: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        """Subgraph on ``keep`` relabelled to ``1..k`` in ascending order.

        Returns the graph and the old->new vertex map.  Edge order follows
        the parent edge list.
        """
        kept = sorted(set(keep))
        if not kept:
            raise GraphError("induced subgraph needs at least one vertex")
        relabel = {v: i + 1 for i, v in enumerate(kept)}
        edges = [
            (relabel[u], relabel[v])
            for u, v in self.edges
            if u in relabel and v in relabel
        ]
        return Graph(len(kept), tuple(edges)), relabel

    def without_edges(self, indices: Iterable[int]) -> "Graph":
        drop = set(indices)
        return Graph(self.n, tuple(e for i, e in enumerate(self.edges) if i not in drop))

    def degree_sequence(self) -> list[int]:
        return sorted((self.degree(v) for v in self.vertices), reverse=True)

    def edge_label(self, i: int) -> str:
        return f"e{i + 1}"

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}


def build_graph(n: int, edges: Sequence[Sequence[int]]) -> Graph:
    """Validated graph on ``1..n`` with the given edge order."""
    pairs = []
    for i, e in enumerate(edges):
        if len(e) != 2:
            raise GraphError(f"edge {i + 1} is not a pair: {e!r}")
        pairs.append((e[0], e[1]))
    return Graph(n, tuple(pairs))


# ---------------------------------------------------------------------------
# named families
# ---------------------------------------------------------------------------

_FAMILY_RE = re.compile(r"^\s*([a-z0-9]+)\s*:\s*([0-9,\s]+)$")


def _cycle_edges(vs: Sequence[int]) -> list[tuple[int, int]]:
    return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


def _path_edges(vs: Sequence[int]) -> list[tuple[int, int]]:
    return [(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]


def _need(cond: bool, msg: str):
    if not cond:
        raise GraphError(msg)


def family(spec: str) -> Graph:
    """Canonical instance of a named family, e.g. ``"cycle:5"``, ``"b2:3,3,2"``.

    ``b1:p,q``   two cycles C_p, C_q sharing vertex 1 (p, q >= 3).
    ``b2:p,q,r`` cycles C_p ∋ u and C_q ∋ v' joined by a u-v' path on r >= 2
                 vertices.
    ``b3:p,q,r`` hubs 1 and 2 joined by three paths with p, q, r >= 1
                 internal vertices.
    """
    match = _FAMILY_RE.match(spec)
    if not match:
        raise GraphError(f"unrecognised family spec {spec!r}")
    name = match.group(1)
    try:
        params = [int(x) for x in match.group(2).split(",") if x.strip()]
    except ValueError:
        raise GraphError(f"bad parameters in {spec!r}") from None

    arity = {"path": 1, "cycle": 1, "complete": 1, "star": 1, "b1": 2, "b2": 3, "b3": 3}
    if name not in arity:
        raise GraphError(f"unknown family {name!r}")
    _need(len(params) == arity[name], f"{name} takes {arity[name]} parameter(s)")

    if name == "path":
        (k,) = params
        _need(k >= 1, "path:k needs k >= 1")
        return Graph(k, tuple(_path_edges(range(1, k + 1))))
    if name == "cycle":
        (k,) = params
        _need(k >= 3, "cycle:k needs k >= 3")
        return Graph(k, tuple(_cycle_edges(range(1, k + 1))))
    if name == "complete":
        (k,) = params
        _need(k >= 1, "complete:k needs k >= 1")
        return Graph(k, tuple((i, j) for i in range(1, k + 1) for j in range(i + 1, k + 1)))
    if name == "star":
        (k,) = params
        _need(k >= 1, "star:k needs k >= 1")
        return Graph(k + 1, tuple((1, i) for i in range(2, k + 2)))
    if name == "b1":
        p, q = params
        _need(p >= 3 and q >= 3, "b1:p,q needs p, q >= 3")
        cp = [1] + list(range(2, p + 1))
        cq = [1] + list(range(p + 1, p + q))
        return Graph(p + q - 1, tuple(_cycle_edges(cp) + _cycle_edges(cq)))
    if name == "b2":
        p, q, r = params
        _need(p >= 3 and q >= 3 and r >= 2, "b2:p,q,r needs p, q >= 3 and r >= 2")
        cp = [1] + list(range(2, p + 1))
        inner = list(range(p + 1, p + r - 1))
        vprime = p + r - 1
        path = [1] + inner + [vprime]
        cq = [vprime] + list(range(vprime + 1, vprime + q))
        n = p + q + r - 2
        return Graph(n, tuple(_cycle_edges(cp) + _path_edges(path) + _cycle_edges(cq)))
    # b3
    p, q, r = params
    _need(p >= 1 and q >= 1 and r >= 1, "b3:p,q,r needs p, q, r >= 1")
    edges: list[tuple[int, int]] = []
    nxt = 3
    for size in (p, q, r):
        inner = list(range(nxt, nxt + size))
        nxt += size
        edges += _path_edges([1] + inner + [2])
    return Graph(p + q + r + 2, tuple(edges))


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------


def line_graph(g: Graph) -> Graph:
    """L(G): vertex i+1 is edge i of ``g``."""
    if g.m < 1:
        raise GraphError("line graph needs at least one edge")
    edges = []
    for i in range(g.m):
        for j in range(i + 1, g.m):
            if g.edges_adjacent(i, j):
                edges.append((i + 1, j + 1))
    return Graph(g.m, tuple(edges))


def edge_split(g: Graph, e: int, end: int) -> Graph:
    """G(end, w): drop edge ``e`` and hang a new vertex ``w = n+1`` on ``end``.

    The new edge takes the position of ``e`` in the edge list.
    """
    if not 0 <= e < g.m:
        raise GraphError(f"edge index {e} out of range")
    if end not in g.edges[e]:
        raise GraphError(f"vertex {end} is not an endpoint of edge {g.edges[e]}")
    w = g.n + 1
    edges = list(g.edges)
    edges[e] = (end, w)
    return Graph(w, tuple(edges))


def graph_operation(g: Graph, op: str) -> Graph:
    """The L, R and Q operations.

    R adds, per edge i, a vertex n+1+i joined to both ends.  Q subdivides
    edge i with vertex n+1+i and joins subdivision vertices of adjacent
    edges.
    """
    if g.m < 1:
        raise GraphError("graph operation needs at least one edge")
    if not g.is_connected():
        raise GraphError("graph operation needs a connected graph")
    op = op.upper()
    if op == "L":
        return line_graph(g)
    if op == "R":
        edges = list(g.edges)
        for i, (u, v) in enumerate(g.edges):
            x = g.n + 1 + i
            edges += [(u, x), (v, x)]
        return Graph(g.n + g.m, tuple(edges))
    if op == "Q":
        edges = []
        for i, (u, v) in enumerate(g.edges):
            x = g.n + 1 + i
            edges += [(u, x), (x, v)]
        for i in range(g.m):
            for j in range(i + 1, g.m):
                if g.edges_adjacent(i, j):
                    edges.append((g.n + 1 + i, g.n + 1 + j))
        return Graph(g.n + g.m, tuple(edges))
    raise GraphError(f"unknown operation {op!r}; expected L, R or Q")


# ---------------------------------------------------------------------------
# orientations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OrientedGraph:
    """A graph with one chosen head per edge (edge i runs tail -> head)."""

    graph: Graph
    heads: tuple[int, ...]

    def __post_init__(self):
        heads = tuple(int(h) for h in self.heads)
        object.__setattr__(self, "heads", heads)
        if len(heads) != self.graph.m:
            raise GraphError(f"{len(heads)} heads given for {self.graph.m} edges")
        for i, (h, e) in enumerate(zip(heads, self.graph.edges)):
            if h not in e:
                raise GraphError(f"head {h} is not an endpoint of edge {i + 1} {e}")

    def tail(self, i: int) -> int:
        u, v = self.graph.edges[i]
        return u if self.heads[i] == v else v

    def head(self, i: int) -> int:
        return self.heads[i]

    def arcs(self) -> list[tuple[int, int]]:
        return [(self.tail(i), self.heads[i]) for i in range(self.graph.m)]

    def _select(self, within: Iterable[int] | None) -> Iterable[int]:
        return range(self.graph.m) if within is None else within

    def in_degree(self, v: int, within: Iterable[int] | None = None) -> int:
        return sum(1 for i in self._select(within) if self.heads[i] == v)

    def out_degree(self, v: int, within: Iterable[int] | None = None) -> int:
        return sum(1 for i in self._select(within) if self.tail(i) == v)

    def is_acyclic(self) -> bool:
        indeg = [0] * (self.graph.n + 1)
        out: list[list[int]] = [[] for _ in range(self.graph.n + 1)]
        for t, h in self.arcs():
            out[t].append(h)
            indeg[h] += 1
        queue = deque(v for v in self.graph.vertices if indeg[v] == 0)
        done = 0
        while queue:
            x = queue.popleft()
            done += 1
            for y in out[x]:
                indeg[y] -= 1
                if indeg[y] == 0:
                    queue.append(y)
        return done == self.graph.n

    def sinks(self) -> set[int]:
        """Vertices of out-degree zero (isolated vertices included)."""
        tails = {self.tail(i) for i in range(self.graph.m)}
        return {v for v in self.graph.vertices if v not in tails}

    def flipped(self, i: int) -> "OrientedGraph":
        heads = list(self.heads)
        heads[i] = self.tail(i)
        return OrientedGraph(self.graph, tuple(heads))


def orient(g: Graph, heads: Sequence[int] | None = None) -> OrientedGraph:
    """Orient ``g``; by default each edge (u, v) runs u -> v."""
    if heads is None:
        heads = [v for _, v in g.edges]
    return OrientedGraph(g, tuple(heads))


def orient_arcs(g: Graph, arcs: Iterable[tuple[int, int]]) -> OrientedGraph:
    """Orientation from (tail, head) pairs, matched to edges regardless of order."""
    heads: list[int | None] = [None] * g.m
    for t, h in arcs:
        i = g.edge_index(t, h)
        if heads[i] is not None:
            raise GraphError(f"edge {t}-{h} oriented twice")
        heads[i] = h
    missing = [g.edges[i] for i, h in enumerate(heads) if h is None]
    if missing:
        raise GraphError(f"edges without orientation: {missing}")
    return OrientedGraph(g, tuple(heads))  # type: ignore[arg-type]


# ---------------------------------------------------------------------------
# cyclic classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HangingTree:
    attach: int
    vertices: tuple[int, ...]  # excludes the attachment vertex
    edges: tuple[int, ...]  # edge indices, including the attaching edge

    @property
    def edge_count(self) -> int:
        return len(self.edges)


@dataclass
class CyclicClassification:
    """Base subgraph plus hanging trees of a tree / unicyclic / bicyclic graph.

    ``base`` holds the named parts of the base:

    - unicyclic: ``cycle`` (vertices in traversal order)
    - B1: ``u``, ``Cp``, ``Cq`` (each cycle listed from ``u``)
    - B2: ``u``, ``v'``, ``Cp`` (from u), ``Cq`` (from v'), ``path`` (u .. v')
    - B3: ``u``, ``v'``, ``paths`` (three internal-vertex lists read from u)
    """

    kind: str
    base: dict = field(default_factory=dict)
    base_vertices: tuple[int, ...] = ()
    base_edges: tuple[int, ...] = ()
    hanging_trees: dict[int, list[HangingTree]] = field(default_factory=dict)
    k0: dict[int, int] = field(default_factory=dict)
    k1: dict[int, int] = field(default_factory=dict)
    s_values: dict[str, int] = field(default_factory=dict)

    def s_over(self, vertices: Iterable[int]) -> int:
        return sum(self.k0.get(v, 0) for v in vertices)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "base": {k: (list(v) if isinstance(v, (list, tuple)) else v) for k, v in self.base.items()},
            "base_vertices": list(self.base_vertices),
            "hanging_trees": {
                str(v): [t.edge_count for t in trees]
                for v, trees in sorted(self.hanging_trees.items())
                if trees
            },
            "k0": {str(v): c for v, c in sorted(self.k0.items())},
            "k1": {str(v): c for v, c in sorted(self.k1.items())},
            "s_values": dict(self.s_values),
        }


def two_core(g: Graph) -> set[int]:
    """Vertices left after repeatedly deleting vertices of degree <= 1."""
    deg = {v: g.degree(v) for v in g.vertices}
    alive = set(g.vertices)
    queue = deque(v for v in g.vertices if deg[v] <= 1)
    while queue:
        v = queue.popleft()
        if v not in alive:
            continue
        alive.discard(v)
        for y in g.adjacency[v]:
            if y in alive:
                deg[y] -= 1
                if deg[y] <= 1:
                    queue.append(y)
    return alive


def _walk(adj: dict[int, set[int]], start: int, first: int) -> list[int]:
    """Follow degree-2 vertices from ``start`` through ``first`` until a
    vertex of other degree (or ``start``) is reached.  Returns the visited
    vertices after ``start``, ending with the stopping vertex."""
    seq = [first]
    prev, cur = start, first
    while len(adj[cur]) == 2 and cur != start:
        (nxt,) = adj[cur] - {prev}
        prev, cur = cur, nxt
        seq.append(cur)
    return seq


def _cycle_from(adj: dict[int, set[int]], start: int, first: int) -> list[int]:
    return [start] + _walk(adj, start, first)[:-1]


def classify(g: Graph) -> CyclicClassification:
    if not g.is_connected():
        raise GraphError("classify needs a connected graph")
    if g.m == g.n - 1:
        return CyclicClassification("tree")
    if g.m > g.n + 1:
        return CyclicClassification("other")

    core = two_core(g)
    adj = {v: set(g.adjacency[v]) & core for v in core}
    base: dict = {}

    if g.m == g.n:
        start = min(core)
        cycle = _cycle_from(adj, start, min(adj[start]))
        kind = "unicyclic"
        base["cycle"] = cycle
        order = cycle
    else:
        hubs = sorted(v for v in core if len(adj[v]) > 2)
        if len(hubs) == 1:
            u = hubs[0]
            cycles = []
            for first in sorted(adj[u]):
                c = _cycle_from(adj, u, first)
                if set(c) not in [set(x) for x in cycles]:
                    cycles.append(c)
            cycles.sort(key=lambda c: sorted(c))
            kind = "bicyclic-B1"
            base.update(u=u, Cp=cycles[0], Cq=cycles[1])
            order = cycles[0] + cycles[1][1:]
        else:
            a, b = hubs
            loops, links = {}, []
            for hub in (a, b):
                for first in sorted(adj[hub]):
                    seq = _walk(adj, hub, first)
                    if seq[-1] == hub:
                        loops.setdefault(hub, [hub] + seq[:-1])
                    elif hub == a:
                        links.append(seq[:-1])
            if loops:
                ca, cb = loops[a], loops[b]
                if sorted(cb) < sorted(ca):
                    a, b, ca, cb = b, a, cb, ca
                (inner,) = links
                if a != hubs[0]:
                    inner = inner[::-1]
                kind = "bicyclic-B2"
                base.update({"u": a, "v'": b, "Cp": ca, "Cq": cb, "path": [a] + inner + [b]})
                order = ca + [a] + inner + [b] + cb[1:]
                order = list(dict.fromkeys(order))
            else:
                paths = sorted(links, key=lambda p: sorted(p))
                kind = "bicyclic-B3"
                base.update({"u": a, "v'": b, "paths": paths})
                order = [a, b] + [x for p in paths for x in p]

    base_edges = tuple(
        i for i, (x, y) in enumerate(g.edges) if x in core and y in core
    )
    hanging: dict[int, list[HangingTree]] = {}
    for c in order:
        trees = []
        for x in sorted(g.adjacency[c] - core):
            verts, edges = [], [g.edge_index(c, x)]
            seen = {c, x}
            queue = deque([x])
            while queue:
                y = queue.popleft()
                verts.append(y)
                for z in sorted(g.adjacency[y]):
                    if z not in seen:
                        seen.add(z)
                        edges.append(g.edge_index(y, z))
                        queue.append(z)
            trees.append(HangingTree(c, tuple(verts), tuple(sorted(edges))))
        hanging[c] = trees

    k0 = {c: sum(1 for t in ts if t.edge_count % 2 == 0) for c, ts in hanging.items()}
    k1 = {c: sum(1 for t in ts if t.edge_count % 2 == 1) for c, ts in hanging.items()}
    result = CyclicClassification(
        kind=kind,
        base=base,
        base_vertices=tuple(order),
        base_edges=base_edges,
        hanging_trees=hanging,
        k0=k0,
        k1=k1,
    )
    s_values = {"s": sum(k0.values())}
    if kind == "bicyclic-B1":
        s_values["Cp"] = result.s_over(base["Cp"])
        s_values["Cq"] = result.s_over(base["Cq"])
    elif kind == "bicyclic-B2":
        s_values["Cp"] = result.s_over(base["Cp"])
        s_values["Cq"] = result.s_over(base["Cq"])
        s_values["path_inner"] = result.s_over(base["path"][1:-1])
    elif kind == "bicyclic-B3":
        for name, p in zip(("Pp", "Pq", "Pr"), base["paths"]):
            s_values[name] = result.s_over(p)
        s_values["hubs"] = result.s_over([base["u"], base["v'"]])
    result.s_values = s_values
    return result
