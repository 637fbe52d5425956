"""Perfect-matching counts, in particular M(L(G)), plus Dong's tree product
formula and the edge-split recursion."""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import config
from .errors import GraphError, ResourceLimitError
from .graph import Graph, edge_split, line_graph

__all__ = [
    "count_perfect_matchings",
    "count_pm_line_graph",
    "even_component_count",
    "double_factorial_even",
    "dong_tree_formula",
    "SplitRecord",
    "split_recursion",
]


def count_perfect_matchings(g: Graph, *, max_vertices: int | None = None) -> int:
    """Backtrack on the lowest unsaturated vertex, memoised on the set of
    unsaturated vertices."""
    if g.n % 2:
        return 0
    cap = max_vertices if max_vertices is not None else config.matching_vertex_cap()
    if g.n > cap:
        raise ResourceLimitError(f"matching count limited to {cap} vertices, got {g.n}")
    nbr = [0] * g.n
    for u, v in g.edges:
        nbr[u - 1] |= 1 << (v - 1)
        nbr[v - 1] |= 1 << (u - 1)
    memo: dict[int, int] = {0: 1}

    def count(free: int) -> int:
        hit = memo.get(free)
        if hit is not None:
            return hit
        low = free & -free
        v = low.bit_length() - 1
        rest = free ^ low
        options = nbr[v] & rest
        total = 0
        while options:
            b = options & -options
            total += count(rest ^ b)
            options ^= b
        memo[free] = total
        return total

    return count((1 << g.n) - 1)


def count_pm_line_graph(g: Graph) -> int:
    if g.m < 1:
        raise GraphError("M(L(G)) needs at least one edge")
    if g.m % 2:
        return 0
    return count_perfect_matchings(line_graph(g))


def _components_after_removal(g: Graph, removed: set[int]) -> list[tuple[int, int]]:
    """(vertex count, edge count) per component of g minus ``removed``."""
    parent = {v: v for v in g.vertices if v not in removed}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    kept = [(u, v) for u, v in g.edges if u not in removed and v not in removed]
    for u, v in kept:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    verts: dict[int, int] = {}
    edges: dict[int, int] = {}
    for v in parent:
        r = find(v)
        verts[r] = verts.get(r, 0) + 1
    for u, _ in kept:
        r = find(u)
        edges[r] = edges.get(r, 0) + 1
    return [(verts[r], edges.get(r, 0)) for r in verts]


def even_component_count(g: Graph, removed: set[int] | frozenset[int] = frozenset()) -> int:
    """p(G): components with an even number of edges (isolated vertices count).

    ``removed`` deletes vertices first, so ``even_component_count(T, {v})``
    is p(T - v).
    """
    return sum(1 for _, e in _components_after_removal(g, set(removed)) if e % 2 == 0)


def double_factorial_even(p: int) -> int:
    """(2k)!/(k! 2^k) for p = 2k, i.e. 1*3*...*(2k-1); 1 for p = 0."""
    if p < 0 or p % 2:
        raise ValueError(f"double_factorial_even needs an even non-negative argument, got {p}")
    k = p // 2
    return math.factorial(2 * k) // (math.factorial(k) * 2**k)


def dong_tree_formula(t: Graph) -> int:
    """M(L(T)) for a tree of odd order as the product of p(T - v)!! over v."""
    if t.m != t.n - 1 or not t.is_connected():
        raise GraphError("dong_tree_formula needs a tree")
    if t.n % 2 == 0 or t.n < 3:
        raise GraphError(f"dong_tree_formula needs odd order n > 1, got n={t.n}")
    out = 1
    for v in t.vertices:
        out *= double_factorial_even(even_component_count(t, {v}))
    return out


@dataclass(frozen=True)
class SplitRecord:
    edge: int
    u: int
    v: int
    lhs: int
    rhs_u: int
    rhs_v: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs_u + self.rhs_v


def split_recursion(g: Graph, e: int) -> SplitRecord:
    """M(L(G)) next to M(L(G(u,w))) and M(L(G(v,w))) for edge e = uv."""
    if not 0 <= e < g.m:
        raise GraphError(f"edge index {e} out of range for {g.m} edges")
    u, v = g.edges[e]
    return SplitRecord(
        edge=e,
        u=u,
        v=v,
        lhs=count_pm_line_graph(g),
        rhs_u=count_pm_line_graph(edge_split(g, e, u)),
        rhs_v=count_pm_line_graph(edge_split(g, e, v)),
    )
