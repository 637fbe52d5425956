"""Sufficient conditions for (1,2)-choosability, the unicyclic/bicyclic family
classifier, and search for proper total weightings from concrete lists."""

from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import config
from .certificate import Certificate
from .errors import GraphError, ResourceLimitError, VerificationError
from .graph import Graph, OrientedGraph, classify, orient
from .matchings import count_pm_line_graph
from .matrices import build_B
from .permanent import permanent, permanent_mod2

log = logging.getLogger(__name__)

__all__ = [
    "TotalListAssignment",
    "TotalWeighting",
    "check_12_certificate",
    "verify_12_certificate",
    "FamilyVerdict",
    "classify_family",
    "find_proper_weighting",
    "extend_weighting_clique",
    "random_lists",
    "to_fraction",
]


def to_fraction(x) -> Fraction:
    """Exact rational from an int, Fraction, or a ``p/q`` / decimal string.
    Floats are refused so that no binary rounding sneaks in."""
    if isinstance(x, float):
        raise TypeError("weights must be exact; pass a string or Fraction instead of a float")
    return Fraction(x)


def _distinct(values: Sequence[Fraction]) -> bool:
    return len(set(values)) == len(values)


@dataclass(frozen=True)
class TotalListAssignment:
    """Lists L(v) for every vertex and L(e) for every edge (by edge index)."""

    graph: Graph
    vertex_lists: Mapping[int, tuple[Fraction, ...]]
    edge_lists: Mapping[int, tuple[Fraction, ...]]

    def __post_init__(self):
        g = self.graph
        vl = {int(v): tuple(to_fraction(x) for x in xs) for v, xs in self.vertex_lists.items()}
        el = {int(i): tuple(to_fraction(x) for x in xs) for i, xs in self.edge_lists.items()}
        object.__setattr__(self, "vertex_lists", vl)
        object.__setattr__(self, "edge_lists", el)
        if set(vl) != set(g.vertices):
            raise GraphError(f"vertex lists must cover exactly vertices 1..{g.n}")
        if set(el) != set(range(g.m)):
            raise GraphError(f"edge lists must cover exactly the {g.m} edges")
        for v, xs in vl.items():
            if not xs or not _distinct(xs):
                raise GraphError(f"list at vertex {v} must be non-empty with distinct values")
        for i, xs in el.items():
            if not xs or not _distinct(xs):
                raise GraphError(f"list at edge {g.edges[i]} must be non-empty with distinct values")
        if len({len(xs) for xs in vl.values()}) > 1:
            raise GraphError("vertex lists must all have the same size")
        if len({len(xs) for xs in el.values()}) > 1:
            raise GraphError("edge lists must all have the same size")

    @property
    def k(self) -> int:
        return len(next(iter(self.vertex_lists.values())))

    @property
    def kp(self) -> int:
        return len(next(iter(self.edge_lists.values()))) if self.edge_lists else 0

    def space_size(self) -> int:
        return math.prod(len(x) for x in self.vertex_lists.values()) * math.prod(
            len(x) for x in self.edge_lists.values()
        )

    def admits(self, w: "TotalWeighting") -> bool:
        return all(w.vertex[v] in self.vertex_lists[v] for v in self.graph.vertices) and all(
            w.edge[i] in self.edge_lists[i] for i in range(self.graph.m)
        )

    def to_dict(self) -> dict:
        return {
            "V": {str(v): [str(x) for x in xs] for v, xs in sorted(self.vertex_lists.items())},
            "E": {
                f"{u},{v}": [str(x) for x in self.edge_lists[i]]
                for i, (u, v) in enumerate(self.graph.edges)
            },
        }


@dataclass
class TotalWeighting:
    graph: Graph
    vertex: dict[int, Fraction]
    edge: dict[int, Fraction]
    source: str = "search"

    def sums(self) -> dict[int, Fraction]:
        s = dict(self.vertex)
        for i, (u, v) in enumerate(self.graph.edges):
            s[u] += self.edge[i]
            s[v] += self.edge[i]
        return s

    def conflicts(self) -> list[tuple[int, int]]:
        s = self.sums()
        return [(u, v) for u, v in self.graph.edges if s[u] == s[v]]

    def proper(self) -> bool:
        return not self.conflicts()

    def to_dict(self) -> dict:
        return {
            "vertex": {str(v): str(x) for v, x in sorted(self.vertex.items())},
            "edge": {f"{u},{v}": str(self.edge[i]) for i, (u, v) in enumerate(self.graph.edges)},
            "sums": {str(v): str(x) for v, x in sorted(self.sums().items())},
            "proper": self.proper(),
            "source": self.source,
        }


def random_lists(
    g: Graph,
    k: int,
    kp: int,
    rng: random.Random,
    lo: int = -10,
    hi: int = 10,
    max_denominator: int = 1,
) -> TotalListAssignment:
    """Lists of distinct rationals p/q in [lo, hi] with q <= max_denominator."""
    pool = sorted({Fraction(a, q) for q in range(1, max_denominator + 1) for a in range(lo * q, hi * q + 1)})
    return TotalListAssignment(
        g,
        {v: tuple(rng.sample(pool, k)) for v in g.vertices},
        {i: tuple(rng.sample(pool, kp)) for i in range(g.m)},
    )


# ---------------------------------------------------------------------------
# (1,2) certificates
# ---------------------------------------------------------------------------


def check_12_certificate(g: Graph, d: OrientedGraph | None = None) -> Certificate:
    """Certify (1,2)-choosability from per(B_G) != 0.

    Within the permanent cap the exact permanent decides; a zero permanent
    forces M(L(G)) even, so the verdict is inconclusive.  Beyond the cap only
    the parity of per(B_G) (equal to that of M(L(G))) is computed, by
    elimination over GF(2); an odd value certifies.
    """
    if g.m < 1:
        raise GraphError("check_12_certificate needs at least one edge")
    d = d if d is not None else orient(g)
    if d.graph != g:
        raise GraphError("orientation does not belong to this graph")
    b = build_B(d)
    witness = {"graph": g.to_dict(), "heads": list(d.heads)}
    claim = "(1,2)-choosable"
    if g.m <= config.permanent_side_cap():
        value = permanent(b)
        if value:
            return Certificate(claim, "permanent", witness, [], value)
        trace: list = [{"note": "per(B_G) = 0, so M(L(G)) is even; no conclusion"}]
        if g.m <= config.matching_vertex_cap():
            trace.append({"M(L(G)) mod 2": count_pm_line_graph(g) % 2})
        return Certificate(claim, "permanent", witness, trace, 0, status="inconclusive")
    parity = permanent_mod2(b)
    if parity:
        return Certificate(claim, "parity", witness, [{"per(B_G) mod 2": 1}], None)
    raise ResourceLimitError(
        f"per(B_G) is even and m = {g.m} exceeds the permanent cap {config.permanent_side_cap()}",
        {"m": g.m, "parity": 0},
    )


def verify_12_certificate(cert: Certificate) -> bool:
    w = cert.witness
    g = Graph(int(w["graph"]["n"]), tuple(tuple(e) for e in w["graph"]["edges"]))
    b = build_B(orient(g, w["heads"]))
    if cert.method == "permanent":
        value = permanent(b)
        if value == 0 or value != cert.permanent_value:
            raise VerificationError("per(B_G) is nonzero", detail=f"recomputed {value}")
        return True
    if cert.method == "parity":
        # independent route: the matching count has the same parity
        if count_pm_line_graph(g) % 2 != 1:
            raise VerificationError("M(L(G)) is odd")
        return True
    raise VerificationError("known (1,2) method", detail=cert.method)


# ---------------------------------------------------------------------------
# family classification
# ---------------------------------------------------------------------------


@dataclass
class FamilyVerdict:
    kind: str
    family: str | None
    predicted_parity: str | None
    constraints: dict[str, bool] = field(default_factory=dict)
    details: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def outside(self) -> bool:
        return self.family is None

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "family": self.family if self.family else "outside defined families",
            "predicted_M(L)_parity": self.predicted_parity,
            "constraints": dict(self.constraints),
            "details": self.details,
            "notes": list(self.notes),
        }


def _parity(x: int) -> str:
    return "odd" if x % 2 else "even"


def _side_edges(g: Graph, cut: tuple[int, int], side: int) -> int:
    """Edges in the component of ``side`` after removing edge ``cut``."""
    drop = g.edge_index(*cut)
    h = g.without_edges([drop])
    comp = next(c for c in h.components() if side in c)
    inside = set(comp)
    return sum(1 for a, b in h.edges if a in inside and b in inside)


def b3_path_roles(paths: Sequence[Sequence[int]]) -> tuple[list, list, list]:
    """(P_p, P_q, P_r) among the three hub-to-hub paths: P_r is the one with
    the fewest internal vertices (last such on ties)."""
    paths = [list(p) for p in paths]
    r_idx = min(range(3), key=lambda i: (len(paths[i]), -i))
    pr = paths.pop(r_idx)
    return paths[0], paths[1], pr


def classify_family(g: Graph) -> FamilyVerdict:
    cls = classify(g)
    if cls.kind in ("tree", "other"):
        raise GraphError(f"classify_family needs a unicyclic or bicyclic graph, got {cls.kind}")
    tree_sizes = [t.edge_count for ts in cls.hanging_trees.values() for t in ts]
    constraints = {
        "hanging trees have >= 2 edges": all(s >= 2 for s in tree_sizes),
    }
    details: dict = {"s_values": dict(cls.s_values), "hanging_tree_sizes": sorted(tree_sizes)}
    notes: list[str] = []

    if cls.kind == "unicyclic":
        constraints["n even"] = g.n % 2 == 0
        s = cls.s_values["s"]
        details["s"] = s
        if not all(constraints.values()):
            return FamilyVerdict(cls.kind, None, None, constraints, details)
        fam, pred = ("U1", "odd") if s % 2 else ("U2", "even")
        return FamilyVerdict(cls.kind, fam, pred, constraints, details)

    constraints["n odd"] = g.n % 2 == 1
    constraints["m even"] = g.m % 2 == 0
    b = cls.base
    fam = None

    if cls.kind == "bicyclic-B1":
        u, cq = b["u"], b["Cq"]
        s1 = cls.s_over(cq)
        drop_trees = sum(t.edge_count for v in cq[1:] for t in cls.hanging_trees.get(v, []))
        m_bprime = g.m - len(cq) - drop_trees
        details.update(s1=s1, s1_over="Cq", **{"m(B')": m_bprime, "case": 1 if m_bprime % 2 == 0 else 2})
        notes.append("B1 membership has no parity condition on s1; s1 parity is reported only")
        fam = "B1"
    elif cls.kind == "bicyclic-B2":
        u, vp, path = b["u"], b["v'"], b["path"]
        z = path[1]
        m_uw = _side_edges(g, (u, z), u) + 1
        m_zw = _side_edges(g, (u, z), z) + 1
        s_cp, s_cq = cls.s_over(b["Cp"]), cls.s_over(b["Cq"])
        details.update(
            **{"m(B(u,w))": m_uw, "m(B(z,w))": m_zw, "s1(Cp)": s_cp, "s1(Cq)": s_cq, "split_edge": [u, z]}
        )
        notes.append("m(B(u,w)) counts the u side of the split edge plus the new pendant edge")
        if len(path) == 2:
            ok = s_cp % 2 == 1 if m_uw % 2 == 0 else s_cq % 2 == 1
            constraints["s1 odd over Cp if m(B(u,w)) even, else over Cq"] = ok
            fam = "B2"
        else:
            ok = (m_uw % 2 == 0 and s_cp % 2 == 1) or (m_uw % 2 == 1 and s_cq % 2 == 0)
            constraints["m(B(u,w)) even with s1(Cp) odd, or odd with s1(Cq) even"] = ok
            fam = "B3"
    else:  # bicyclic-B3
        u, vp = b["u"], b["v'"]
        pp, pq, pr = b3_path_roles(b["paths"])
        s1 = cls.s_over(list(pp) + list(pq) + [u, vp])
        m_bprime = len(pr) + 1 + sum(t.edge_count for v in pr for t in cls.hanging_trees.get(v, []))
        details.update(s1=s1, **{"m(B')": m_bprime, "case": 1 if m_bprime % 2 == 0 else 2, "Pr": pr})
        notes.append("B4 membership has no parity condition on s1; s1 parity is reported only")
        fam = "B4"

    if not all(constraints.values()):
        return FamilyVerdict(cls.kind, None, None, constraints, details, notes)
    return FamilyVerdict(cls.kind, fam, "odd", constraints, details, notes)


# ---------------------------------------------------------------------------
# weighting search
# ---------------------------------------------------------------------------


def find_proper_weighting(
    g: Graph,
    lists: TotalListAssignment,
    *,
    probe: dict | None = None,
    max_space: int | None = None,
) -> TotalWeighting | None:
    """Depth-first search over the product of lists: edge weights first, then
    vertex weights in vertex order.  Once vertex v is weighted its sum is
    final, so any earlier neighbour with the same sum cuts the branch.

    ``probe`` (if given) receives ``covered``: the number of complete
    assignments accounted for, either visited or inside a pruned branch.
    When the search fails, ``covered`` equals the size of the product space.
    """
    if lists.graph != g:
        raise GraphError("list assignment belongs to a different graph")
    total = lists.space_size()
    cap = max_space if max_space is not None else config.WEIGHTING_SPACE
    if total > cap:
        raise ResourceLimitError(f"weighting space {total} exceeds cap {cap}", {"space": total})

    edge_lists = [lists.edge_lists[i] for i in range(g.m)]
    vert_lists = [lists.vertex_lists[v] for v in g.vertices]
    # suffix products of remaining choices, for the probe
    sizes = [len(x) for x in edge_lists] + [len(x) for x in vert_lists]
    after = [1] * (len(sizes) + 1)
    for i in range(len(sizes) - 1, -1, -1):
        after[i] = after[i + 1] * sizes[i]
    counter = {"covered": 0}

    fe: list[Fraction] = [Fraction(0)] * g.m
    fv: dict[int, Fraction] = {}
    base = {v: Fraction(0) for v in g.vertices}
    sums: dict[int, Fraction] = {}
    earlier = {v: [u for u in g.adjacency[v] if u < v] for v in g.vertices}

    def vertex_phase(v: int) -> bool:
        if v > g.n:
            counter["covered"] += 1
            return True
        depth = g.m + v - 1
        for x in vert_lists[v - 1]:
            s = base[v] + x
            if any(sums[u] == s for u in earlier[v]):
                counter["covered"] += after[depth + 1]
                continue
            fv[v] = x
            sums[v] = s
            if vertex_phase(v + 1):
                return True
        return False

    def edge_phase(i: int) -> bool:
        if i == g.m:
            return vertex_phase(1)
        a, b = g.edges[i]
        for x in edge_lists[i]:
            fe[i] = x
            base[a] += x
            base[b] += x
            found = edge_phase(i + 1)
            base[a] -= x
            base[b] -= x
            if found:
                return True
        return False

    found = edge_phase(0)
    if probe is not None:
        probe["covered"] = counter["covered"]
        probe["space"] = total
    if not found:
        return None
    return TotalWeighting(g, dict(fv), {i: fe[i] for i in range(g.m)})


def extend_weighting_clique(
    gpp: Graph,
    w: TotalWeighting,
    attach: int,
    k: int,
    lists: TotalListAssignment,
) -> TotalWeighting | None:
    """Extend a proper weighting of G'' to G' = G'' plus a vertex v_k joined
    to the clique K_{k-1} formed by ``attach`` and the last k-2 vertices of
    G''.

    First the shifting construction: pick weights w_i for the new edges
    v_i v_k such that w(v_i) - w_i is in L(v_i), which keeps every clique
    sum unchanged, then pick f(v_k) from its list to avoid all clique sums.
    Next, a local search over the clique's vertex lists, the new edges and
    L(v_k), with everything else kept.  If both fail, a warning is logged
    and the whole graph is searched from scratch.
    """
    if k < 2:
        raise GraphError("clique order k must be at least 2")
    clique = [attach] + list(range(gpp.n - k + 3, gpp.n + 1))
    if len(set(clique)) != k - 1 or any(not 1 <= v <= gpp.n for v in clique):
        raise GraphError(f"cannot form K_{k - 1} from attach vertex {attach} and the last {k - 2} vertices")
    for i, a in enumerate(clique):
        for b in clique[i + 1:]:
            if not gpp.has_edge(a, b):
                raise GraphError(f"vertices {clique} do not form a clique (missing {a}-{b})")
    if w.graph != gpp:
        raise GraphError("weighting does not belong to G''")
    vk = gpp.n + 1
    gp = Graph(vk, gpp.edges + tuple((v, vk) for v in clique))
    if lists.graph != gp:
        raise GraphError("list assignment must be for the extended graph")
    if not w.proper():
        raise GraphError("weighting of G'' is not proper")
    new_idx = list(range(gpp.m, gp.m))
    old_sums = w.sums()

    def assemble(vert_over: Mapping[int, Fraction], edge_over: Mapping[int, Fraction], source: str):
        vertex = dict(w.vertex)
        vertex.update(vert_over)
        edge = dict(w.edge)
        edge.update(edge_over)
        return TotalWeighting(gp, vertex, edge, source)

    def product(seqs: Sequence[Sequence[Fraction]]):
        if not seqs:
            yield ()
            return
        for x in seqs[0]:
            for rest in product(seqs[1:]):
                yield (x,) + rest

    # shifting construction
    new_lists = [lists.edge_lists[i] for i in new_idx]
    for ws in product(new_lists):
        shifted = {v: w.vertex[v] - x for v, x in zip(clique, ws)}
        if any(shifted[v] not in lists.vertex_lists[v] for v in clique):
            continue
        taken = {old_sums[v] for v in clique}
        for fk in lists.vertex_lists[vk]:
            if fk + sum(ws) not in taken:
                cand = assemble({**shifted, vk: fk}, dict(zip(new_idx, ws)), "construction")
                if cand.proper() and lists.admits(cand):
                    return cand

    # local search around the clique
    clique_lists = [lists.vertex_lists[v] for v in clique]
    for fv in product(clique_lists):
        for ws in product(new_lists):
            for fk in lists.vertex_lists[vk]:
                cand = assemble({**dict(zip(clique, fv)), vk: fk}, dict(zip(new_idx, ws)), "local-search")
                if cand.proper() and lists.admits(cand):
                    return cand

    log.warning("clique extension failed at attach vertex %s (k=%s); searching the whole graph", attach, k)
    found = find_proper_weighting(gp, lists)
    if found is not None:
        found.source = "fallback"
    return found
