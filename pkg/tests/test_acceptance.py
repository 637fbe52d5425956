"""Acceptance criteria 1-11.

Each test prints one line ``CRITERION <n>: PASS|FAIL ...`` and then asserts.
Run ``python3 tests/test_acceptance.py`` for the summary lines alone or
``pytest tests/test_acceptance.py -v -s`` to see them under pytest.
"""

from __future__ import annotations

import itertools
import random
import sys
import time

from twc.choosability import (
    check_12_certificate,
    classify_family,
    find_proper_weighting,
    random_lists,
)
from twc.fixtures import B1_3_3_STORED
from twc.generate import (
    atlas_connected,
    connected_graphs,
    labeled_trees,
    random_connected_graph,
    random_orientation_heads,
    random_tree,
    unicyclic_family_instance,
)
from twc.graph import Graph, classify, family, orient
from twc.matchings import count_pm_line_graph, dong_tree_formula, split_recursion
from twc.matrices import IndexFunction, build_A, build_B, clique_block_extend, edge_label, vertex_label
from twc.permanent import permanent, permanent_mod2, permanent_naive, sachs_permanent
from twc.pind import certify_pindA, pind_exhaustive, proof_orientation, verify_certificate, verify_lemma31


def report(n: int, ok: bool, detail: str, elapsed: float, budget: float | None = None) -> bool:
    within = budget is None or elapsed < budget
    status = "PASS" if ok and within else "FAIL"
    limit = f" (limit {budget:g}s)" if budget is not None else ""
    print(f"CRITERION {n}: {status} {detail} [{elapsed:.2f}s{limit}]")
    return ok and within


def test_criterion_01_two_triangle_matrix():
    start = time.perf_counter()
    stored = permanent(B1_3_3_STORED)
    g = family("b1:3,3")
    values = sorted({abs(permanent(build_B(orient(g, heads)))) for heads in itertools.product(*g.edges)})
    ok = stored == -8 and values == [8]
    detail = f"stored per = {stored} (want -8); |per(B)| over all {2 ** g.m} orientations = {values} (want [8])"
    assert report(1, ok, detail, time.perf_counter() - start, 1.0)


def test_criterion_02_pind_B_at_most_two():
    start = time.perf_counter()
    specs = ["b1:3,3", "b2:3,3,2", "b2:3,3,3", "b2:3,3,4", "b3:1,1,1", "b3:1,1,2"]
    achieved = {}
    for spec in specs:
        res = pind_exhaustive(build_B(orient(family(spec))), 2)
        achieved[spec] = res.achieved
    ok = all(a is not None and a <= 2 for a in achieved.values())
    assert report(2, ok, f"achieved {achieved}", time.perf_counter() - start, 300.0)


def _oracle_extension(g: Graph, heads, labels, attach):
    """B'' built straight from A_{G'} with the glued triangle oriented as e21 = v2->v1,
    e32 = v3->v2, e31 = v3->v1."""
    v1, v2, v3 = attach, g.n + 1, g.n + 2
    gp = Graph(g.n + 2, g.edges + ((v2, v1), (v3, v2), (v3, v1)))
    ap = build_A(orient(gp, tuple(heads) + (v1, v2, v1)))
    col = {lab: j for j, lab in enumerate(ap.col_labels)}
    e21, e32, e31 = (edge_label(g.m + i) for i in range(3))
    rows = []
    for r in list(range(g.m)) + [ap.row_labels.index(e32), ap.row_labels.index(e31), ap.row_labels.index(e21)]:
        row = ap.rows[r]
        rows.append(
            [row[col[lab]] for lab in labels]
            + [row[col[vertex_label(v2)]], row[col[vertex_label(v3)]], row[col[e31]] - row[col[e21]]]
        )
    return rows


def test_criterion_03_triangle_block():
    start = time.perf_counter()
    expected_c = [[1, -1, -2], [0, -1, -1], [-1, 0, 1]]
    c_per = permanent_naive(expected_c)
    rng = random.Random(3)
    block_ok = True
    product_ok = 0
    nonzero = 0
    trials = 0
    while trials < 20:
        g = random_connected_graph(rng, max_edges=5)
        heads = random_orientation_heads(g, rng)
        a = build_A(orient(g, heads))
        labels = [rng.choice(a.col_labels) for _ in range(g.m)]
        bp = a.select_columns(labels)
        attach = rng.randint(1, g.n)
        bpp, _, _ = clique_block_extend(bp, g, attach)
        trials += 1
        block = [list(r[-3:]) for r in bpp.rows[-3:]]
        block_ok &= block == expected_c
        oracle = _oracle_extension(g, heads, labels, attach)
        lhs = permanent_naive(oracle)
        rhs = permanent_naive(bp) * c_per
        product_ok += int(lhs == rhs and [list(r) for r in bpp.rows] == oracle)
        nonzero += int(lhs != 0)
    ok = block_ok and c_per == -4 and product_ok == trials
    detail = f"C block match={block_ok}, per(C)={c_per}, product rule {product_ok}/{trials} ({nonzero} nonzero)"
    assert report(3, ok, detail, time.perf_counter() - start)


def test_criterion_04_dong_formula():
    start = time.perf_counter()
    checked = bad = 0
    for n in (3, 5, 7):
        for t in labeled_trees(n):
            checked += 1
            bad += dong_tree_formula(t) != count_pm_line_graph(t)
    rng = random.Random(4)
    for _ in range(200):
        t = random_tree(9, rng)
        checked += 1
        bad += dong_tree_formula(t) != count_pm_line_graph(t)
    assert report(4, bad == 0, f"{checked} trees, {bad} mismatches", time.perf_counter() - start, 120.0)


def test_criterion_05_split_recursion():
    start = time.perf_counter()
    checked = bad = 0
    graphs = list(connected_graphs(7))
    rng = random.Random(5)
    graphs += [random_connected_graph(rng, max_edges=10) for _ in range(200)]
    for g in graphs:
        for i in range(g.m):
            checked += 1
            bad += not split_recursion(g, i).holds
    detail = f"{len(graphs)} graphs, {checked} edge splits, {bad} failures"
    assert report(5, bad == 0, detail, time.perf_counter() - start, 300.0)


def test_criterion_06_parity_bridge():
    start = time.perf_counter()
    rng = random.Random(6)
    checked = bad = 0
    for g in connected_graphs(7):
        target = count_pm_line_graph(g) % 2
        for _ in range(3):
            checked += 1
            bad += permanent_mod2(build_B(orient(g, random_orientation_heads(g, rng)))) != target
    assert report(6, bad == 0, f"{checked} orientations, {bad} mismatches", time.perf_counter() - start, 300.0)


def test_criterion_07_sachs():
    start = time.perf_counter()
    graphs = atlas_connected(7)
    bad = sum(sachs_permanent(g) != abs(permanent(g.adjacency_matrix())) for g in graphs)
    assert report(7, bad == 0, f"{len(graphs)} graphs, {bad} mismatches", time.perf_counter() - start, 120.0)


def test_criterion_08_orientation_certificates():
    start = time.perf_counter()
    bases = [f"cycle:{l}" for l in range(3, 9)] + ["b1:3,3", "b2:3,3,2", "b3:1,1,2"]
    accepted = []
    for spec in bases:
        g = family(spec)
        po = proof_orientation(g)
        cert = verify_lemma31(
            g, po.X, po.digraph, po.sub_edges, IndexFunction.constant(g), claims=po.claims, stated=po.stated
        )
        accepted.append(cert.certified)
    agree = total = 0
    for g in atlas_connected(7):
        kind = classify(g).kind
        if not ((kind == "unicyclic" and g.m <= 7) or (kind.startswith("bicyclic") and g.m <= 8)):
            continue
        total += 1
        cert = certify_pindA(g)
        agree += bool(verify_certificate(cert)) and pind_exhaustive(build_A(orient(g)), 1).achieved == 1
    ok = all(accepted) and agree == total
    detail = f"bases accepted {sum(accepted)}/{len(bases)}; certify vs exhaustive {agree}/{total}"
    assert report(8, ok, detail, time.perf_counter() - start)


def test_criterion_09_unicyclic_family_parity():
    start = time.perf_counter()
    rng = random.Random(9)
    odd_family = [unicyclic_family_instance(rng, 1) for _ in range(50)]
    even_family = [unicyclic_family_instance(rng, 0) for _ in range(50)]
    assert all(classify_family(g).family == "U1" for g in odd_family)
    assert all(classify_family(g).family == "U2" for g in even_family)
    odd_counts = [count_pm_line_graph(g) for g in odd_family]
    even_counts = [count_pm_line_graph(g) for g in even_family]
    odd_ok = sum(c % 2 == 1 for c in odd_counts)
    even_ok = sum(c % 2 == 0 for c in even_counts)
    detail = (
        f"U1 odd {odd_ok}/50 (sample counts {odd_counts[:5]}), U2 even {even_ok}/50"
    )
    assert report(9, odd_ok == 50 and even_ok == 50, detail, time.perf_counter() - start)


def _pindA_certified(g: Graph) -> bool:
    if g.m <= g.n + 1:
        return verify_certificate(certify_pindA(g))
    return pind_exhaustive(build_A(orient(g)), 1).achieved == 1


def test_criterion_10_choosability_sampling():
    start = time.perf_counter()
    rng = random.Random(10)
    graphs = [g for g in connected_graphs(5) if g.m >= 1]
    g22 = [g for g in graphs if _pindA_certified(g)]
    g12 = [g for g in graphs if check_12_certificate(g).certified]
    failures = []
    samples = 0
    for kind, pool in (((2, 2), g22), ((1, 2), g12)):
        for g in pool:
            for _ in range(100):
                lists = random_lists(g, *kind, rng, max_denominator=4)
                samples += 1
                w = find_proper_weighting(g, lists)
                if w is None or not (w.proper() and lists.admits(w)):
                    failures.append((kind, g.edges))
    detail = f"(2,2) on {len(g22)} graphs, (1,2) on {len(g12)} graphs, {samples} samples, {len(failures)} failures"
    assert report(10, not failures and g22 and g12, detail, time.perf_counter() - start)


def test_criterion_11_ryser_vs_naive():
    start = time.perf_counter()
    rng = random.Random(11)
    bad = 0
    for _ in range(200):
        n = rng.randint(1, 7)
        m = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        bad += permanent(m) != permanent_naive(m)
    assert report(11, bad == 0, f"200 matrices, {bad} mismatches", time.perf_counter() - start)


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
