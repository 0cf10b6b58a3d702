"""Acceptance criteria, one test per criterion.

Each test records a single ``[criterion k] PASS|FAIL ...`` line, which is
printed during the run and repeated in the terminal summary.
"""

import itertools
import time

import numpy as np
from conftest import record

from borsukoid.coloring import (
    borsuk_number,
    chromatic_number,
    cocircuit_coloring,
    coloring_to_certificate,
    has_disjoint_pair_avoiding,
    direct_sum_partition,
    kneser_standard_coloring,
    rankr_bound,
    rankr_partition,
    series_partition,
    theta_partition,
    validate_certificate,
)
from borsukoid.families import (
    catalan,
    catalan_minus,
    complete_graph,
    fano,
    figure_attach,
    figure_host,
    figure_insert,
    graphic,
    non_pappus,
    theta,
    uniform,
    vertex_replacement,
)
from borsukoid.graphs import (
    categorical_product,
    classical_kneser,
    kneser_graph,
    schrijver_graph,
    sum_to_product_order,
)
from borsukoid.matroid import (
    cocircuits,
    diameter,
    direct_sum,
    dual,
    incidence_vector,
    is_connected,
    parallel_connection,
    series_connection,
)
from borsukoid.matroid import min_basis_intersection
from borsukoid.verify import catalog, has_strong_bip, sweep


def criterion(k, ok, detail, elapsed, limit):
    within = elapsed <= limit
    status = "PASS" if ok and within else "FAIL"
    record(f"[criterion {k}] {status} {detail} ({elapsed:.1f}s, limit {limit}s)")
    assert ok, detail
    assert within, f"took {elapsed:.1f}s, limit {limit}s"


def exact_chi(G):
    """Exact value, a proper coloring at that value re-checked by edge scan."""
    res = chromatic_number(G)
    assert res.exact
    a = res.coloring.assignment
    assert all(a[i] != a[j] for i, j in G.edges())
    assert res.coloring.k == res.upper
    return res.upper


def test_criterion_1_pappus():
    t = time.perf_counter()
    chis = {}
    for name, M in (("F7", fano()), ("non-Pappus", non_pappus())):
        s = time.perf_counter()
        chis[name] = exact_chi(kneser_graph(M))
        assert time.perf_counter() - s <= 60
    ok = chis == {"F7": 3, "non-Pappus": 5}
    criterion(1, ok, f"chi(KG(F7))={chis['F7']} chi(KG(non-Pappus))={chis['non-Pappus']}", time.perf_counter() - t, 120)


def test_criterion_2_catalan():
    t = time.perf_counter()
    found = []
    ok = True
    for r, m in [(2, 3), (2, 4), (3, 5)]:
        a, b = exact_chi(kneser_graph(catalan(r, m))), exact_chi(kneser_graph(catalan_minus(r, m)))
        found.append(f"({r},{m}):{a},{b}")
        ok &= a == b == m - r + 2
    criterion(2, ok, "chi(KG(C)) chi(KG(C-)) = m-r+2 " + " ".join(found), time.perf_counter() - t, 180)


def test_criterion_3_kneser_schrijver():
    t = time.perf_counter()
    found = []
    ok = True
    for n, r in [(5, 2), (6, 2), (7, 3)]:
        k, s = exact_chi(classical_kneser(n, r)), exact_chi(schrijver_graph(n, r))
        found.append(f"({n},{r}):{k},{s}")
        ok &= k == s == n - 2 * r + 2
    criterion(3, ok, "chi(KG(n,r)) = chi(SG(n,r)) = n-2r+2 " + " ".join(found), time.perf_counter() - t, 120)


def test_criterion_4_theta():
    t = time.perf_counter()
    f1 = borsuk_number(theta(1)).value
    small = [borsuk_number(theta(n)).value for n in (2, 3, 4)]
    ok = f1 == float("inf") and small == [2, 2, 2]
    sizes = []
    for n in (5, 6):
        M = theta(n)
        cert = theta_partition(n)
        ok &= bool(validate_certificate(M, cert)) and len(cert) <= n - 2
        sizes.append(len(cert))
    criterion(4, ok, f"f(T1)={f1} f(T2..4)={small} theta_partition sizes (n=5,6)={sizes}", time.perf_counter() - t, 120)


def test_criterion_5_figure():
    t = time.perf_counter()
    H, v0 = figure_host()
    G = vertex_replacement(H, v0, figure_insert(), figure_attach())
    M = graphic(G)
    edgeless = kneser_graph(M).edge_count == 0
    f = borsuk_number(M).value
    fh = borsuk_number(graphic(complete_graph(3))).value
    conn, sbip = is_connected(M), has_strong_bip(M)
    ok = edgeless and f == 3 and conn and sbip and f <= fh
    criterion(5, ok, f"KG edgeless={edgeless} f(M(G))={f} connected={conn} strong_bip={sbip} f(M(K3))={fh}", time.perf_counter() - t, 120)


def test_criterion_6_sweep():
    t = time.perf_counter()
    pairs = [(n, r) for n in range(6) for r in range(n + 1)] + [(6, 2), (6, 3)]
    s = sweep(pairs)
    ok = s.clean
    detail = f"{s.matroids} matroids, {s.with_two_bases} with two bases, counts={s.counts}, violators={len(s.violators)}"
    criterion(6, ok, detail, time.perf_counter() - t, 600)


def _referee_catalog():
    cat = [M for M in catalog() if len(M.bases) >= 2]
    assert len(cat) >= 20
    return cat


def test_criterion_7_referee():
    t = time.perf_counter()
    checked = 0
    bad = []

    def check(M, cert, what):
        nonlocal checked
        checked += 1
        if not validate_certificate(M, cert):
            bad.append(f"{what} on {M.name}")

    cat = _referee_catalog()
    for M in cat:
        G = kneser_graph(M)
        disjoint = diameter(M) == 2 * M.rank
        for C in cocircuits(M):
            col = cocircuit_coloring(M, C)
            if not col.is_proper(G) or col.k > C.bit_count():
                bad.append(f"cocircuit coloring on {M.name}")
            if disjoint:
                check(M, coloring_to_certificate(M, col), "cocircuit coloring")
        if M.n >= 2 * M.rank - 1 and M.rank >= 1:
            col = kneser_standard_coloring(M.n, M.rank, M)
            if not col.is_proper(G) or col.k > max(1, M.n - 2 * M.rank + 2):
                bad.append(f"standard coloring on {M.name}")
            if disjoint:
                check(M, coloring_to_certificate(M, col), "standard coloring")
        if is_connected(M) and min_basis_intersection(M) > 0:
            cert = rankr_partition(M)
            check(M, cert, "rankr")
            if len(cert) > rankr_bound(M.rank):
                bad.append(f"rankr size on {M.name}")
    for n in (5, 6):
        check(theta(n), theta_partition(n), "theta")
    small = [M for M in cat if len(M.bases) <= 30]
    for M, N in itertools.islice(itertools.product(small[:8], small[:5]), 40):
        check(direct_sum(M, N), direct_sum_partition(M, N, borsuk_number(M).certificate), "direct sum")
    triples = [(uniform(2, 4), 1, uniform(2, 4), 1), (uniform(3, 4), 1, uniform(1, 4), 1), (uniform(2, 5), 1, uniform(1, 3), 1), (theta(3), "x1", uniform(2, 3), 1)]
    for M, p, N, q in triples:
        cm, cn = borsuk_number(M).certificate, borsuk_number(N).certificate
        S = series_connection(M, p, N, q)
        check(S, series_partition(M, p, N, q, cm, cn), "series sum")
        if has_disjoint_pair_avoiding(M, M.index_of(p)):
            check(S, series_partition(M, p, N, q, cm, cn, variant="min"), "series min")
    ok = not bad
    criterion(7, ok, f"{checked} certificates over {len(cat)} catalog matroids, failures={bad[:3]}", time.perf_counter() - t, 120)


def test_criterion_8_identities():
    t = time.perf_counter()
    ok = all(dual(dual(M)) == M for M in catalog())
    ser_par = [(uniform(2, 4), 1, uniform(1, 3), 1), (theta(3), "x1", uniform(2, 4), 2), (uniform(2, 3), 1, fano(), 1)]
    ok &= all(dual(series_connection(M, p, N, q)).bases == parallel_connection(dual(M), p, dual(N), q).bases for M, p, N, q in ser_par)
    pairs = [(uniform(2, 4), uniform(1, 3)), (theta(2), uniform(2, 3)), (fano(), uniform(1, 2))]
    ok &= all(diameter(direct_sum(M, N)) == diameter(M) + diameter(N) for M, N in pairs + [(theta(3), fano())])
    ok &= all(
        kneser_graph(direct_sum(M, N)).permuted(sum_to_product_order(M, N)) == categorical_product(kneser_graph(M), kneser_graph(N))
        for M, N in pairs
    )
    for M in [fano(), theta(4), uniform(3, 6), catalan(2, 4), graphic(complete_graph(4))]:
        X = np.array([incidence_vector(M, b) for b in M.bases], dtype=np.int64)
        sq = ((X[:, None, :] - X[None, :, :]) ** 2).sum(axis=2)
        sym = np.array([[(a ^ b).bit_count() for b in M.bases] for a in M.bases])
        ok &= bool(np.array_equal(sq, sym))
    criterion(8, ok, "dual involution, Ser/Par duality x3, diameter additivity, KG product x3, incidence distance x5", time.perf_counter() - t, 60)


def test_criterion_9_series():
    t = time.perf_counter()
    rows = []
    ok = True
    for M, p, N, q in [(uniform(2, 4), 1, uniform(2, 4), 1), (uniform(2, 5), 1, uniform(1, 3), 1), (uniform(2, 5), 1, uniform(2, 4), 1)]:
        fs = borsuk_number(series_connection(M, p, N, q)).value
        fm, fn = borsuk_number(M).value, borsuk_number(N).value
        ok &= fs <= fm + fn
        avoid = has_disjoint_pair_avoiding(M, M.index_of(p))
        if avoid:
            ok &= fs <= min(fm, fn)
        rows.append(f"Ser({M.name},{N.name})={fs} f(M)={fm} f(N)={fn} avoid={avoid}")
    assert any("avoid=True" in r for r in rows)
    criterion(9, ok, "; ".join(rows), time.perf_counter() - t, 120)
