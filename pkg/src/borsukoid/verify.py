"""Property checkers, the claim registry, exhaustive enumeration and the
counterexample search."""

from __future__ import annotations

import math
import random
import re
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

import numpy as np

from . import _kernels as K
from .coloring import (
    INFINITE,
    borsuk_number,
    chromatic_number,
    cocircuit_coloring,
    direct_sum_partition,
    has_borsuk_property,
    has_disjoint_pair_avoiding,
    kneser_standard_coloring,
    make_certificate,
    rankr_bound,
    rankr_partition,
    series_partition,
    theta_partition,
    validate_certificate,
)
from .errors import BadParams, BudgetExhausted, TooLarge, UnknownClaim
from .families import (
    SimpleGraph,
    catalan,
    catalan_minus,
    complete_graph,
    cycle_graph,
    fano,
    figure_attach,
    figure_host,
    figure_insert,
    graphic,
    non_pappus,
    theta,
    triangle_with_loop,
    uniform,
    v_line,
    vertex_replacement,
)
from .graphs import (
    categorical_product,
    kneser_graph,
    schrijver_graph,
    subgraph_embedding_exists,
    sum_to_product_order,
)
from .io import graph_to_json, matroid_to_json
from .matroid import (
    Matroid,
    all_subsets,
    bits,
    cocircuits,
    coloops,
    direct_sum,
    dual,
    from_masks,
    is_connected,
    loops,
    min_basis_intersection,
    num_components,
    parallel_connection,
    series_connection,
)

PASS, FAIL, INCONCLUSIVE, NA = "PASS", "FAIL", "INCONCLUSIVE", "NA"
STATUSES = (PASS, FAIL, INCONCLUSIVE, NA)
MAX_ENUMERATION_ELEMENTS = 6


# ---------------------------------------------------------------------------
# properties


def has_two_disjoint_bases(M: Matroid) -> bool:
    return len(M.bases) >= 2 and min_basis_intersection(M) == 0


def has_bip(M: Matroid) -> bool:
    """Every two distinct bases intersect (no edge in the Kneser graph)."""
    return not has_two_disjoint_bases(M)


def has_strong_bip(M: Matroid) -> bool:
    return has_bip(M) and has_bip(dual(M))


def bases_meet_in(M: Matroid, t: int) -> bool:
    """Every two bases, a basis with itself included, share ``t`` elements."""
    return min_basis_intersection(M) >= t


# ---------------------------------------------------------------------------
# reports


def _value(x):
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    if isinstance(x, np.integer):
        return int(x)
    return x


@dataclass(frozen=True)
class VerificationReport:
    claim_id: str
    instance: str
    expected: str
    computed: object
    status: str
    runtime_ms: float
    details: dict = field(default_factory=dict)

    @property
    def key(self):
        return (self.claim_id, self.instance)

    def to_json(self, timing: bool = True) -> dict:
        return {
            "claim_id": self.claim_id,
            "instance": self.instance,
            "expected": self.expected,
            "computed": _jsonable(self.computed),
            "status": self.status,
            "runtime_ms": round(self.runtime_ms, 3) if timing else None,
            "details": _jsonable(self.details),
        }


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return _value(x)


def sort_reports(reports) -> list[VerificationReport]:
    return sorted(reports, key=lambda r: r.key)


def _describe(x) -> str:
    if isinstance(x, Matroid):
        return x.name or f"matroid(n={x.n},r={x.rank},bases={len(x.bases)})"
    if isinstance(x, SimpleGraph):
        return f"graph(v={x.vertex_count},e={len(x.edges)})"
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    return repr(x)


def describe_args(args) -> str:
    return ", ".join(_describe(a) for a in args)


class _Clock:
    def __init__(self):
        self.t0 = time.perf_counter()

    def ms(self) -> float:
        return (time.perf_counter() - self.t0) * 1000.0


def _report(claim, instance, expected, computed, ok, clock, details=None, subjects=(), na=False):
    details = dict(details or {})
    if na:
        status = NA
    elif ok is None:
        status = INCONCLUSIVE
    else:
        status = PASS if ok else FAIL
    if status == FAIL:
        details["serialized"] = [_serialize(s) for s in subjects]
    return VerificationReport(claim, instance, expected, _value(computed), status, clock.ms(), details)


def _serialize(x):
    if isinstance(x, Matroid):
        return matroid_to_json(x)
    if isinstance(x, SimpleGraph):
        return graph_to_json(x)
    return _value(x)


# ---------------------------------------------------------------------------
# cached exact numbers

_F_CACHE: dict = {}


def clear_cache():
    _F_CACHE.clear()


def exact_borsuk(M: Matroid, budget_ms: int | None = None):
    """Exact Borsuk number (int or ``INFINITE``); raises BudgetExhausted."""
    key = (M.n, M.bases)
    if key in _F_CACHE:
        return _F_CACHE[key]
    res = borsuk_number(M, budget_ms)
    if not res.exact:
        raise BudgetExhausted(res.lower, res.upper)
    _F_CACHE[key] = res.value
    return res.value


def exact_chromatic(G, budget_ms: int | None = None) -> int:
    res = chromatic_number(G, budget_ms)
    if not res.exact:
        raise BudgetExhausted(res.lower, res.upper)
    if not res.coloring.is_proper(G):
        raise AssertionError("solver returned an improper coloring")
    return res.upper


def _kg_chi(M, budget_ms):
    return exact_chromatic(kneser_graph(M), budget_ms)


def borsuk_bound(M: Matroid) -> int:
    return M.n - num_components(M) + 1


def _trivial_cert(M):
    return make_certificate(M, [list(range(len(M.bases)))])


def _cert_for(M, budget_ms):
    if len(M.bases) == 1:
        return _trivial_cert(M)
    res = borsuk_number(M, budget_ms)
    if not res.exact:
        raise BudgetExhausted(res.lower, res.upper)
    return res.certificate


# ---------------------------------------------------------------------------
# claim checks


def _thm_main(M, budget_ms=None):
    c = _Clock()
    name = _describe(M)
    expected = "f(M) <= n - c + 1"
    if not (has_two_disjoint_bases(M) or has_two_disjoint_bases(dual(M))):
        return _report("thm:main", name, expected, None, None, c, {"reason": "neither M nor its dual has two disjoint bases"}, na=True)
    f = exact_borsuk(M, budget_ms)
    bound = borsuk_bound(M)
    return _report("thm:main", name, expected, f, f <= bound, c, {"bound": bound}, [M])


def _thm_rank2(M, budget_ms=None):
    c = _Clock()
    name = _describe(M)
    expected = "f(M) <= n - c + 1"
    if M.rank > 2 or len(M.bases) < 2:
        return _report("thm:rank2", name, expected, None, None, c, {"reason": "rank above two or a single basis"}, na=True)
    f = exact_borsuk(M, budget_ms)
    bound = borsuk_bound(M)
    return _report("thm:rank2", name, expected, f, f <= bound, c, {"bound": bound}, [M])


def _thm_rankr(M, budget_ms=None):
    c = _Clock()
    name = _describe(M)
    bound = rankr_bound(M.rank)
    expected = f"f(M) <= 2^(r-2)(r+2)^2 = {bound:g}"
    if len(M.bases) < 2 or not has_bip(M):
        return _report("thm:rankr", name, expected, None, None, c, {"reason": "a single basis or two disjoint bases"}, na=True)
    f = exact_borsuk(M, budget_ms)
    ok = f <= bound
    details = {"bound": bound}
    if is_connected(M):
        cert = rankr_partition(M)
        check = validate_certificate(M, cert)
        details["partition_parts"] = len(cert)
        details["partition_valid"] = check.ok
        ok = ok and check.ok and len(cert) <= bound
    return _report("thm:rankr", name, expected, f, ok, c, details, [M])


def _prop_dual(M, budget_ms=None):
    c = _Clock()
    name = _describe(M)
    D = dual(M)
    f, fd = exact_borsuk(M, budget_ms), exact_borsuk(D, budget_ms)
    bp = has_borsuk_property(M, result=borsuk_number(M, budget_ms)).holds if len(M.bases) > 1 else False
    bpd = has_borsuk_property(D, result=borsuk_number(D, budget_ms)).holds if len(D.bases) > 1 else False
    ok = f == fd and bp == bpd
    return _report("prop:dual", name, "f(M) == f(M*)", {"f": f, "f_dual": fd}, ok, c, {"borsuk": bp, "borsuk_dual": bpd}, [M])


def _prop_conn(M, N, budget_ms=None):
    c = _Clock()
    name = describe_args((M, N))
    S = direct_sum(M, N)
    fm, fn, fs = exact_borsuk(M, budget_ms), exact_borsuk(N, budget_ms), exact_borsuk(S, budget_ms)
    ok = fs <= min(fm, fn)
    details = {"f_M": fm, "f_N": fn}
    if len(S.bases) > 1:
        if fm <= fn:
            cert = direct_sum_partition(M, N, _cert_for(M, budget_ms))
            target = S
        else:
            cert = direct_sum_partition(N, M, _cert_for(N, budget_ms))
            target = direct_sum(N, M)
        check = validate_certificate(target, cert)
        details["constructive_parts"] = len(cert)
        details["constructive_valid"] = check.ok
        ok = ok and check.ok and len(cert) <= min(fm, fn)
    return _report("prop:conn", name, "f(M+N) <= min(f(M), f(N))", fs, ok, c, details, [M, N])


def _cor_conn(M, N, budget_ms=None):
    c = _Clock()
    name = describe_args((M, N))
    expected = "M+N has the Borsuk property"
    hm = len(M.bases) > 1 and has_borsuk_property(M, budget_ms, borsuk_number(M, budget_ms)).holds
    hn = len(N.bases) > 1 and has_borsuk_property(N, budget_ms, borsuk_number(N, budget_ms)).holds
    if hm is None or hn is None:
        raise BudgetExhausted(0, INFINITE)
    if not (hm or hn):
        return _report("cor:conn", name, expected, None, None, c, {"reason": "neither summand has the Borsuk property"}, na=True)
    S = direct_sum(M, N)
    fs = exact_borsuk(S, budget_ms)
    bound = borsuk_bound(S)
    return _report("cor:conn", name, expected, fs, fs <= bound, c, {"bound": bound}, [M, N])


def _prop_ser(M, p, N, q, budget_ms=None):
    c = _Clock()
    name = f"Ser({_describe(M)}@{p}, {_describe(N)}@{q})"
    S = series_connection(M, p, N, q)
    fm, fn, fs = exact_borsuk(M, budget_ms), exact_borsuk(N, budget_ms), exact_borsuk(S, budget_ms)
    avoid = has_disjoint_pair_avoiding(M, M.index_of(p))
    ok = fs <= fm + fn
    expected = "f(Ser) <= f(M) + f(N)"
    cm, cn = _cert_for(M, budget_ms), _cert_for(N, budget_ms)
    details = {"f_M": fm, "f_N": fn, "disjoint_pair_avoiding_p": avoid}
    if len(S.bases) > 1:
        cert = series_partition(M, p, N, q, cm, cn, "sum")
        check = validate_certificate(S, cert)
        details["sum_parts"] = len(cert)
        details["sum_valid"] = check.ok
        ok = ok and check.ok and len(cert) <= fm + fn
    if avoid:
        expected += " and f(Ser) <= min(f(M), f(N))"
        ok = ok and fs <= min(fm, fn)
        cert = series_partition(M, p, N, q, cm, cn, "min")
        check = validate_certificate(S, cert)
        details["min_parts"] = len(cert)
        details["min_valid"] = check.ok
        ok = ok and check.ok and len(cert) <= min(fm, fn)
    return _report("prop:ser", name, expected, fs, ok, c, details, [M, N])


def _lem_kneser(M, budget_ms=None):
    c = _Clock()
    name = _describe(M)
    expected = "chi(KG(M)) == f(M)"
    if not has_two_disjoint_bases(M):
        return _report("lem:kneser", name, expected, None, None, c, {"reason": "no two disjoint bases"}, na=True)
    chi = _kg_chi(M, budget_ms)
    f = exact_borsuk(M, budget_ms)
    return _report("lem:kneser", name, expected, {"chi": chi, "f": f}, chi == f, c, {}, [M])


def _prop_upper(M, budget_ms=None):
    c = _Clock()
    name = _describe(M)
    G = kneser_graph(M)
    chi = exact_chromatic(G, budget_ms)
    cocs = sorted(cocircuits(M), key=lambda x: (x.bit_count(), x))
    details = {}
    expected = "chi(KG(M)) <= min |C*|"
    ok = True
    if cocs:
        best = cocs[0]
        details["min_cocircuit"] = best.bit_count()
        col = cocircuit_coloring(M, best)
        details["cocircuit_coloring_proper"] = col.is_proper(G)
        details["cocircuit_colors"] = col.k
        ok = chi <= best.bit_count() and col.is_proper(G) and col.k <= best.bit_count()
    n, r = M.n, M.rank
    if r >= 1 and n >= 2 * r - 1:
        expected += " and chi(KG(M)) <= n - 2r + 2"
        col = kneser_standard_coloring(n, r, M)
        details["kneser_bound"] = n - 2 * r + 2
        details["kneser_coloring_proper"] = col.is_proper(G)
        ok = ok and chi <= n - 2 * r + 2 and col.is_proper(G) and col.k <= n - 2 * r + 2
    return _report("prop:upper", name, expected, chi, ok, c, details, [M])


_PAPPUS = {7: (3, (7, 3)), 9: (5, (9, 3))}


def _prop_pappus(M, expected=None, sg=None, budget_ms=None):
    c = _Clock()
    name = _describe(M)
    if expected is None or sg is None:
        if M.n not in _PAPPUS:
            raise BadParams("prop:pappus needs an expected value for this instance")
        expected = expected if expected is not None else _PAPPUS[M.n][0]
        sg = sg if sg is not None else _PAPPUS[M.n][1]
    G = kneser_graph(M)
    chi = exact_chromatic(G, budget_ms)
    emb = subgraph_embedding_exists(schrijver_graph(*sg), G)
    details = {"schrijver": f"SG({sg[0]},{sg[1]})", "schrijver_embeds": emb.found, "embedding_nodes": emb.nodes}
    # a refuted embedding contradicts the lower-bound argument; a timeout does not
    ok = chi == expected and emb.found is not False
    return _report("prop:pappus", name, f"chi(KG(M)) == {expected}", chi, ok, c, details, [M])


def _prop_catalan(r, m, budget_ms=None):
    c = _Clock()
    C, Cm = catalan(r, m), catalan_minus(r, m)
    a, b = _kg_chi(C, budget_ms), _kg_chi(Cm, budget_ms)
    U = set(uniform(r, m + r).bases)
    chain = set(Cm.bases) <= set(C.bases) <= U
    want = m - r + 2
    return _report(
        "prop:catalan", f"C({r},{m})", f"chi(KG(C)) == chi(KG(C-)) == {want}",
        {"C": a, "C_minus": b}, a == want and b == want and chain, c, {"basis_chain": chain}, [C, Cm],
    )


def _eq_schrijver(n, r, budget_ms=None):
    c = _Clock()
    kg = exact_chromatic(kneser_graph(uniform(r, n)), budget_ms)
    sg = exact_chromatic(schrijver_graph(n, r), budget_ms)
    want = n - 2 * r + 2
    return _report(
        "eq:schrijver", f"KG({n},{r})", f"chi(KG) == chi(SG) == {want}", {"KG": kg, "SG": sg},
        kg == want and sg == want, c, {}, [uniform(r, n)],
    )


def _prop_theta_n(n, budget_ms=None):
    c = _Clock()
    T = theta(n)
    sbip = has_strong_bip(T)
    cert = theta_partition(n, T, allow_small=n < 5)
    check = validate_certificate(T, cert)
    f = exact_borsuk(T, budget_ms)
    ok = sbip and check.ok and len(cert) <= n - 2 and f <= n - 2
    details = {"strong_bip": sbip, "partition_parts": len(cert), "partition_valid": check.ok, "f": f}
    return _report("prop:theta_n", f"Theta{n}", f"strong BIP and f <= {n - 2}", len(cert), ok, c, details, [T])


_THETA_SMALL = {1: INFINITE, 2: 2, 3: 2, 4: 2}


def _eq_theta_small(n, budget_ms=None):
    c = _Clock()
    if n not in _THETA_SMALL:
        raise BadParams("eq:theta-small covers n = 1..4")
    T = theta(n)
    f = exact_borsuk(T, budget_ms)
    want = _THETA_SMALL[n]
    return _report("eq:theta-small", f"Theta{n}", f"f == {_value(want)}", f, f == want, c, {}, [T])


def _prop_rank2(M, budget_ms=None):
    c = _Clock()
    name = _describe(M)
    expected = "has a loop or a coloop"
    if M.rank != 2 or len(M.bases) < 2 or not has_strong_bip(M):
        return _report("prop:rank2", name, expected, None, None, c, {"reason": "not rank two with strong BIP"}, na=True)
    lc = {"loops": M.label_set(loops(M)), "coloops": M.label_set(coloops(M))}
    return _report("prop:rank2", name, expected, lc, bool(loops(M) | coloops(M)), c, {}, [M])


def _lem_connec(M, p, N, q, kind="ser", budget_ms=None):
    c = _Clock()
    if kind == "ser":
        name = f"Ser({_describe(M)}@{p}, {_describe(N)}@{q})"
        expected = "Ser(M, N) has BIP"
        hyp = bases_meet_in(M, 1) or bases_meet_in(N, 1)
        build = series_connection
    elif kind == "par":
        name = f"Par({_describe(M)}@{p}, {_describe(N)}@{q})"
        expected = "Par(M, N) has BIP"
        hyp = bases_meet_in(M, 2) or bases_meet_in(N, 2)
        build = parallel_connection
    else:
        raise BadParams("kind is 'ser' or 'par'")
    if not hyp:
        return _report("lem:connec", name, expected, None, None, c, {"reason": "hypothesis fails"}, na=True)
    S = build(M, p, N, q)
    val = has_bip(S)
    return _report("lem:connec", name, expected, val, val, c, {"min_intersection": min_basis_intersection(S)}, [M, N])


def _prop_sbip_ser(M, p, budget_ms=None):
    c = _Clock()
    name = f"Ser({_describe(M)}, dual)@{p}"
    expected = "Ser(M, M*) has strong BIP"
    if not bases_meet_in(M, 2):
        return _report("prop:sbip-ser", name, expected, None, None, c, {"reason": "two bases meet in fewer than two elements"}, na=True)
    S = series_connection(M, p, dual(M), p)
    sbip = has_strong_bip(S)
    details = {"connected": is_connected(S), "M_connected": is_connected(M)}
    ok = sbip and (details["connected"] or not details["M_connected"])
    f = exact_borsuk(S, budget_ms)
    details["f"] = f
    details["borsuk_bound"] = borsuk_bound(S)
    ok = ok and f <= details["borsuk_bound"]
    return _report("prop:sbip-ser", name, expected, sbip, ok, c, details, [M])


def _replacement(H, v0, L, attach):
    return vertex_replacement(H, v0, L, attach)


def _graph_name(H, v0, L):
    return f"replace(H={_describe(H)}, v0={v0}, L={_describe(L)})"


def _prop_sbip_graphic(H, v0, L, attach=None, budget_ms=None):
    c = _Clock()
    name = _graph_name(H, v0, L)
    expected = "M(G) has strong BIP"
    MH, ML = graphic(H), graphic(L)
    if not (bases_meet_in(MH, 1) and bases_meet_in(dual(ML), 1)):
        return _report("prop:sbip-graphic", name, expected, None, None, c, {"reason": "M(H) or M*(L) lacks BIP"}, na=True)
    G = _replacement(H, v0, L, attach)
    MG = graphic(G)
    sbip = has_strong_bip(MG)
    details = {"two_connected": G.is_two_connected(), "connected": is_connected(MG)}
    ok = sbip
    if H.is_two_connected() and L.is_two_connected():
        ok = ok and details["two_connected"]
    return _report("prop:sbip-graphic", name, expected, sbip, ok, c, details, [H, L])


def _prop_graphic_bn(H, v0, L, attach=None, budget_ms=None):
    c = _Clock()
    name = _graph_name(H, v0, L)
    expected = "f(M(G)) <= f(M(H))"
    MH, ML = graphic(H), graphic(L)
    if not has_two_disjoint_bases(ML):
        return _report("prop:graphic-bn", name, expected, None, None, c, {"reason": "M(L) has BIP"}, na=True)
    MG = graphic(_replacement(H, v0, L, attach))
    fg, fh = exact_borsuk(MG, budget_ms), exact_borsuk(MH, budget_ms)
    return _report("prop:graphic-bn", name, expected, {"f_G": fg, "f_H": fh}, fg <= fh, c, {}, [H, L])


def _fig_graphic(budget_ms=None):
    c = _Clock()
    H, v0 = figure_host()
    G = vertex_replacement(H, v0, figure_insert(), figure_attach())
    MG = graphic(G, name="M(G)")
    KG = kneser_graph(MG)
    f = exact_borsuk(MG, budget_ms)
    fh = exact_borsuk(graphic(H), budget_ms)
    details = {
        "kneser_edges": KG.edge_count,
        "connected": is_connected(MG),
        "strong_bip": has_strong_bip(MG),
        "f_H": fh,
        "bases": len(MG.bases),
    }
    ok = KG.edge_count == 0 and f == 3 and details["connected"] and details["strong_bip"] and f <= fh
    return _report("fig:graphic", "M(G) of the vertex-replacement figure", "KG edgeless, f == 3, connected, strong BIP, f <= f(M(H))", f, ok, c, details, [G])


def _eq_kg_product(M, N, budget_ms=None):
    c = _Clock()
    name = describe_args((M, N))
    if M.rank == 0 or N.rank == 0:
        # the empty basis is disjoint from itself; loopless graphs cannot say so
        return _report("eq:kg-product", name, "KG(M+N) == KG(M) x KG(N)", None, None, c, {"reason": "a rank-0 summand"}, na=True)
    left = kneser_graph(direct_sum(M, N)).permuted(sum_to_product_order(M, N))
    right = categorical_product(kneser_graph(M), kneser_graph(N))
    same = left == right
    return _report("eq:kg-product", name, "KG(M+N) == KG(M) x KG(N)", same, same, c, {"edges": right.edge_count}, [M, N])


def check_hedetniemi_instance(M: Matroid, N: Matroid, budget_ms: int | None = None) -> VerificationReport:
    """Compare ``f(M + N)`` with ``min(f(M), f(N))`` (infinity above every
    integer). A strict inequality answers the product question and is
    reported as FAIL with the full instance."""
    c = _Clock()

    def body():
        fm, fn = exact_borsuk(M, budget_ms), exact_borsuk(N, budget_ms)
        fs = exact_borsuk(direct_sum(M, N), budget_ms)
        low = min(fm, fn)
        details = {"f_M": fm, "f_N": fn, "min": low, "equal": fs == low}
        if fs < low:
            details["finding"] = "strict inequality: f(M+N) < min(f(M), f(N))"
        return _report("quest:hedet", describe_args((M, N)), "f(M+N) == min(f(M), f(N))", fs, fs == low, c, details, [M, N])

    return _guard_budget("quest:hedet", describe_args((M, N)), body, c)


def _conj_main(M, budget_ms=None):
    c = _Clock()
    name = _describe(M)
    expected = "f(M) <= n - c + 1"
    if len(M.bases) < 2:
        return _report("conj:main", name, expected, None, None, c, {"reason": "a single basis"}, na=True)
    f = exact_borsuk(M, budget_ms)
    bound = borsuk_bound(M)
    interesting = is_connected(M) and has_strong_bip(M)
    return _report("conj:main", name, expected, f, f <= bound, c, {"bound": bound, "interesting": interesting}, [M])


# ---------------------------------------------------------------------------
# default instances


def catalog() -> list[Matroid]:
    """Small instances of every generator, plus a few constructions."""
    out = [uniform(r, n) for r, n in [(0, 2), (1, 1), (1, 2), (1, 3), (2, 3), (2, 4), (2, 5), (3, 5), (3, 6)]]
    out += [theta(n) for n in range(1, 7)]
    out += [fano(), non_pappus(), v_line(2), v_line(3)]
    for r, m in [(1, 1), (2, 3), (2, 4), (3, 5)]:
        out += [catalan(r, m), catalan_minus(r, m)]
    out += [
        graphic(complete_graph(3), "M(K3)"),
        graphic(complete_graph(4), "M(K4)"),
        graphic(cycle_graph(4), "M(C4)"),
        graphic(_figure_g(), "M(G)"),
        triangle_with_loop(),
        direct_sum(uniform(2, 3), uniform(1, 3)),
        series_connection(uniform(2, 4), 1, uniform(2, 4), 1),
        parallel_connection(uniform(1, 3), 1, uniform(2, 3), 1),
    ]
    return out


def _figure_g():
    H, v0 = figure_host()
    return vertex_replacement(H, v0, figure_insert(), figure_attach())


def _pairs():
    return [
        (uniform(2, 4), uniform(2, 4)),
        (uniform(1, 1), uniform(2, 4)),
        (theta(2), theta(2)),
        (uniform(2, 3), uniform(1, 3)),
        (fano(), uniform(1, 2)),
    ]


def _series_triples():
    return [
        (uniform(2, 4), 1, uniform(2, 4), 1),
        (uniform(2, 5), 1, uniform(1, 3), 1),
        (uniform(1, 2), 1, uniform(1, 2), 1),
        (uniform(2, 3), 1, uniform(2, 4), 1),
    ]


def _graphic_triples():
    H, v0 = figure_host()
    return [
        (H, v0, figure_insert(), figure_attach()),
        (complete_graph(3), 0, complete_graph(4), None),
        (cycle_graph(4), 0, complete_graph(4), None),
        (cycle_graph(4), 0, figure_insert(), None),
    ]


def _rank2_sbip():
    out = [triangle_with_loop()]
    for M in enumerate_matroids(4, 2):
        if len(M.bases) > 1 and has_strong_bip(M):
            out.append(M)
    return out


@dataclass(frozen=True)
class Claim:
    claim_id: str
    statement: str
    check: Callable
    defaults: Callable[[], list]


def _mono(xs):
    return [(x,) for x in xs]


CLAIMS: dict[str, Claim] = {
    c.claim_id: c
    for c in [
        Claim("thm:main", "a matroid or its dual with two disjoint bases has the Borsuk property", _thm_main, lambda: _mono(catalog())),
        Claim("thm:rank2", "rank at most two with two bases has the Borsuk property", _thm_rank2, lambda: _mono(catalog())),
        Claim("thm:rankr", "pairwise intersecting bases give f <= 2^(r-2)(r+2)^2", _thm_rankr, lambda: _mono(catalog())),
        Claim("prop:dual", "f(M) == f(M*)", _prop_dual, lambda: _mono(catalog())),
        Claim("prop:conn", "f(M+N) <= min(f(M), f(N))", _prop_conn, _pairs),
        Claim("cor:conn", "a summand with the Borsuk property passes it to the sum", _cor_conn, _pairs),
        Claim("prop:ser", "f(Ser(M,N)) <= f(M)+f(N), and <= min with disjoint bases avoiding p", _prop_ser, _series_triples),
        Claim("lem:kneser", "two disjoint bases give chi(KG(M)) == f(M)", _lem_kneser, lambda: _mono(catalog())),
        Claim("prop:upper", "chi(KG(M)) <= min cocircuit and <= n - 2r + 2", _prop_upper, lambda: _mono(catalog() + [v_line(5)])),
        Claim("prop:pappus", "chi(KG(F7)) == 3 and chi(KG(non-Pappus)) == 5", _prop_pappus, lambda: [(fano(),), (non_pappus(),)]),
        Claim("prop:catalan", "chi(KG(C(r,m))) == chi(KG(C-(r,m))) == m - r + 2", _prop_catalan, lambda: [(2, 3), (2, 4), (3, 5)]),
        Claim("eq:schrijver", "chi(SG(n,r)) == chi(KG(n,r)) == n - 2r + 2", _eq_schrijver, lambda: [(5, 2), (6, 2), (7, 3)]),
        Claim("prop:theta_n", "Theta_n has strong BIP and f <= n - 2 for n >= 5", _prop_theta_n, lambda: [(5,), (6,)]),
        Claim("eq:theta-small", "f(Theta1) = inf and f(Theta2..4) = 2", _eq_theta_small, lambda: [(1,), (2,), (3,), (4,)]),
        Claim("prop:rank2", "rank two with strong BIP has a loop or a coloop", _prop_rank2, lambda: _mono(_rank2_sbip())),
        Claim(
            "lem:connec",
            "Ser of a BIP matroid has BIP; Par of a matroid meeting in two has BIP",
            _lem_connec,
            lambda: [(M, 1, N, 1, kind) for M, N in [(uniform(2, 3), uniform(2, 4)), (uniform(3, 4), uniform(1, 3)), (uniform(3, 4), uniform(2, 4))] for kind in ("ser", "par")],
        ),
        Claim("prop:sbip-ser", "Ser(M, M*) has strong BIP when bases meet in two", _prop_sbip_ser, lambda: [(uniform(3, 4), 1), (uniform(4, 6), 1)]),
        Claim("prop:sbip-graphic", "M(H), M*(L) with BIP give M(G) strong BIP", _prop_sbip_graphic, _graphic_triples),
        Claim("prop:graphic-bn", "M(L) without BIP gives f(M(G)) <= f(M(H))", _prop_graphic_bn, _graphic_triples),
        Claim("fig:graphic", "the figure graph: KG edgeless, f = 3, connected, strong BIP", _fig_graphic, lambda: [()]),
        Claim("eq:kg-product", "KG(M+N) == KG(M) x KG(N)", _eq_kg_product, lambda: _pairs()[:4]),
        Claim("quest:hedet", "f(M+N) == min(f(M), f(N)) on the instance", check_hedetniemi_instance, _pairs),
        Claim("conj:main", "every matroid with two bases has the Borsuk property", _conj_main, lambda: _mono(catalog())),
    ]
}


def claim_ids() -> list[str]:
    return sorted(CLAIMS)


def _guard_budget(claim_id, instance, body, clock):
    try:
        return body()
    except BudgetExhausted as exc:
        return VerificationReport(
            claim_id, instance, "", None, INCONCLUSIVE, clock.ms(),
            {"lower": _value(exc.lower), "upper": _value(exc.upper)},
        )


def check_claim(claim_id: str, *args, budget_ms: int | None = None) -> VerificationReport:
    """Run one registered claim on one instance."""
    if claim_id not in CLAIMS:
        raise UnknownClaim(claim_id)
    claim = CLAIMS[claim_id]
    c = _Clock()
    return _guard_budget(claim_id, describe_args(args), lambda: claim.check(*args, budget_ms=budget_ms), c)


def run_claim(claim_id: str, budget_ms: int | None = None) -> list[VerificationReport]:
    """Run a claim over its default instances."""
    if claim_id not in CLAIMS:
        raise UnknownClaim(claim_id)
    return sort_reports(check_claim(claim_id, *args, budget_ms=budget_ms) for args in CLAIMS[claim_id].defaults())


def run_suite(budget_ms: int | None = None, claims=None) -> list[VerificationReport]:
    out = []
    for cid in claims or claim_ids():
        out.extend(run_claim(cid, budget_ms))
    return sort_reports(out)


def summarize(reports) -> dict:
    counts = {s: 0 for s in STATUSES}
    for r in reports:
        counts[r.status] += 1
    return counts


# ---------------------------------------------------------------------------
# enumeration


def enumerate_matroids(n: int, r: int) -> Iterator[Matroid]:
    """Every matroid of rank ``r`` on ``1..n`` (labeled, not up to isomorphism),
    ordered by the sorted basis-mask tuple."""
    if n > MAX_ENUMERATION_ELEMENTS:
        raise TooLarge(f"exhaustive enumeration is limited to n <= {MAX_ENUMERATION_ELEMENTS}")
    if not 0 <= r <= n:
        raise BadParams("enumerate_matroids needs 0 <= r <= n")
    subs = all_subsets(n, r)
    labels = tuple(range(1, n + 1))
    if len(subs) == 1:
        yield from_masks(labels, subs, name=f"E{n}.{r}#0")
        return
    fams = K.enumerate_families(np.array(subs, dtype=np.int64), n)
    families = sorted(tuple(subs[t] for t in bits(int(f))) for f in fams)
    for i, bases in enumerate(families):
        yield Matroid(n, labels, bases, r, f"E{n}.{r}#{i}")


def brute_force_matroids(n: int, r: int) -> list[tuple]:
    """Oracle: filter every nonempty subfamily through the exchange check."""
    if n > 5:
        raise TooLarge("the brute-force oracle is limited to n <= 5")
    from .matroid import exchange_witness

    subs = all_subsets(n, r)
    out = []
    for mask in range(1, 1 << len(subs)):
        fam = [subs[t] for t in range(len(subs)) if mask >> t & 1]
        if exchange_witness(fam, n) is None:
            out.append(tuple(fam))
    return sorted(out)


def audit_matroid(M: Matroid, budget_ms: int | None = None) -> list[VerificationReport]:
    """The checks that apply to every matroid: main theorem, rank-two
    theorem and proposition, duality, and the conjecture."""
    funcs = ["thm:main", "prop:dual", "conj:main"]
    if M.rank <= 2:
        funcs.append("thm:rank2")
    if M.rank == 2:
        funcs.append("prop:rank2")
    return [check_claim(cid, M, budget_ms=budget_ms) for cid in funcs]


@dataclass(frozen=True)
class SweepSummary:
    matroids: int
    with_two_bases: int
    counts: dict
    violators: tuple

    @property
    def clean(self) -> bool:
        return not self.violators and self.counts.get(INCONCLUSIVE, 0) == 0


def sweep(pairs, budget_ms: int | None = None) -> SweepSummary:
    total = multi = 0
    counts = {s: 0 for s in STATUSES}
    bad = []
    for n, r in pairs:
        for M in enumerate_matroids(n, r):
            total += 1
            if len(M.bases) < 2:
                continue
            multi += 1
            for rep in audit_matroid(M, budget_ms):
                counts[rep.status] += 1
                if rep.status in (FAIL, INCONCLUSIVE):
                    bad.append(rep)
    return SweepSummary(total, multi, counts, tuple(bad))


# ---------------------------------------------------------------------------
# random matroids and the search


def random_matroid(rng: random.Random, n: int, r: int, max_start: int = 6) -> Matroid:
    """Seed family of a few random r-subsets, repaired by adding exchange
    completions ``B - e + f`` until the axiom holds.

    The repair only adds sets, so the sampler leans toward large families
    (uniform-like matroids); ``max_start`` limits the seed size to keep
    sparse families in play."""
    subs = all_subsets(n, r)
    fam = set(rng.sample(subs, rng.randint(1, min(max_start, len(subs)))))
    from .matroid import exchange_witness

    while True:
        masks = sorted(fam)
        w = exchange_witness(masks, n)
        if w is None:
            return from_masks(range(1, n + 1), masks)
        b, b2, e = w
        f = rng.choice(bits(b2 & ~b))
        fam.add((b & ~(1 << e)) | (1 << f))


def random_matroids(count: int, seed: int, n: int = 6, r: int = 3) -> list[Matroid]:
    if n > 12:
        raise TooLarge("random matroids are limited to n <= 12")
    rng = random.Random(seed)
    return [random_matroid(rng, n, r).with_name(f"R{seed}.{n}.{r}#{i}") for i in range(count)]


@dataclass(frozen=True)
class Source:
    kind: str
    params: tuple = ()

    def __str__(self):
        return f"{self.kind}({','.join(map(str, self.params))})" if self.params else self.kind

    def matroids(self) -> list[Matroid]:
        if self.kind == "catalog":
            return catalog()
        if self.kind == "enumeration":
            return list(enumerate_matroids(*self.params))
        if self.kind == "random":
            return random_matroids(*self.params)
        raise BadParams(f"unknown source {self.kind!r}")


_SOURCE_RE = re.compile(r"^\s*(catalog|enumeration|random)\s*(?:\(([^)]*)\))?\s*$")


def parse_source(text: str) -> Source:
    """``catalog``, ``enumeration(n,r)`` or ``random(count,seed[,n,r])``."""
    m = _SOURCE_RE.match(text)
    if not m:
        raise BadParams(f"cannot parse source {text!r}")
    kind, raw = m.group(1), m.group(2)
    try:
        params = tuple(int(x) for x in raw.split(",")) if raw and raw.strip() else ()
    except ValueError:
        raise BadParams(f"source parameters must be integers: {text!r}") from None
    arity = {"catalog": (0,), "enumeration": (2,), "random": (2, 4)}[kind]
    if len(params) not in arity:
        raise BadParams(f"{kind} takes {' or '.join(map(str, arity))} parameters")
    return Source(kind, params)


def search_counterexamples(source, budget_ms: int | None = None) -> list[VerificationReport]:
    """Borsuk property over every matroid with two bases from ``source``;
    the details flag connected matroids with strong BIP as interesting."""
    src = parse_source(source) if isinstance(source, str) else source
    out = []
    for M in src.matroids():
        if len(M.bases) < 2:
            continue
        out.append(check_claim("conj:main", M, budget_ms=budget_ms))
    return out


def violators(reports) -> list[VerificationReport]:
    return [r for r in reports if r.status == FAIL]


def interesting(reports) -> list[VerificationReport]:
    return [r for r in reports if r.details.get("interesting")]


def all_instances_of(claim_id: str) -> list[str]:
    return [describe_args(a) for a in CLAIMS[claim_id].defaults()]


__all__ = [
    "PASS", "FAIL", "INCONCLUSIVE", "NA", "VerificationReport", "has_two_disjoint_bases", "has_bip",
    "has_strong_bip", "check_claim", "run_claim", "run_suite", "enumerate_matroids", "search_counterexamples",
    "check_hedetniemi_instance", "sweep", "catalog",
]
