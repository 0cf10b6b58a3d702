"""Exact chromatic numbers, Borsuk numbers and constructive partitions."""

from __future__ import annotations

import math
import os
import time
from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from .errors import (
    BadParams,
    BudgetExhausted,
    DisjointBasesExist,
    InvalidInputCertificate,
    NotACocircuit,
    NotConnected,
    PreconditionFailed,
    SingleBasis,
)
from .graphs import ConflictGraph, diameter_graph
from .matroid import (
    Matroid,
    bits,
    cocircuits,
    diameter,
    direct_sum,
    is_connected,
    min_basis_intersection,
    num_components,
    series_connection,
)

INFINITE = math.inf
DEFAULT_BUDGET_MS = 60_000


def default_budget_ms() -> int:
    env = os.environ.get("BORSUKOID_BUDGET_MS")
    return int(env) if env else DEFAULT_BUDGET_MS


@dataclass(frozen=True)
class Coloring:
    assignment: tuple[int, ...]
    k: int

    @classmethod
    def from_colors(cls, colors) -> Coloring:
        """Renumber colors by first appearance so that ``0..k-1`` are all used."""
        seen: dict[int, int] = {}
        out = []
        for c in colors:
            c = int(c)
            if c not in seen:
                seen[c] = len(seen)
            out.append(seen[c])
        return cls(tuple(out), len(seen))

    def classes(self) -> list[list[int]]:
        parts: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.assignment):
            parts[c].append(v)
        return parts

    def is_proper(self, G: ConflictGraph) -> bool:
        if len(self.assignment) != G.vertex_count:
            return False
        if set(self.assignment) != set(range(self.k)):
            return False
        a = self.assignment
        return all(a[i] != a[j] for i, j in G.edges())


@dataclass(frozen=True)
class ChromaticResult:
    """``lower <= chi <= upper``; ``coloring`` uses ``upper`` colors."""

    lower: int
    upper: int
    coloring: Coloring
    clique: tuple[int, ...]
    nodes: int

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def k(self) -> int:
        if not self.exact:
            raise BudgetExhausted(self.lower, self.upper)
        return self.upper


def _feasible(indptr, indices, k, clique, deadline):
    """Run the k-coloring search with growing node limits until it settles
    or the deadline passes."""
    limit = 200_000
    total = 0
    out = np.empty(indptr.shape[0] - 1, dtype=np.int64)
    while True:
        t0 = time.perf_counter()
        status, nodes = K.k_colorable(indptr, indices, k, clique, limit, out)
        total += nodes
        if status >= 0:
            return status, out, total
        now = time.perf_counter()
        left = deadline - now
        if left <= 0:
            return -1, None, total
        rate = nodes / max(now - t0, 1e-6)
        limit = int(min(4 * limit, max(limit, rate * left)))


def chromatic_number(G: ConflictGraph, budget_ms: int | None = None) -> ChromaticResult:
    """Exact chromatic number with a proper coloring attaining it.

    The clique found greedily gives the lower bound and seeds the color
    symmetry break; DSATUR gives the first upper bound; then ``k`` runs
    upward from the lower bound until a ``k``-coloring exists. On budget
    exhaustion the result carries ``lower < upper``.
    """
    budget_ms = default_budget_ms() if budget_ms is None else budget_ms
    deadline = time.perf_counter() + budget_ms / 1000.0
    k = G.vertex_count
    if k == 0:
        return ChromaticResult(0, 0, Coloring((), 0), (), 0)
    indptr, indices = G.csr
    deg = G.degrees.astype(np.int64)
    clique = K.greedy_clique(G.rows, deg, 64)
    lower = max(1, len(clique))
    best = Coloring.from_colors(K.dsatur_greedy(indptr, indices, k))
    upper = best.k
    nodes = 0
    kk = lower
    while kk < upper:
        status, colors, used = _feasible(indptr, indices, kk, clique, deadline)
        nodes += used
        if status == 1:
            best = Coloring.from_colors(colors)
            upper = best.k
            break
        if status == 0:
            kk += 1
            lower = kk
            continue
        break
    return ChromaticResult(lower, upper, best, tuple(int(v) for v in clique), nodes)


# ---------------------------------------------------------------------------
# partitions of the bases


@dataclass(frozen=True)
class PartitionCertificate:
    """Parts are tuples of basis indices (canonical order), sorted by their
    smallest member."""

    parts: tuple[tuple[int, ...], ...]
    part_diameters: tuple[int, ...]
    matroid_diameter: int

    def __len__(self):
        return len(self.parts)

    def to_json(self) -> dict:
        return {
            "diameter": self.matroid_diameter,
            "parts": [list(p) for p in self.parts],
            "value": {"finite": True, "value": len(self.parts)},
        }


def _part_diameter(M: Matroid, part) -> int:
    bs = [M.bases[i] for i in part]
    if len(bs) < 2:
        return 0
    return int(K.family_diameter(np.array(bs, dtype=np.uint64)))


def make_certificate(M: Matroid, parts) -> PartitionCertificate:
    clean = sorted((tuple(sorted(int(i) for i in p)) for p in parts if len(p)), key=lambda p: p[0])
    return PartitionCertificate(
        tuple(clean), tuple(_part_diameter(M, p) for p in clean), diameter(M)
    )


def certificate_from_labels(M: Matroid, labels) -> PartitionCertificate:
    """Group bases by an arbitrary hashable tag per basis."""
    groups: dict = {}
    for i, t in enumerate(labels):
        groups.setdefault(t, []).append(i)
    return make_certificate(M, groups.values())


@dataclass(frozen=True)
class CertificateCheck:
    ok: bool
    reason: str = ""
    witness: tuple | None = None

    def __bool__(self):
        return self.ok


def validate_certificate(M: Matroid, cert: PartitionCertificate) -> CertificateCheck:
    """Disjoint cover of all bases, every part strictly below the diameter."""
    nb = len(M.bases)
    seen = {}
    for pi, part in enumerate(cert.parts):
        for i in part:
            if not 0 <= i < nb:
                return CertificateCheck(False, f"basis index {i} out of range")
            if i in seen:
                return CertificateCheck(False, f"basis {i} in parts {seen[i]} and {pi}", (i,))
            seen[i] = pi
    if len(seen) != nb:
        missing = next(i for i in range(nb) if i not in seen)
        return CertificateCheck(False, f"basis {missing} is not covered", (missing,))
    d = diameter(M)
    for part in cert.parts:
        bs = [M.bases[i] for i in part]
        for x in range(len(bs)):
            for y in range(x + 1, len(bs)):
                if (bs[x] ^ bs[y]).bit_count() >= d:
                    return CertificateCheck(
                        False,
                        f"bases {M.label_set(bs[x])} and {M.label_set(bs[y])} share a part at distance {d}",
                        (M.label_set(bs[x]), M.label_set(bs[y])),
                    )
    if d == 0 and nb:
        return CertificateCheck(False, "a single basis admits no valid partition", (0,))
    return CertificateCheck(True)


def coloring_to_certificate(M: Matroid, coloring: Coloring) -> PartitionCertificate:
    return make_certificate(M, coloring.classes())


@dataclass(frozen=True)
class BorsukResult:
    """``value`` is an int, ``INFINITE``, or ``None`` when only bounds are known."""

    value: int | float | None
    certificate: PartitionCertificate | None = None
    lower_bound_witness: tuple | None = None
    lower: int | float = 0
    upper: int | float = INFINITE

    @property
    def finite(self) -> bool:
        return self.value is not None and self.value != INFINITE

    @property
    def exact(self) -> bool:
        return self.value is not None

    def to_json(self) -> dict:
        if self.value is None:
            return {"finite": True, "exact": False, "lower": self.lower, "upper": self.upper}
        if self.value == INFINITE:
            return {"finite": False}
        return {"finite": True, "value": int(self.value)}


def borsuk_number(M: Matroid, budget_ms: int | None = None) -> BorsukResult:
    """Fewest parts of diameter below the diameter of all bases; ``INFINITE``
    for a single basis. Computed as the chromatic number of the diameter graph."""
    if len(M.bases) == 1:
        return BorsukResult(INFINITE, None, None, INFINITE, INFINITE)
    D = diameter_graph(M)
    res = chromatic_number(D, budget_ms)
    cert = coloring_to_certificate(M, res.coloring)
    if res.exact:
        return BorsukResult(res.upper, cert, res.clique, res.lower, res.upper)
    return BorsukResult(None, cert, res.clique, res.lower, res.upper)


@dataclass(frozen=True)
class BorsukProperty:
    """``holds`` is None when the Borsuk number could not be settled."""

    holds: bool | None
    result: BorsukResult
    bound: int
    components: int


def has_borsuk_property(M: Matroid, budget_ms: int | None = None, result: BorsukResult | None = None) -> BorsukProperty:
    """``f(M) <= n - c + 1``."""
    c = num_components(M)
    bound = M.n - c + 1
    res = result if result is not None else borsuk_number(M, budget_ms)
    if res.value == INFINITE:
        return BorsukProperty(False, res, bound, c)
    if res.value is None:
        if res.upper <= bound:
            return BorsukProperty(True, res, bound, c)
        if res.lower > bound:
            return BorsukProperty(False, res, bound, c)
        return BorsukProperty(None, res, bound, c)
    return BorsukProperty(res.value <= bound, res, bound, c)


# ---------------------------------------------------------------------------
# explicit colorings of Kneser graphs


def cocircuit_coloring(M: Matroid, cocircuit: int) -> Coloring:
    """Color each basis by the least element it shares with the cocircuit."""
    if cocircuit not in cocircuits(M):
        raise NotACocircuit(f"{M.label_set(cocircuit)} is not a cocircuit")
    return Coloring.from_colors(((b & cocircuit) & -(b & cocircuit)).bit_length() for b in M.bases)


def kneser_standard_color(B: int, n: int, r: int) -> int:
    """Class of ``B``: its minimum when that is below ``n - 2r + 1``, else the
    last class (subsets of the final ``2r - 1`` elements)."""
    low = (B & -B).bit_length() - 1
    return min(low, n - 2 * r + 1)


def kneser_standard_coloring(n: int, r: int, M: Matroid | None = None) -> Coloring:
    """At most ``n - 2r + 2`` colors on KG(n, r), or on KG(M) for a rank-``r``
    matroid ``M`` on ``n`` elements, by restriction."""
    if r < 1 or n < 2 * r - 1:
        raise BadParams("kneser_standard_coloring needs r >= 1 and n >= 2r - 1")
    if M is None:
        from .families import uniform

        M = uniform(r, n)
    elif M.n != n or M.rank != r:
        raise BadParams(f"matroid has n={M.n}, rank={M.rank}; expected n={n}, rank={r}")
    return Coloring.from_colors(kneser_standard_color(b, n, r) for b in M.bases)


# ---------------------------------------------------------------------------
# constructive partitions from the proofs


def theta_partition(n: int, M: Matroid | None = None, allow_small: bool = False) -> PartitionCertificate:
    """``n - 2`` parts for Theta_n: part ``i`` holds the bases whose least
    x-index is ``i``, capped at ``n - 2``; bases without x's go to part 1."""
    if n < 5 and not allow_small:
        raise BadParams("theta_partition is stated for n >= 5")
    if n < 3:
        raise BadParams("theta_partition needs n >= 3")
    if M is None:
        from .families import theta

        M = theta(n)
    xmask = (1 << n) - 1
    tags = []
    for b in M.bases:
        xs = b & xmask
        first = (xs & -xs).bit_length() if xs else 1
        tags.append(min(n - 2, first))
    return certificate_from_labels(M, tags)


def rankr_bound(r: int) -> float:
    return 2.0 ** (r - 2) * (r + 2) ** 2


def rankr_partition(M: Matroid) -> PartitionCertificate:
    """Tuple partition for connected matroids whose bases pairwise meet.

    With ``s`` the least pairwise intersection, ``B0`` and ``B1`` a first pair
    attaining it, and ``B(e)`` a basis avoiding ``e`` for each ``e`` in
    ``B0`` (``B1`` when it already avoids ``e``), each basis ``B`` gets the key
    ``(X, f)``: ``X`` the ``s`` smallest elements of ``B & B0`` and ``f`` the
    smallest element of ``B & B(min X)`` outside ``X``.
    """
    if len(M.bases) < 2:
        raise SingleBasis("rankr_partition needs at least two bases")
    if not is_connected(M):
        raise NotConnected("rankr_partition needs a connected matroid")
    s = min_basis_intersection(M)
    if s == 0:
        raise DisjointBasesExist("rankr_partition needs every two bases to intersect")
    bases = M.bases
    b0 = b1 = None
    for i in range(len(bases)):
        for j in range(i + 1, len(bases)):
            if (bases[i] & bases[j]).bit_count() == s:
                b0, b1 = bases[i], bases[j]
                break
        if b0 is not None:
            break
    avoid = {}
    for e in bits(b0):
        if not b1 >> e & 1:
            avoid[e] = b1
        else:
            avoid[e] = next(b for b in bases if not b >> e & 1)
    tags = []
    for b in bases:
        X = bits(b & b0)[:s]
        e = X[0]
        rest = (b & avoid[e]) & ~sum(1 << x for x in X)
        f = (rest & -rest).bit_length() - 1
        tags.append((tuple(X), f))
    return certificate_from_labels(M, tags)


def _require_valid(M, cert, what):
    check = validate_certificate(M, cert)
    if not check:
        if len(M.bases) == 1 and len(cert.parts) == 1:
            return
        raise InvalidInputCertificate(f"{what}: {check.reason}")


def direct_sum_partition(M: Matroid, N: Matroid, cert: PartitionCertificate) -> PartitionCertificate:
    """Basis ``B | B'`` of ``M + N`` goes to the part of ``B``."""
    _require_valid(M, cert, "certificate for M")
    part_of = {}
    for pi, part in enumerate(cert.parts):
        for i in part:
            part_of[M.bases[i]] = pi
    S = direct_sum(M, N)
    mask = M.ground
    return certificate_from_labels(S, [part_of[b & mask] for b in S.bases])


def _series_split(M: Matroid, ip: int, N_moved: set, S_basis: int):
    """Split a basis of the series connection as ``(B, B')``, preferring the
    split where ``B'`` avoids the shared element."""
    mine = S_basis & M.ground
    theirs = S_basis & ~M.ground
    pm = 1 << ip
    if mine in M.basis_set and theirs in N_moved:
        return mine, theirs
    alt_b, alt_c = mine & ~pm, theirs | pm
    if mine & pm and alt_b in M.basis_set and alt_c in N_moved:
        return alt_b, alt_c
    raise AssertionError("basis of the series connection does not split")


def series_partition(
    M: Matroid, p, N: Matroid, q, cert_m: PartitionCertificate, cert_n: PartitionCertificate, variant: str = "sum"
) -> PartitionCertificate:
    """Partition of Ser(M, N) built from partitions of M and N.

    ``variant="sum"``: ``B | B'`` goes to the part of ``B`` when ``B'`` avoids
    the shared element, else to ``len(cert_m)`` plus the part of ``B'``.
    ``variant="min"`` (needs two disjoint bases of M avoiding the shared
    element): everything follows the smaller of the two partitions.
    """
    if variant not in ("sum", "min"):
        raise BadParams("variant is 'sum' or 'min'")
    _require_valid(M, cert_m, "certificate for M")
    _require_valid(N, cert_n, "certificate for N")
    S = series_connection(M, p, N, q)
    ip = M.index_of(p)
    iq = N.index_of(q)
    where = {}
    nxt = M.n
    for j in range(N.n):
        if j == iq:
            where[j] = ip
        else:
            where[j] = nxt
            nxt += 1
    moved = {}
    for c in N.bases:
        moved[sum(1 << where[j] for j in bits(c))] = c
    part_m = {M.bases[i]: pi for pi, part in enumerate(cert_m.parts) for i in part}
    part_n = {N.bases[i]: pi for pi, part in enumerate(cert_n.parts) for i in part}
    pm = 1 << ip
    if variant == "min":
        if not has_disjoint_pair_avoiding(M, ip):
            raise PreconditionFailed("M has no two disjoint bases avoiding the shared element")
    k, k2 = len(cert_m), len(cert_n)
    tags = []
    for sb in S.bases:
        b, c = _series_split(M, ip, moved.keys(), sb)
        c_orig = moved[c]
        if variant == "sum":
            tags.append(part_m[b] if not c & pm else k + part_n[c_orig])
        else:
            tags.append(part_m[b] if k <= k2 else part_n[c_orig])
    return certificate_from_labels(S, tags)


def has_disjoint_pair_avoiding(M: Matroid, element: int) -> bool:
    av = [b for b in M.bases if not b >> element & 1]
    return any(not (av[i] & av[j]) for i in range(len(av)) for j in range(i + 1, len(av)))
