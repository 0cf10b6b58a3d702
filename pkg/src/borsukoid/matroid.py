"""Matroids given by their bases.

Elements are indices ``0..n-1``; a set of elements is an ``int`` bitmask
(bit ``i`` set means element ``i`` is present). External labels only matter
at the boundaries: :func:`from_bases`, the JSON layer and error messages.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Sequence

import numpy as np

from . import _kernels as K
from .errors import (
    ColoopShared,
    DuplicateLabel,
    EmptyBases,
    ExchangeAxiomViolation,
    GroundSetTooLarge,
    LabelCollision,
    LoopShared,
    NotABasis,
    UnequalCardinality,
    UnknownLabel,
)

MAX_ELEMENTS = 64

Label = Hashable
ElementSet = int


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


@dataclass(frozen=True, eq=False)
class Matroid:
    """An immutable matroid on ``n`` elements.

    ``bases`` holds bitmasks sorted ascending as integers, which is the
    canonical basis order used everywhere (vertex order of Kneser graphs,
    basis indices in certificates).
    """

    n: int
    labels: tuple
    bases: tuple[int, ...]
    rank: int
    name: str | None = field(default=None, compare=False)

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.labels == other.labels and self.bases == other.bases

    def __hash__(self):
        return hash((self.labels, self.bases))

    def __repr__(self):
        tag = f" {self.name!r}" if self.name else ""
        return f"<Matroid{tag} n={self.n} rank={self.rank} bases={len(self.bases)}>"

    @property
    def ground(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def basis_array(self) -> np.ndarray:
        return np.array(self.bases, dtype=np.uint64)

    @cached_property
    def basis_set(self) -> frozenset:
        return frozenset(self.bases)

    @cached_property
    def basis_index(self) -> dict[int, int]:
        return {b: i for i, b in enumerate(self.bases)}

    def index_of(self, label: Label) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownLabel(f"unknown label {label!r}") from None

    def mask(self, labels: Iterable[Label]) -> int:
        return mask_of(self.index_of(x) for x in labels)

    def label_set(self, mask: int) -> list:
        return [self.labels[i] for i in bits(mask)]

    def with_name(self, name: str | None) -> Matroid:
        return Matroid(self.n, self.labels, self.bases, self.rank, name)


def _check_labels(labels: Sequence[Label]) -> tuple:
    labels = tuple(labels)
    if len(set(labels)) != len(labels):
        seen = Counter(labels)
        dup = next(x for x, c in seen.items() if c > 1)
        raise DuplicateLabel(f"duplicate label {dup!r}")
    if len(labels) > MAX_ELEMENTS:
        raise GroundSetTooLarge(f"{len(labels)} elements; at most {MAX_ELEMENTS} are supported")
    return labels


def exchange_witness(masks: Sequence[int], n: int):
    """First ``(B, B', e)`` violating basis exchange, or ``None``.

    ``masks`` must be sorted and free of duplicates."""
    if len(masks) < 2:
        return None
    arr = np.array(masks, dtype=np.uint64)
    i, j, e = K.exchange_violation(arr, n)
    if i < 0:
        return None
    return masks[i], masks[j], int(e)


def from_masks(labels: Sequence[Label], masks: Iterable[int], name=None, validate=True) -> Matroid:
    """Build a matroid from basis bitmasks over ``labels``."""
    labels = _check_labels(labels)
    n = len(labels)
    bases = tuple(sorted(set(masks)))
    if not bases:
        raise EmptyBases("a matroid needs at least one basis")
    ground = (1 << n) - 1
    rank = bases[0].bit_count()
    if validate:
        for b in bases:
            if b & ~ground or b < 0:
                raise UnknownLabel(f"basis mask {b:#x} uses elements outside the ground set")
            if b.bit_count() != rank:
                raise UnequalCardinality(
                    f"bases of sizes {rank} and {b.bit_count()} (e.g. {[labels[i] for i in bits(b)]})"
                )
        w = exchange_witness(bases, n)
        if w is not None:
            b1, b2, e = w
            raise ExchangeAxiomViolation(
                [labels[i] for i in bits(b1)], [labels[i] for i in bits(b2)], labels[e]
            )
    return Matroid(n, labels, bases, rank, name)


def from_bases(labels: Sequence[Label], bases: Iterable[Iterable[Label]], name=None) -> Matroid:
    """Validated matroid from external labels and bases given as label collections.

    >>> from_bases([1, 2, 3, 4], [{1, 2}, {1, 3}, {2, 3}]).rank
    2
    """
    labels = _check_labels(labels)
    pos = {x: i for i, x in enumerate(labels)}
    masks = []
    for b in bases:
        m = 0
        for x in b:
            if x not in pos:
                raise UnknownLabel(f"basis element {x!r} is not in the ground set")
            m |= 1 << pos[x]
        masks.append(m)
    return from_masks(labels, masks, name=name)


def is_basis(M: Matroid, S: ElementSet) -> bool:
    return S in M.basis_set


def rank_of(M: Matroid, S: ElementSet) -> int:
    """``max |B & S|`` over the bases."""
    return max((b & S).bit_count() for b in M.bases)


def loops(M: Matroid) -> ElementSet:
    union = 0
    for b in M.bases:
        union |= b
    return M.ground & ~union


def coloops(M: Matroid) -> ElementSet:
    inter = M.ground
    for b in M.bases:
        inter &= b
    return inter


def fundamental_circuit(M: Matroid, B: ElementSet, e: int) -> ElementSet:
    """The unique circuit inside ``B + e`` for ``e`` outside the basis ``B``."""
    c = 1 << e
    for x in bits(B):
        if (B & ~(1 << x)) | (1 << e) in M.basis_set:
            c |= 1 << x
    return c


def circuits(M: Matroid) -> frozenset:
    """Minimal dependent sets, collected as fundamental circuits.

    Every circuit ``C`` is the fundamental circuit of any ``e`` in ``C``
    with respect to a basis extending ``C - e``, so the union over all
    pairs ``(B, e)`` is complete.
    """
    return _circuits(M)


_circuit_cache: dict = {}


def _circuits(M):
    key = (M.n, M.bases)
    hit = _circuit_cache.get(key)
    if hit is not None:
        return hit
    out = set()
    for b in M.bases:
        for e in bits(M.ground & ~b):
            out.add(fundamental_circuit(M, b, e))
    res = frozenset(out)
    if len(_circuit_cache) > 4096:
        _circuit_cache.clear()
    _circuit_cache[key] = res
    return res


def cocircuits(M: Matroid) -> frozenset:
    return circuits(dual(M))


def dual(M: Matroid) -> Matroid:
    g = M.ground
    name = f"{M.name}*" if M.name else None
    return Matroid(M.n, M.labels, tuple(sorted(g & ~b for b in M.bases)), M.n - M.rank, name)


def _disjoint_labels(left: Sequence, right: Sequence, relabel: bool) -> list:
    taken = set(left)
    out = []
    for x in right:
        if x in taken:
            if not relabel:
                raise LabelCollision(f"label {x!r} occurs in both matroids")
            y = f"{x}'"
            while y in taken:
                y += "'"
            x = y
        taken.add(x)
        out.append(x)
    return out


def direct_sum(M: Matroid, N: Matroid, relabel: bool = True) -> Matroid:
    """Bases ``B | (B' << n)``; colliding labels of ``N`` get a ``'`` suffix."""
    labels = list(M.labels) + _disjoint_labels(M.labels, N.labels, relabel)
    s = M.n
    bases = [b | (c << s) for b in M.bases for c in N.bases]
    name = f"{M.name}+{N.name}" if M.name and N.name else None
    return Matroid(M.n + N.n, tuple(labels), tuple(sorted(bases)), M.rank + N.rank, name)


def empty_matroid() -> Matroid:
    """Matroid on no elements; its only basis is the empty set."""
    return Matroid(0, (), (0,), 0, "empty")


def _glue(M: Matroid, p, N: Matroid, q, relabel=True):
    """Shared ground set for two matroids with ``p`` (of M) identified with
    ``q`` (of N). Returns the labels, the index of the shared element and
    ``N``'s bases transported into the combined indexing."""
    ip = M.index_of(p)
    iq = N.index_of(q)
    rest = [x for j, x in enumerate(N.labels) if j != iq]
    labels = list(M.labels) + _disjoint_labels(M.labels, rest, relabel)
    where = {}
    nxt = M.n
    for j in range(N.n):
        if j == iq:
            where[j] = ip
        else:
            where[j] = nxt
            nxt += 1
    moved = [mask_of(where[j] for j in bits(c)) for c in N.bases]
    return labels, ip, moved


def series_connection(M: Matroid, p, N: Matroid, q, relabel: bool = True) -> Matroid:
    """Series connection along ``p`` (in M) glued to ``q`` (in N).

    Bases are ``B | B'`` over bases ``B`` of M and ``B'`` of N that are
    disjoint once ``p`` and ``q`` are identified. The result is re-validated.
    """
    if coloops(M) >> M.index_of(p) & 1 or coloops(N) >> N.index_of(q) & 1:
        raise ColoopShared("the shared element is a coloop of one of the matroids")
    labels, _, moved = _glue(M, p, N, q, relabel)
    bases = {b | c for b in M.bases for c in moved if not b & c}
    return from_masks(labels, bases, name=_pair_name("Ser", M, N))


def parallel_connection(M: Matroid, p, N: Matroid, q, relabel: bool = True) -> Matroid:
    """Parallel connection along ``p`` (in M) glued to ``q`` (in N).

    Bases are ``B | B'`` with ``B & B' == {p}``, together with
    ``(B | B') - p`` whenever ``p`` lies in exactly one of them.
    """
    if loops(M) >> M.index_of(p) & 1 or loops(N) >> N.index_of(q) & 1:
        raise LoopShared("the shared element is a loop of one of the matroids")
    labels, ip, moved = _glue(M, p, N, q, relabel)
    pm = 1 << ip
    bases = set()
    for b in M.bases:
        for c in moved:
            inter = b & c
            if inter == pm:
                bases.add(b | c)
            elif (b ^ c) & pm:
                bases.add((b | c) & ~pm)
    return from_masks(labels, bases, name=_pair_name("Par", M, N))


def _pair_name(op, M, N):
    return f"{op}({M.name},{N.name})" if M.name and N.name else None


def restriction_to_separator(M: Matroid, part: ElementSet) -> Matroid:
    """Restriction to a union of components: bases are the traces ``B & part``."""
    idx = bits(part)
    pos = {i: k for k, i in enumerate(idx)}
    traces = {mask_of(pos[i] for i in bits(b & part)) for b in M.bases}
    return from_masks([M.labels[i] for i in idx], traces, validate=False)


@dataclass(frozen=True)
class ComponentDecomposition:
    parts: tuple[ElementSet, ...]
    component_matroids: tuple[Matroid, ...]

    def __len__(self):
        return len(self.parts)


def connected_components(M: Matroid) -> ComponentDecomposition:
    """Elements sharing a circuit are merged; loops and coloops end up alone."""
    parent = list(range(M.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in circuits(M):
        els = bits(c)
        r0 = find(els[0])
        for x in els[1:]:
            rx = find(x)
            if rx != r0:
                parent[rx] = r0
    groups: dict[int, int] = {}
    for x in range(M.n):
        groups[find(x)] = groups.get(find(x), 0) | (1 << x)
    parts = tuple(sorted(groups.values(), key=lambda m: (m & -m)))
    return ComponentDecomposition(parts, tuple(restriction_to_separator(M, p) for p in parts))


def num_components(M: Matroid) -> int:
    return len(connected_components(M).parts)


def is_connected(M: Matroid) -> bool:
    return num_components(M) <= 1


def incidence_vector(M: Matroid, B: ElementSet) -> np.ndarray:
    if B not in M.basis_set:
        raise NotABasis(f"{M.label_set(B)} is not a basis")
    return np.array([(B >> i) & 1 for i in range(M.n)], dtype=np.int8)


def basis_distance(B: ElementSet, B2: ElementSet, M: Matroid | None = None) -> int:
    if M is not None:
        for x in (B, B2):
            if x not in M.basis_set:
                raise NotABasis(f"{M.label_set(x)} is not a basis")
    return (B ^ B2).bit_count()


def diameter(M: Matroid) -> int:
    if len(M.bases) < 2:
        return 0
    return int(K.family_diameter(M.basis_array))


def min_basis_intersection(M: Matroid) -> int:
    """Smallest ``|B & B'|`` over distinct bases (``rank`` for a single basis)."""
    if len(M.bases) < 2:
        return M.rank
    return int(K.family_min_intersection(M.basis_array))


def relabel(M: Matroid, perm: Sequence[int]) -> Matroid:
    """Move element ``i`` to position ``perm[i]`` (labels travel along)."""
    labels = [None] * M.n
    for i, j in enumerate(perm):
        labels[j] = M.labels[i]
    bases = tuple(sorted(mask_of(perm[i] for i in bits(b)) for b in M.bases))
    return Matroid(M.n, tuple(labels), bases, M.rank, M.name)


def same_structure(M: Matroid, N: Matroid) -> bool:
    """Equal basis families on the same index set, ignoring labels."""
    return M.n == N.n and M.bases == N.bases


MAX_ISO_ELEMENTS = 10


def find_isomorphism(M: Matroid, N: Matroid) -> list[int] | None:
    """An index map ``phi`` with ``{phi(B)} == bases(N)``, or ``None``.

    Backtracking over permutations, pruned by per-element basis counts and
    by the multiset of traces of bases on the already-mapped prefix. Limited
    to ``MAX_ISO_ELEMENTS`` elements.
    """
    if M.n != N.n or M.rank != N.rank or len(M.bases) != len(N.bases):
        return None
    if M.n > MAX_ISO_ELEMENTS:
        raise GroundSetTooLarge(f"isomorphism search limited to {MAX_ISO_ELEMENTS} elements")
    n = M.n
    sig_m = [sum((b >> i) & 1 for b in M.bases) for i in range(n)]
    sig_n = [sum((b >> i) & 1 for b in N.bases) for i in range(n)]
    if sorted(sig_m) != sorted(sig_n):
        return None
    phi = [-1] * n
    used = [False] * n

    def traces_agree(k):
        dom = mask_of(range(k))
        img = mask_of(phi[:k])
        left = Counter(mask_of(phi[i] for i in bits(b & dom)) for b in M.bases)
        right = Counter(c & img for c in N.bases)
        return left == right

    def go(k):
        if k == n:
            return True
        for j in range(n):
            if used[j] or sig_n[j] != sig_m[k]:
                continue
            phi[k] = j
            used[j] = True
            if traces_agree(k + 1) and go(k + 1):
                return True
            used[j] = False
        phi[k] = -1
        return False

    return list(phi) if go(0) else None


def is_isomorphic(M: Matroid, N: Matroid) -> bool:
    return find_isomorphism(M, N) is not None


def all_subsets(n: int, size: int) -> list[int]:
    """All ``size``-subsets of ``[n]`` as masks, ascending."""
    return sorted(mask_of(c) for c in itertools.combinations(range(n), size))
