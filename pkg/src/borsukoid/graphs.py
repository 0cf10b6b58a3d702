"""Graphs built from matroids: Kneser graphs, diameter graphs, Schrijver
graphs, and the categorical product."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import _kernels as K
from .errors import BadParams, SingleBasis
from .families import uniform
from .matroid import Matroid, diameter, mask_of

MAX_VERTICES = 20_000


@dataclass(frozen=True, eq=False)
class ConflictGraph:
    """Simple graph over ``0..vertex_count-1`` with packed adjacency rows.

    ``rows[i]`` is a bit row (uint64 words) of the neighbors of ``i``.
    ``payload``, when present, is the basis bitmask behind each vertex.
    """

    vertex_count: int
    rows: np.ndarray
    payload: tuple | None = None
    name: str | None = None

    def __eq__(self, other):
        if not isinstance(other, ConflictGraph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and np.array_equal(self.rows, other.rows)

    __hash__ = None

    def __repr__(self):
        return f"<ConflictGraph {self.name or ''} |V|={self.vertex_count} |E|={self.edge_count}>"

    @cached_property
    def csr(self):
        return K.rows_to_csr(self.rows, self.vertex_count)

    @cached_property
    def degrees(self) -> np.ndarray:
        indptr, _ = self.csr
        return np.diff(indptr)

    @property
    def edge_count(self) -> int:
        return int(self.degrees.sum()) // 2

    def has_edge(self, i: int, j: int) -> bool:
        return bool((int(self.rows[i, j >> 6]) >> (j & 63)) & 1)

    def neighbors(self, i: int) -> np.ndarray:
        indptr, indices = self.csr
        return indices[indptr[i] : indptr[i + 1]]

    def edges(self) -> list[tuple[int, int]]:
        indptr, indices = self.csr
        return [(i, int(j)) for i in range(self.vertex_count) for j in indices[indptr[i] : indptr[i + 1]] if i < j]

    def dense(self) -> np.ndarray:
        out = np.zeros((self.vertex_count, self.vertex_count), dtype=bool)
        for i, j in self.edges():
            out[i, j] = out[j, i] = True
        return out

    def induced(self, vertices) -> ConflictGraph:
        vs = list(vertices)
        sub = self.dense()[np.ix_(vs, vs)]
        payload = tuple(self.payload[v] for v in vs) if self.payload is not None else None
        return from_dense(sub, payload=payload)

    def permuted(self, perm) -> ConflictGraph:
        """Vertex ``i`` becomes vertex ``perm[i]``."""
        edges = [(perm[i], perm[j]) for i, j in self.edges()]
        payload = None
        if self.payload is not None:
            lst = [None] * self.vertex_count
            for i, p in enumerate(perm):
                lst[p] = self.payload[i]
            payload = tuple(lst)
        return from_edges(self.vertex_count, edges, payload=payload, name=self.name)


def _guard(k):
    if k > MAX_VERTICES:
        raise BadParams(f"{k} vertices exceeds the {MAX_VERTICES}-vertex guard")


def from_edges(k: int, edges, payload=None, name=None) -> ConflictGraph:
    _guard(k)
    words = max(1, (k + 63) // 64)
    rows = np.zeros((k, words), dtype=np.uint64)
    for i, j in edges:
        if i == j:
            raise BadParams(f"self-loop at {i}")
        rows[i, j >> 6] |= np.uint64(1 << (j & 63))
        rows[j, i >> 6] |= np.uint64(1 << (i & 63))
    return ConflictGraph(k, rows, payload, name)


def from_dense(adj: np.ndarray, payload=None, name=None) -> ConflictGraph:
    k = adj.shape[0]
    idx = np.argwhere(np.triu(adj, 1))
    return from_edges(k, [tuple(map(int, e)) for e in idx], payload=payload, name=name)


def _from_rows(rows, payload, name):
    k = len(payload)
    if rows.shape[1] == 0:
        rows = np.zeros((k, 1), dtype=np.uint64)
    return ConflictGraph(k, rows, payload, name)


def kneser_graph(M: Matroid) -> ConflictGraph:
    """Vertices are the bases in canonical order; disjoint bases are adjacent."""
    _guard(len(M.bases))
    rows = K.kneser_adjacency(M.basis_array)
    return _from_rows(rows, M.bases, f"KG({M.name})" if M.name else "KG")


def diameter_graph(M: Matroid) -> ConflictGraph:
    """Vertices are the bases; edges join pairs at maximal distance."""
    if len(M.bases) < 2:
        raise SingleBasis("a matroid with a single basis has no diameter pairs")
    _guard(len(M.bases))
    rows = K.distance_adjacency(M.basis_array, diameter(M))
    return _from_rows(rows, M.bases, f"D({M.name})" if M.name else "D")


def classical_kneser(n: int, r: int) -> ConflictGraph:
    return kneser_graph(uniform(r, n))


def is_stable(mask: int, n: int) -> bool:
    """No two cyclically consecutive elements of ``[n]``."""
    rot = ((mask << 1) | (mask >> (n - 1))) & ((1 << n) - 1)
    return mask & rot == 0


def stable_subsets(n: int, r: int) -> list[int]:
    return sorted(mask_of(c) for c in itertools.combinations(range(n), r) if is_stable(mask_of(c), n))


def schrijver_graph(n: int, r: int) -> ConflictGraph:
    """Kneser graph KG(n, r) induced on the stable r-subsets of [n]."""
    if r < 1 or n < 2 * r:
        raise BadParams("schrijver_graph needs r >= 1 and n >= 2r")
    verts = stable_subsets(n, r)
    arr = np.array(verts, dtype=np.uint64)
    return _from_rows(K.kneser_adjacency(arr), tuple(verts), f"SG({n},{r})")


def categorical_product(G: ConflictGraph, H: ConflictGraph) -> ConflictGraph:
    """Vertex ``(u, v)`` has index ``u * |V(H)| + v``; ``(u, v) ~ (x, y)`` iff
    ``u ~ x`` in G and ``v ~ y`` in H."""
    a, b = G.vertex_count, H.vertex_count
    _guard(a * b)
    edges = []
    for u, x in G.edges():
        for v, y in H.edges():
            edges.append((u * b + v, x * b + y))
            edges.append((u * b + y, x * b + v))
    return from_edges(a * b, edges, name=f"{G.name}x{H.name}")


def sum_to_product_order(M: Matroid, N: Matroid) -> list[int]:
    """Permutation sending vertex indices of KG(M + N) (canonical basis order
    of the direct sum) to the pair indexing of ``categorical_product``."""
    n = M.n
    im = M.basis_index
    jn = N.basis_index
    order = sorted((b | (c << n), (i, j)) for b, i in im.items() for c, j in jn.items())
    return [i * len(N.bases) + j for _, (i, j) in order]


@dataclass(frozen=True)
class EmbeddingResult:
    """``found`` is True (with ``mapping``), False, or None after a timeout."""

    found: bool | None
    mapping: tuple | None
    nodes: int

    @property
    def timed_out(self) -> bool:
        return self.found is None


def _placement_order(G: ConflictGraph) -> list[int]:
    k = G.vertex_count
    deg = G.degrees
    placed = []
    weight = np.zeros(k, dtype=np.int64)
    free = set(range(k))
    while free:
        v = max(free, key=lambda u: (weight[u], deg[u], -u))
        placed.append(v)
        free.discard(v)
        for u in G.neighbors(v):
            weight[u] += 1
    return placed


def subgraph_embedding_exists(small: ConflictGraph, big: ConflictGraph, budget: int = 10_000_000) -> EmbeddingResult:
    """Search for an injective map keeping every edge of ``small`` an edge of
    ``big`` (not necessarily induced). ``budget`` caps node expansions."""
    if small.vertex_count > big.vertex_count:
        return EmbeddingResult(False, None, 0)
    order = np.array(_placement_order(small), dtype=np.int64)
    indptr, indices = small.csr
    out = np.full(small.vertex_count, -1, dtype=np.int64)
    status, nodes = K.embed_search(
        order, indptr, indices, small.degrees.astype(np.int64), big.rows, big.degrees.astype(np.int64), budget, out
    )
    if status == 1:
        return EmbeddingResult(True, tuple(int(x) for x in out), int(nodes))
    return EmbeddingResult(False if status == 0 else None, None, int(nodes))


def is_embedding(small: ConflictGraph, big: ConflictGraph, mapping) -> bool:
    if len(set(mapping)) != len(mapping):
        return False
    return all(big.has_edge(mapping[i], mapping[j]) for i, j in small.edges())


def to_json(G: ConflictGraph) -> dict:
    return {"vertices": G.vertex_count, "edges": [list(e) for e in G.edges()]}
