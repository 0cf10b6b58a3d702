"""Generators for named matroids and graphs."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    AttachNotInjective,
    BadParams,
    DegreeTooLarge,
    Disconnected,
    InvalidPathSpec,
    TooManyEdges,
)
from .matroid import (
    MAX_ELEMENTS,
    Matroid,
    all_subsets,
    from_masks,
    mask_of,
    min_basis_intersection,
)


def uniform(r: int, n: int) -> Matroid:
    if not 0 <= r <= n <= MAX_ELEMENTS:
        raise BadParams(f"uniform({r}, {n}) needs 0 <= r <= n <= {MAX_ELEMENTS}")
    return Matroid(n, tuple(range(1, n + 1)), tuple(all_subsets(n, r)), r, f"U{r},{n}")


def _point_configuration(points: int, lines, name: str) -> Matroid:
    """Rank-3 matroid whose bases are the non-collinear triples."""
    dead = {mask_of(p - 1 for p in line) for line in lines}
    bases = [b for b in all_subsets(points, 3) if b not in dead]
    return from_masks(range(1, points + 1), bases, name=name)


# point labels as in the usual drawings: center 3, vertices 1, 6, 7
FANO_LINES = ((2, 3, 7), (1, 3, 4), (3, 5, 6), (1, 5, 7), (4, 6, 7), (1, 2, 6), (2, 4, 5))

# Pappus configuration minus its middle line {3, 5, 8}
NON_PAPPUS_LINES = ((1, 2, 9), (1, 7, 8), (1, 4, 5), (2, 5, 6), (6, 8, 9), (4, 6, 7), (3, 4, 9), (2, 3, 7))


def triangle_with_loop() -> Matroid:
    """Rank 2 on ``1..4``: bases ``{1,2}, {1,3}, {2,3}``, element 4 a loop."""
    return from_masks((1, 2, 3, 4), (0b011, 0b101, 0b110), name="U2,3+loop")


def fano() -> Matroid:
    return _point_configuration(7, FANO_LINES, "F7")


def non_pappus() -> Matroid:
    return _point_configuration(9, NON_PAPPUS_LINES, "non-Pappus")


def v_line(h: int) -> Matroid:
    """Two lines of ``h + 1`` points meeting in a center ``c``; ground order
    is ``c, a1..ah, b1..bh``."""
    if h < 2:
        raise BadParams("v_line needs h >= 2")
    labels = ["c"] + [f"a{i}" for i in range(1, h + 1)] + [f"b{i}" for i in range(1, h + 1)]
    line_a = mask_of(range(0, h + 1))
    line_b = 1 | mask_of(range(h + 1, 2 * h + 1))
    bases = [b for b in all_subsets(2 * h + 1, 3) if b & ~line_a and b & ~line_b]
    return from_masks(labels, bases, name=f"V{h}")


def theta(n: int) -> Matroid:
    """Theta_n on ``x1..xn, y1..yn`` (x's first): the ``n``-sets with at most
    two x's, except the sets ``(Y - y_i) + x_i``."""
    if n < 1 or 2 * n > MAX_ELEMENTS:
        raise BadParams(f"theta needs 1 <= n <= {MAX_ELEMENTS // 2}")
    labels = [f"x{i}" for i in range(1, n + 1)] + [f"y{i}" for i in range(1, n + 1)]
    Y = mask_of(range(n, 2 * n))
    banned = {(Y & ~(1 << (n + i))) | (1 << i) for i in range(n)}
    bases = []
    for j in range(min(2, n) + 1):
        for xs in itertools.combinations(range(n), j):
            for ys in itertools.combinations(range(n, 2 * n), n - j):
                b = mask_of(xs) | mask_of(ys)
                if b not in banned:
                    bases.append(b)
    return from_masks(labels, bases, name=f"Theta{n}")


# ---------------------------------------------------------------------------
# lattice path matroids


@dataclass(frozen=True)
class LatticePathSpec:
    """Bounding paths, as ``N``/``E`` strings of equal length."""

    upper: str
    lower: str

    def __post_init__(self):
        up, lo = self.upper.upper(), self.lower.upper()
        object.__setattr__(self, "upper", up)
        object.__setattr__(self, "lower", lo)
        if set(up) - {"N", "E"} or set(lo) - {"N", "E"}:
            raise InvalidPathSpec("paths use only the steps N and E")
        if len(up) != len(lo) or up.count("N") != lo.count("N"):
            raise InvalidPathSpec("bounding paths must have the same numbers of N and E steps")
        hi = lo_n = 0
        for a, b in zip(up, lo):
            hi += a == "N"
            lo_n += b == "N"
            if hi < lo_n:
                raise InvalidPathSpec("the upper path goes below the lower one")

    @property
    def r(self) -> int:
        return self.upper.count("N")

    @property
    def m(self) -> int:
        return self.upper.count("E")

    def bounds(self):
        """Allowed range of the number of N steps after each prefix length."""
        lo, hi = [0], [0]
        for a, b in zip(self.upper, self.lower):
            hi.append(hi[-1] + (a == "N"))
            lo.append(lo[-1] + (b == "N"))
        return lo, hi


def lattice_path_masks(spec: LatticePathSpec) -> list[int]:
    lo, hi = spec.bounds()
    size = len(spec.upper)
    out = []

    def walk(k, ups, mask):
        if ups < lo[k] or ups > hi[k]:
            return
        if k == size:
            out.append(mask)
            return
        walk(k + 1, ups + 1, mask | (1 << k))
        walk(k + 1, ups, mask)

    walk(0, 0, 0)
    return sorted(out)


def lattice_path(spec: LatticePathSpec, name: str | None = None) -> Matroid:
    """Bases are the North-step positions (labels ``1..m+r``) of the
    monotone paths weakly between the two bounds."""
    size = len(spec.upper)
    if size > MAX_ELEMENTS:
        raise BadParams(f"at most {MAX_ELEMENTS} steps")
    return from_masks(range(1, size + 1), lattice_path_masks(spec), name=name or f"M[{spec.upper},{spec.lower}]")


def _catalan_upper(r, m):
    if not 1 <= r <= m:
        raise BadParams("catalan matroids need m >= r >= 1")
    return "NE" * r + "E" * (m - r)


def catalan(r: int, m: int) -> Matroid:
    spec = LatticePathSpec(_catalan_upper(r, m), "E" * m + "N" * r)
    return lattice_path(spec, name=f"C({r},{m})")


def catalan_minus(r: int, m: int) -> Matroid:
    spec = LatticePathSpec(_catalan_upper(r, m), "E" * (m - r) + "EN" * r)
    return lattice_path(spec, name=f"C-({r},{m})")


# ---------------------------------------------------------------------------
# graphs and graphic matroids


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected graph without self-loops, stored as an edge list.

    Parallel edges are kept only when ``edge_labels`` tells them apart;
    without labels, repeated pairs are dropped.
    """

    vertex_count: int
    edges: tuple
    edge_labels: tuple | None = None
    vertex_labels: tuple | None = None

    def __post_init__(self):
        k = self.vertex_count
        norm = []
        for u, v in self.edges:
            u, v = int(u), int(v)
            if not (0 <= u < k and 0 <= v < k):
                raise BadParams(f"edge ({u}, {v}) has an endpoint outside 0..{k - 1}")
            if u == v:
                raise BadParams(f"self-loop at vertex {u}")
            norm.append((min(u, v), max(u, v)))
        labels = self.edge_labels
        if labels is None:
            norm = list(dict.fromkeys(norm))
        else:
            labels = tuple(labels)
            if len(labels) != len(norm) or len(set(labels)) != len(labels):
                raise BadParams("edge labels must be distinct, one per edge")
        object.__setattr__(self, "edges", tuple(norm))
        object.__setattr__(self, "edge_labels", labels)
        if self.vertex_labels is not None:
            vl = tuple(self.vertex_labels)
            if len(vl) != k or len(set(vl)) != k:
                raise BadParams("vertex labels must be distinct, one per vertex")
            object.__setattr__(self, "vertex_labels", vl)

    def vertex_label(self, v):
        return self.vertex_labels[v] if self.vertex_labels is not None else v

    def labels_for_edges(self) -> tuple:
        if self.edge_labels is not None:
            return self.edge_labels
        return tuple(f"{self.vertex_label(u)}-{self.vertex_label(v)}" for u, v in self.edges)

    def degree(self, v: int) -> int:
        return sum(v in e for e in self.edges)

    def incident(self, v: int) -> list[int]:
        return [i for i, e in enumerate(self.edges) if v in e]

    def adjacency(self) -> list[set]:
        adj = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def components(self, removed=()) -> int:
        adj = self.adjacency()
        gone = set(removed)
        seen = set(gone)
        count = 0
        for s in range(self.vertex_count):
            if s in seen:
                continue
            count += 1
            stack = [s]
            seen.add(s)
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
        return count

    def is_connected(self) -> bool:
        return self.components() <= 1

    def is_two_connected(self) -> bool:
        if self.vertex_count < 3 or not self.is_connected():
            return False
        return all(self.components(removed=(v,)) == 1 for v in range(self.vertex_count))


def complete_graph(k: int) -> SimpleGraph:
    return SimpleGraph(k, tuple(itertools.combinations(range(k), 2)))


def path_graph(k: int) -> SimpleGraph:
    return SimpleGraph(k, tuple((i, i + 1) for i in range(k - 1)))


def cycle_graph(k: int) -> SimpleGraph:
    return SimpleGraph(k, tuple((i, (i + 1) % k) for i in range(k)))


def _edges_by_label(labels, pairs):
    pos = {x: i for i, x in enumerate(labels)}
    return tuple((pos[a], pos[b]) for a, b in pairs)


# the 2-connected planar example: K3 on {v0, v1, v2} whose vertex v0 is
# replaced by a 6-vertex planar graph on v3..v8
_FIG_L_EDGES = (
    ("v3", "v4"), ("v4", "v5"), ("v5", "v6"), ("v3", "v6"), ("v3", "v7"), ("v7", "v8"),
    ("v8", "v5"), ("v8", "v6"), ("v6", "v7"), ("v7", "v4"), ("v4", "v8"),
)
_FIG_G_EDGES = (("v1", "v2"), ("v2", "v3"), ("v6", "v1")) + _FIG_L_EDGES


def figure_graph() -> SimpleGraph:
    labels = tuple(f"v{i}" for i in range(1, 9))
    return SimpleGraph(8, _edges_by_label(labels, _FIG_G_EDGES), vertex_labels=labels)


def figure_host() -> tuple[SimpleGraph, int]:
    """``(H, v0)``: the triangle whose vertex ``v0`` gets replaced."""
    labels = ("v0", "v1", "v2")
    return SimpleGraph(3, ((0, 1), (1, 2), (0, 2)), vertex_labels=labels), 0


def figure_insert() -> SimpleGraph:
    labels = tuple(f"v{i}" for i in range(3, 9))
    return SimpleGraph(6, _edges_by_label(labels, _FIG_L_EDGES), vertex_labels=labels)


def figure_attach() -> dict[int, int]:
    """Host edge index -> insert vertex: ``v0v1`` lands on ``v6``, ``v0v2`` on ``v3``."""
    return {0: 3, 2: 0}


MAX_GRAPH_EDGES = 64


def spanning_forest_masks(G: SimpleGraph) -> list[int]:
    """All maximal spanning forests as edge bitmasks."""
    m = len(G.edges)
    rank = G.vertex_count - G.components()
    parent = list(range(G.vertex_count))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    out = []

    def go(i, chosen, mask):
        if chosen == rank:
            out.append(mask)
            return
        if m - i < rank - chosen:
            return
        u, v = G.edges[i]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            go(i + 1, chosen + 1, mask | (1 << i))
            parent[ru] = ru
        go(i + 1, chosen, mask)

    go(0, 0, 0)
    return sorted(out)


def graphic(G: SimpleGraph, name: str | None = None) -> Matroid:
    """Cycle matroid: ground set = edges, bases = maximal spanning forests."""
    if not G.edges:
        raise BadParams("graphic matroid needs at least one edge")
    if len(G.edges) > MAX_GRAPH_EDGES:
        raise TooManyEdges(f"{len(G.edges)} edges; at most {MAX_GRAPH_EDGES}")
    return from_masks(G.labels_for_edges(), spanning_forest_masks(G), name=name)


def vertex_replacement(H: SimpleGraph, v0: int, L: SimpleGraph, attach: dict | None = None) -> SimpleGraph:
    """Replace ``v0`` of ``H`` by the graph ``L``.

    ``attach`` maps each edge index of ``H`` at ``v0`` to a distinct vertex
    of ``L`` (default: incident edges in order onto ``L``'s vertices
    ``0, 1, ...``; a one-vertex ``L`` takes them all). Vertices of the result are ``H - v0`` in order, then
    ``L``'s; edges are ``H``'s edges away from ``v0``, then ``L``'s, then the
    re-attached ones.
    """
    at_v0 = H.incident(v0)
    if L.vertex_count == 1 and attach is None:
        # degenerate replacement: every edge at v0 lands on the single vertex
        attach = {e: 0 for e in at_v0}
    elif len(at_v0) > L.vertex_count:
        raise DegreeTooLarge(f"deg(v0) = {len(at_v0)} exceeds |V(L)| = {L.vertex_count}")
    if attach is None:
        attach = {e: i for i, e in enumerate(at_v0)}
    if sorted(attach) != sorted(at_v0):
        raise AttachNotInjective("attach must cover exactly the edges of H at v0")
    if len(set(attach.values())) != len(attach) and L.vertex_count > 1:
        raise AttachNotInjective("two edges of H are attached to the same vertex of L")
    if any(not 0 <= x < L.vertex_count for x in attach.values()):
        raise BadParams("attach targets must be vertices of L")
    keep = [v for v in range(H.vertex_count) if v != v0]
    new_h = {v: i for i, v in enumerate(keep)}
    off = len(keep)
    edges = [(new_h[u], new_h[v]) for i, (u, v) in enumerate(H.edges) if i not in attach]
    edges += [(u + off, v + off) for u, v in L.edges]
    for e in at_v0:
        u, v = H.edges[e]
        other = v if u == v0 else u
        edges.append((new_h[other], attach[e] + off))
    vlabels = None
    if H.vertex_labels is not None or L.vertex_labels is not None:
        left = [H.vertex_label(v) for v in keep]
        taken = set(left)
        right = []
        for v in range(L.vertex_count):
            x = L.vertex_label(v)
            while x in taken:
                x = f"{x}'"
            taken.add(x)
            right.append(x)
        vlabels = tuple(left + right)
    G = SimpleGraph(off + L.vertex_count, tuple(edges), vertex_labels=vlabels)
    if H.is_two_connected() and L.is_two_connected() and not G.is_two_connected():
        raise AssertionError("vertex replacement lost 2-connectivity")
    return G


def min_shared_edges(H: SimpleGraph) -> int:
    """Fewest edges two spanning trees of ``H`` can share."""
    if not H.is_connected():
        raise Disconnected("min_shared_edges needs a connected graph")
    if not H.edges:
        return 0
    return min_basis_intersection(graphic(H))
