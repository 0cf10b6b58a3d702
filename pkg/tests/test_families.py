import itertools
from functools import lru_cache

import numpy as np
import pytest

from borsukoid.errors import AttachNotInjective, BadParams, DegreeTooLarge, Disconnected, InvalidPathSpec, TooManyEdges
from borsukoid.families import (
    LatticePathSpec,
    SimpleGraph,
    catalan,
    catalan_minus,
    complete_graph,
    cycle_graph,
    fano,
    figure_attach,
    figure_graph,
    figure_host,
    figure_insert,
    graphic,
    lattice_path,
    min_shared_edges,
    non_pappus,
    path_graph,
    theta,
    uniform,
    v_line,
    vertex_replacement,
)
from borsukoid.matroid import bits, cocircuits, dual, exchange_witness, is_connected, is_isomorphic


def matrix_tree_count(G: SimpleGraph) -> int:
    """Spanning-tree count from the reduced Laplacian."""
    k = G.vertex_count
    Lap = np.zeros((k, k))
    for u, v in G.edges:
        Lap[u, u] += 1
        Lap[v, v] += 1
        Lap[u, v] -= 1
        Lap[v, u] -= 1
    return int(round(np.linalg.det(Lap[1:, 1:])))


def path_count(spec: LatticePathSpec) -> int:
    """Monotone paths weakly between the bounds, by dynamic programming."""
    lo, hi = spec.bounds()
    L = len(spec.upper)

    @lru_cache(None)
    def go(k, ups):
        if k == L:
            return 1 if ups == spec.r else 0
        total = 0
        for step in (0, 1):
            u = ups + step
            if lo[k + 1] <= u <= hi[k + 1]:
                total += go(k + 1, u)
        return total

    return go(0, 0)


def test_uniform():
    assert uniform(0, 3).bases == (0,)
    assert len(uniform(2, 4).bases) == 6
    with pytest.raises(BadParams):
        uniform(3, 2)


def test_lattice_path_full_box_is_uniform():
    M = lattice_path(LatticePathSpec("NNNEEEE", "EEEENNN"))
    assert M.bases == uniform(3, 7).bases


def test_theta_small():
    T1 = theta(1)
    assert T1.labels == ("x1", "y1") and T1.label_set(T1.bases[0]) == ["y1"]
    for n in range(1, 6):
        T = theta(n)
        assert T.n == 2 * n and T.rank == n
        assert exchange_witness(list(T.bases), T.n) is None


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_theta_self_dual(n):
    assert is_isomorphic(theta(n), dual(theta(n)))


def test_point_configurations():
    F, P = fano(), non_pappus()
    assert (F.n, F.rank, len(F.bases)) == (7, 3, 28)
    assert (P.n, P.rank, len(P.bases)) == (9, 3, 76)


def test_fano_labelled_lines_are_the_nonbases():
    F = fano()
    lines = {F.mask(l) for l in [(2, 3, 7), (1, 3, 4), (3, 5, 6), (1, 5, 7), (4, 6, 7), (1, 2, 6), (2, 4, 5)]}
    triples = {sum(1 << i for i in c) for c in itertools.combinations(range(7), 3)}
    assert set(F.bases) == triples - lines


def test_v_line():
    V2 = v_line(2)
    assert V2.labels == ("c", "a1", "a2", "b1", "b2")
    assert len(V2.bases) == 8
    V5 = v_line(5)
    assert min(c.bit_count() for c in cocircuits(V5)) == V5.n - 6
    for h in (2, 3, 4):
        V = v_line(h)
        A = V.mask(["c"] + [f"a{i}" for i in range(1, h + 1)])
        B = V.mask(["c"] + [f"b{i}" for i in range(1, h + 1)])
        assert all((b & A).bit_count() <= 2 and (b & B).bit_count() <= 2 for b in V.bases)
    with pytest.raises(BadParams):
        v_line(1)


def test_catalan_small():
    assert catalan(1, 1).bases == uniform(1, 2).bases


def test_catalan_chain():
    r, m = 2, 4
    assert set(catalan_minus(r, m).bases) <= set(catalan(r, m).bases) <= set(uniform(r, m + r).bases)


@pytest.mark.parametrize("r, m", [(1, 1), (2, 3), (2, 4), (3, 5), (3, 3)])
def test_lattice_path_counts_match_dp(r, m):
    for M, spec in ((catalan(r, m), None), (catalan_minus(r, m), None)):
        assert exchange_witness(list(M.bases), M.n) is None
    spec = LatticePathSpec("NE" * r + "E" * (m - r), "E" * m + "N" * r)
    assert len(lattice_path(spec).bases) == path_count(spec)
    spec2 = LatticePathSpec("NE" * r + "E" * (m - r), "E" * (m - r) + "EN" * r)
    assert len(lattice_path(spec2).bases) == path_count(spec2)


@pytest.mark.parametrize("upper, lower", [("NNE", "NE"), ("ENN", "NNE"), ("NXE", "ENN"), ("NE", "NN")])
def test_lattice_path_spec_errors(upper, lower):
    with pytest.raises(InvalidPathSpec):
        LatticePathSpec(upper, lower)


# -- graphs -------------------------------------------------------------------------


def test_simple_graph_validation():
    with pytest.raises(BadParams):
        SimpleGraph(2, ((0, 0),))
    with pytest.raises(BadParams):
        SimpleGraph(2, ((0, 2),))
    G = SimpleGraph(2, ((0, 1), (1, 0)))
    assert G.edges == ((0, 1),)
    P = SimpleGraph(2, ((0, 1), (1, 0)), edge_labels=("a", "b"))
    assert len(graphic(P).bases) == 2


def test_graphic_basics():
    assert is_isomorphic(graphic(complete_graph(3)), uniform(2, 3))
    pend = SimpleGraph(4, ((0, 1), (1, 2), (0, 2), (2, 3)))
    M = graphic(pend)
    assert (M.rank, len(M.bases)) == (3, 3)


@pytest.mark.parametrize(
    "G",
    [complete_graph(4), complete_graph(5), cycle_graph(6), path_graph(4), figure_graph(), figure_insert()],
)
def test_spanning_tree_count_matches_matrix_tree(G):
    assert len(graphic(G).bases) == matrix_tree_count(G)


def test_graphic_forest_rank():
    G = SimpleGraph(5, ((0, 1), (1, 2), (3, 4)))
    M = graphic(G)
    assert M.rank == 3 and len(M.bases) == 1


def test_graphic_guards():
    with pytest.raises(BadParams):
        graphic(SimpleGraph(3, ()))
    with pytest.raises(TooManyEdges):
        graphic(complete_graph(12))


def test_figure_graph_shape():
    G = figure_graph()
    assert G.vertex_count == 8 and len(G.edges) == 14
    assert G.is_two_connected()
    degs = sorted(G.degree(v) for v in range(8))
    assert degs.count(2) == 2
    H, v0 = figure_host()
    built = vertex_replacement(H, v0, figure_insert(), figure_attach())
    assert sorted(built.degree(v) for v in range(built.vertex_count)) == degs
    assert len(graphic(built).bases) == len(graphic(G).bases)
    assert len(built.edges) == len(H.edges) + len(figure_insert().edges)


def test_figure_matroid():
    M = graphic(figure_graph())
    assert (M.rank, len(M.bases)) == (7, 782)
    assert is_connected(M)


def test_vertex_replacement_with_one_vertex_is_identity():
    G = vertex_replacement(complete_graph(3), 0, SimpleGraph(1, ()))
    assert is_isomorphic(graphic(G), graphic(complete_graph(3)))


def test_vertex_replacement_k4_in_k4():
    G = vertex_replacement(complete_graph(4), 0, complete_graph(4))
    assert G.vertex_count == 7 and len(G.edges) == 12
    assert G.is_two_connected()


def test_vertex_replacement_errors():
    with pytest.raises(DegreeTooLarge):
        vertex_replacement(complete_graph(4), 0, complete_graph(2))
    with pytest.raises(AttachNotInjective):
        vertex_replacement(complete_graph(3), 0, complete_graph(3), {0: 1, 1: 1})


def test_min_shared_edges():
    assert min_shared_edges(complete_graph(3)) == 1
    assert min_shared_edges(complete_graph(4)) == 0
    assert min_shared_edges(path_graph(3)) == 2
    with pytest.raises(Disconnected):
        min_shared_edges(SimpleGraph(3, ((0, 1),)))


def test_every_generator_validates():
    gens = [uniform(2, 5), theta(4), fano(), non_pappus(), v_line(3), catalan(3, 5), catalan_minus(3, 5), graphic(figure_graph())]
    for M in gens:
        assert exchange_witness(list(M.bases), M.n) is None
        assert all(b.bit_count() == M.rank for b in M.bases)
        assert all(max(bits(b), default=-1) < M.n for b in M.bases)
