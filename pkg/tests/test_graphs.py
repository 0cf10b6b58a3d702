import itertools

import numpy as np
import pytest

from borsukoid import _kernels as K
from borsukoid.coloring import chromatic_number
from borsukoid.errors import BadParams, SingleBasis
from borsukoid.families import fano, non_pappus, theta, triangle_with_loop, uniform
from borsukoid.graphs import (
    categorical_product,
    classical_kneser,
    diameter_graph,
    from_edges,
    is_embedding,
    is_stable,
    kneser_graph,
    schrijver_graph,
    subgraph_embedding_exists,
    sum_to_product_order,
)
from borsukoid.matroid import diameter, direct_sum


def complete(k):
    return from_edges(k, itertools.combinations(range(k), 2))


def dense_kneser(sets):
    return np.array([[not (a & b) for b in sets] for a in sets])


def test_petersen():
    P = classical_kneser(5, 2)
    assert (P.vertex_count, P.edge_count) == (10, 15)
    assert set(P.degrees.tolist()) == {3}


def test_schrijver_small():
    C = schrijver_graph(5, 2)
    assert C.vertex_count == 5 and C.edge_count == 5
    assert set(C.degrees.tolist()) == {2}
    S = schrijver_graph(4, 2)
    assert S.vertex_count == 2 and S.edge_count == 1
    with pytest.raises(BadParams):
        schrijver_graph(3, 2)


def test_is_stable_is_cyclic():
    assert is_stable(0b0101, 4)
    assert not is_stable(0b1001, 4)
    assert not is_stable(0b0011, 4)


def test_kneser_matches_dense_oracle():
    for M in (fano(), theta(3), uniform(2, 5)):
        G = kneser_graph(M)
        assert np.array_equal(G.dense(), dense_kneser(M.bases))
        assert G.payload == M.bases


def test_kneser_edgeless_when_bases_meet():
    assert kneser_graph(uniform(2, 3)).edge_count == 0


def test_kneser_equals_diameter_graph_with_disjoint_bases():
    for M in (fano(), uniform(2, 4), theta(4)):
        assert diameter(M) == 2 * M.rank
        assert kneser_graph(M) == diameter_graph(M)


def test_diameter_graph_of_rank_two_example_is_triangle():
    D = diameter_graph(triangle_with_loop())
    assert D == complete(3)


def test_diameter_graph_single_basis():
    with pytest.raises(SingleBasis):
        diameter_graph(uniform(2, 2))


def test_product_edge_count():
    G, H = classical_kneser(5, 2), complete(3)
    P = categorical_product(G, H)
    assert P.vertex_count == 30
    assert P.edge_count == 2 * G.edge_count * H.edge_count


def test_kneser_of_sum_is_product():
    for M, N in [(uniform(1, 2), uniform(1, 2)), (uniform(2, 4), uniform(1, 3)), (theta(2), uniform(1, 2))]:
        KS = kneser_graph(direct_sum(M, N))
        prod = categorical_product(kneser_graph(M), kneser_graph(N))
        assert KS.permuted(sum_to_product_order(M, N)) == prod


def test_product_of_triangles_is_three_chromatic():
    assert chromatic_number(categorical_product(complete(3), complete(3))).k == 3


def test_embedding_negative():
    res = subgraph_embedding_exists(complete(4), complete(3))
    assert res.found is False
    res = subgraph_embedding_exists(complete(4), classical_kneser(5, 2))
    assert res.found is False


def test_schrijver_embeds_into_fano_kneser():
    S, G = schrijver_graph(7, 3), kneser_graph(fano())
    res = subgraph_embedding_exists(S, G)
    assert res.found is True
    assert is_embedding(S, G, res.mapping)


def test_schrijver_embeds_into_non_pappus_kneser():
    S, G = schrijver_graph(9, 3), kneser_graph(non_pappus())
    res = subgraph_embedding_exists(S, G)
    assert res.found is True
    assert is_embedding(S, G, res.mapping)


def test_embedding_budget():
    res = subgraph_embedding_exists(schrijver_graph(9, 3), kneser_graph(non_pappus()), budget=5)
    assert res.timed_out


def test_is_embedding_rejects_non_injective():
    assert not is_embedding(complete(2), complete(3), (0, 0))


def test_permuted_roundtrip():
    G = classical_kneser(5, 2)
    perm = list(range(10))[::-1]
    back = [perm.index(i) for i in range(10)]
    assert G.permuted(perm).permuted(back) == G


def test_large_vertex_guard():
    with pytest.raises(BadParams):
        from_edges(20_001, [])


def test_csr_matches_rows():
    G = kneser_graph(fano())
    indptr, indices = K.rows_to_csr(G.rows, G.vertex_count)
    for i in range(G.vertex_count):
        assert sorted(indices[indptr[i]:indptr[i + 1]].tolist()) == [j for j in range(G.vertex_count) if G.has_edge(i, j)]
