import itertools

import numpy as np
import pytest

from borsukoid.errors import (
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
from borsukoid.families import fano, theta, triangle_with_loop, uniform
from borsukoid.matroid import (
    basis_distance,
    bits,
    circuits,
    cocircuits,
    coloops,
    connected_components,
    diameter,
    direct_sum,
    dual,
    empty_matroid,
    exchange_witness,
    find_isomorphism,
    from_bases,
    from_masks,
    incidence_vector,
    is_connected,
    is_isomorphic,
    loops,
    mask_of,
    num_components,
    parallel_connection,
    rank_of,
    relabel,
    series_connection,
)


def brute_circuits(M):
    """Minimal dependent sets found by testing every subset with rank_of."""
    dep = []
    for size in range(1, M.n + 1):
        for c in itertools.combinations(range(M.n), size):
            S = mask_of(c)
            if rank_of(M, S) < size and not any(d & S == d for d in dep):
                dep.append(S)
    return frozenset(dep)


def label_bases(M):
    return sorted(sorted(M.labels[i] for i in bits(b)) for b in M.bases)


# -- construction ----------------------------------------------------------------


def test_single_coloop():
    M = from_bases(["a"], [{"a"}])
    assert M.rank == 1 and len(M.bases) == 1


def test_rank_two_with_loop():
    M = triangle_with_loop()
    assert M.rank == 2
    assert M.label_set(loops(M)) == [4]
    assert coloops(M) == 0


def test_from_bases_rejects_non_exchange():
    with pytest.raises(ExchangeAxiomViolation) as info:
        from_bases([1, 2, 3, 4], [{1, 2}, {3, 4}])
    exc = info.value
    assert exc.element in exc.basis and exc.element not in exc.other


@pytest.mark.parametrize(
    "labels, bases, err",
    [
        ([1, 2], [], EmptyBases),
        ([1, 2, 3], [{1}, {2, 3}], UnequalCardinality),
        ([1, 2], [{3}], UnknownLabel),
        ([1, 1], [{1}], DuplicateLabel),
    ],
)
def test_from_bases_errors(labels, bases, err):
    with pytest.raises(err):
        from_bases(labels, bases)


def test_ground_set_guard():
    with pytest.raises(GroundSetTooLarge):
        from_masks(range(65), [0])


def test_canonical_order_and_dedup():
    M = from_bases([1, 2, 3], [{2, 3}, {1, 2}, {1, 3}, {1, 2}])
    assert M.bases == (0b011, 0b101, 0b110)


def test_rank_zero_is_legal():
    M = uniform(0, 3)
    assert M.bases == (0,) and M.rank == 0


def test_exchange_witness_none_on_uniform():
    assert exchange_witness(list(uniform(3, 6).bases), 6) is None


# -- rank, loops, circuits ---------------------------------------------------------


def test_rank_of():
    U = uniform(2, 4)
    assert rank_of(U, 0b0001) == 1
    assert rank_of(U, 0) == 0
    assert rank_of(U, U.ground) == 2
    assert rank_of(triangle_with_loop(), 0b1000) == 0


def test_loops_coloops():
    U22 = uniform(2, 2)
    assert loops(U22) == 0 and coloops(U22) == 0b11
    U13 = uniform(1, 3)
    assert loops(U13) == 0 and coloops(U13) == 0


def test_circuits_small():
    assert circuits(uniform(2, 3)) == {0b111}
    assert 0b1000 in circuits(triangle_with_loop())


def test_fano_cocircuits_all_size_four():
    F = fano()
    assert {c.bit_count() for c in cocircuits(F)} == {4}
    assert len(cocircuits(F)) == 7


@pytest.mark.parametrize("M", [uniform(2, 4), fano(), triangle_with_loop(), theta(3), direct_sum(uniform(2, 3), uniform(1, 3))])
def test_circuits_match_subset_oracle(M):
    assert circuits(M) == brute_circuits(M)


def test_cocircuits_are_dual_circuits():
    M = theta(3)
    assert cocircuits(M) == circuits(dual(M))


def test_every_basis_meets_every_cocircuit():
    for M in (fano(), theta(4), uniform(2, 5)):
        assert all(b & c for b in M.bases for c in cocircuits(M))


# -- dual, sums -------------------------------------------------------------------


def test_dual_uniform():
    assert dual(uniform(2, 5)) == uniform(3, 5)


def test_dual_involution_and_rank():
    for M in (fano(), theta(3), triangle_with_loop()):
        D = dual(M)
        assert dual(D) == M
        assert len(D.bases) == len(M.bases)
        assert D.rank + M.rank == M.n


def test_dual_of_rank_two_example():
    D = dual(triangle_with_loop())
    assert label_bases(D) == [[1, 4], [2, 4], [3, 4]]


def test_theta5_self_dual():
    T = theta(5)
    perm = find_isomorphism(T, dual(T))
    assert perm is not None
    assert relabel(T, perm).bases == dual(T).bases


def test_isomorphism_negative():
    assert not is_isomorphic(uniform(2, 4), direct_sum(uniform(1, 2), uniform(1, 2)))


def test_direct_sum_counts():
    S = direct_sum(uniform(2, 3), uniform(1, 3))
    assert (S.n, S.rank, len(S.bases)) == (6, 3, 9)
    assert num_components(S) == 2


def test_direct_sum_identity():
    M = fano()
    assert direct_sum(M, empty_matroid()) == M


def test_direct_sum_relabels_collisions():
    S = direct_sum(uniform(1, 2), uniform(1, 2))
    assert S.labels == (1, 2, "1'", "2'")
    with pytest.raises(LabelCollision):
        direct_sum(uniform(1, 2), uniform(1, 2), relabel=False)


def test_dual_commutes_with_sum():
    M, N = uniform(2, 3), theta(2)
    assert dual(direct_sum(M, N)) == direct_sum(dual(M), dual(N))


# -- series / parallel ---------------------------------------------------------------


def test_series_of_two_u12_is_u23():
    M = from_bases(["p", "a"], [{"p"}, {"a"}])
    N = from_bases(["p", "b"], [{"p"}, {"b"}])
    S = series_connection(M, "p", N, "p")
    assert S.labels == ("p", "a", "b")
    assert label_bases(S) == [["a", "b"], ["a", "p"], ["b", "p"]]
    assert is_isomorphic(S, uniform(2, 3))


def test_series_parallel_duality():
    M, N = uniform(2, 4), uniform(1, 3)
    left = dual(series_connection(M, 1, N, 1))
    right = parallel_connection(dual(M), 1, dual(N), 1)
    assert left.bases == right.bases


def test_series_of_connected_is_connected():
    S = series_connection(uniform(2, 4), 1, dual(uniform(2, 4)), 1)
    assert is_connected(S)


def test_series_rejects_coloop():
    with pytest.raises(ColoopShared):
        series_connection(uniform(2, 2), 1, uniform(1, 2), 1)


def test_parallel_rejects_loop():
    with pytest.raises(LoopShared):
        parallel_connection(triangle_with_loop(), 4, uniform(1, 2), 1)


# -- components --------------------------------------------------------------------


def test_components_of_rank_two_example():
    C = connected_components(triangle_with_loop())
    assert C.parts == (0b0111, 0b1000)
    assert [len(m.bases) for m in C.component_matroids] == [3, 1]


def test_components_dual_invariant():
    for M in (triangle_with_loop(), direct_sum(uniform(2, 3), uniform(1, 3)), fano()):
        assert connected_components(M).parts == connected_components(dual(M)).parts


def test_bases_factor_across_components():
    M = direct_sum(direct_sum(uniform(1, 2), uniform(2, 3)), uniform(0, 1))
    C = connected_components(M)
    for b in M.bases:
        assert sum((b & p).bit_count() for p in C.parts) == M.rank
    total = 1
    for sub in C.component_matroids:
        total *= len(sub.bases)
    assert total == len(M.bases)


# -- distances ---------------------------------------------------------------------


def test_distances():
    U = uniform(2, 4)
    b12, b34 = U.mask([1, 2]), U.mask([3, 4])
    assert basis_distance(b12, b12, U) == 0
    assert basis_distance(b12, b34, U) == 4
    assert diameter(U) == 4
    assert diameter(triangle_with_loop()) == 2
    assert diameter(uniform(1, 1)) == 0


def test_distance_rejects_non_basis():
    with pytest.raises(NotABasis):
        basis_distance(0b1, 0b11, uniform(2, 4))


def test_incidence_vectors_square_distance():
    M = fano()
    for b, c in itertools.combinations(M.bases, 2):
        d = incidence_vector(M, b).astype(int) - incidence_vector(M, c).astype(int)
        assert int(np.dot(d, d)) == basis_distance(b, c)
