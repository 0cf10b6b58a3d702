"""Hot loops: bitset popcounts, conflict-graph construction, exact coloring,
exchange-axiom scans, matroid enumeration and subgraph embedding.

Every function here is decorated with :func:`borsukoid._jit.njit`, so it is
compiled by numba unless ``BORSUKOID_NUMBA=0``. Dense pairwise builders also
have vectorized numpy twins (``*_numpy``) used when numba is off, since
interpreting their double loops element by element would be needlessly slow.

Bitsets are ``np.uint64``. Keep every operand of a shift or mask explicitly
unsigned: numba promotes ``uint64 op int64`` to float64.
"""

import numpy as np

from ._jit import USE_NUMBA, njit

U0 = np.uint64(0)
U1 = np.uint64(1)
_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_S1 = np.uint64(1)
_S2 = np.uint64(2)
_S4 = np.uint64(4)
_S8 = np.uint64(8)
_S16 = np.uint64(16)
_S32 = np.uint64(32)
_LOW7 = np.uint64(0x7F)
_W = np.uint64(63)
_SIX = np.uint64(6)


@njit
def popcount(x):
    # SWAR without the final multiply, so interpreted uint64 math never overflows
    x = x - ((x >> _S1) & _M1)
    x = (x & _M2) + ((x >> _S2) & _M2)
    x = (x + (x >> _S4)) & _M4
    x = x + (x >> _S8)
    x = x + (x >> _S16)
    x = x + (x >> _S32)
    return int(x & _LOW7)


@njit
def _set_bit(row, j):
    row[j >> 6] |= U1 << (np.uint64(j) & _W)


@njit
def test_bit(rows, i, j):
    return (rows[i, j >> 6] >> (np.uint64(j) & _W)) & U1 != U0


# ---------------------------------------------------------------------------
# pairwise structure over a family of bitsets


@njit
def kneser_rows(sets):
    """Packed adjacency: ``i ~ j`` iff ``sets[i] & sets[j] == 0``."""
    k = sets.shape[0]
    words = (k + 63) // 64
    rows = np.zeros((k, words), dtype=np.uint64)
    for i in range(k):
        a = sets[i]
        for j in range(i + 1, k):
            if a & sets[j] == U0:
                _set_bit(rows[i], j)
                _set_bit(rows[j], i)
    return rows


@njit
def distance_rows(sets, dist):
    """Packed adjacency: ``i ~ j`` iff ``|sets[i] ^ sets[j]| == dist``."""
    k = sets.shape[0]
    words = (k + 63) // 64
    rows = np.zeros((k, words), dtype=np.uint64)
    for i in range(k):
        a = sets[i]
        for j in range(i + 1, k):
            if popcount(a ^ sets[j]) == dist:
                _set_bit(rows[i], j)
                _set_bit(rows[j], i)
    return rows


@njit
def max_distance(sets):
    best = 0
    k = sets.shape[0]
    for i in range(k):
        a = sets[i]
        for j in range(i + 1, k):
            d = popcount(a ^ sets[j])
            if d > best:
                best = d
    return best


@njit
def min_intersection(sets):
    """Smallest ``|a & b|`` over distinct pairs; -1 for fewer than two sets."""
    best = -1
    k = sets.shape[0]
    for i in range(k):
        a = sets[i]
        for j in range(i + 1, k):
            c = popcount(a & sets[j])
            if best < 0 or c < best:
                best = c
    return best


def _pack_bool(dense):
    k = dense.shape[0]
    words = (k + 63) // 64
    padded = np.zeros((k, words * 64), dtype=bool)
    padded[:, :k] = dense
    packed = np.packbits(padded, axis=1, bitorder="little")
    return packed.view("<u8").astype(np.uint64).reshape(k, words)


def kneser_rows_numpy(sets):
    dense = (sets[:, None] & sets[None, :]) == 0
    np.fill_diagonal(dense, False)
    return _pack_bool(dense)


def distance_rows_numpy(sets, dist):
    dense = np.bitwise_count(sets[:, None] ^ sets[None, :]) == dist
    np.fill_diagonal(dense, False)
    return _pack_bool(dense)


def max_distance_numpy(sets):
    if sets.shape[0] < 2:
        return 0
    return int(np.bitwise_count(sets[:, None] ^ sets[None, :]).max())


def min_intersection_numpy(sets):
    k = sets.shape[0]
    if k < 2:
        return -1
    inter = np.bitwise_count(sets[:, None] & sets[None, :]).astype(np.int64)
    inter[np.arange(k), np.arange(k)] = np.iinfo(np.int64).max
    return int(inter.min())


# ---------------------------------------------------------------------------
# matroid axioms


@njit
def exchange_violation(sets, n):
    """First ``(i, j, e)`` with ``e`` in ``sets[i] - sets[j]`` and no ``f`` in
    ``sets[j] - sets[i]`` making ``sets[i] - e + f`` a member; ``(-1, -1, -1)``
    when the family is exchange-closed. ``sets`` must be sorted ascending."""
    k = sets.shape[0]
    for i in range(k):
        a = sets[i]
        for j in range(k):
            if i == j:
                continue
            b = sets[j]
            only_a = a & ~b
            only_b = b & ~a
            for e in range(n):
                be = U1 << np.uint64(e)
                if only_a & be == U0:
                    continue
                ok = False
                for f in range(n):
                    bf = U1 << np.uint64(f)
                    if only_b & bf == U0:
                        continue
                    cand = (a & ~be) | bf
                    pos = np.searchsorted(sets, cand)
                    if pos < k and sets[pos] == cand:
                        ok = True
                        break
                if not ok:
                    return i, j, e
    return -1, -1, -1


@njit
def _pair_ok(a, b, state, idx, n):
    # every e in a-b keeps at least one exchange partner that is not excluded
    for e in range(n):
        if (a >> e) & 1 == 0 or (b >> e) & 1 == 1:
            continue
        ok = False
        for f in range(n):
            if (b >> f) & 1 == 0 or (a >> f) & 1 == 1:
                continue
            cand = (a & ~(1 << e)) | (1 << f)
            if state[idx[cand]] != 2:
                ok = True
                break
        if not ok:
            return False
    return True


@njit
def _consistent_in(i, subs, state, idx, n):
    a = subs[i]
    for j in range(subs.shape[0]):
        if j == i or state[j] != 1:
            continue
        b = subs[j]
        if not _pair_ok(a, b, state, idx, n) or not _pair_ok(b, a, state, idx, n):
            return False
    return True


@njit
def _consistent_out(i, subs, state, idx, n):
    x = subs[i]
    m = subs.shape[0]
    for ia in range(m):
        if state[ia] != 1:
            continue
        a = subs[ia]
        d = a ^ x
        # only pairs whose candidate exchange a-e+f equals x can break
        c = 0
        while d:
            d &= d - 1
            c += 1
        if c != 2:
            continue
        for ib in range(m):
            if ib == ia or state[ib] != 1:
                continue
            if not _pair_ok(a, subs[ib], state, idx, n):
                return False
    return True


@njit
def enumerate_families(subs, n):
    """All nonempty exchange-closed subfamilies of ``subs`` (int64 r-subsets
    of ``[n]``, ``len(subs) <= 64``) as uint64 masks over indices of ``subs``.

    Include/exclude backtracking in the order of ``subs``; a branch is cut as
    soon as an included pair has an element all of whose exchange partners
    are already excluded."""
    m = subs.shape[0]
    idx = np.full(1 << n, m, dtype=np.int64)
    for t in range(m):
        idx[subs[t]] = t
    # sentinel slot m: "not an r-subset", always excluded
    state = np.zeros(m + 1, dtype=np.int64)
    state[m] = 2
    tried = np.zeros(m + 1, dtype=np.int64)
    out = np.empty(1024, dtype=np.uint64)
    count = 0
    n_in = 0
    i = 0
    while i >= 0:
        if i == m:
            if n_in > 0:
                if count == out.shape[0]:
                    grown = np.empty(2 * count, dtype=np.uint64)
                    grown[:count] = out
                    out = grown
                mask = U0
                for t in range(m):
                    if state[t] == 1:
                        mask |= U1 << np.uint64(t)
                out[count] = mask
                count += 1
            i -= 1
            continue
        t = tried[i]
        if t == 0:
            state[i] = 1
            n_in += 1
            tried[i] = 1
            if _consistent_in(i, subs, state, idx, n):
                i += 1
                tried[i] = 0
        elif t == 1:
            state[i] = 2
            n_in -= 1
            tried[i] = 2
            if _consistent_out(i, subs, state, idx, n):
                i += 1
                tried[i] = 0
        else:
            state[i] = 0
            i -= 1
    return out[:count].copy()


# ---------------------------------------------------------------------------
# graph coloring


@njit
def rows_to_csr(rows, k):
    deg = np.zeros(k, dtype=np.int64)
    for i in range(k):
        c = 0
        for w in range(rows.shape[1]):
            c += popcount(rows[i, w])
        deg[i] = c
    indptr = np.zeros(k + 1, dtype=np.int64)
    for i in range(k):
        indptr[i + 1] = indptr[i] + deg[i]
    indices = np.empty(indptr[k], dtype=np.int64)
    for i in range(k):
        pos = indptr[i]
        for w in range(rows.shape[1]):
            x = rows[i, w]
            base = w * 64
            for b in range(64):
                if (x >> np.uint64(b)) & U1 != U0:
                    indices[pos] = base + b
                    pos += 1
    return indptr, indices


@njit
def greedy_clique(rows, deg, max_starts):
    """Best clique found by greedy max-degree growth from the top-degree
    vertices."""
    k = rows.shape[0]
    words = rows.shape[1]
    order = np.argsort(-deg, kind="mergesort")
    best = np.empty(0, dtype=np.int64)
    cur = np.empty(k, dtype=np.int64)
    cand = np.empty(words, dtype=np.uint64)
    starts = min(k, max_starts)
    for s in range(starts):
        v = order[s]
        size = 1
        cur[0] = v
        for w in range(words):
            cand[w] = rows[v, w]
        while True:
            pick = -1
            pick_deg = -1
            for w in range(words):
                x = cand[w]
                while x != U0:
                    low = x & (~x + U1)
                    b = popcount(low - U1)
                    u = w * 64 + b
                    if deg[u] > pick_deg:
                        pick_deg = deg[u]
                        pick = u
                    x ^= low
            if pick < 0:
                break
            cur[size] = pick
            size += 1
            for w in range(words):
                cand[w] &= rows[pick, w]
        if size > best.shape[0]:
            best = cur[:size].copy()
    return best


@njit
def dsatur_greedy(indptr, indices, k):
    """Plain DSATUR heuristic coloring; returns the color array."""
    color = np.full(k, -1, dtype=np.int64)
    if k == 0:
        return color
    deg = indptr[1:] - indptr[:-1]
    cap = int(deg.max()) + 2 if k > 0 else 1
    seen = np.zeros((k, cap), dtype=np.bool_)
    sat = np.zeros(k, dtype=np.int64)
    for _ in range(k):
        v = -1
        for u in range(k):
            if color[u] >= 0:
                continue
            if v < 0 or sat[u] > sat[v] or (sat[u] == sat[v] and deg[u] > deg[v]):
                v = u
        c = 0
        while seen[v, c]:
            c += 1
        color[v] = c
        for p in range(indptr[v], indptr[v + 1]):
            u = indices[p]
            if not seen[u, c]:
                seen[u, c] = True
                sat[u] += 1
    return color


@njit
def _assign(v, c, k, indptr, indices, color, cnt, sat):
    color[v] = c
    ok = True
    for p in range(indptr[v], indptr[v + 1]):
        u = indices[p]
        if cnt[u, c] == 0:
            sat[u] += 1
            if color[u] < 0 and sat[u] >= k:
                ok = False
        cnt[u, c] += 1
    return ok


@njit
def _unassign(v, c, indptr, indices, color, cnt, sat):
    color[v] = -1
    for p in range(indptr[v], indptr[v + 1]):
        u = indices[p]
        cnt[u, c] -= 1
        if cnt[u, c] == 0:
            sat[u] -= 1


@njit
def _select(color, sat, deg):
    v = -1
    for u in range(color.shape[0]):
        if color[u] >= 0:
            continue
        if v < 0 or sat[u] > sat[v] or (sat[u] == sat[v] and deg[u] > deg[v]):
            v = u
    return v


@njit
def k_colorable(indptr, indices, k_colors, seed, node_limit, out):
    """Decide whether the graph has a proper coloring with ``k_colors``.

    ``seed`` is a clique precolored with colors ``0..len(seed)-1`` (this is
    the color-symmetry break); afterwards DSATUR picks the next vertex and new
    colors are only opened in order. Forward checking cuts a branch once an
    uncolored vertex sees all colors.

    Returns ``(status, nodes)``: status 1 feasible (coloring in ``out``),
    0 infeasible, -1 node limit hit."""
    k = indptr.shape[0] - 1
    if k == 0:
        return 1, 0
    if k_colors <= 0 or seed.shape[0] > k_colors:
        return 0, 0
    deg = indptr[1:] - indptr[:-1]
    color = np.full(k, -1, dtype=np.int64)
    cnt = np.zeros((k, k_colors), dtype=np.int32)
    sat = np.zeros(k, dtype=np.int64)
    used = 0
    ncol = 0
    for t in range(seed.shape[0]):
        v = seed[t]
        if not _assign(v, t, k_colors, indptr, indices, color, cnt, sat):
            return 0, 0
        used += 1
        ncol += 1
    for t in range(seed.shape[0]):
        if cnt[seed[t], t] > 0:
            return 0, 0
    if ncol == k:
        out[:] = color
        return 1, 0
    order = np.empty(k, dtype=np.int64)
    tried = np.empty(k, dtype=np.int64)
    used_at = np.empty(k, dtype=np.int64)
    depth = 0
    order[0] = _select(color, sat, deg)
    tried[0] = -1
    used_at[0] = used
    nodes = 0
    while depth >= 0:
        v = order[depth]
        prev = tried[depth]
        if prev >= 0:
            _unassign(v, prev, indptr, indices, color, cnt, sat)
            ncol -= 1
            used = used_at[depth]
        limit = used if used < k_colors else k_colors - 1
        c = prev + 1
        while c <= limit and cnt[v, c] > 0:
            c += 1
        if c > limit:
            depth -= 1
            continue
        tried[depth] = c
        nodes += 1
        if nodes > node_limit:
            return -1, nodes
        ok = _assign(v, c, k_colors, indptr, indices, color, cnt, sat)
        ncol += 1
        if c == used:
            used += 1
        if not ok:
            continue
        if ncol == k:
            out[:] = color
            return 1, nodes
        depth += 1
        order[depth] = _select(color, sat, deg)
        tried[depth] = -1
        used_at[depth] = used
    return 0, nodes


# ---------------------------------------------------------------------------
# subgraph embedding


@njit
def embed_search(order, small_nbrs_ptr, small_nbrs, small_deg, big_rows, big_deg, node_limit, out):
    """Injective edge-preserving map from the small graph into the big one.

    ``order`` lists small vertices in placement order; ``small_nbrs`` (CSR)
    lists, for each vertex, its neighbors. Returns ``(status, nodes)``:
    1 found (map in ``out``), 0 none, -1 node limit hit."""
    s = order.shape[0]
    kb = big_rows.shape[0]
    words = big_rows.shape[1]
    if s == 0:
        return 1, 0
    image = np.full(small_deg.shape[0], -1, dtype=np.int64)
    used = np.zeros(words, dtype=np.uint64)
    cand = np.zeros((s, words), dtype=np.uint64)
    nodes = 0
    depth = 0
    fresh = True
    while depth >= 0:
        u = order[depth]
        if fresh:
            for w in range(words):
                cand[depth, w] = ~used[w]
            tail = kb - (words - 1) * 64
            if tail < 64:
                cand[depth, words - 1] &= (U1 << np.uint64(tail)) - U1
            for p in range(small_nbrs_ptr[u], small_nbrs_ptr[u + 1]):
                x = image[small_nbrs[p]]
                if x >= 0:
                    for w in range(words):
                        cand[depth, w] &= big_rows[x, w]
            fresh = False
        else:
            prev = image[u]
            used[prev >> 6] &= ~(U1 << (np.uint64(prev) & _W))
            image[u] = -1
        pick = -1
        for w in range(words):
            while cand[depth, w] != U0:
                x = cand[depth, w]
                low = x & (~x + U1)
                cand[depth, w] = x ^ low
                b = w * 64 + popcount(low - U1)
                if big_deg[b] >= small_deg[u]:
                    pick = b
                    break
            if pick >= 0:
                break
        if pick < 0:
            depth -= 1
            continue
        nodes += 1
        if nodes > node_limit:
            return -1, nodes
        image[u] = pick
        used[pick >> 6] |= U1 << (np.uint64(pick) & _W)
        if depth == s - 1:
            out[:] = image
            return 1, nodes
        depth += 1
        fresh = True
    return 0, nodes


# ---------------------------------------------------------------------------
# dispatch for the pairwise builders


def kneser_adjacency(sets):
    return kneser_rows(sets) if USE_NUMBA else kneser_rows_numpy(sets)


def distance_adjacency(sets, dist):
    return distance_rows(sets, dist) if USE_NUMBA else distance_rows_numpy(sets, dist)


def family_diameter(sets):
    return max_distance(sets) if USE_NUMBA else max_distance_numpy(sets)


def family_min_intersection(sets):
    return min_intersection(sets) if USE_NUMBA else min_intersection_numpy(sets)
