"""Compiled inner loops: the SplitMix64 edge sampler and the maximal-clique search.

Bitsets here are ``uint64`` word arrays, bit ``v`` living in word ``v >> 6``.
"""
import numpy as np
from numba import njit

_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)
_ZERO = np.uint64(0)
_ONE = np.uint64(1)
_S1 = np.uint64(1)
_S2 = np.uint64(2)
_S4 = np.uint64(4)
_S27 = np.uint64(27)
_S30 = np.uint64(30)
_S31 = np.uint64(31)
_S56 = np.uint64(56)


@njit(cache=True)
def sample_adjacency(n, seed, threshold, out):
    """Fill the boolean matrix ``out`` with G(n, p); pair (i, j) uses the next word."""
    state = seed
    for i in range(n):
        for j in range(i + 1, n):
            state += _GAMMA
            z = state
            z = (z ^ (z >> _S30)) * _MIX1
            z = (z ^ (z >> _S27)) * _MIX2
            z = z ^ (z >> _S31)
            if z < threshold:
                out[i, j] = True
                out[j, i] = True


@njit(cache=True, inline="always")
def _popcount(x):
    x = x - ((x >> _S1) & _M1)
    x = (x & _M2) + ((x >> _S2) & _M2)
    x = (x + (x >> _S4)) & _M4
    return np.int64((x * _H01) >> _S56)


@njit(cache=True)
def _count(words):
    c = 0
    for w in range(words.shape[0]):
        c += _popcount(words[w])
    return c


@njit(cache=True)
def _count_and(a, b):
    c = 0
    for w in range(a.shape[0]):
        c += _popcount(a[w] & b[w])
    return c


@njit(cache=True)
def _open_frame(inner, pool, start, nx, P, size, min_size, budget, pivot):
    """Prepare a search node; returns 2 leaf hit, 1 expandable, 0 dead, -1 budget.

    On 1 the branch set is left in ``pivot``.
    """
    if budget[0] >= 0:
        if budget[0] == 0:
            return -1
        budget[0] -= 1
    W = P.shape[0]
    pc = _count(P)
    if pc == 0:
        return 2 if nx == 0 and size >= min_size else 0
    if size + pc < min_size:
        return 0
    best = -1
    pivot[:] = _ZERO
    for i in range(start, start + nx):
        c = _count_and(pool[i], P)
        if c > best:
            best = c
            pivot[:] = pool[i]
    if best == pc:
        return 0
    for w in range(W):
        word = P[w]
        while word:
            low = word & (_ZERO - word)
            v = w * 64 + _popcount(low - _ONE)
            word ^= low
            c = _count_and(inner[v], P)
            if c > best:
                best = c
                pivot[:] = inner[v]
    for w in range(W):
        pivot[w] = P[w] & ~pivot[w]
    return 1


@njit(cache=True)
def _grow(pool, rows):
    if rows <= pool.shape[0]:
        return pool
    new = np.empty((max(rows, 2 * pool.shape[0]), pool.shape[1]), dtype=np.uint64)
    new[: pool.shape[0]] = pool
    return new


@njit(cache=True)
def find_maximal_clique(inner, X, min_size, budget):
    """Search for a clique on ``inner``'s vertices that no row of ``X`` fully covers.

    Bron-Kerbosch with an explicit frame stack. Rows of ``X`` stand for
    excluded vertices adjacent to the whole partial clique; a node dies when
    one of them covers every candidate. Returns ``(status, words)``: status 1
    found, 0 none, -1 budget exhausted.
    """
    u = inner.shape[0]
    W = inner.shape[1]
    depth_cap = u + 2
    P = np.zeros((depth_cap, W), dtype=np.uint64)
    B = np.zeros((depth_cap, W), dtype=np.uint64)
    start = np.zeros(depth_cap, dtype=np.int64)
    count = np.zeros(depth_cap, dtype=np.int64)
    cap = np.zeros(depth_cap, dtype=np.int64)
    chosen = np.zeros(depth_cap, dtype=np.int64)
    R = np.zeros(W, dtype=np.uint64)
    left = np.array([budget], dtype=np.int64)
    nx = X.shape[0]
    pool = np.empty((max(64, 2 * nx + u + 1), W), dtype=np.uint64)
    pool[:nx] = X
    for v in range(u):
        P[0, v >> 6] |= _ONE << np.uint64(v & 63)
    count[0] = nx
    st = _open_frame(inner, pool, 0, nx, P[0], 0, min_size, left, B[0])
    if st == 2:
        return 1, R
    if st <= 0:
        return st, R
    cap[0] = nx + _count(B[0])
    d = 0
    while d >= 0:
        # next branch vertex of frame d
        v = -1
        for w in range(W):
            word = B[d, w]
            if word:
                low = word & (_ZERO - word)
                B[d, w] = word ^ low
                v = w * 64 + _popcount(low - _ONE)
                break
        if v < 0:
            d -= 1
            if d < 0:
                break
            v = chosen[d]
        else:
            chosen[d] = v
            w = v >> 6
            low = _ONE << np.uint64(v & 63)
            cstart = start[d] + cap[d]
            pool = _grow(pool, cstart + count[d] + u + 1)
            for k in range(W):
                P[d + 1, k] = P[d, k] & inner[v, k]
            n2 = 0
            for i in range(start[d], start[d] + count[d]):
                if pool[i, w] & low:
                    for k in range(W):
                        pool[cstart + n2, k] = pool[i, k] & P[d + 1, k]
                    n2 += 1
            start[d + 1] = cstart
            count[d + 1] = n2
            R[w] |= low
            st = _open_frame(inner, pool, cstart, n2, P[d + 1], d + 1, min_size, left, B[d + 1])
            if st == 2:
                return 1, R
            if st < 0:
                return -1, R
            if st == 1:
                cap[d + 1] = n2 + _count(B[d + 1])
                d += 1
                continue
        # child of frame d on vertex v is finished: v becomes excluded
        w = v >> 6
        low = _ONE << np.uint64(v & 63)
        R[w] &= ~low
        P[d, w] &= ~low
        pool[start[d] + count[d]] = inner[v]
        count[d] += 1
    return 0, R
