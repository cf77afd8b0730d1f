"""Maximal clique enumeration and the clique predicates used by the colouring code.

Every routine accepts vertex sets either as :class:`VertexSet` or as raw
bitmasks and returns :class:`VertexSet` objects (or ``None`` when a search
comes up empty).
"""
from __future__ import annotations

from math import comb
from typing import Iterable, Iterator

from .errors import BudgetExceeded, InputError
import numpy as np

from ._kernels import find_maximal_clique
from .graph import Graph, VertexSet, _as_mask, iter_bits, mask_to_bool, rows_to_masks

DEFAULT_MIN_SIZE = 2
# graphs above this order use the compiled search
_COMPILED_MIN_N = 96


def is_clique_mask(G: Graph, S: int) -> bool:
    adj = G.adj
    rest = S
    while rest:
        low = rest & -rest
        rest ^= low
        v = low.bit_length() - 1
        if rest & ~adj[v]:
            return False
    return True


def is_clique(G: Graph, S: VertexSet | int | Iterable[int]) -> bool:
    return is_clique_mask(G, _as_mask(G, S))


def is_maximal_clique(G: Graph, S: VertexSet | int | Iterable[int]) -> bool:
    """True iff ``S`` is a clique and no vertex outside it is adjacent to all of it."""
    s = _as_mask(G, S)
    if not is_clique_mask(G, s):
        return False
    return _common_neighbors(G, s) == 0


def _common_neighbors(G: Graph, s: int) -> int:
    cn = G.full_mask & ~s
    for v in iter_bits(s):
        cn &= G.adj[v]
        if not cn:
            break
    return cn


class _Counter:
    __slots__ = ("left",)

    def __init__(self, budget: int | None):
        self.left = budget

    def tick(self) -> None:
        if self.left is not None:
            self.left -= 1
            if self.left < 0:
                raise BudgetExceeded("search node budget exhausted")


def enumerate_maximal_cliques(
    G: Graph,
    min_size: int = DEFAULT_MIN_SIZE,
    limit: int | None = None,
) -> Iterator[VertexSet]:
    """Yield each inclusion-maximal clique with at least ``min_size`` vertices once.

    Bron-Kerbosch with Tomita pivoting; the pivot maximises the number of
    neighbours among the candidates, ties going to the smallest index, so the
    output order is a function of ``G`` alone.
    """
    if min_size < 1:
        raise InputError("min_size must be >= 1")
    if limit is not None and limit <= 0:
        return
    adj = G.adj
    n = G.n
    emitted = 0

    def expand(R: int, size: int, P: int, X: int) -> Iterator[int]:
        if not P and not X:
            if size >= min_size:
                yield R
            return
        if size + P.bit_count() < min_size:
            return
        best, pivot_nb = -1, 0
        for u in iter_bits(P | X):
            c = (P & adj[u]).bit_count()
            if c > best:
                best, pivot_nb = c, adj[u]
        for v in iter_bits(P & ~pivot_nb):
            bit = 1 << v
            yield from expand(R | bit, size + 1, P & adj[v], X & adj[v])
            P &= ~bit
            X |= bit

    for clique in expand(0, 0, (1 << n) - 1, 0):
        yield VertexSet(n, clique)
        emitted += 1
        if limit is not None and emitted >= limit:
            return


def maximal_clique_masks(G: Graph, min_size: int = DEFAULT_MIN_SIZE, budget: int | None = None) -> list[int]:
    """All maximal cliques as bitmasks; raises :class:`BudgetExceeded` past ``budget``."""
    out = []
    for c in enumerate_maximal_cliques(G, min_size, None if budget is None else budget + 1):
        out.append(c.mask)
    if budget is not None and len(out) > budget:
        raise BudgetExceeded(f"more than {budget} maximal cliques")
    return out


def _bool_rows_to_words(m: np.ndarray) -> np.ndarray:
    rows, cols = m.shape
    words = max(1, (cols + 63) // 64)
    packed = np.zeros((rows, words * 8), dtype=np.uint8)
    packed[:, : (cols + 7) // 8] = np.packbits(m, axis=1, bitorder="little")
    return packed.view("<u8").astype(np.uint64)


def _contains_python(G: Graph, U: int, min_size: int, node_budget: int | None) -> int | None:
    local = list(iter_bits(U))
    adj = G.adj
    pos = {v: i for i, v in enumerate(local)}

    def to_local(row: int) -> int:
        m = 0
        for w in iter_bits(row & U):
            m |= 1 << pos[w]
        return m

    inner = [to_local(adj[v]) for v in local]
    X0 = {to_local(adj[w]) for w in iter_bits(G.full_mask & ~U)}
    counter = _Counter(node_budget)

    def search(R: int, size: int, P: int, X: set[int]) -> int | None:
        counter.tick()
        if not P:
            return R if not X and size >= min_size else None
        if size + P.bit_count() < min_size:
            return None
        best, pivot_nb = -1, 0
        for a in X:
            c = a.bit_count()
            if c > best:
                best, pivot_nb = c, a
        if best == P.bit_count():
            return None
        for v in iter_bits(P):
            c = (P & inner[v]).bit_count()
            if c > best:
                best, pivot_nb = c, inner[v]
        for v in iter_bits(P & ~pivot_nb):
            bit = 1 << v
            row = inner[v]
            P2 = P & row
            found = search(R | bit, size + 1, P2, {a & P2 for a in X if a & bit})
            if found is not None:
                return found
            P &= ~bit
            X = {a & P for a in X}
            X.add(row & P)
        return None

    found = search(0, 0, (1 << len(local)) - 1, X0)
    if found is None:
        return None
    return sum(1 << local[i] for i in iter_bits(found))


def _contains_compiled(G: Graph, U: int, min_size: int, node_budget: int | None) -> int | None:
    local = list(iter_bits(U))
    M = G.matrix()
    inside_idx = np.array(local)
    out_idx = np.flatnonzero(mask_to_bool(G.full_mask & ~U, G.n))
    inner = _bool_rows_to_words(M[np.ix_(inside_idx, inside_idx)])
    X0 = np.unique(_bool_rows_to_words(M[np.ix_(out_idx, inside_idx)]), axis=0)
    status, words = find_maximal_clique(inner, X0, min_size, -1 if node_budget is None else node_budget)
    if status < 0:
        raise BudgetExceeded("search node budget exhausted")
    if status == 0:
        return None
    found = int.from_bytes(words.tobytes(), "little")
    return sum(1 << local[i] for i in iter_bits(found))


def contains_maximal_clique_mask(
    G: Graph,
    U: int,
    min_size: int = DEFAULT_MIN_SIZE,
    node_budget: int | None = None,
) -> int | None:
    """Bitmask of a clique inside ``U`` that is maximal in ``G``, or ``None``.

    Bron-Kerbosch restricted to ``U`` in local coordinates. Every vertex
    outside ``U`` (and every already-branched vertex of ``U``) that is
    adjacent to the whole partial clique is kept only through its
    neighbourhood among the current candidates; a branch is dropped as soon
    as one of those covers all candidates, since then no completion can be
    maximal in ``G``. Large graphs go through the compiled kernel.
    """
    if min_size < 1:
        raise InputError("min_size must be >= 1")
    if U.bit_count() < min_size:
        return None
    if G.n > _COMPILED_MIN_N:
        return _contains_compiled(G, U, min_size, node_budget)
    return _contains_python(G, U, min_size, node_budget)


def contains_maximal_clique(
    G: Graph,
    U: VertexSet | int | Iterable[int],
    min_size: int = DEFAULT_MIN_SIZE,
    node_budget: int | None = None,
) -> VertexSet | None:
    """A clique ``S`` inside ``U`` with ``|S| >= min_size`` that is maximal in all of ``G``."""
    found = contains_maximal_clique_mask(G, _as_mask(G, U), min_size, node_budget)
    return None if found is None else VertexSet(G.n, found)


def extend_to_maximal(
    G: Graph,
    S: VertexSet | int | Iterable[int],
    prefer: VertexSet | int | Iterable[int] | None = None,
) -> VertexSet:
    """Grow the clique ``S`` to a maximal clique.

    Vertices of ``prefer`` are added first, each time the smallest admissible
    index; the remaining vertices follow in the same manner.
    """
    s = _as_mask(G, S)
    if not is_clique_mask(G, s):
        raise InputError("S is not a clique")
    pref = 0 if prefer is None else _as_mask(G, prefer)
    cand = _common_neighbors(G, s)
    while cand:
        pool = cand & pref or cand
        low = pool & -pool
        v = low.bit_length() - 1
        s |= low
        cand &= G.adj[v]
    return VertexSet(G.n, s)


def find_dominating_clique(
    G: Graph,
    Y: VertexSet | int | Iterable[int],
    k: int,
    node_budget: int | None = None,
) -> VertexSet | None:
    """A ``k``-clique inside ``Y`` in which every vertex outside ``Y`` has a non-neighbour.

    Exact search. While some outside vertex is still adjacent to the whole
    partial clique, the one with the fewest admissible non-neighbours is
    picked and the search branches over those, most useful first (the
    vertices that are non-adjacent to most still-uncovered outside vertices).
    """
    if k < 1:
        raise InputError("k must be >= 1")
    y = _as_mask(G, Y)
    if k > y.bit_count():
        return None
    adj = G.adj
    outside = G.full_mask & ~y
    counter = _Counter(node_budget)

    def covers(v: int, unc: int) -> int:
        return (unc & ~adj[v]).bit_count()

    def search(K: int, left: int, cand: int, unc: int) -> int | None:
        counter.tick()
        if left == 0:
            return K if not unc else None
        if cand.bit_count() < left:
            return None
        if unc:
            best_o, best_c = -1, -1
            for o in iter_bits(unc):
                c = (cand & ~adj[o]).bit_count()
                if best_c < 0 or c < best_c:
                    best_o, best_c = o, c
                    if c == 0:
                        return None
            branch = list(iter_bits(cand & ~adj[best_o]))
            branch.sort(key=lambda v: -covers(v, unc))
        else:
            branch = list(iter_bits(cand))
        for v in branch:
            bit = 1 << v
            found = search(K | bit, left - 1, cand & adj[v], unc & adj[v])
            if found is not None:
                return found
            cand &= ~bit
        return None

    found = search(0, k, y, outside)
    return None if found is None else VertexSet(G.n, found)


def count_dominating_cliques(G: Graph, m: int, k: int, budget: int = 10**7) -> int:
    """Number of ``k``-cliques inside ``{0..m-1}`` that every vertex ``>= m`` misses somewhere."""
    if not 1 <= k <= m <= G.n:
        raise InputError(f"need 1 <= k <= m <= n, got k={k}, m={m}, n={G.n}")
    if comb(m, k) > budget:
        raise BudgetExceeded(f"C({m},{k}) exceeds the enumeration budget {budget}")
    adj = G.adj
    outside = G.full_mask & ~((1 << m) - 1)
    count = 0
    # cliques grown in increasing vertex order; cn = common neighbours of the clique
    stack = [(k, (1 << m) - 1, G.full_mask)]
    while stack:
        left, cand, cn = stack.pop()
        if left == 0:
            if not cn & outside:
                count += 1
            continue
        if cand.bit_count() < left:
            continue
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            stack.append((left - 1, cand & adj[v], cn & adj[v]))
    return count
