"""Bitset graphs, the SplitMix64 G(n, p) sampler and non-neighbourhood queries.

Vertices are ``0..n-1``. A vertex set is a Python ``int`` whose bit ``v`` is
set iff ``v`` belongs to it; :class:`VertexSet` is a thin immutable wrapper
used at the public surface, while the algorithms work on the raw masks.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

import numpy as np

from ._kernels import sample_adjacency
from .errors import InputError

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB

def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_to_bool(mask: int, n: int) -> np.ndarray:
    raw = np.frombuffer(mask.to_bytes((n + 7) // 8, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:n].astype(bool)


def rows_to_masks(m: np.ndarray) -> list[int]:
    """Each row of a boolean matrix as an integer bitmask (column ``j`` -> bit ``j``)."""
    packed = np.packbits(m, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class VertexSet:
    """Immutable subset of ``{0, ..., n-1}`` backed by an integer bitmask."""

    __slots__ = ("n", "mask")

    def __init__(self, n: int, mask: int = 0):
        if mask < 0 or mask >> n:
            raise InputError(f"mask has bits outside range(0, {n})")
        self.n = n
        self.mask = mask

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        vs = list(vertices)
        for v in vs:
            if not 0 <= v < n:
                raise InputError(f"vertex {v} out of range for n={n}")
        return cls(n, mask_of(vs))

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.mask >> v & 1)

    def __bool__(self) -> bool:
        return self.mask != 0

    def _other(self, other: "VertexSet") -> int:
        if not isinstance(other, VertexSet):
            return NotImplemented  # type: ignore[return-value]
        if other.n != self.n:
            raise InputError("vertex sets over different ground sets")
        return other.mask

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.n, self.mask & self._other(other))

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.n, self.mask | self._other(other))

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.n, self.mask & ~self._other(other))

    def __xor__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.n, self.mask ^ self._other(other))

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, ((1 << self.n) - 1) & ~self.mask)

    def issubset(self, other: "VertexSet") -> bool:
        return self.mask & ~self._other(other) == 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, VertexSet):
            return self.n == other.n and self.mask == other.mask
        if isinstance(other, (set, frozenset)):
            return set(self) == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, self.mask))

    def to_list(self) -> list[int]:
        return list(iter_bits(self.mask))

    def __repr__(self) -> str:
        return f"VertexSet({self.to_list()})"


@dataclass(frozen=True)
class GenParams:
    n: int
    p: float
    seed: int

    def __post_init__(self):
        if self.n < 1:
            raise InputError(f"n must be >= 1, got {self.n}")
        if not 0.0 <= self.p <= 1.0:
            raise InputError(f"p must lie in [0, 1], got {self.p}")
        if not 0 <= self.seed <= MASK64:
            raise InputError("seed must be an unsigned 64-bit integer")


class Graph:
    """Undirected simple graph stored as ``n`` adjacency bitmasks."""

    __slots__ = ("n", "adj", "_matrix")

    def __init__(self, n: int, adj: Sequence[int], *, check: bool = True):
        if n < 0 or len(adj) != n:
            raise InputError("adjacency must have exactly n rows")
        self.n = n
        self.adj = tuple(adj)
        self._matrix = None
        if check:
            full = (1 << n) - 1
            for v, row in enumerate(self.adj):
                if row < 0 or row & ~full:
                    raise InputError(f"row {v} references vertices >= n")
                if row >> v & 1:
                    raise InputError(f"self-loop at vertex {v}")
                for u in iter_bits(row):
                    if not self.adj[u] >> v & 1:
                        raise InputError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, check=False)

    @classmethod
    def from_matrix(cls, matrix: np.ndarray, check: bool = True) -> "Graph":
        """Build from a symmetric boolean matrix with a zero diagonal."""
        m = np.asarray(matrix, dtype=bool)
        n = m.shape[0]
        if m.ndim != 2 or m.shape != (n, n):
            raise InputError("matrix must be square")
        if check and (not np.array_equal(m, m.T) or m.diagonal().any()):
            raise InputError("matrix must be square, symmetric, with empty diagonal")
        g = cls(n, rows_to_masks(m), check=False)
        g._matrix = m
        return g

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, [full & ~(1 << v) for v in range(n)], check=False)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, [0] * n, check=False)

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def petersen(cls) -> "Graph":
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return cls.from_edges(10, outer + spokes + inner)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, row in enumerate(self.adj):
            yield from ((u, v) for v in iter_bits(row >> (u + 1) << (u + 1)))

    def neighbors(self, v: int) -> VertexSet:
        return VertexSet(self.n, self.adj[v])

    def matrix(self) -> np.ndarray:
        if self._matrix is None:
            m = np.zeros((self.n, self.n), dtype=bool)
            for u, v in self.edges():
                m[u, v] = m[v, u] = True
            self._matrix = m
        return self._matrix

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


# -- sampling ---------------------------------------------------------------

def splitmix64(seed: int, count: int) -> list[int]:
    """Scalar reference SplitMix64: the first ``count`` outputs for ``seed``."""
    state = seed & MASK64
    out = []
    for _ in range(count):
        state = (state + GOLDEN_GAMMA) & MASK64
        z = state
        z = ((z ^ (z >> 30)) * _MIX1) & MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & MASK64
        out.append(z ^ (z >> 31))
    return out


def edge_threshold(p: float) -> int | None:
    """``floor(p * 2**64)`` computed exactly; ``None`` encodes "always present"."""
    if p >= 1.0:
        return None
    return int(Fraction(p) * (1 << 64))


def gen_random_graph(params: GenParams) -> Graph:
    """Sample G(n, p) deterministically.

    Pairs ``(i, j)``, ``i < j``, are visited in lexicographic order and pair
    number ``t`` consumes the ``t``-th SplitMix64 word of the stream seeded by
    ``params.seed``; the edge is present iff that word is below
    ``floor(p * 2**64)``.
    """
    n = params.n
    threshold = edge_threshold(params.p)
    if threshold is None:
        return Graph.complete(n)
    if threshold == 0:
        return Graph.empty(n)
    m = np.zeros((n, n), dtype=bool)
    sample_adjacency(n, np.uint64(params.seed), np.uint64(threshold), m)
    return Graph.from_matrix(m, check=False)


# -- neighbourhood queries --------------------------------------------------

def _check_vertex(G: Graph, v: int) -> None:
    if not isinstance(v, (int, np.integer)) or not 0 <= v < G.n:
        raise InputError(f"vertex {v!r} out of range for n={G.n}")


def _as_mask(G: Graph, U: VertexSet | int | Iterable[int]) -> int:
    if isinstance(U, VertexSet):
        if U.n != G.n:
            raise InputError("vertex set and graph have different sizes")
        return U.mask
    if isinstance(U, int):
        if U < 0 or U >> G.n:
            raise InputError("mask has bits outside the vertex range")
        return U
    vs = list(U)
    for v in vs:
        _check_vertex(G, v)
    return mask_of(vs)


def non_neighbors_mask(G: Graph, vs: Sequence[int]) -> int:
    m = G.full_mask
    for v in vs:
        m &= ~G.adj[v] & ~(1 << v)
    return m


def non_neighbors(G: Graph, vs: Sequence[int]) -> VertexSet:
    """Common non-neighbours of ``vs``, excluding the listed vertices themselves.

    The empty list gives the whole vertex set.
    """
    seen = set()
    for v in vs:
        _check_vertex(G, v)
        if v in seen:
            raise InputError(f"duplicate vertex {v}")
        seen.add(v)
    return VertexSet(G.n, non_neighbors_mask(G, vs))


def non_neighbors_in(G: Graph, v: int, U: VertexSet | int | Iterable[int]) -> VertexSet:
    """Vertices of ``U`` other than ``v`` that are not adjacent to ``v``."""
    _check_vertex(G, v)
    u = _as_mask(G, U)
    return VertexSet(G.n, u & ~G.adj[v] & ~(1 << v))


def induced_subgraph(G: Graph, U: VertexSet | int | Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``(H, labels)`` where vertex ``i`` of ``H`` is vertex ``labels[i]`` of ``G``."""
    labels = list(iter_bits(_as_mask(G, U)))
    if not labels:
        raise InputError("cannot induce on an empty vertex set")
    pos = {v: i for i, v in enumerate(labels)}
    adj = []
    for v in labels:
        row = 0
        for u in iter_bits(G.adj[v]):
            i = pos.get(u)
            if i is not None:
                row |= 1 << i
        adj.append(row)
    return Graph(len(labels), adj, check=False), labels
