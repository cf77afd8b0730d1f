"""Clique colourings: validity, the pivot greedy, exact solvers and the colour-class audit.

A clique colouring leaves no maximal clique (with at least ``min_size``
vertices, 2 by default) monochromatic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .cliques import (
    DEFAULT_MIN_SIZE,
    contains_maximal_clique_mask,
    is_clique_mask,
    maximal_clique_masks,
)
from .errors import BudgetExceeded, InputError, NotFoundWithinBudget
from .graph import Graph, VertexSet, iter_bits

BRUTE_FORCE_MAX_N = 8


@dataclass(frozen=True)
class Coloring:
    """Colour ids ``0..palette-1``, each of them used at least once."""

    colors: tuple[int, ...]

    def __init__(self, colors: Iterable[int]):
        cs = tuple(int(c) for c in colors)
        if cs and (min(cs) < 0 or set(cs) != set(range(max(cs) + 1))):
            raise InputError("colour ids must be exactly 0..palette-1")
        object.__setattr__(self, "colors", cs)

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "Coloring":
        """Relabel arbitrary ids to ``0..q-1`` preserving their numeric order."""
        ids = {c: i for i, c in enumerate(sorted(set(labels)))}
        return cls(ids[c] for c in labels)

    @property
    def palette(self) -> int:
        return max(self.colors) + 1 if self.colors else 0

    def __len__(self) -> int:
        return len(self.colors)

    def classes(self) -> list[int]:
        """Bitmask of each colour class, indexed by colour id."""
        out = [0] * self.palette
        for v, c in enumerate(self.colors):
            out[c] |= 1 << v
        return out


@dataclass(frozen=True)
class Verdict:
    certificate: VertexSet | None = None

    @property
    def valid(self) -> bool:
        return self.certificate is None

    def __bool__(self) -> bool:
        return self.valid


def _check_length(G: Graph, c: Coloring) -> None:
    if len(c) != G.n:
        raise InputError(f"colouring has {len(c)} entries for a graph on {G.n} vertices")


def verify_clique_coloring(G: Graph, c: Coloring, min_size: int = DEFAULT_MIN_SIZE) -> Verdict:
    """Return a valid verdict, or one carrying a monochromatic maximal clique.

    Each colour class is searched for a clique that is maximal in ``G``; that
    is the same as scanning all maximal cliques for a monochromatic one, but
    it never enumerates cliques that straddle several classes.
    """
    _check_length(G, c)
    for cls in c.classes():
        cert = contains_maximal_clique_mask(G, cls, min_size)
        if cert is not None:
            return Verdict(VertexSet(G.n, cert))
    return Verdict()


@dataclass(frozen=True)
class GreedyStats:
    steps: int
    remainder: int
    pivots: tuple[int, ...] = ()


def greedy_clique_coloring(
    G: Graph,
    order: Sequence[int] | None = None,
    min_size: int = DEFAULT_MIN_SIZE,
    node_budget: int | None = None,
) -> tuple[Coloring, GreedyStats]:
    """Pivot greedy: pivot ``i`` gives colour ``i`` to all its uncoloured neighbours.

    Before every pivot the uncoloured set is checked for a clique maximal in
    ``G``; the first time there is none the loop stops. Uncoloured pivots
    (an independent set) and the other uncoloured vertices get one extra
    colour each, and the two are merged when the union passes the same check.
    """
    n = G.n
    if order is None:
        order = range(n)
    elif sorted(order) != list(range(n)):
        raise InputError("order must be a permutation of the vertices")
    adj = G.adj
    labels = [-1] * n
    uncolored = G.full_mask
    pivot_mask = 0
    pivots = []
    stop_clique = contains_maximal_clique_mask(G, uncolored, min_size, node_budget)
    while stop_clique is not None and len(pivots) < n:
        v = order[len(pivots)]
        step = len(pivots)
        pivots.append(v)
        pivot_mask |= 1 << v
        newly = uncolored & adj[v]
        for u in iter_bits(newly):
            labels[u] = step
        uncolored &= ~newly
        stop_clique = contains_maximal_clique_mask(G, uncolored, min_size, node_budget)
    s = len(pivots)
    loose_pivots = uncolored & pivot_mask
    rest = uncolored & ~pivot_mask
    # the last stopping test was run on loose_pivots | rest, so its verdict is the merge check
    merge = stop_clique is None
    for u in iter_bits(loose_pivots):
        labels[u] = s
    for u in iter_bits(rest):
        labels[u] = s if merge else s + 1
    return Coloring.from_labels(labels), GreedyStats(s, uncolored.bit_count(), tuple(pivots))


def exact_chi_c(
    G: Graph,
    max_colors: int | None = None,
    min_size: int = DEFAULT_MIN_SIZE,
    clique_budget: int | None = 200_000,
    node_budget: int | None = None,
) -> tuple[int, Coloring]:
    """Clique chromatic number by backtracking over the maximal-clique hypergraph.

    Vertices are coloured in index order; vertex 0 takes colour 0 and a vertex
    may open colour ``t`` only once ``0..t-1`` are in use. A branch dies as
    soon as a hyperedge becomes fully coloured in a single colour.
    """
    n = G.n
    if n == 0:
        return 0, Coloring(())
    edges = maximal_clique_masks(G, min_size, clique_budget)
    closing: list[list[int]] = [[] for _ in range(n)]
    for e in edges:
        closing[e.bit_length() - 1].append(e)
    limit = n if max_colors is None else max_colors
    nodes = [0]

    def solve(q: int) -> list[int] | None:
        labels = [0] * n
        members = [0] * q

        def place(v: int, used: int) -> bool:
            if v == n:
                return True
            nodes[0] += 1
            if node_budget is not None and nodes[0] > node_budget:
                raise BudgetExceeded("backtracking node budget exhausted")
            top = min(used + 1, q)
            for c in range(top):
                bit = 1 << v
                members[c] |= bit
                if all(e & ~members[c] for e in closing[v]):
                    labels[v] = c
                    if place(v + 1, max(used, c + 1)):
                        return True
                members[c] &= ~bit
            return False

        return labels if place(0, 0) else None

    for q in range(1, limit + 1):
        labels = solve(q)
        if labels is not None:
            return q, Coloring(labels)
    raise NotFoundWithinBudget(f"no clique colouring with at most {limit} colours")


def _set_partitions(n: int, q: int):
    """Restricted growth strings of length ``n`` using exactly ``q`` blocks."""
    labels = [0] * n

    def rec(i: int, used: int):
        if i == n:
            if used == q:
                yield labels
            return
        if used + (n - i) < q:
            return
        for c in range(min(used + 1, q)):
            labels[i] = c
            yield from rec(i + 1, max(used, c + 1))

    if n == 0:
        if q == 0:
            yield labels
        return
    yield from rec(0, 0)


def brute_force_maximal_cliques(G: Graph, min_size: int = DEFAULT_MIN_SIZE) -> list[int]:
    """Maximal cliques by checking every vertex subset; independent of the search code."""
    vs = range(G.n)
    cliques = []
    for size in range(G.n, 0, -1):
        for S in combinations(vs, size):
            if all(G.has_edge(a, b) for a, b in combinations(S, 2)):
                cliques.append(sum(1 << v for v in S))
    out = []
    for s in cliques:
        if s.bit_count() < min_size:
            continue
        if not any(t != s and s & t == s for t in cliques):
            out.append(s)
    return out


def brute_force_chi_c(G: Graph, min_size: int = DEFAULT_MIN_SIZE) -> int:
    """Smallest ``q`` admitting a clique colouring, by trying every set partition."""
    n = G.n
    if n > BRUTE_FORCE_MAX_N:
        raise BudgetExceeded(f"brute force is limited to n <= {BRUTE_FORCE_MAX_N}")
    cliques = [list(iter_bits(s)) for s in brute_force_maximal_cliques(G, min_size)]
    for q in range(1 if n else 0, n + 1):
        for labels in _set_partitions(n, q):
            if all(len({labels[v] for v in cl}) > 1 for cl in cliques):
                return q
    raise AssertionError("the all-distinct colouring is always valid for min_size >= 2")


def brute_force_chromatic_number(G: Graph) -> int:
    """Ordinary chromatic number by exhaustive search; a test helper for tiny graphs."""
    n = G.n
    if n > BRUTE_FORCE_MAX_N + 2:
        raise BudgetExceeded("chromatic brute force is limited to tiny graphs")
    edges = list(G.edges())
    for q in range(1 if n else 0, n + 1):
        for labels in _set_partitions(n, q):
            if all(labels[a] != labels[b] for a, b in edges):
                return q
    return n


# -- colour-class audit -----------------------------------------------------

@dataclass(frozen=True)
class AuditStep:
    class_id: int
    class_size_in_x: int
    x_size: int
    vertex: int
    nonneighbors: int
    meets_class_floor: bool


@dataclass
class AuditTrace:
    outcome: str  # "violation" or "exhausted"
    steps: list[AuditStep] = field(default_factory=list)
    certificate: VertexSet | None = None
    final_x: VertexSet | None = None
    class_sizes_in_x: dict[int, int] = field(default_factory=dict)
    class_floor: float = 0.0

    @property
    def violation(self) -> bool:
        return self.outcome == "violation"


def audit_coloring(
    G: Graph,
    c: Coloring,
    class_floor: float | None = None,
    min_size: int = DEFAULT_MIN_SIZE,
) -> AuditTrace:
    """Walk the colour classes the way the lower-bound adversary does.

    Repeatedly take the unused class with most vertices in ``X`` (initially
    everything), look inside its part ``Y`` for a clique maximal in ``G``, and
    otherwise pick the vertex outside ``Y`` (and not picked before) with the
    fewest non-neighbours in ``Y`` and shrink ``X`` to its non-neighbourhood.
    ``class_floor`` (default ``1/log2 n``) is only recorded per step, never
    enforced.
    """
    _check_length(G, c)
    n = G.n
    if class_floor is None:
        class_floor = 1.0 / math.log2(n) if n > 1 else 1.0
    adj = G.adj
    classes = c.classes()
    X = G.full_mask
    used: set[int] = set()
    chosen = 0
    trace = AuditTrace(outcome="exhausted", class_floor=class_floor)
    while True:
        best, best_size = -1, -1
        for cid, cls in enumerate(classes):
            if cid in used:
                continue
            size = (cls & X).bit_count()
            if size > best_size:
                best, best_size = cid, size
        if best < 0 or best_size == 0:
            break
        used.add(best)
        Y = classes[best] & X
        cert = contains_maximal_clique_mask(G, Y, min_size)
        if cert is not None:
            trace.outcome = "violation"
            trace.certificate = VertexSet(n, cert)
            break
        pool = G.full_mask & ~Y & ~chosen
        if not pool:
            break
        v_best, v_count = -1, -1
        for v in iter_bits(pool):
            cnt = (Y & ~adj[v]).bit_count()
            if v_count < 0 or cnt < v_count:
                v_best, v_count = v, cnt
                if cnt == 0:
                    break
        x_size = X.bit_count()
        trace.steps.append(AuditStep(best, best_size, x_size, v_best, v_count,
                                     best_size >= class_floor * x_size))
        chosen |= 1 << v_best
        X &= ~adj[v_best] & ~(1 << v_best)
    trace.final_x = VertexSet(n, X)
    trace.class_sizes_in_x = {cid: (cls & X).bit_count() for cid, cls in enumerate(classes)
                              if cls & X}
    return trace


def is_monochromatic_maximal_clique(G: Graph, c: Coloring, S: VertexSet) -> bool:
    s = S.mask
    if not s or not is_clique_mask(G, s):
        return False
    cn = G.full_mask & ~s
    for v in iter_bits(s):
        cn &= G.adj[v]
    return cn == 0 and len({c.colors[v] for v in iter_bits(s)}) == 1

