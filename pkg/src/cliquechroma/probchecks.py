"""Empirical checks of the dominating-clique event and sampled Property C checks."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.stats import binomtest

from .bounds import lemma1_params, adversary_palette_size
from .cliques import contains_maximal_clique_mask, find_dominating_clique
from .errors import BudgetExceeded, InputError
from .graph import (
    MASK64,
    GenParams,
    Graph,
    VertexSet,
    _as_mask,
    gen_random_graph,
    iter_bits,
    non_neighbors_mask,
    splitmix64,
)


@dataclass(frozen=True)
class Lemma1Verdict:
    min_nonneighbors_ok: bool
    dominating_clique: VertexSet | None

    @property
    def bad_event(self) -> bool:
        return self.min_nonneighbors_ok and self.dominating_clique is None


def min_outside_nonneighbors(G: Graph, Y: int) -> int | None:
    """Smallest ``|N0(v, Y)|`` over ``v`` outside ``Y`` (``None`` if nothing is outside)."""
    best = None
    for v in iter_bits(G.full_mask & ~Y):
        c = (Y & ~G.adj[v]).bit_count()
        if best is None or c < best:
            best = c
    return best


def lemma1_event_holds(
    G: Graph,
    Y: VertexSet | int,
    k: int | None = None,
    threshold: float | None = None,
    eps: float = 0.1,
    node_budget: int | None = None,
) -> Lemma1Verdict:
    """Evaluate both conditions of the event for a fixed ``Y``.

    ``k`` and ``threshold`` default to their asymptotic values at ``(n, eps)``.
    """
    y = _as_mask(G, Y)
    if not y:
        raise InputError("Y must be nonempty")
    if k is None or threshold is None:
        lp = lemma1_params(G.n, eps)
        k = lp.k if k is None else k
        threshold = lp.nonneighbor_threshold if threshold is None else threshold
    if k < 1:
        raise InputError("k must be >= 1")
    low = min_outside_nonneighbors(G, y)
    ok = low is None or low >= threshold
    return Lemma1Verdict(ok, find_dominating_clique(G, y, k, node_budget))


@dataclass(frozen=True)
class Lemma1Estimate:
    fraction: float
    ci_low: float
    ci_high: float
    bad: int
    trials: int
    censored: int

    @property
    def completed(self) -> int:
        return self.trials - self.censored

    @property
    def stderr(self) -> float:
        m = self.completed
        return math.sqrt(self.fraction * (1 - self.fraction) / m) if m else math.nan

    def to_dict(self) -> dict:
        return {"fraction": self.fraction, "ci95": [self.ci_low, self.ci_high],
                "bad": self.bad, "trials": self.trials, "censored": self.censored}


def _lemma1_trial(n: int, y: int, k: int, threshold: float, seed: int, p: float,
                  node_budget: int | None) -> bool | None:
    G = gen_random_graph(GenParams(n, p, seed))
    try:
        return lemma1_event_holds(G, (1 << y) - 1, k, threshold, node_budget=node_budget).bad_event
    except BudgetExceeded:
        return None


def estimate_lemma1_probability(
    n: int,
    y: int,
    k: int,
    threshold: float,
    trials: int,
    seed: int,
    p: float = 0.5,
    node_budget: int | None = None,
) -> Lemma1Estimate:
    """Frequency of the bad event over ``trials`` samples of G(n, p) with ``Y = {0..y-1}``.

    Trial ``i`` samples its graph with the ``i``-th SplitMix64 word of the
    stream seeded by ``seed``, so runs with nearby base seeds do not share
    graphs. Trials whose search runs out of budget are censored and left out
    of the fraction.
    """
    if not 1 <= y <= n:
        raise InputError("need 1 <= y <= n")
    if trials < 1:
        raise InputError("trials must be >= 1")
    bad = censored = 0
    for trial_seed in splitmix64(seed & MASK64, trials):
        r = _lemma1_trial(n, y, k, threshold, trial_seed, p, node_budget)
        if r is None:
            censored += 1
        elif r:
            bad += 1
    done = trials - censored
    if done == 0:
        return Lemma1Estimate(math.nan, 0.0, 1.0, 0, trials, censored)
    ci = binomtest(bad, done).proportion_ci(confidence_level=0.95, method="wilson")
    return Lemma1Estimate(bad / done, float(ci.low), float(ci.high), bad, trials, censored)


@dataclass
class PropertyCSample:
    j: int
    vertices: list[int]
    n0_size: int
    condition1_bound: float
    condition1_ok: bool
    y_size: int = 0
    y_qualifies: bool = False
    maximal_clique: list[int] | None = None
    skipped: bool = False


@dataclass
class PropertyCReport:
    samples: int
    condition1_failures: int = 0
    condition2_failures: int = 0
    condition2_checked: int = 0
    skipped: int = 0
    details: list[PropertyCSample] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "samples": self.samples,
            "condition1_failures": self.condition1_failures,
            "condition2_checked": self.condition2_checked,
            "condition2_failures": self.condition2_failures,
            "skipped": self.skipped,
            "details": [vars(d) for d in self.details],
        }


def property_c_spot_check(
    G: Graph,
    eps: float,
    j_max: int | None = None,
    samples: int = 100,
    seed: int = 0,
    threshold: float | None = None,
    node_budget: int | None = None,
) -> PropertyCReport:
    """Random spot checks of Property C; a sampled under-approximation by design.

    Each sample draws ``j`` and distinct ``v_1..v_j``, checks the size of their
    common non-neighbourhood ``N0`` against ``n/2^j - 2 sqrt(n) ln n`` (an
    empty ``N0`` always fails and ends the sample), then draws a random
    ``Y ⊆ N0`` with ``|Y| = ceil(|N0| / log n)``. When every vertex outside
    ``Y`` has at least ``threshold`` non-neighbours in it, ``Y`` must contain
    a clique maximal in ``G``. ``j_max`` defaults to the adversary palette
    size and must then be positive; pass it explicitly at small ``n``.
    """
    n = G.n
    if n < 3:
        raise InputError("need n >= 3")
    if samples < 1:
        raise InputError("samples must be >= 1")
    if j_max is None:
        j_max = adversary_palette_size(n, eps)
        if j_max < 1:
            raise InputError(f"adversary palette size is {j_max} at n={n}; pass j_max explicitly")
    if not 1 <= j_max < n:
        raise InputError(f"j_max must lie in [1, {n - 1}]")
    if threshold is None:
        threshold = lemma1_params(n, eps).nonneighbor_threshold
    rng = np.random.default_rng(seed)
    log2n = math.log2(n)
    slack = 2.0 * math.sqrt(n) * math.log(n)
    rep = PropertyCReport(samples=samples)
    for _ in range(samples):
        j = int(rng.integers(1, j_max + 1))
        vs = sorted(int(v) for v in rng.choice(n, size=j, replace=False))
        n0 = non_neighbors_mask(G, vs)
        size = n0.bit_count()
        bound = n / 2**j - slack
        s = PropertyCSample(j, vs, size, bound, size > 0 and size >= bound)
        rep.details.append(s)
        if not s.condition1_ok:
            rep.condition1_failures += 1
        if size == 0:
            s.skipped = True
            rep.skipped += 1
            continue
        pool = list(iter_bits(n0))
        s.y_size = math.ceil(size / log2n)
        Y = sum(1 << int(v) for v in rng.choice(pool, size=s.y_size, replace=False))
        low = min_outside_nonneighbors(G, Y)
        s.y_qualifies = low is None or low >= threshold
        if not s.y_qualifies:
            continue
        rep.condition2_checked += 1
        found = contains_maximal_clique_mask(G, Y, node_budget=node_budget)
        if found is None:
            rep.condition2_failures += 1
        else:
            s.maximal_clique = list(iter_bits(found))
    return rep
