"""Closed-form bounds and parameters for the clique chromatic number of G(n, 1/2).

``log`` is base 2 and ``ln`` natural throughout. All ``o(1)`` terms are
dropped, so these are the asymptotic expressions evaluated at a finite ``n``;
nothing here claims they bind at that ``n``. ``n`` may be a (huge) Python int.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import InputError

LN2 = math.log(2.0)


def _logs(n) -> tuple[float, float]:
    """``(log2 n, ln ln n)``, usable for integers far beyond float range."""
    if n < 3:
        raise InputError(f"n must be >= 3, got {n}")
    log2n = math.log2(n)
    return log2n, math.log(log2n * LN2)


def theorem1_bounds(n) -> tuple[float, float]:
    """``(1/2 log n - 3 log ln n, 1/2 log n - 1/2 log ln n)``."""
    log2n, lnln = _logs(n)
    log2ln = lnln / LN2
    return 0.5 * log2n - 3.0 * log2ln, 0.5 * log2n - 0.5 * log2ln


def _check_eps(eps: float, upper: float | None = None) -> None:
    if not eps > 0 or (upper is not None and not eps < upper):
        bound = f"(0, {upper})" if upper is not None else "(0, inf)"
        raise InputError(f"eps must lie in {bound}, got {eps}")


def greedy_palette_size(n, eps: float) -> int:
    """Colours used by the fixed-length greedy: ``ceil(1/2 log n - (1/2 - eps) log ln n) + 2``."""
    _check_eps(eps, 0.5)
    log2n, lnln = _logs(n)
    return math.ceil(0.5 * log2n - (0.5 - eps) * lnln / LN2) + 2


def adversary_palette_size(n, eps: float) -> int:
    """``floor(1/2 log n - (3/ln 2 + 5 eps) ln ln n)``; may be zero or negative."""
    _check_eps(eps)
    log2n, lnln = _logs(n)
    return math.floor(0.5 * log2n - (3.0 / LN2 + 5.0 * eps) * lnln)


@dataclass(frozen=True)
class Lemma1Params:
    k: int
    y_min: float
    nonneighbor_threshold: float


def _exp(x: float) -> float:
    return math.exp(x) if x < 709.0 else math.inf


def lemma1_params(n, eps: float) -> Lemma1Params:
    """``k``, the minimum size of ``Y`` and the non-neighbour threshold; sizes past float range are ``inf``."""
    _check_eps(eps)
    log2n, lnln = _logs(n)
    ln_n = log2n * LN2
    k = math.ceil(log2n + (1.0 / LN2 + 4.0 * eps) * lnln)
    # (ln n)^a * sqrt(n) via logarithms so that huge n cannot overflow mid-way
    y_min = _exp((2 + 3 * eps) * math.log(ln_n) + 0.5 * ln_n)
    thr = _exp((2 + 2 * eps) * math.log(ln_n) + 0.5 * ln_n)
    return Lemma1Params(k, y_min, thr)


def mmp_upper_bound(n) -> int:
    """``ceil((1/2 + 2 log ln n / log n) log n) + 1``."""
    log2n, lnln = _logs(n)
    return math.ceil((0.5 + 2.0 * (lnln / LN2) / log2n) * log2n) + 1


def log_expected_dominating_cliques(n: int, m: int, k: int) -> float:
    if not 1 <= k <= m <= n:
        raise InputError(f"need 1 <= k <= m <= n, got n={n}, m={m}, k={k}")
    log_binom = math.lgamma(m + 1) - math.lgamma(k + 1) - math.lgamma(m - k + 1)
    return log_binom - math.comb(k, 2) * LN2 + (n - m) * math.log1p(-(2.0 ** -k))


def expected_dominating_cliques(n: int, m: int, k: int) -> float:
    """Mean number of ``k``-cliques in ``G(n,1/2)[0..m-1]`` missed somewhere by every outside vertex."""
    return math.exp(log_expected_dominating_cliques(n, m, k))


@dataclass
class BoundReport:
    n: int
    eps: float
    values: dict[str, float] = field(default_factory=dict)
    vacuous: dict[str, bool] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"n": self.n, "eps": self.eps, "values": dict(self.values),
                "vacuous": dict(self.vacuous), "notes": list(self.notes)}


def bound_report(n, eps: float) -> BoundReport:
    """Every bound at ``(n, eps)``, each flagged vacuous when it says nothing at this ``n``.

    A palette-type value is vacuous when it is ``<= 0`` or exceeds ``n``; the
    non-neighbour threshold is vacuous when it exceeds half the minimum set
    size (about what a typical outside vertex sees) or that set size exceeds
    ``n``.
    """
    lower, upper = theorem1_bounds(n)
    lp = lemma1_params(n, eps)
    rep = BoundReport(n=n, eps=eps)
    rep.values = {
        "theorem1_lower": lower,
        "theorem1_upper": upper,
        "greedy_palette_size": float(greedy_palette_size(n, eps)),
        "adversary_palette_size": float(adversary_palette_size(n, eps)),
        "mmp_upper_bound": float(mmp_upper_bound(n)),
        "lemma1_k": float(lp.k),
        "lemma1_y_min": lp.y_min,
        "lemma1_nonneighbor_threshold": lp.nonneighbor_threshold,
    }
    for name, val in rep.values.items():
        if name == "lemma1_nonneighbor_threshold":
            rep.vacuous[name] = val > lp.y_min / 2 or lp.y_min > n
        elif name == "lemma1_y_min":
            rep.vacuous[name] = val > n
        else:
            rep.vacuous[name] = not (val > 0) or val > n
    rep.notes.append("o(1) terms dropped; values are asymptotic expressions evaluated at n")
    rep.notes.append("theorem1_lower uses the asymptotic constant 3 exactly")
    return rep
