"""Monte Carlo palette experiments and run manifests."""
from __future__ import annotations

import csv
import hashlib
import io
import json
import os
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Sequence

from . import __version__
from .cliques import DEFAULT_MIN_SIZE
from .coloring import exact_chi_c, greedy_clique_coloring, verify_clique_coloring
from .errors import BudgetExceeded, InputError, NotFoundWithinBudget
from .graph import MASK64, GenParams, gen_random_graph

MC_SCHEMA = "cliquechroma.mc/1"
SUMMARY_SCHEMA = "cliquechroma.mc-summary/1"
MANIFEST_SCHEMA = "cliquechroma.manifest/1"
MC_FIELDS = ["schema", "n", "p", "trial", "seed", "method", "palette", "steps",
             "remainder", "valid", "censored"]

DEFAULT_CLIQUE_BUDGET = 200_000
DEFAULT_NODE_BUDGET = 5_000_000
EXACT_MAX_N = 40


def default_budgets() -> dict[str, int]:
    """Budgets, overridable through ``CLIQUECHROMA_BUDGET``.

    The variable holds either one integer (applied to both) or a comma list
    such as ``cliques=1000,nodes=50000``.
    """
    budgets = {"cliques": DEFAULT_CLIQUE_BUDGET, "nodes": DEFAULT_NODE_BUDGET}
    raw = os.environ.get("CLIQUECHROMA_BUDGET", "").strip()
    if not raw:
        return budgets
    try:
        if "=" not in raw:
            val = int(raw)
            return {"cliques": val, "nodes": val}
        for part in raw.split(","):
            key, val = part.split("=")
            key = key.strip()
            if key not in budgets:
                raise ValueError(key)
            budgets[key] = int(val)
    except ValueError:
        raise InputError(f"cannot parse CLIQUECHROMA_BUDGET={raw!r}") from None
    return budgets


@dataclass
class RunManifest:
    subcommand: str
    params: dict
    seed: int | None = None
    input_digests: dict[str, str] = field(default_factory=dict)
    outputs: list[str] = field(default_factory=list)
    tool_version: str = __version__
    started: str = ""
    finished: str = ""
    schema: str = MANIFEST_SCHEMA

    def start(self) -> "RunManifest":
        self.started = _now()
        return self

    def finish(self) -> "RunManifest":
        self.finished = _now()
        return self

    def add_input(self, path: str | Path) -> None:
        self.input_digests[str(path)] = file_digest(path)

    def to_dict(self) -> dict:
        return asdict(self)

    def write(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n")


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def file_digest(path: str | Path) -> str:
    return "sha256:" + hashlib.sha256(Path(path).read_bytes()).hexdigest()


@dataclass(frozen=True)
class TrialRow:
    n: int
    p: float
    trial: int
    seed: int
    method: str
    palette: int | None
    steps: int | None
    remainder: int | None
    valid: bool | None
    censored: bool


def run_trial(n: int, p: float, trial: int, base_seed: int, method: str,
              min_size: int = DEFAULT_MIN_SIZE, budgets: dict[str, int] | None = None,
              check: bool = True) -> TrialRow:
    """One palette measurement on G(n, p) with seed ``base_seed + trial``."""
    budgets = budgets or default_budgets()
    seed = (base_seed + trial) & MASK64
    G = gen_random_graph(GenParams(n, p, seed))
    try:
        if method == "greedy":
            col, stats = greedy_clique_coloring(G, min_size=min_size, node_budget=budgets["nodes"])
            valid = bool(verify_clique_coloring(G, col, min_size)) if check else None
            return TrialRow(n, p, trial, seed, method, col.palette, stats.steps, stats.remainder,
                            valid, False)
        if method == "exact":
            chi, _ = exact_chi_c(G, min_size=min_size, clique_budget=budgets["cliques"],
                                 node_budget=budgets["nodes"])
            return TrialRow(n, p, trial, seed, method, chi, None, None, True, False)
    except (BudgetExceeded, NotFoundWithinBudget):
        return TrialRow(n, p, trial, seed, method, None, None, None, None, True)
    raise InputError(f"unknown method {method!r}")


def _run_trial_args(args: tuple) -> TrialRow:
    return run_trial(*args)


def run_mc(
    n_list: Sequence[int],
    trials: int,
    seed: int,
    method: str = "greedy",
    p: float = 0.5,
    min_size: int = DEFAULT_MIN_SIZE,
    budgets: dict[str, int] | None = None,
    workers: int = 1,
    check: bool = True,
) -> list[TrialRow]:
    """All trials for every ``n``; rows come back sorted by ``(n, trial)`` whatever ``workers`` is."""
    if trials < 1:
        raise InputError("trials must be >= 1")
    if method not in ("greedy", "exact"):
        raise InputError(f"unknown method {method!r}")
    if not n_list or any(n < 1 for n in n_list):
        raise InputError("n-list must hold positive integers")
    if method == "exact" and max(n_list) > EXACT_MAX_N:
        raise InputError(f"exact method is limited to n <= {EXACT_MAX_N}")
    budgets = budgets or default_budgets()
    jobs = [(n, p, t, seed, method, min_size, budgets, check) for n in n_list for t in range(trials)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            rows = list(ex.map(_run_trial_args, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        rows = [_run_trial_args(j) for j in jobs]
    return sorted(rows, key=lambda r: (r.n, r.trial))


def summarize(rows: Sequence[TrialRow]) -> dict:
    per_n: dict[int, list[TrialRow]] = {}
    for r in rows:
        per_n.setdefault(r.n, []).append(r)
    out = []
    for n in sorted(per_n):
        group = per_n[n]
        pal = [r.palette for r in group if not r.censored]
        out.append({
            "n": n,
            "trials": len(group),
            "censored": sum(r.censored for r in group),
            "invalid": sum(r.valid is False for r in group),
            "mean_palette": statistics.fmean(pal) if pal else None,
            "min_palette": min(pal) if pal else None,
            "max_palette": max(pal) if pal else None,
        })
    return {"schema": SUMMARY_SCHEMA, "per_n": out}


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "1" if v else "0"
    return str(v)


def rows_to_csv(rows: Sequence[TrialRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(MC_FIELDS)
    for r in rows:
        d = asdict(r)
        w.writerow([MC_SCHEMA] + [_fmt(d[k]) for k in MC_FIELDS[1:]])
    return buf.getvalue()
