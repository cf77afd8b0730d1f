"""``cliquechroma`` command line.

Exit codes: 0 ok / no violation, 1 violation found, 2 usage or parse error,
3 resource budget exceeded. JSON and CSV outputs carry a ``schema`` field and
number vertices from 1.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path

from . import harness
from .bounds import bound_report
from .cliques import DEFAULT_MIN_SIZE
from .coloring import audit_coloring, exact_chi_c, greedy_clique_coloring, verify_clique_coloring
from .errors import BudgetExceeded, InputError, NotFoundWithinBudget
from .formats import read_coloring, read_graph, write_coloring, write_graph
from .graph import GenParams, gen_random_graph
from .probchecks import estimate_lemma1_probability, property_c_spot_check

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _one_based(vs) -> list[int]:
    return [v + 1 for v in vs]


def _finite(o):
    """Replace inf/nan (not valid JSON) by ``None``."""
    if isinstance(o, float):
        return o if math.isfinite(o) else None
    if isinstance(o, dict):
        return {k: _finite(v) for k, v in o.items()}
    if isinstance(o, (list, tuple)):
        return [_finite(v) for v in o]
    return o


def _dumps(obj) -> str:
    return json.dumps(_finite(obj), indent=2, sort_keys=True, allow_nan=False) + "\n"


def _emit(text: str, out: str | None, manifest: harness.RunManifest) -> None:
    if out:
        Path(out).write_text(text)
        manifest.outputs.append(out)
        manifest.finish().write(out + ".manifest.json")
    else:
        sys.stdout.write(text)


def _load_graph(path: str, manifest: harness.RunManifest):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise _Usage(f"cannot read {path}: {exc.strerror}") from None
    manifest.add_input(path)
    return read_graph(text)


def _load_coloring(path: str, manifest: harness.RunManifest):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise _Usage(f"cannot read {path}: {exc.strerror}") from None
    manifest.add_input(path)
    return read_coloring(text)


def _budgets(args) -> dict[str, int]:
    b = harness.default_budgets()
    if getattr(args, "budget_cliques", None) is not None:
        b["cliques"] = args.budget_cliques
    if getattr(args, "budget_nodes", None) is not None:
        b["nodes"] = args.budget_nodes
    return b


def _require_json(args) -> None:
    if args.format != "json":
        raise _Usage(f"{args.cmd} only writes json")


# -- subcommands -------------------------------------------------------------

def cmd_gen(args, m: harness.RunManifest) -> int:
    params = GenParams(args.n, args.p, args.seed)
    G = gen_random_graph(params)
    text = write_graph(G, comments=[f"G(n={args.n}, p={args.p!r}) seed={args.seed}"])
    _emit(text, args.out, m)
    return EXIT_OK


def cmd_greedy(args, m) -> int:
    _require_json(args)
    G = _load_graph(args.graph, m)
    col, stats = greedy_clique_coloring(G, min_size=args.min_clique_size,
                                        node_budget=_budgets(args)["nodes"])
    if args.coloring_out:
        Path(args.coloring_out).write_text(write_coloring(col))
        m.outputs.append(args.coloring_out)
    rec = {
        "schema": "cliquechroma.greedy/1",
        "n": G.n,
        "palette": col.palette,
        "steps": stats.steps,
        "remainder": stats.remainder,
        "pivots": _one_based(stats.pivots),
        "colors": list(col.colors),
    }
    _emit(_dumps(rec), args.out, m)
    return EXIT_OK


def cmd_exact(args, m) -> int:
    _require_json(args)
    G = _load_graph(args.graph, m)
    b = _budgets(args)
    chi, col = exact_chi_c(G, max_colors=args.max_colors, min_size=args.min_clique_size,
                           clique_budget=b["cliques"], node_budget=b["nodes"])
    rec = {"schema": "cliquechroma.exact/1", "n": G.n, "chi_c": chi, "colors": list(col.colors)}
    _emit(_dumps(rec), args.out, m)
    return EXIT_OK


def cmd_verify(args, m) -> int:
    _require_json(args)
    G = _load_graph(args.graph, m)
    col = _load_coloring(args.coloring, m)
    verdict = verify_clique_coloring(G, col, args.min_clique_size)
    cert = None if verdict.valid else _one_based(verdict.certificate)
    rec = {"schema": "cliquechroma.verify/1", "n": G.n, "palette": col.palette,
           "valid": verdict.valid, "certificate": cert}
    _emit(_dumps(rec), args.out, m)
    return EXIT_OK if verdict.valid else EXIT_VIOLATION


def cmd_audit(args, m) -> int:
    _require_json(args)
    G = _load_graph(args.graph, m)
    col = _load_coloring(args.coloring, m)
    tr = audit_coloring(G, col, class_floor=args.class_floor, min_size=args.min_clique_size)
    rec = {
        "schema": "cliquechroma.audit/1",
        "outcome": tr.outcome,
        "certificate": None if tr.certificate is None else _one_based(tr.certificate),
        "class_floor": tr.class_floor,
        "steps": [
            {"class": s.class_id, "class_size_in_x": s.class_size_in_x, "x_size": s.x_size,
             "vertex": s.vertex + 1, "nonneighbors": s.nonneighbors,
             "meets_class_floor": s.meets_class_floor}
            for s in tr.steps
        ],
        "final_x": _one_based(tr.final_x) if tr.final_x is not None else [],
        "class_sizes_in_x": {str(k): v for k, v in tr.class_sizes_in_x.items()},
    }
    _emit(_dumps(rec), args.out, m)
    return EXIT_VIOLATION if tr.violation else EXIT_OK


def cmd_bounds(args, m) -> int:
    rep = bound_report(args.n, args.eps)
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["schema", "n", "eps", "name", "value", "vacuous"])
        for k, v in rep.values.items():
            w.writerow(["cliquechroma.bounds/1", args.n, args.eps, k, repr(v), int(rep.vacuous[k])])
        text = buf.getvalue()
    else:
        text = _dumps({"schema": "cliquechroma.bounds/1", **rep.to_dict()})
    _emit(text, args.out, m)
    return EXIT_OK


def cmd_mc(args, m) -> int:
    rows = harness.run_mc(args.n, args.trials, args.seed, method=args.method, p=args.p,
                          min_size=args.min_clique_size, budgets=_budgets(args),
                          workers=args.workers)
    summary = harness.summarize(rows)
    if args.format == "csv":
        table = harness.rows_to_csv(rows)
    else:
        table = _dumps({"schema": harness.MC_SCHEMA,
                        "rows": [dict(zip(harness.MC_FIELDS[1:], _row_values(r))) for r in rows]})
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        table_path = out / f"trials.{args.format}"
        table_path.write_text(table)
        (out / "summary.json").write_text(_dumps(summary))
        m.outputs += [str(table_path), str(out / "summary.json")]
        m.finish().write(out / "manifest.json")
    else:
        sys.stdout.write(table)
    censored = sum(r.censored for r in rows)
    invalid = sum(r.valid is False for r in rows)
    if invalid:
        return EXIT_VIOLATION
    return EXIT_BUDGET if censored else EXIT_OK


def _row_values(r: harness.TrialRow) -> list:
    return [getattr(r, k) for k in harness.MC_FIELDS[1:]]


def cmd_lemma1(args, m) -> int:
    est = estimate_lemma1_probability(args.n, args.y, args.k, args.threshold, args.trials,
                                      args.seed, p=args.p, node_budget=_budgets(args)["nodes"])
    params = {"n": args.n, "y": args.y, "k": args.k, "threshold": args.threshold,
              "trials": args.trials, "seed": args.seed, "p": args.p}
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        cols = ["n", "y", "k", "threshold", "trials", "seed", "p"]
        w.writerow(["schema", *cols, "bad", "censored", "fraction", "ci_low", "ci_high"])
        w.writerow(["cliquechroma.lemma1/1", *[params[c] for c in cols], est.bad, est.censored,
                    est.fraction, est.ci_low, est.ci_high])
        text = buf.getvalue()
    else:
        text = _dumps({"schema": "cliquechroma.lemma1/1", "params": params, **est.to_dict()})
    _emit(text, args.out, m)
    return EXIT_OK


def cmd_propc(args, m) -> int:
    _require_json(args)
    G = _load_graph(args.graph, m)
    rep = property_c_spot_check(G, args.eps, j_max=args.j_max, samples=args.samples,
                                seed=args.seed, threshold=args.threshold,
                                node_budget=_budgets(args)["nodes"])
    d = rep.to_dict()
    for s in d["details"]:
        s["vertices"] = _one_based(s["vertices"])
        if s["maximal_clique"] is not None:
            s["maximal_clique"] = _one_based(s["maximal_clique"])
    d["condition1_failure_rate"] = rep.condition1_failures / rep.samples
    _emit(_dumps({"schema": "cliquechroma.propc/1", **d}), args.out, m)
    return EXIT_VIOLATION if rep.condition2_failures else EXIT_OK


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="output path (directory for mc); stdout when omitted")
    common.add_argument("--format", choices=("json", "csv"), default=None,
                        help="json by default; csv by default for mc")
    common.add_argument("--min-clique-size", type=int, default=DEFAULT_MIN_SIZE)
    common.add_argument("--budget-cliques", type=int, default=None)
    common.add_argument("--budget-nodes", type=int, default=None)

    p = _Parser(prog="cliquechroma", description="Clique colourings and G(n, 1/2) experiments.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    s = sub.add_parser("gen", parents=[common], help="sample G(n, p) to a graph file")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--p", type=float, default=0.5)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("greedy", parents=[common], help="pivot greedy clique colouring")
    s.add_argument("graph")
    s.add_argument("--coloring-out", help="also write the colouring file here")
    s.set_defaults(func=cmd_greedy)

    s = sub.add_parser("exact", parents=[common], help="exact clique chromatic number")
    s.add_argument("graph")
    s.add_argument("--max-colors", type=int, default=None)
    s.set_defaults(func=cmd_exact)

    s = sub.add_parser("verify", parents=[common], help="check a clique colouring")
    s.add_argument("graph")
    s.add_argument("coloring")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("audit", parents=[common], help="colour-class audit of a colouring")
    s.add_argument("graph")
    s.add_argument("coloring")
    s.add_argument("--class-floor", type=float, default=None)
    s.set_defaults(func=cmd_audit)

    s = sub.add_parser("bounds", parents=[common], help="closed-form bounds at n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--eps", type=float, default=0.1)
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("mc", parents=[common], help="Monte Carlo palette sizes over seeds")
    s.add_argument("--n", type=int, nargs="+", required=True)
    s.add_argument("--trials", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--p", type=float, default=0.5)
    s.add_argument("--method", choices=("greedy", "exact"), default="greedy")
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_mc)

    s = sub.add_parser("lemma1", parents=[common], help="estimate the dominating-clique bad event")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--y", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--threshold", type=float, required=True)
    s.add_argument("--trials", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--p", type=float, default=0.5)
    s.set_defaults(func=cmd_lemma1)

    s = sub.add_parser("propc", parents=[common], help="sampled Property C spot check")
    s.add_argument("graph")
    s.add_argument("--eps", type=float, default=0.1)
    s.add_argument("--j-max", type=int, default=None)
    s.add_argument("--samples", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--threshold", type=float, default=None)
    s.set_defaults(func=cmd_propc)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = "csv" if args.cmd == "mc" else "json"
    params = {k: v for k, v in vars(args).items() if k not in ("func", "cmd")}
    manifest = harness.RunManifest(args.cmd, params, seed=getattr(args, "seed", None)).start()
    try:
        if args.min_clique_size < 1:
            raise _Usage("--min-clique-size must be >= 1")
        return args.func(args, manifest)
    except (_Usage, InputError) as exc:
        print(f"cliquechroma {args.cmd}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BudgetExceeded, NotFoundWithinBudget) as exc:
        print(f"cliquechroma {args.cmd}: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
