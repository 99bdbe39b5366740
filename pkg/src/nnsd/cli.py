"""Command-line front end.

    nnsd compute  --family sigma:3 --param nnsdn --solver bnb
    nnsd generate --family turan:6:3 --format edgelist
    nnsd verify   --input graphs.g6
    nnsd sweep trees --max-n 12
    nnsd sweep regular --n 10 --r 3 --samples 20 --seed 7
    nnsd sweep triangle-free --max-n 8

Exit codes: 0 clean, 2 bad input, 3 infeasible, 4 oracle cap exceeded,
5 a theorem check failed (a finding).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass

from . import families as fam
from .codecs import emit_edge_list, encode_graph6, iter_graph6, looks_like_edge_list, parse_edge_list
from .errors import BadParams, CapExceeded, GraphInputError, Infeasible, NNSDError, NotATree
from .graph import Graph
from .solvers import ORACLE_CAP, STRATEGIES, Mode, SignFunction, SetProblem, solve_set_optimum, solve_sign_optimum
from .sweeps import (
    REGULAR_COLUMNS,
    TREE_COLUMNS,
    TREE_MAX_N,
    TRIANGLE_FREE_COLUMNS,
    TRIANGLE_FREE_MAX_N,
    default_jobs,
    regular_sweep,
    tree_findings,
    tree_sweep,
    triangle_free_sweep,
)
from .theorems import run_report

EXIT_OK, EXIT_INPUT, EXIT_INFEASIBLE, EXIT_CAP, EXIT_FINDING = 0, 2, 3, 4, 5
CAP_ENV = "NNSD_ORACLE_CAP"


def _ints(parts: list[str]) -> list[int]:
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise BadParams(f"expected integers, got {parts}") from None


def _arity(name: str, args: list[int], k: int) -> list[int]:
    if len(args) != k:
        raise BadParams(f"{name} takes {k} integer parameter(s), got {len(args)}")
    return args


def parse_family(text: str) -> Graph:
    """Build a graph from a CLI family string such as ``sigma:3`` or ``turan:6:3``."""
    if text.startswith("corona:"):
        left, sep, right = text[len("corona:"):].partition("/")
        if not sep:
            raise BadParams("corona needs two families: corona:FAMILY1/FAMILY2")
        return fam.corona(parse_family(left), parse_family(right))
    name, *rest = text.split(":")
    if name in ("g6-prism", "prism"):
        _arity(name, rest, 0)
        return fam.g6_prism()
    if name in ("g6-k33", "k33"):
        _arity(name, rest, 0)
        return fam.g6_k33()
    args = _ints(rest)
    simple = {
        "path": fam.path, "cycle": fam.cycle, "star": fam.star, "complete": fam.complete,
        "empty": fam.empty, "sigma": fam.sigma, "obs-tree": fam.observation_tree,
        "prism-copies": fam.prism_copies,
    }
    if name in simple:
        return simple[name](*_arity(name, args, 1))
    if name in ("multipartite", "complete-multipartite"):
        return fam.complete_multipartite(args)
    if name == "turan":
        return fam.turan(*_arity(name, args, 2))
    if name in ("cfe", "clique-free-equality"):
        return fam.clique_free_equality_family(*_arity(name, args, 2))
    if name == "random-regular":
        n, r, seed = _arity(name, args, 3)
        return fam.random_regular(n, r, seed)
    raise BadParams(f"unknown family {name!r}")


def parse_param(text: str) -> tuple[str, int | None]:
    name, _, k = text.partition(":")
    if name in ("nnsdn", "sdn", "s2in") and not k:
        return name, None
    if name in ("lk", "tupledom") and k:
        (kv,) = _ints([k])
        if kv < 1:
            raise BadParams("k must be >= 1")
        return name, kv
    raise BadParams(f"bad parameter selector {text!r} (nnsdn|sdn|s2in|lk:K|tupledom:K)")


@dataclass
class RunConfig:
    command: str
    family: str | None = None
    input: str | None = None
    format: str | None = None
    param: str = "nnsdn"
    solver: str = "auto"
    oracle_cap: int = ORACLE_CAP
    output: str | None = None
    output_format: str = "json"
    jobs: int = 1
    all_r: bool = False


def resolve_oracle_cap(flag: int | None) -> int:
    if flag is not None:
        return flag
    env = os.environ.get(CAP_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise BadParams(f"{CAP_ENV} must be an integer") from None
    return ORACLE_CAP


def load_graphs(cfg: RunConfig) -> list[Graph]:
    if cfg.family:
        return [parse_family(cfg.family)]
    with open(cfg.input, "rb") as fh:
        data = fh.read()
    text = data.decode("ascii", errors="replace")
    fmt = cfg.format or ("edgelist" if looks_like_edge_list(text) else "graph6")
    if fmt == "edgelist":
        return [parse_edge_list(text)]
    graphs = list(iter_graph6(data))
    if not graphs:
        raise GraphInputError("no graphs in input")
    return graphs


def _write(cfg: RunConfig, text: str | bytes) -> None:
    if cfg.output:
        mode = "wb" if isinstance(text, bytes) else "w"
        with open(cfg.output, mode) as fh:
            fh.write(text)
    elif isinstance(text, bytes):
        sys.stdout.buffer.write(text)
        sys.stdout.flush()
    else:
        sys.stdout.write(text)


def _dup_warning(g: Graph) -> None:
    if g.had_duplicates:
        print("warning: duplicate edges collapsed", file=sys.stderr)


def cmd_compute(cfg: RunConfig) -> int:
    name, k = parse_param(cfg.param)
    lines = []
    for g in load_graphs(cfg):
        _dup_warning(g)
        if name in ("lk", "tupledom"):
            if cfg.solver == "treedp":
                raise BadParams("treedp solves sign problems only")
            problem = SetProblem("packing" if name == "lk" else "tuple", k)
            res = solve_set_optimum(g, problem, cfg.solver, cfg.oracle_cap)
        else:
            mode = {"nnsdn": Mode.NNSDF, "sdn": Mode.SDF, "s2in": Mode.S2IF}[name]
            res = solve_sign_optimum(g, mode, cfg.solver, cfg.oracle_cap)
        witness = list(res.witness.labels) if isinstance(res.witness, SignFunction) else sorted(res.witness)
        doc = {
            "param": cfg.param,
            "n": g.n,
            "value": res.value,
            "witness": witness,
            "solver": res.solver,
            "nodes_explored": res.nodes_explored,
            "had_duplicates": g.had_duplicates,
        }
        lines.append(json.dumps(doc))
    _write(cfg, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_generate(cfg: RunConfig) -> int:
    g = parse_family(cfg.family)
    if (cfg.format or "graph6") == "edgelist":
        _write(cfg, emit_edge_list(g))
    else:
        _write(cfg, encode_graph6(g) + b"\n")
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    lines = []
    holds = violations = refuted = 0
    for i, g in enumerate(load_graphs(cfg)):
        _dup_warning(g)
        rep = run_report(g, graph_id=str(i), strategy=cfg.solver, oracle_cap=cfg.oracle_cap, all_r=cfg.all_r)
        bad = len(rep.violations)
        violations += bad
        holds += len(rep.checks) - bad
        refuted += bool(rep.refuted_prior_bound)
        lines.append(json.dumps(rep.to_json()))
    summary = {"summary": {"graphs": len(lines), "holds": holds, "violations": violations, "refuted_prior_bound": refuted}}
    lines.append(json.dumps(summary))
    _write(cfg, "\n".join(lines) + "\n")
    return EXIT_FINDING if violations else EXIT_OK


def _table(rows: list[dict], columns: tuple[str, ...], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([{c: r[c] for c in columns} for r in rows], indent=None) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([r[c] for c in columns])
    return buf.getvalue()


def cmd_sweep(cfg: RunConfig, args: argparse.Namespace) -> int:
    if args.mode == "trees":
        if not 1 <= args.max_n <= TREE_MAX_N:
            raise BadParams(f"--max-n must lie in 1..{TREE_MAX_N}")
        rows = tree_sweep(args.max_n, jobs=cfg.jobs)
        _write(cfg, _table(rows, TREE_COLUMNS, cfg.output_format))
        return EXIT_FINDING if tree_findings(rows) else EXIT_OK
    if args.mode == "regular":
        if args.samples < 1:
            raise BadParams("--samples must be >= 1")
        row = regular_sweep(args.n, args.r, args.samples, args.seed, jobs=cfg.jobs)
        _write(cfg, _table([row], REGULAR_COLUMNS, cfg.output_format))
        return EXIT_FINDING if row["violations"] else EXIT_OK
    if not 1 <= args.max_n <= TRIANGLE_FREE_MAX_N:
        raise BadParams(f"--max-n must lie in 1..{TRIANGLE_FREE_MAX_N}")
    rows = triangle_free_sweep(args.max_n, jobs=cfg.jobs)
    _write(cfg, _table(rows, TRIANGLE_FREE_COLUMNS, cfg.output_format))
    return EXIT_FINDING if any(r["violations"] for r in rows) else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nnsd", description="Exact nonnegative signed domination toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_source(p, required=True):
        grp = p.add_mutually_exclusive_group(required=required)
        grp.add_argument("--family", help="family string, e.g. sigma:3, turan:6:3, obs-tree:-3")
        grp.add_argument("--input", help="graph6 file (one graph per line) or edge-list file")
        p.add_argument("--format", choices=("graph6", "edgelist"), help="input/output graph format")

    def add_solver(p):
        p.add_argument("--solver", choices=STRATEGIES, default="auto")
        p.add_argument("--oracle-cap", type=int, default=None, help=f"oracle vertex cap (env {CAP_ENV})")

    p = sub.add_parser("compute", help="compute one parameter")
    add_source(p)
    add_solver(p)
    p.add_argument("--param", default="nnsdn", help="nnsdn|sdn|s2in|lk:K|tupledom:K")
    p.add_argument("--output")

    p = sub.add_parser("generate", help="write a family graph")
    p.add_argument("--family", required=True)
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    p.add_argument("--output")

    p = sub.add_parser("verify", help="check every applicable theorem on each input graph")
    add_source(p)
    add_solver(p)
    p.add_argument("--all-r", action="store_true", help="check clique-free bounds for every valid r")
    p.add_argument("--output")

    p = sub.add_parser("sweep", help="exhaustive or sampled verification sweeps")
    modes = p.add_subparsers(dest="mode", required=True)
    for name in ("trees", "triangle-free"):
        m = modes.add_parser(name)
        m.add_argument("--max-n", type=int, required=True)
    m = modes.add_parser("regular")
    m.add_argument("--n", type=int, required=True)
    m.add_argument("--r", type=int, required=True)
    m.add_argument("--samples", type=int, default=50)
    m.add_argument("--seed", type=int, default=0)
    for m in modes.choices.values():
        m.add_argument("--jobs", type=int, default=None, help="worker processes (default: all cores)")
        m.add_argument("--output-format", choices=("csv", "json"), default="csv")
        m.add_argument("--output")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(command=args.command)
        for key in ("family", "input", "format", "param", "solver", "output", "all_r", "output_format"):
            if getattr(args, key, None) is not None:
                setattr(cfg, key, getattr(args, key))
        if hasattr(args, "oracle_cap"):
            cfg.oracle_cap = resolve_oracle_cap(args.oracle_cap)
        if args.command == "sweep":
            cfg.jobs = args.jobs if args.jobs else default_jobs()
            return cmd_sweep(cfg, args)
        return {"compute": cmd_compute, "generate": cmd_generate, "verify": cmd_verify}[args.command](cfg)
    except Infeasible as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (GraphInputError, BadParams, NotATree, OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NNSDError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
