"""Command-line frontend: ``starpcg <subcommand> ...``.

Witness-emitting subcommands print the witness JSON followed by report lines
starting with ``#``; those lines are skipped when a witness is read back, so
output can be piped straight into ``starpcg verify --witness -``.
"""
from __future__ import annotations

import argparse
import contextlib
import io
import sys
from collections import Counter
from pathlib import Path

from .constructors import acyclic_witness, caterpillar_witness, lobster_witness, path_witness
from .errors import (
    InternalInvariantError,
    InvalidWitnessError,
    ParseError,
    ResourceLimitError,
    StarPCGError,
    WitnessStructureError,
)
from .graph import Graph, all_labeled_graphs, complement_graph, parse_graph
from .operations import (
    add_false_twins,
    add_isolated,
    add_pendants,
    add_true_twins,
    add_universal,
    complement_witness,
)
from .solver import default_budget, grid_upper_bound, is_star_k, star_number
from .transforms import mirror, normalize
from .witness import (
    as_fraction,
    canonicalize,
    check_normal_form,
    classify_free,
    dumps_witness,
    integerize,
    loads_witness,
    verify,
)

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

OPS = ("isolated", "universal", "pendant", "false-twin", "true-twin", "complement")
CONSTRUCTS = ("path", "caterpillar", "lobster", "forest")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def read_witness(path: str):
    text = _read_text(path)
    body = "\n".join(line for line in text.splitlines() if not line.lstrip().startswith("#"))
    return loads_witness(body)


def read_graph(path: str, fmt: str | None) -> Graph:
    if fmt is None:
        fmt = "graph6" if path.endswith((".g6", ".graph6")) else "edge_list"
    return parse_graph(_read_text(path), fmt)


def _emit_witness(out, w, args, report=None) -> int:
    if getattr(args, "integerize", False):
        w = integerize(w)
    out.write(dumps_witness(w, indent=2) + "\n")
    if getattr(args, "out", None):
        Path(args.out).write_text(dumps_witness(w, indent=2) + "\n")
    vr = verify(w)
    if report is not None:
        out.write(f"# op: {report.op}  case: {report.case}\n")
        out.write(f"# k: {report.k_before} -> {report.k_after}  bound: {report.k_bound()}")
        out.write("  fallback\n" if report.fallback_used else "\n")
    out.write(f"# verify: {vr.describe()}\n")
    return EXIT_OK if vr.valid else EXIT_INVALID


def cmd_verify(args, out) -> int:
    w = read_witness(args.witness)
    vr = verify(w)
    out.write(vr.describe() + "\n")
    return EXIT_OK if vr.valid else EXIT_INVALID


def cmd_canonicalize(args, out) -> int:
    w = read_witness(args.witness)
    if not verify(w).valid:
        out.write(verify(w).describe() + "\n")
        return EXIT_INVALID
    return _emit_witness(out, canonicalize(w), args)


def cmd_classify(args, out) -> int:
    w = read_witness(args.witness)
    vr = verify(w)
    out.write(f"verify: {vr.describe()}\n")
    if not vr.valid:
        return EXIT_INVALID
    ok, bad = check_normal_form(w)
    out.write(f"free: {classify_free(w)}\n")
    out.write(f"normal form: {'yes' if ok else 'no'}")
    out.write("\n" if ok else f" (violating vertices: {', '.join(map(str, bad))})\n")
    out.write(f"k: {w.k}\n")
    return EXIT_OK


def _budget(args) -> int:
    return args.budget if args.budget is not None else default_budget()


def cmd_solve(args, out) -> int:
    g = read_graph(args.graph, args.format)
    mode = args.mode.replace("-", "_")
    budget = _budget(args)
    if args.k is not None:
        cert = is_star_k(g, args.k, mode, budget=budget, threads=args.threads)
        out.write(f"k: {args.k}  mode: {mode}  outcome: {cert.outcome}\n")
        out.write(f"nodes_explored: {cert.nodes_explored}\n")
        if cert.feasible:
            return _emit_witness(out, cert.witness, args)
        return EXIT_OK
    if mode == "any":
        k, w = star_number(g, budget=budget, threads=args.threads)
    else:
        for k in range(1, g.m + 2):
            cert = is_star_k(g, k, mode, budget=budget, threads=args.threads)
            if cert.feasible:
                w = cert.witness
                break
        else:
            raise StarPCGError(f"no {mode} witness with at most {g.m + 1} intervals")
    gamma = max(k, 1)
    label = "gamma" if mode == "any" else f"min k ({args.mode})"
    out.write(f"{label}: {gamma}\n")
    if g.m == 0:
        out.write("note: edgeless graph; a witness with 0 intervals exists, "
                  "reported as 1 since the star number is a positive integer\n")
    out.write(f"threshold bound: {2 * gamma} (2*gamma-threshold graph)\n")
    return _emit_witness(out, w, args)


def _parse_anchors(text: str | None) -> list[int]:
    if not text:
        return []
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"--anchors expects a comma separated vertex list, got {text!r}") from None


def cmd_op(args, out) -> int:
    w = read_witness(args.witness)
    if not verify(w).valid:
        out.write(verify(w).describe() + "\n")
        return EXIT_INVALID
    if args.name in ("false-twin", "true-twin") and args.vertex is None:
        raise UsageError(f"op {args.name} needs --vertex")
    if args.name == "isolated":
        res = add_isolated(w)
    elif args.name == "universal":
        res = add_universal(w)
    elif args.name == "pendant":
        res = add_pendants(w, _parse_anchors(args.anchors))
    elif args.name == "false-twin":
        res = add_false_twins(w, args.vertex, args.count)
    elif args.name == "true-twin":
        res = add_true_twins(w, args.vertex, args.count)
    else:
        res = complement_witness(w)
    return _emit_witness(out, res[0], args, res[1])


def cmd_construct(args, out) -> int:
    if (args.graph is None) == (args.n is None):
        raise UsageError("construct needs exactly one of --graph or --n")
    if args.n is not None:
        if args.family != "path":
            raise UsageError("--n is only accepted for path")
        return _emit_witness(out, path_witness(args.n), args)
    g = read_graph(args.graph, args.format)
    report = None
    if args.family in ("path", "caterpillar"):
        w = caterpillar_witness(g, _budget(args))
    elif args.family == "lobster":
        w, report = lobster_witness(g, _budget(args))
    else:
        w, report = acyclic_witness(g)
    return _emit_witness(out, w, args, report)


def cmd_mirror(args, out) -> int:
    w = read_witness(args.witness)
    c = as_fraction(args.center) if args.center is not None else None
    return _emit_witness(out, mirror(w, c), args)


def cmd_normalize(args, out) -> int:
    return _emit_witness(out, normalize(read_witness(args.witness)), args)


def cmd_census(args, out) -> int:
    n = args.n
    gamma = {}
    edge_bound_ok = True
    grid_mismatch = []
    for g in all_labeled_graphs(n):
        k, _ = star_number(g, budget=_budget(args))
        gamma[g.edges] = k
        edge_bound_ok &= k <= g.m
        if args.grid:
            res = grid_upper_bound(g, args.grid)
            if res is None or res[0] != k:
                grid_mismatch.append(g)
    complement_bad = 0
    for edges, k in gamma.items():
        kc = gamma[complement_graph(Graph(n, edges)).edges]
        complement_bad += abs(max(kc, 1) - max(k, 1)) > 1
    hist = Counter(max(k, 1) for k in gamma.values())
    out.write(f"graphs: {len(gamma)}\n")
    for k in sorted(hist):
        out.write(f"gamma={k}: {hist[k]}\n")
    out.write(f"complement bound |gamma(G)-gamma(co-G)| <= 1: {'ok' if not complement_bad else f'{complement_bad} failures'}\n")
    out.write(f"gamma <= |E|: {'ok' if edge_bound_ok else 'failed'}\n")
    if args.grid:
        out.write(f"grid w_max={args.grid} agrees: {'ok' if not grid_mismatch else f'{len(grid_mismatch)} mismatches'}\n")
    return EXIT_OK if not complement_bad and edge_bound_ok and not grid_mismatch else EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="starpcg", description="Star-k-PCG witness toolkit.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def witness_cmd(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--witness", required=True, help="witness JSON file, '-' for stdin")
        sp.set_defaults(func=func)
        return sp

    def emits(sp):
        sp.add_argument("--integerize", action="store_true", help="scale to integer weights")
        sp.add_argument("--out", help="also write the witness JSON to this file")
        return sp

    witness_cmd("verify", cmd_verify, "check a witness")
    emits(witness_cmd("canonicalize", cmd_canonicalize, "merge and tighten intervals"))
    witness_cmd("classify", cmd_classify, "freeness and normal-form report")
    emits(witness_cmd("normalize", cmd_normalize, "bring a witness to normal form"))
    sp = emits(witness_cmd("mirror", cmd_mirror, "reflect weights and intervals"))
    sp.add_argument("--center", help="reflection constant (default: b_k or max weight + 1)")

    sp = emits(sub.add_parser("solve", help="exact star number or a k-interval decision"))
    sp.add_argument("--graph", required=True)
    sp.add_argument("--format", choices=("graph6", "edge_list"))
    sp.add_argument("--k", type=int)
    sp.add_argument("--mode", choices=("any", "left-free", "right-free"), default="any")
    sp.add_argument("--budget", type=int, help="node budget (default $STARPCG_BUDGET or 10^7)")
    sp.add_argument("--threads", type=int, default=1)
    sp.set_defaults(func=cmd_solve)

    sp = emits(sub.add_parser("op", help="apply a graph operation to a witness"))
    sp.add_argument("name", choices=OPS)
    sp.add_argument("--witness", required=True)
    sp.add_argument("--anchors", help="pendant anchors, e.g. 0,1,1")
    sp.add_argument("--vertex", type=int)
    sp.add_argument("--count", type=int, default=1)
    sp.set_defaults(func=cmd_op)

    sp = emits(sub.add_parser("construct", help="build a witness for a tree family"))
    sp.add_argument("family", choices=CONSTRUCTS)
    sp.add_argument("--graph")
    sp.add_argument("--n", type=int)
    sp.add_argument("--format", choices=("graph6", "edge_list"))
    sp.add_argument("--budget", type=int)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("census", help="star numbers of all labeled graphs on n vertices")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--grid", type=int, metavar="W_MAX", help="also compare with the integer grid bound")
    sp.add_argument("--budget", type=int)
    sp.set_defaults(func=cmd_census)
    return p


def run_cli(argv) -> tuple[int, str]:
    """Run one invocation; returns ``(exit_code, stdout_text)``."""
    out = io.StringIO()
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out):
            args = parser.parse_args(list(argv))
    except UsageError as exc:
        return EXIT_USAGE, out.getvalue() + f"error: {exc}\n"
    except SystemExit as exc:  # --help
        return (exc.code or 0), out.getvalue()
    try:
        code = args.func(args, out)
    except (WitnessStructureError, InvalidWitnessError) as exc:
        return EXIT_INVALID, out.getvalue() + f"invalid: {exc}\n"
    except (UsageError, ParseError, ValueError) as exc:
        return EXIT_USAGE, out.getvalue() + f"error: {exc}\n"
    except ResourceLimitError as exc:
        return EXIT_RESOURCE, out.getvalue() + f"resource limit: {exc}\n"
    except InternalInvariantError as exc:
        return EXIT_INVALID, out.getvalue() + f"internal check failed: {exc}\n"
    except StarPCGError as exc:
        return EXIT_USAGE, out.getvalue() + f"error: {exc}\n"
    return code, out.getvalue()


def main(argv=None) -> int:
    code, text = run_cli(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
