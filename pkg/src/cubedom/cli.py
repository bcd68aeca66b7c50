"""Command-line interface.

Exit codes: 0 success or verified, 1 verification failure / unproven result /
build failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import constructions as cons
from .domination import (
    DEFAULT_BUDGET_NODES,
    DEFAULT_BUDGET_SECS,
    exact_gamma,
    exact_gamma_c,
    is_connected,
    is_dominating,
    lower_bounds,
    undominated,
)
from .errors import FormatError, IntegrityError, ParameterError, PreconditionError
from .formats import format_set, read_set, read_tree, write_set, write_tree
from .hamming import build_hamming, codewords
from .hypercube import get_nmax, vertex_str
from .tables import build_table, render
from .trees import verify_tree

FORMAT_HELP = (
    "Vertices are n-character 0/1 strings, leftmost character = coordinate n "
    "(most significant bit). Set files: one vertex per line, '#' comments allowed. "
    "Tree files: header 'n=<dim>' then 2^n - 1 lines 'u v'."
)


def _print_kv(pairs: dict) -> None:
    for key, value in pairs.items():
        print(f"{key}={'' if value is None else value}")


def cmd_code(args) -> int:
    code = build_hamming(args.k)
    _print_kv({
        "k": code.k,
        "N": code.N,
        "codeword_count": code.codeword_count,
        "generator_rows": " ".join(vertex_str(r, code.N) for r in code.generator_rows),
    })
    if args.list:
        sys.stdout.write(format_set(codewords(code)))
    return 0


def cmd_construct(args) -> int:
    n = args.n
    method = args.method
    if method == "hamming":
        report = cons.hamming_construct(n)
    elif method == "doubling":
        report = cons.doubling_construct(n)
    elif method == "expansion":
        report = cons.expansion_construct(n, k=args.k, j=args.j)
    else:
        report = cons.auto_construct(n)
    if report.cds is not None and not cons.verify_construction(report):
        print("error: constructed set is not a connected dominating set", file=sys.stderr)
        return 1
    if args.out_set and report.cds is not None:
        write_set(args.out_set, report.cds)
    if args.out_tree and report.tree is not None:
        write_tree(args.out_tree, report.tree)
    record = report.to_dict()
    if method == "auto":
        record["candidates"] = len(cons.candidates(n))
    _print_kv(record)
    if args.json:
        print(json.dumps(record, sort_keys=True))
    return 0


def cmd_exact(args) -> int:
    solver = exact_gamma if args.kind == "gamma" else exact_gamma_c
    result = solver(args.n, budget_nodes=args.budget_nodes, budget_secs=args.budget_secs,
                    symmetry=args.symmetry)
    _print_kv({
        "n": result.n,
        "kind": result.kind,
        "value": result.value,
        "status": result.status.value,
        "lower": result.lower,
        "nodes_explored": result.nodes_explored,
        "elapsed_secs": f"{result.elapsed:.3f}",
        "witness": " ".join(vertex_str(v, result.n) for v in result.witness),
    })
    if args.witness:
        write_set(args.witness, result.witness)
        print(f"witness_file={args.witness}")
    return 0 if result.proven else 1


def cmd_verify_set(args) -> int:
    vset = read_set(args.file, args.n)
    size = vset.size()
    dominating = size > 0 and is_dominating(vset)
    checks = {"n": args.n, "size": size, "dominating": dominating}
    ok = dominating
    if not dominating and size:
        missing = undominated(vset)
        checks["undominated_count"] = missing.size()
        checks["first_undominated"] = vertex_str(missing.min(), args.n)
    if args.connected:
        connected = size > 0 and is_connected(vset)
        checks["connected"] = connected
        ok = ok and connected
    bounds = lower_bounds(args.n)
    checks["gamma_lower"] = bounds.gamma_lower
    checks["gamma_c_lower"] = bounds.gamma_c_lower
    checks["ok"] = ok
    _print_kv(checks)
    return 0 if ok else 1


def cmd_verify_tree(args) -> int:
    tree = read_tree(args.file, args.n)
    report = verify_tree(tree)
    _print_kv({
        "n": report.n,
        "edges": report.edge_count,
        "leaf_count": report.leaf_count,
        "internal_count": report.internal_count,
        "ok": report.ok,
    })
    for violation in report.violations:
        print(f"violation: {violation}")
    return 0 if report.ok else 1


def cmd_table(args) -> int:
    rows = build_table(args.min_n, args.max_n, formula_above_nmax=args.formula_above_nmax)
    text = render(rows, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubedom",
        description="Dominating sets, connected dominating sets and leafy spanning trees of hypercubes.",
        epilog=FORMAT_HELP + f" Explicit sets are capped at n_max={get_nmax()} (env CUBEDOM_NMAX).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("code", help="Hamming code parameters and codewords")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--list", action="store_true", help="print every codeword")
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("construct", help="build a connected dominating set", epilog=FORMAT_HELP)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=["hamming", "doubling", "expansion", "auto"], default="auto")
    p.add_argument("--k", type=int, help="Hamming parameter of the expansion base")
    p.add_argument("--j", type=int, help="number of expansion directions")
    p.add_argument("--out-set")
    p.add_argument("--out-tree")
    p.add_argument("--json", action="store_true", help="also print a JSON record")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("exact", help="exact domination numbers for small n")
    p.add_argument("kind", choices=["gamma", "gamma-c"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--budget-nodes", type=int, default=DEFAULT_BUDGET_NODES)
    p.add_argument("--budget-secs", type=float, default=DEFAULT_BUDGET_SECS)
    p.add_argument("--symmetry", action="store_true", help="fix vertex 0 in the set")
    p.add_argument("--witness", help="write the witness set to this file")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("verify", help="verify set or tree files", epilog=FORMAT_HELP)
    vsub = p.add_subparsers(dest="target", required=True)
    q = vsub.add_parser("set")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--file", required=True)
    q.add_argument("--connected", action="store_true")
    q.set_defaults(func=cmd_verify_set)
    q = vsub.add_parser("tree")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--file", required=True)
    q.set_defaults(func=cmd_verify_tree)

    p = sub.add_parser("table", help="bound table, one row per n")
    p.add_argument("--min-n", type=int, default=2)
    p.add_argument("--max-n", type=int, default=20)
    p.add_argument("--format", choices=["csv", "tsv", "markdown"], default="csv")
    p.add_argument("--formula-above-nmax", action="store_true",
                   help="emit bound-only rows for n above n_max")
    p.add_argument("--out")
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ParameterError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (PreconditionError, IntegrityError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
