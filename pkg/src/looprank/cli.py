"""Command-line interface: ``looprank {rank,family,named,classify,verify,export}``."""

from __future__ import annotations

import argparse
import json
import sys
from itertools import combinations
from pathlib import Path

from . import verify as V
from .families import WITNESS_CATALOG, FamilyId, NamedGraphId, build_named, family
from .graph import SelfLoopGraph, induced
from .iso import contains_induced
from .rank import rank_graph

DATA_FORMATS = ("json", "dot")


def _read_graph(source: str) -> SelfLoopGraph:
    if source == "-":
        text = sys.stdin.read()
    elif source.lstrip().startswith("{"):
        text = source
    else:
        text = Path(source).read_text()
    return SelfLoopGraph.from_json(text)


def _resolve_output(args) -> tuple[str, str | None]:
    """(format, path).  ``--out`` accepts either a format name or a file path."""
    fmt = getattr(args, "format", None)
    out = args.out
    if out in DATA_FORMATS:
        return out, None
    if fmt is None and out and out.endswith(".dot"):
        fmt = "dot"
    return fmt or "json", out


def _emit(text: str, path: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _serialize(g: SelfLoopGraph, fmt: str, name: str | None) -> str:
    return g.to_dot(name) if fmt == "dot" else g.to_json()


def find_rank4_witness(g: SelfLoopGraph) -> dict | None:
    """Smallest induced subgraph of rank >= 4, preferring catalog graphs at equal order."""
    catalog = sorted(WITNESS_CATALOG, key=lambda gid: build_named(gid).order)
    for k in range(4, g.order + 1):
        for gid in catalog:
            h = build_named(gid)
            if h.order == k:
                u = contains_induced(h, g) if g.order <= 12 else None
                if u is not None:
                    return {"graph": gid.value, "vertices": u, "rank": rank_graph(h)}
        for u in combinations(g.vertices, k):
            r = rank_graph(induced(g, u))
            if r >= 4:
                return {"graph": None, "vertices": list(u), "rank": r}
    return None


def cmd_rank(args) -> int:
    g = _read_graph(args.graph)
    r = rank_graph(g)
    print(f"rank: {r}")
    if args.witness and r >= 4:
        w = find_rank4_witness(g)
        if w is not None:
            label = w["graph"] or "induced"
            print(f"witness: {label} on vertices {w['vertices']} (rank {w['rank']})")
    return 0


def cmd_family(args) -> int:
    fid = FamilyId.parse(args.name)
    g = family(fid, w=args.w, n=args.n, sigma=args.sigma)
    fmt, path = _resolve_output(args)
    _emit(_serialize(g, fmt, fid.value), path)
    return 0


def cmd_named(args) -> int:
    gid = NamedGraphId.parse(args.name)
    fmt, path = _resolve_output(args)
    _emit(_serialize(build_named(gid), fmt, gid.value), path)
    return 0


def cmd_export(args) -> int:
    g = _read_graph(args.graph)
    fmt, path = _resolve_output(args)
    if args.format is None and args.out not in DATA_FORMATS:
        fmt = "dot"
    _emit(_serialize(g, fmt, args.name), path)
    return 0


def _jobs(args) -> int:
    return args.jobs if args.jobs else V.default_jobs()


def _classify(args) -> V.VerificationReport:
    report, _ = V.classify_rank3(
        args.order,
        require_triangle_free=not args.allow_triangles,
        require_cyclic=not args.allow_acyclic,
        jobs=_jobs(args),
        long_run=args.long_run,
    )
    return report


def cmd_classify(args) -> int:
    report = _classify(args)
    _emit(report.to_json(), args.out)
    return 0 if report.ok else 1


def _check_long_run(args, n_max: int) -> None:
    if n_max > 9 and not args.long_run:
        raise ValueError(f"--n-max {n_max} above 9 needs --long-run")


def cmd_verify(args) -> int:
    claim = args.claim
    if claim == "cycle-bound":
        n_max = args.n_max or 9
        _check_long_run(args, n_max)
        report = V.verify_cycle_rank_bound(5, n_max)
    elif claim == "witnesses":
        n_max = args.n_max or 9
        _check_long_run(args, n_max)
        report = V.verify_witnesses(n_max)
    elif claim == "c4-table":
        report = V.verify_c4_table()
    elif claim == "classify":
        report = _classify(args)
    elif claim == "rank12":
        report = V.verify_rank12(args.n_max or 7)
    elif claim == "maximality":
        report = V.verify_maximality()
    else:
        report = V.verify_family_ranks()
    _emit(report.to_json(), args.out)
    print(f"{report.claim}: {report.status} ({report.checked} checked)", file=sys.stderr)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="looprank", description="Exact rank of self-loop graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("rank", help="print the rank of a graph given as JSON")
    r.add_argument("graph", help="JSON file, '-' for stdin, or an inline JSON object")
    r.add_argument("--witness", action="store_true", help="also print a smallest rank >= 4 induced subgraph")
    r.set_defaults(func=cmd_rank)

    f = sub.add_parser("family", help="build a family member")
    f.add_argument("name", help="one of: " + " ".join(x.value for x in FamilyId))
    f.add_argument("--w", type=int, default=0, help="number of joined vertices |W|")
    f.add_argument("--n", type=int, help="order (rank1, rank2)")
    f.add_argument("--sigma", type=int, help="loop count (rank2)")
    f.add_argument("--format", choices=DATA_FORMATS)
    f.add_argument("--out", help="output file, or a format name (json|dot)")
    f.set_defaults(func=cmd_family)

    nm = sub.add_parser("named", help="build a named graph")
    nm.add_argument("name", help="one of: " + " ".join(x.value for x in NamedGraphId))
    nm.add_argument("--format", choices=DATA_FORMATS)
    nm.add_argument("--out")
    nm.set_defaults(func=cmd_named)

    e = sub.add_parser("export", help="convert graph JSON to DOT (or normalised JSON)")
    e.add_argument("graph")
    e.add_argument("--name", help="graph name attribute")
    e.add_argument("--format", choices=DATA_FORMATS)
    e.add_argument("--out")
    e.set_defaults(func=cmd_export)

    def add_classify_flags(sp, order_default=None):
        sp.add_argument("--order", type=int, default=order_default)
        sp.add_argument("--allow-triangles", action="store_true", help="drop the triangle-free filter")
        sp.add_argument("--allow-acyclic", action="store_true", help="drop the cyclic filter")
        sp.add_argument("--jobs", type=int, help="worker processes (default: $LOOPRANK_JOBS or 1)")
        sp.add_argument("--long-run", action="store_true", help="unlock order 8 and n-max above 9")
        sp.add_argument("--out")

    c = sub.add_parser("classify", help="enumerate rank-3 self-loop graphs of one order")
    add_classify_flags(c, order_default=5)
    c.set_defaults(func=cmd_classify)

    v = sub.add_parser("verify", help="run an exhaustive check and print its report")
    v.add_argument("claim", choices=V.CLAIMS)
    v.add_argument("--n-max", type=int)
    add_classify_flags(v, order_default=5)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"looprank {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
