"""Command-line interface: ``shiftlab <command> ...``.

Exit codes: 0 success, 1 a property or comparison violation was found,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .algebraic import GenericConfig, GenericityError, exterior_profile, exterior_ranks, \
    sample_generic_matrix, symmetric_profile, symmetric_ranks
from .checks import run_checks
from .combinatorial import (
    canonical_combinatorial_shift,
    chordal_shift_algorithm,
    enumerate_combinatorial_shifted_graphs,
)
from .corpus import MODELS, CorpusSpec, gen_corpus
from .graph import (
    Graph,
    GraphError,
    MProfile,
    betti_hochster,
    graph_from_json,
    graph_from_profile,
    is_bipartite,
    is_chordal,
    is_k_connected,
    is_shifted,
    m_profile,
)
from .oracles import betti_shifted_formula, kab_exterior_profile, kab_symmetric_profile

METHODS = ("exterior", "symmetric", "combinatorial", "chordal-algo")

log = logging.getLogger("shiftlab")


class UsageError(Exception):
    pass


def parse_graph_file(path: str) -> Graph:
    """Read one graph in the {"n": ..., "edges": [[i, j], ...]} schema ("-" = stdin)."""
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: malformed JSON: {exc}") from None
    try:
        return graph_from_json(obj)
    except GraphError as exc:
        raise UsageError(f"{path}: {exc}") from None


def read_graph_list(path: str) -> list[Graph]:
    """JSON Lines, or a JSON array of graph objects."""
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    try:
        stripped = text.lstrip()
        if stripped.startswith("["):
            objs = json.loads(text)
        else:
            objs = [json.loads(line) for line in text.splitlines() if line.strip()]
        return [graph_from_json(o) for o in objs]
    except (json.JSONDecodeError, GraphError) as exc:
        raise UsageError(f"{path}: {exc}") from None


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in g.vertices()]
    lines += [f"  {i} -- {j};" for i, j in g.edges]
    lines.append("}")
    return "\n".join(lines)


def _config(args) -> GenericConfig:
    return GenericConfig.from_env(seed=args.seed, bound=args.bound, repeats=args.repeats, pad=args.pad)


def compute_shift(g: Graph, method: str, cfg: GenericConfig, pad_check: bool = False) -> Graph:
    if method == "exterior":
        return graph_from_profile(exterior_profile(g, cfg))
    if method == "symmetric":
        return graph_from_profile(symmetric_profile(g, cfg, pad_check=pad_check))
    if method == "combinatorial":
        return canonical_combinatorial_shift(g).result
    if method == "chordal-algo":
        if not is_chordal(g):
            raise UsageError("chordal-algo needs a chordal graph")
        return chordal_shift_algorithm(g).result
    raise UsageError(f"unknown method {method!r}")


def _edges_str(g: Graph) -> str:
    return " ".join(f"{i}-{j}" for i, j in g.edges) or "(none)"


def run_compare(g: Graph, methods: Sequence[str], cfg: GenericConfig) -> dict:
    """Shift ``g`` by each method and compare every pair of results."""
    results, graphs = {}, {}
    for m in methods:
        h = compute_shift(g, m, cfg)
        graphs[m] = h
        results[m] = {"edges": [list(e) for e in h.edges], "profile": m_profile(h).to_json()}
    verdicts = {}
    for a_idx, a in enumerate(methods):
        for b in methods[a_idx + 1:]:
            verdicts[f"{a}:{b}"] = "EQUAL" if graphs[a] == graphs[b] else "DIFFER"
    return {"graph": g.to_json(), "results": results, "verdicts": verdicts, "_graphs": graphs}


def _emit_rows(rows: list[dict], fields: list[str], fmt: str, out) -> None:
    if fmt == "json":
        json.dump(rows, out, indent=2)
        out.write("\n")
    elif fmt in ("tsv", "csv"):
        w = csv.DictWriter(out, fieldnames=fields, delimiter="\t" if fmt == "tsv" else ",",
                           extrasaction="ignore", lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    else:
        widths = {f: max(len(f), *(len(str(r[f])) for r in rows)) if rows else len(f) for f in fields}
        out.write("  ".join(f.ljust(widths[f]) for f in fields) + "\n")
        for r in rows:
            out.write("  ".join(str(r[f]).ljust(widths[f]) for f in fields) + "\n")


# -- commands -----------------------------------------------------------------

def cmd_check(args) -> int:
    g = parse_graph_file(args.graph)
    rows = []
    if args.shifted or not (args.chordal or args.connectivity or args.bipartite):
        rows.append({"property": "shifted", "value": is_shifted(g)})
    if args.chordal:
        rows.append({"property": "chordal", "value": is_chordal(g)})
    if args.bipartite:
        rows.append({"property": "bipartite", "value": is_bipartite(g)})
    if args.connectivity:
        try:
            val = is_k_connected(g, args.connectivity)
        except GraphError as exc:
            raise UsageError(str(exc)) from None
        rows.append({"property": f"{args.connectivity}-connected", "value": val})
    _emit_rows(rows, ["property", "value"], args.format, sys.stdout)
    return 0


def cmd_shift(args) -> int:
    g = parse_graph_file(args.graph)
    cfg = _config(args)
    if args.method in ("combinatorial", "chordal-algo"):
        if args.method == "chordal-algo" and not is_chordal(g):
            raise UsageError("chordal-algo needs a chordal graph")
        trace = (canonical_combinatorial_shift(g) if args.method == "combinatorial"
                 else chordal_shift_algorithm(g))
        h = trace.result
        payload = trace.to_json()
    else:
        h = compute_shift(g, args.method, cfg, pad_check=args.pad_check)
        payload = h.to_json()
    if args.format == "json":
        print(json.dumps(payload))
    elif args.format == "dot":
        print(to_dot(h, args.method.replace("-", "_")))
    else:
        print(f"method   {args.method}")
        print(f"edges    {_edges_str(h)}")
        print(f"profile  {' '.join(map(str, m_profile(h).cum))}")
    return 0


def cmd_profile(args) -> int:
    g = parse_graph_file(args.graph)
    cfg = _config(args)
    if args.method == "exterior":
        prof = exterior_profile(g, cfg)
        raw = exterior_ranks(g, sample_generic_matrix(g.n, cfg, 0))
    else:
        prof = symmetric_profile(g, cfg, pad_check=args.pad_check)
        raw = symmetric_ranks(g, sample_generic_matrix(g.n, cfg, 0))
    if args.format == "json":
        print(json.dumps({"profile": prof.to_json(), "ranks": raw.to_json(), "first_k": raw.first_k}))
    else:
        rows = [{"k": k, "m<=k": v, "m_k": d} for k, (v, d) in
                enumerate(zip(prof.cum, prof.increments()), start=1)]
        _emit_rows(rows, ["k", "m<=k", "m_k"], args.format, sys.stdout)
    if args.plot:
        from .plotting import plot_profiles

        plot_profiles({args.method: prof}, args.plot)
    return 0


def cmd_compare(args) -> int:
    g = parse_graph_file(args.graph)
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    bad = [m for m in methods if m not in METHODS]
    if bad or len(methods) < 2:
        raise UsageError(f"--methods needs at least two of {', '.join(METHODS)}")
    report = run_compare(g, methods, _config(args))
    graphs = report.pop("_graphs")
    if args.format == "json":
        print(json.dumps(report))
    elif args.format == "dot":
        print("\n".join(to_dot(h, m.replace("-", "_")) for m, h in graphs.items()))
    else:
        rows = [{"method": m, "profile": " ".join(map(str, r["profile"])),
                 "edges": _edges_str(graphs[m])} for m, r in report["results"].items()]
        _emit_rows(rows, ["method", "profile", "edges"], args.format, sys.stdout)
        vrows = [{"pair": k, "verdict": v} for k, v in report["verdicts"].items()]
        if args.format == "table":
            print()
        _emit_rows(vrows, ["pair", "verdict"], args.format, sys.stdout)
    if args.plot:
        from .plotting import plot_adjacency, plot_profiles

        base = Path(args.plot)
        plot_profiles({m: m_profile(h) for m, h in graphs.items()}, base)
        plot_adjacency(graphs, base.with_name(base.stem + "_adjacency" + base.suffix))
    # on chordal input the algebraic shifts and the algorithm must coincide
    if is_chordal(g):
        differ = [k for k, v in report["verdicts"].items() if v == "DIFFER" and "combinatorial" not in k]
        if differ:
            log.error("chordal graph with differing shifts: %s", ", ".join(differ))
            return 1
    return 0


def cmd_oracle(args) -> int:
    a, b = max(args.a, args.b), min(args.a, args.b)
    if b < 1:
        raise UsageError("a and b must be positive")
    prof = kab_exterior_profile(a, b) if args.method == "exterior" else kab_symmetric_profile(a, b)
    if args.format == "json":
        print(json.dumps(prof.to_json()))
    elif args.format == "dot":
        print(to_dot(graph_from_profile(prof), f"K{a}_{b}_{args.method}"))
    else:
        print(f"K_{{{a},{b}}} {args.method}  profile {' '.join(map(str, prof.cum))}")
        print(f"edges  {_edges_str(graph_from_profile(prof))}")
    return 0


def cmd_betti(args) -> int:
    g = parse_graph_file(args.graph)
    top = g.n - 2 if args.max_i is None else min(args.max_i, g.n - 2)
    rows = []
    for i in range(0, top + 1):
        if args.oracle == "formula":
            if not is_shifted(g):
                raise UsageError("the closed formula needs a shifted graph")
            val = betti_shifted_formula(g, i)
        else:
            try:
                val = betti_hochster(g, i)
            except GraphError as exc:
                raise UsageError(str(exc)) from None
        rows.append({"i": i, "beta_i,i+2": val})
    _emit_rows(rows, ["i", "beta_i,i+2"], args.format, sys.stdout)
    return 0


def _corpus_spec(args) -> CorpusSpec:
    return CorpusSpec(model=args.model, n=args.n, p=args.p, count=args.count, seed=args.corpus_seed,
                      a=args.a, b=args.b, connected=args.connected)


def cmd_gen(args) -> int:
    try:
        graphs = gen_corpus(_corpus_spec(args))
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    out = open(args.out, "w") if args.out else sys.stdout
    try:
        for g in graphs:
            out.write(json.dumps(g.to_json()) + "\n")
    finally:
        if args.out:
            out.close()
    return 0


def cmd_enumerate(args) -> int:
    g = parse_graph_file(args.graph)
    try:
        found = sorted(enumerate_combinatorial_shifted_graphs(g, method=args.method),
                       key=lambda h: m_profile(h).cum, reverse=True)
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        print(json.dumps({"count": len(found), "graphs": [h.to_json() for h in found]}))
    elif args.format == "dot":
        print("\n".join(to_dot(h, f"D{k}") for k, h in enumerate(found)))
    else:
        rows = [{"#": k, "profile": " ".join(map(str, m_profile(h).cum)), "edges": _edges_str(h)}
                for k, h in enumerate(found)]
        _emit_rows(rows, ["#", "profile", "edges"], args.format, sys.stdout)
        if args.format == "table":
            print(f"\n{len(found)} combinatorial shifted graph(s); unique: {len(found) == 1}")
    return 0


def cmd_verify(args) -> int:
    if args.input:
        graphs = read_graph_list(args.input)
    else:
        try:
            graphs = gen_corpus(_corpus_spec(args))
        except GraphError as exc:
            raise UsageError(str(exc)) from None
    cfg = _config(args)
    rows = run_checks(graphs, cfg, seed=args.corpus_seed)
    for r in rows:
        r["status"] = "n/a" if not r["applicable"] else ("PASS" if not r["failed"] else "FAIL")
        r["failures"] = " ".join(map(str, r["failures"][:10]))
    fields = ["check", "applicable", "passed", "failed", "status", "failures"]
    _emit_rows(rows, fields, args.format if args.format != "dot" else "table", sys.stdout)
    if args.figures:
        from .plotting import plot_verify_summary

        fig_dir = Path(args.figures)
        plot_verify_summary(rows, fig_dir / "verify_summary.png")
        if args.format in ("tsv", "csv", "table"):
            buf = io.StringIO()
            _emit_rows(rows, fields, "tsv", buf)
            (fig_dir / "verify_summary.tsv").write_text(buf.getvalue())
    return 1 if any(r["failed"] for r in rows) else 0


# -- parser -------------------------------------------------------------------

def _add_generic(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=None, help="generic-matrix seed (default: $SHIFTLAB_SEED)")
    p.add_argument("--bound", type=int, default=1 << 16, help="entry magnitude bound")
    p.add_argument("--repeats", type=int, default=3, help="matrices sampled per rank")
    p.add_argument("--pad", type=int, default=0, help="isolated vertices added for the symmetric shift")


def _add_format(p: argparse.ArgumentParser, choices=("table", "json", "dot", "tsv", "csv")) -> None:
    p.add_argument("--format", choices=choices, default="table")


def _add_corpus(p: argparse.ArgumentParser, required: bool) -> None:
    p.add_argument("--model", choices=MODELS, required=required, default=None if required else "chordal")
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--corpus-seed", type=int, default=0)
    p.add_argument("--a", type=int, default=3)
    p.add_argument("--b", type=int, default=3)
    p.add_argument("--connected", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="shiftlab", description="Algebraic and combinatorial shifting of graphs.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="structural predicates")
    p.add_argument("graph")
    p.add_argument("--shifted", action="store_true")
    p.add_argument("--chordal", action="store_true")
    p.add_argument("--bipartite", action="store_true")
    p.add_argument("--connectivity", type=int, metavar="K")
    _add_format(p, ("table", "json", "tsv", "csv"))
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("shift", help="compute a shifted graph")
    p.add_argument("graph")
    p.add_argument("--method", choices=METHODS, default="exterior")
    p.add_argument("--pad-check", action="store_true", help="recompute symmetric shift with extra padding")
    _add_generic(p)
    _add_format(p, ("table", "json", "dot"))
    p.set_defaults(func=cmd_shift)

    p = sub.add_parser("profile", help="m-profile from generic ranks")
    p.add_argument("graph")
    p.add_argument("--method", choices=("exterior", "symmetric"), default="exterior")
    p.add_argument("--pad-check", action="store_true")
    p.add_argument("--plot", metavar="PNG")
    _add_generic(p)
    _add_format(p, ("table", "json", "tsv", "csv"))
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("compare", help="compare shifting methods on one graph")
    p.add_argument("graph")
    p.add_argument("--methods", default="exterior,symmetric")
    p.add_argument("--plot", metavar="PNG", help="profile figure; adjacency figure goes next to it")
    _add_generic(p)
    _add_format(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("oracle", help="closed-form profiles")
    osub = p.add_subparsers(dest="oracle", required=True)
    q = osub.add_parser("kab", help="complete bipartite K_{a,b}")
    q.add_argument("a", type=int)
    q.add_argument("b", type=int)
    q.add_argument("--method", choices=("exterior", "symmetric"), default="exterior")
    _add_format(q, ("table", "json", "dot"))
    q.set_defaults(func=cmd_oracle)

    p = sub.add_parser("betti", help="linear-strand Betti numbers of the non-edge ideal")
    p.add_argument("graph")
    p.add_argument("--max-i", type=int, default=None)
    p.add_argument("--oracle", choices=("hochster", "formula"), default="hochster")
    _add_format(p, ("table", "json", "tsv", "csv"))
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("gen", help="generate a seeded corpus as JSON Lines")
    _add_corpus(p, required=True)
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("enumerate", help="all combinatorial shifted graphs (n <= 9)")
    p.add_argument("graph")
    p.add_argument("--method", choices=("reduced", "plain"), default="reduced")
    _add_format(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run the property suite over a corpus")
    p.add_argument("--input", metavar="FILE", help="JSON Lines corpus instead of generating one")
    _add_corpus(p, required=False)
    p.add_argument("--figures", metavar="DIR", help="write summary figure and TSV here")
    _add_generic(p)
    _add_format(p, ("table", "json", "tsv", "csv"))
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"shiftlab: error: {exc}", file=sys.stderr)
        return 2
    except (GraphError, ValueError) as exc:
        print(f"shiftlab: error: {exc}", file=sys.stderr)
        return 2
    except GenericityError as exc:
        print(f"shiftlab: genericity failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
