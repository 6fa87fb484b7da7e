"""Command-line interface.

Subcommands
-----------
analyze      full pipeline on an edge-list file: heights, coloring,
             interiors, minimal TD-sets, ideal with decomposition,
             unmixedness certificate, shelling and type when applicable
ideal        open-neighborhood ideal (optionally S-restricted) + decomposition
shelling     shelling order of the stable complex of an unmixed tree
type         Cohen-Macaulay type report of an unmixed tree
deconstruct  whisker trace of an unmixed balanced height-3 tree
generate     seeded corpus of whisker-generated trees with replay traces
verify       oracle cross-check suite; nonzero exit on any disagreement

Edge-list files hold one edge per line ("labelA labelB"), '#' comments and
blank lines ignored; "-" reads from stdin. All reports are integer-exact;
--json emits the versioned wtd-report/1 schema with every set sorted.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from .algebra import artinian_reduction, cm_type, parametric_decomposition
from .complexes import stable_shelling
from .construct import deconstruct, generate
from .domination import minimal_td_sets
from .errors import EnumerationCapExceeded, TotaldomError
from .graphs import (
    Forest,
    Graph,
    Tree,
    canonical_form,
    classify_vertices,
    heights,
    parse_graph,
    render_edge_list,
    two_coloring,
)
from .ideals import decompose_squarefree, open_neighborhood_ideal
from .unmixed import interior_graphs, is_balanced, is_unmixed_fast, mixedness_witness
from .verify import run_suite

SCHEMA = "wtd-report/1"


def _read_graph(path: str) -> Graph:
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    return parse_graph(text)


def _digest(g: Graph) -> str:
    return hashlib.sha256(render_edge_list(g).encode()).hexdigest()[:16]


def _emit(report: dict, as_json: bool, human) -> None:
    if as_json:
        print(json.dumps(report, indent=2))
    else:
        human(report)


def _forest_view(g: Graph):
    try:
        f = Forest(g)
    except TotaldomError:
        return None, None
    try:
        return f, Tree(g)
    except TotaldomError:
        return f, None


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------

def _analyze_report(g: Graph, cap: int | None, with_witness: bool, timings: bool) -> dict:
    t0 = time.monotonic()
    report: dict = {
        "schema": SCHEMA,
        "input": {"digest": _digest(g), "vertices": g.n, "edges": g.num_edges()},
        "graph": {"vertices": list(g.labels), "edges": [list(e) for e in g.edges()]},
    }
    forest, tree = _forest_view(g)
    report["forest"] = forest is not None
    report["tree"] = tree is not None
    clocks = {}

    if forest is not None:
        hmap = heights(forest)
        cls = classify_vertices(forest)
        col = two_coloring(forest)
        report["heights"] = {v: h for v, h in hmap.items()}
        report["height"] = hmap.graph_height()
        report["balanced"] = is_balanced(forest, col)
        report["coloring"] = {"blue": list(col.blue), "red": list(col.red)}
        report["classification"] = {
            "leaves": list(cls.leaves),
            "supports": list(cls.supports),
            "supported": list(cls.supported),
            "isolated": list(cls.isolated),
        }

    t1 = time.monotonic()
    cap_hit = False
    try:
        family = minimal_td_sets(g, cap=cap)
    except EnumerationCapExceeded:
        cap_hit = True
        family = None
    if family is None:
        report["minimal_td_sets"] = {"cap_exceeded": True}
        report["unmixed"] = {"applicable": False, "reason": "enumeration cap exceeded"}
    else:
        report["minimal_td_sets"] = {
            "cap_exceeded": False,
            "count": len(family),
            "sizes": list(family.sizes()),
            "sets": [list(s) for s in family.sets],
        }
    clocks["td_sets"] = time.monotonic() - t1

    t1 = time.monotonic()
    ideal = open_neighborhood_ideal(g)
    entry = {"generators": [m.render() for m in ideal.gens]}
    if ideal.is_unit:
        entry["decomposition"] = {"unit": True, "components": []}
    else:
        try:
            dec = decompose_squarefree(ideal, cap=cap)
            entry["decomposition"] = {
                "unit": False,
                "components": [list(s) for s in dec.supports],
            }
        except EnumerationCapExceeded:
            entry["decomposition"] = {"unit": False, "cap_exceeded": True}
    report["ideal"] = entry
    clocks["ideal"] = time.monotonic() - t1

    if tree is not None:
        interiors = interior_graphs(tree)
        report["interiors"] = {
            "blue": {
                "vertices": list(interiors.blue.labels),
                "components": [list(c) for c in interiors.blue.components()],
                "deleted": list(interiors.deleted_for_blue),
            },
            "red": {
                "vertices": list(interiors.red.labels),
                "components": [list(c) for c in interiors.red.components()],
                "deleted": list(interiors.deleted_for_red),
            },
        }
        cert = is_unmixed_fast(tree)
        cert_dict = cert.to_json_dict()
        if not cert.unmixed and with_witness and not cap_hit:
            witness = mixedness_witness(tree, cap=cap)
            if witness is not None:
                cert_dict["witness"] = [list(w) for w in witness]
        if family is not None:
            brute = family.is_unmixed()
            if brute != cert.unmixed:
                raise TotaldomError(
                    "characterization disagrees with enumeration; this is a bug"
                )
            cert_dict["bruteforce_agrees"] = True
        report["unmixed"] = cert_dict

        if cert.unmixed:
            t1 = time.monotonic()
            try:
                order = stable_shelling(tree, cap=cap)
                report["shelling"] = {
                    "applicable": True,
                    "facets": [list(f) for f in order.facets],
                    "verified": order.check.ok,
                }
            except EnumerationCapExceeded:
                report["shelling"] = {"applicable": False, "reason": "enumeration cap exceeded"}
            clocks["shelling"] = time.monotonic() - t1
            t1 = time.monotonic()
            try:
                report["type"] = {"applicable": True} | cm_type(tree, cap=cap).to_json_dict()
            except EnumerationCapExceeded:
                report["type"] = {"applicable": False, "reason": "enumeration cap exceeded"}
            clocks["type"] = time.monotonic() - t1
        else:
            report["shelling"] = {"applicable": False, "reason": "tree is mixed"}
            report["type"] = {"applicable": False, "reason": "tree is mixed"}
    else:
        report["unmixed"] = report.get(
            "unmixed",
            {"applicable": False, "reason": "input is not a tree"},
        )
        if family is not None:
            report["unmixed"] = {"bruteforce": family.is_unmixed()}
        report["shelling"] = {"applicable": False, "reason": "input is not a tree"}
        report["type"] = {"applicable": False, "reason": "input is not a tree"}

    clocks["total"] = time.monotonic() - t0
    if timings:
        report["timings_ms"] = {k: int(v * 1000) for k, v in clocks.items()}
    return report


def _print_analyze(report: dict) -> None:
    print(f"input digest {report['input']['digest']}: "
          f"{report['input']['vertices']} vertices, {report['input']['edges']} edges")
    if report.get("heights"):
        print(f"height {report['height']}, balanced: {report['balanced']}")
        print(f"supports: {' '.join(report['classification']['supports']) or '-'}")
    tds = report["minimal_td_sets"]
    if tds.get("cap_exceeded"):
        print("minimal TD-sets: enumeration cap exceeded")
    else:
        print(f"minimal TD-sets ({tds['count']}, sizes {tds['sizes']}):")
        for s in tds["sets"]:
            print("  {" + ", ".join(s) + "}")
    print(f"N(G) = <{', '.join(report['ideal']['generators'])}>")
    dec = report["ideal"]["decomposition"]
    if dec["unit"]:
        print("decomposition: unit ideal (isolated vertex)")
    elif dec.get("cap_exceeded"):
        print("decomposition: enumeration cap exceeded")
    else:
        print("decomposition: " + " n ".join("<" + ", ".join(c) + ">" for c in dec["components"]))
    unmixed = report.get("unmixed", {})
    if "unmixed" in unmixed:
        verdict = "unmixed" if unmixed["unmixed"] else "mixed"
        print(f"verdict: {verdict}")
        if unmixed.get("witness"):
            a, b = unmixed["witness"]
            print("  witness sizes: "
                  f"{{{', '.join(a)}}} ({len(a)}) vs {{{', '.join(b)}}} ({len(b)})")
    if report["shelling"].get("applicable"):
        print(f"shelling: {len(report['shelling']['facets'])} facets, "
              f"verified: {report['shelling']['verified']}")
    if report["type"].get("applicable"):
        ty = report["type"]
        print(f"type: {ty['type']} = {ty['m_blue']} * {ty['m_red']} "
              f"(depth {ty['depth']}, dim {ty['dim']})")


def cmd_analyze(args) -> int:
    g = _read_graph(args.path)
    report = _analyze_report(g, args.max_sets, not args.no_witness, args.timings)
    _emit(report, args.json, _print_analyze)
    return 0


# ---------------------------------------------------------------------------
# ideal / shelling / type / deconstruct
# ---------------------------------------------------------------------------

def cmd_ideal(args) -> int:
    g = _read_graph(args.path)
    target = args.subset.split(",") if args.subset else None
    ideal = open_neighborhood_ideal(g, target)
    report: dict = {
        "schema": SCHEMA,
        "input": {"digest": _digest(g)},
        "target": sorted(target) if target else list(g.labels),
        "generators": [m.render() for m in ideal.gens],
    }
    if ideal.is_unit:
        report["decomposition"] = {"unit": True, "components": []}
    else:
        dec = decompose_squarefree(ideal, cap=args.max_sets)
        report["decomposition"] = {
            "unit": False,
            "components": [list(s) for s in dec.supports],
        }

    def human(rep):
        print(f"N_S(G) = <{', '.join(rep['generators'])}>")
        if rep["decomposition"]["unit"]:
            print("decomposition: unit ideal")
        else:
            print(" n ".join("<" + ", ".join(c) + ">" for c in rep["decomposition"]["components"]))

    _emit(report, args.json, human)
    return 0


def cmd_shelling(args) -> int:
    g = _read_graph(args.path)
    order = stable_shelling(Tree(g), cap=args.max_sets)
    report = {"schema": SCHEMA, "input": {"digest": _digest(g)}} | order.to_json_dict()

    def human(rep):
        print(f"shelling of the stable complex ({len(rep['facets'])} facets), "
              f"verified: {rep['check']['ok']}")
        for f in rep["facets"]:
            print("  {" + ", ".join(f) + "}")

    _emit(report, args.json, human)
    return 0


def cmd_type(args) -> int:
    g = _read_graph(args.path)
    tree = Tree(g)
    report = {"schema": SCHEMA, "input": {"digest": _digest(g)}} | cm_type(
        tree, cap=args.max_sets
    ).to_json_dict()
    if args.reduction:
        interiors = interior_graphs(tree)
        sides = {}
        for name, forest in (("blue", interiors.blue), ("red", interiors.red)):
            comps = []
            for comp in forest.component_trees():
                red = artinian_reduction(comp)
                pdec = parametric_decomposition(red, comp)
                comps.append({
                    "vertices": list(comp.graph.labels),
                    "ideal": red.ideal.render(),
                    "pure_powers": red.pure_powers.render(),
                    "parametric_components": [list(s) for s in pdec.supports],
                })
            sides[name] = comps
        report["reductions"] = sides

    def human(rep):
        print(f"type {rep['type']} = m_blue {rep['m_blue']} * m_red {rep['m_red']}")
        print(f"depth {rep['depth']}, dim {rep['dim']}")
        print(f"socle dimensions: blue {rep['socle_blue']}, red {rep['socle_red']}")

    _emit(report, args.json, human)
    return 0


def cmd_deconstruct(args) -> int:
    g = _read_graph(args.path)
    trace = deconstruct(Tree(g))
    if args.json:
        print(trace.to_json(), end="")
    else:
        print(f"{len(trace)} whisker steps from the base path:")
        for s in trace.steps:
            print(f"  attach {s.attach} ({s.kind})")
    return 0


# ---------------------------------------------------------------------------
# generate / verify
# ---------------------------------------------------------------------------

def cmd_generate(args) -> int:
    import pathlib

    outdir = pathlib.Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    manifest = []
    for i in range(args.count):
        t, trace = generate(args.seed + i, args.steps)
        tree_path = outdir / f"tree_{i:03d}.edges"
        trace_path = outdir / f"trace_{i:03d}.json"
        tree_path.write_text(render_edge_list(t.graph), encoding="utf-8")
        trace_path.write_text(trace.to_json(), encoding="utf-8")
        manifest.append({
            "seed": args.seed + i,
            "steps": len(trace),
            "vertices": t.graph.n,
            "tree": tree_path.name,
            "trace": trace_path.name,
            "canonical": canonical_form(t),
        })
    payload = {"schema": SCHEMA, "trees": manifest}
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for row in manifest:
            print(f"{row['tree']}: {row['vertices']} vertices, {row['steps']} steps")
    return 0


def cmd_verify(args) -> int:
    results = run_suite(max_n=args.max_n, seed=args.seed, samples=args.samples)
    for r in results:
        print(r.line())
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def _add_common(p, max_sets=True):
    p.add_argument("path", help="edge-list file, or - for stdin")
    p.add_argument("--json", action="store_true", help="emit the JSON report")
    if max_sets:
        p.add_argument("--max-sets", type=int, default=None,
                       help="cap on enumerated set families (error when exceeded)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="totaldom", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for an edge-list file")
    _add_common(p)
    p.add_argument("--no-witness", action="store_true",
                   help="skip the two-size witness enumeration on mixed trees")
    p.add_argument("--timings", action="store_true",
                   help="include timings_ms in the report (breaks bit-reproducibility)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("ideal", help="open-neighborhood ideal and decomposition")
    _add_common(p)
    p.add_argument("--subset", default=None,
                   help="comma-separated target S (default: all vertices)")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("shelling", help="shelling order of the stable complex")
    _add_common(p)
    p.set_defaults(func=cmd_shelling)

    p = sub.add_parser("type", help="Cohen-Macaulay type report")
    _add_common(p)
    p.add_argument("--reduction", action="store_true",
                   help="include per-component reduced ideals and parametric decompositions")
    p.set_defaults(func=cmd_type)

    p = sub.add_parser("deconstruct", help="whisker trace of an unmixed balanced height-3 tree")
    _add_common(p, max_sets=False)
    p.set_defaults(func=cmd_deconstruct)

    p = sub.add_parser("generate", help="write seeded generated trees + traces")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--steps", type=int, default=5)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--out", default="generated")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="run the oracle cross-check suite")
    p.add_argument("--max-n", type=int, default=8,
                   help="exhaustive tree size bound (default 8)")
    p.add_argument("--seed", type=int, default=12345)
    p.add_argument("--samples", type=int, default=150,
                   help="random large-tree samples for the characterization check")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TotaldomError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
