"""
Command-line entry point: `coverideal-lab <command> [options]`.

Data commands read ideals and graphs through the parsers and print JSON (or
plain text with `--format tsv`). Suite commands print an experiment report
and exit 0 only when every row passed.
"""
import argparse
import json
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence

from coverideal_lab.config import DEFAULT_CAPS, Caps
from coverideal_lab.errors import CoverIdealError
from coverideal_lab.models.monomial_model import MonomialIdeal, VariableOrder
from coverideal_lab.models.report_model import ExperimentReport
from coverideal_lab.parsers.graph_parser import GraphParser
from coverideal_lab.parsers.ideal_parser import IdealParser
from coverideal_lab.services import experiment_service as es
from coverideal_lab.services import graph_service as gs
from coverideal_lab.services import monomial_service as ms
from coverideal_lab.services import resolution_service as rs
from coverideal_lab.services import structure_service as ss
from coverideal_lab.services import symbolic_service as sym

TSV_COLUMNS = ["experiment", "case", "claim", "passed", "seconds", "values", "error"]


# ===== Output =====


def emit(document: Any, args: argparse.Namespace, text: Optional[str] = None) -> None:
    if args.format == "tsv" and text is not None:
        print(text)
    else:
        print(json.dumps(document, indent=2, sort_keys=True))


def emit_ideal(ideal: MonomialIdeal, args: argparse.Namespace) -> int:
    emit(ideal.to_json_dict(), args, ideal.to_text())
    return 0


def emit_reports(reports: List[ExperimentReport], args: argparse.Namespace) -> int:
    if args.format == "tsv":
        print("\t".join(TSV_COLUMNS))
        for report in reports:
            for row in report.rows:
                print("\t".join([
                    report.experiment,
                    row.case,
                    row.claim,
                    "pass" if row.passed else "FAIL",
                    f"{row.seconds:.3f}",
                    json.dumps(row.values, sort_keys=True, default=str),
                    row.error or "",
                ]))
    else:
        document = [r.model_dump(mode="json") for r in reports]
        print(json.dumps(document if len(document) > 1 else document[0], indent=2))
    for report in reports:
        for row in report.failures:
            print(f"FAIL {report.experiment} {row.case}: {row.error or row.values}", file=sys.stderr)
    return 0 if all(r.passed for r in reports) else 1


# ===== Inputs =====


def load_ideal(args: argparse.Namespace) -> MonomialIdeal:
    """--ideal FILE, or --graph FILE with --s and --symbolic for powers of J(G)."""
    if getattr(args, "ideal", None):
        return IdealParser(args.ideal).load()
    if getattr(args, "graph", None):
        graph = GraphParser(args.graph).load()
        s = getattr(args, "s", None) or 1
        if getattr(args, "symbolic", False):
            return sym.symbolic_power(graph, s)
        return ms.power(gs.cover_ideal(graph), s)
    raise ValueError("one of --ideal or --graph is required")


def add_input_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--ideal", help="Ideal file (.json or one monomial per line)")
    parser.add_argument("--graph", help="Graph file (.json or edge list); J(G) is used")
    parser.add_argument("--s", type=int, help="Power of J(G) when --graph is given")
    parser.add_argument("--symbolic", action="store_true", help="Use the symbolic power")


# ===== Data commands =====


def cmd_ideal(args, caps: Caps) -> int:
    ideal = IdealParser(args.file).load()
    if args.op == "show":
        return emit_ideal(ideal, args)
    if args.op == "dual":
        return emit_ideal(ms.alexander_dual(ideal), args)
    if args.op == "polarize":
        polarization = ms.polarize(ideal)
        emit(polarization.model_dump(mode="json"), args, polarization.ideal.to_text())
        return 0
    if args.op == "power":
        return emit_ideal(ms.power(ideal, args.s if args.s is not None else 1), args)
    if args.op == "truncate":
        return emit_ideal(ms.truncate(ideal, args.t if args.t is not None else 0), args)
    if not args.other:
        raise ValueError(f"{args.op} needs --other")
    other = IdealParser(args.other).load()
    if args.op == "intersect":
        return emit_ideal(ms.intersect(ideal, other), args)
    return emit_ideal(ms.add(ideal, other), args)


def cmd_graph(args, caps: Caps) -> int:
    graph = GraphParser(args.file).load()
    if args.op == "cover":
        return emit_ideal(gs.cover_ideal(graph), args)
    if args.op == "edge":
        return emit_ideal(gs.edge_ideal(graph), args)
    if args.op == "whisker":
        if args.partition:
            partition = GraphParser(args.file).load_partition(args.partition)
            whiskered = gs.clique_whisker(graph, partition)
        else:
            whiskered = gs.whisker(graph)
        emit(whiskered.to_json_dict(), args)
        return 0
    covers = gs.minimal_vertex_covers(graph)
    emit({
        "graph": graph.to_json_dict(),
        "minimal_vertex_covers": [sorted(c) for c in covers],
        "unmixed": gs.is_unmixed(graph),
        "bipartite": gs.is_bipartite(graph),
        "chordal": gs.is_chordal(graph),
        "cactus": gs.is_cactus(graph),
        "connected": gs.is_connected(graph),
        "girth": gs.girth(graph),
        "odd_cycle_neighborhood": sym.check_odd_cycle_neighborhood(graph, caps),
    }, args)
    return 0


def cmd_symbolic(args, caps: Caps) -> int:
    report = sym.symbolic_report(GraphParser(args.graph).load(), args.s, caps)
    emit(report.model_dump(mode="json"), args, report.via_intersection.to_text())
    return 0


def cmd_herzog(args, caps: Caps) -> int:
    return emit_ideal(sym.herzog_symbolic(GraphParser(args.graph).load(), args.s, caps), args)


def cmd_lideal(args, caps: Caps) -> int:
    return emit_ideal(sym.l_ideal(GraphParser(args.graph).load(), args.s, args.t), args)


def cmd_truncation_check(args, caps: Caps) -> int:
    if args.graph:
        equal = sym.truncation_equality_check(GraphParser(args.graph).load(), args.s)
        emit({"equal": equal}, args, str(equal))
        return 0 if equal else 1
    return emit_reports([es.truncation_check(args.n, args.smax, progress=args.progress)], args)


def cmd_reg(args, caps: Caps) -> int:
    ideal = load_ideal(args)
    if args.truncate is not None:
        reg = rs.truncation_regularity(ideal, args.truncate, caps)
        emit({"regularity": reg, "quotient_regularity": reg - 1, "truncate": args.truncate}, args, str(reg))
        return 0
    table = rs.betti_numbers(ideal, caps)
    reg = rs.regularity_of_table(table)
    emit({
        "regularity": reg,
        "quotient_regularity": reg - 1,
        "projective_dimension": 1 + table.max_i,
    }, args, str(reg))
    return 0


def cmd_betti(args, caps: Caps) -> int:
    ideal = load_ideal(args)
    if args.truncate is not None:
        table = rs.truncation_betti_numbers(ideal, args.truncate, caps)
    else:
        table = rs.betti_numbers(ideal, caps)
    emit(table.to_json_dict(), args, rs.render_betti_table(table))
    return 0


def cmd_wp(args, caps: Caps) -> int:
    if args.action == "scan":
        return emit_reports([es.conjecture_scan(args.max_n, caps, args.progress)], args)
    ideal = load_ideal(args)
    if args.action == "check":
        order = VariableOrder.parse(args.order) if args.order else VariableOrder.identity(ideal.ambient)
        result = ss.is_weakly_polymatroidal(ideal, order)
        emit({"holds": result.holds, **result.model_dump(mode="json")}, args, str(result.holds))
        return 0 if result.holds else 1
    found = ss.find_wp_order(ideal, caps)
    emit(found.model_dump(mode="json"), args, str(found.order) if found.order else "exhausted")
    return 0 if not found.exhausted else 1


def cmd_vdec(args, caps: Caps) -> int:
    if args.graph:
        complex = gs.independence_complex(GraphParser(args.graph).load())
    elif args.ideal:
        complex = gs.complex_from_dual(IdealParser(args.ideal).load())
    else:
        raise ValueError("one of --graph or --ideal is required")
    result = gs.is_vertex_decomposable(complex)
    emit({"complex": complex.model_dump(mode="json"), **result.model_dump(mode="json")}, args,
         str(result.decomposable))
    return 0 if result.decomposable else 1


# ===== Suite commands =====


def suite(run: Callable[[argparse.Namespace, Caps], ExperimentReport]) -> Callable[[argparse.Namespace, Caps], int]:
    def handler(args, caps: Caps) -> int:
        return emit_reports([run(args, caps)], args)

    return handler


SUITES: Dict[str, Callable[[argparse.Namespace, Caps], ExperimentReport]] = {
    "odd-cycle": lambda a, c: es.odd_cycle_regularity(a.n, a.smax, c, a.progress),
    "deg-formula": lambda a, c: es.deg_formula(a.max, a.progress),
    "herzog-suite": lambda a, c: es.herzog_suite(a.n, a.smax, a.progress),
    "truncation-suite": lambda a, c: es.truncation_suite(
        a.count, a.max_n, a.max_exp, a.max_gens, a.seed, c, a.progress
    ),
    "bipartite-suite": lambda a, c: es.bipartite_suite(s_max=a.smax, caps=c, progress=a.progress),
    "cm-corner": lambda a, c: es.cm_corner(a.max, c, a.progress),
    "class-equivalence": lambda a, c: es.class_equivalence(a.max_n, c, a.progress),
    "wp-vdec": lambda a, c: es.wp_vdec(a.max_n, a.random_count, a.random_max_n, a.seed, c, a.progress),
    "wp-lq": lambda a, c: es.wp_lq(a.max_n, a.random_count, a.random_max_n, a.seed, c, a.progress),
    "whisker-suite": lambda a, c: es.whisker_suite(s_max=a.smax, caps=c, progress=a.progress),
    "lideal-suite": lambda a, c: es.lideal_suite(a.progress),
    "cactus-exchange": lambda a, c: es.cactus_exchange(a.smax, a.progress),
    "girth-five": lambda a, c: es.girth_five_experiment(caps=c, progress=a.progress),
    "shedding-assembly": lambda a, c: es.shedding_assembly_experiment(
        es.pure_complex_corpus(a.max_n), a.progress
    ),
    "symbolic-wp": lambda a, c: es.symbolic_wp_experiment(a.n, a.smax, a.progress),
    "scan": lambda a, c: (
        es.complex_scan(a.max_n, c, a.progress)
        if a.complexes
        else es.conjecture_scan(a.max_n, c, a.progress)
    ),
}


def cmd_all(args, caps: Caps) -> int:
    return emit_reports(es.all_suites(caps, args.seed, args.progress), args)


# ===== Parser =====


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--format", choices=["json", "tsv"], default="json")
    shared.add_argument("--seed", type=int, default=0, help="Seed for random corpora")
    shared.add_argument("--cap-lattice", type=int, help="lcm-lattice element cap")
    shared.add_argument("--cap-ambient", type=int, help="Ambient cap for the WP order search")
    shared.add_argument("--jobs", type=int, help="Worker processes for Betti numbers")
    shared.add_argument("--quiet", action="store_true", help="No progress bars")

    parser = argparse.ArgumentParser(
        prog="coverideal-lab", description="Cover ideals, symbolic powers and their resolutions"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler, help_text: str, aliases: Sequence[str] = ()) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[shared], help=help_text, aliases=list(aliases))
        p.set_defaults(handler=handler)
        return p

    p = command("ideal", cmd_ideal, "Operations on an ideal file")
    p.add_argument("file")
    p.add_argument("--op", choices=["show", "dual", "polarize", "power", "truncate", "intersect", "add"],
                   default="show")
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--other", help="Second ideal for intersect and add")

    p = command("graph", cmd_graph, "Graph invariants, cover and edge ideals, whiskering")
    p.add_argument("file")
    p.add_argument("--op", choices=["info", "cover", "edge", "whisker"], default="info")
    p.add_argument("--partition", help="Clique partition JSON for --op whisker")

    p = command("symbolic", cmd_symbolic, "Symbolic power, with the closed form when it applies")
    p.add_argument("--graph", required=True)
    p.add_argument("--s", type=int, required=True)

    p = command("herzog", cmd_herzog, "Closed form of the symbolic power")
    p.add_argument("--graph", required=True)
    p.add_argument("--s", type=int, required=True)

    p = command("lideal", cmd_lideal, "J^s + (xy)J^(s-2) + ... for the whisker of a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)

    p = command("truncation-check", cmd_truncation_check, "J^(s) and J^s agree after truncation")
    p.add_argument("--graph", help="Odd cycle file; without it the suite runs")
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--n", type=int, nargs="+", default=[3, 5])
    p.add_argument("--smax", type=int, default=3)

    for name, handler, help_text in [
        ("reg", cmd_reg, "Regularity and projective dimension"),
        ("betti", cmd_betti, "Multigraded Betti numbers"),
    ]:
        p = command(name, handler, help_text)
        add_input_flags(p)
        p.add_argument("--truncate", type=int, help="Work with I ∩ m^t")

    p = command("wp", cmd_wp, "Weak polymatroidality")
    p.add_argument("action", choices=["check", "search", "scan"])
    add_input_flags(p)
    p.add_argument("--order", help="Variable order, e.g. 3,1,2 for x3 > x1 > x2")
    p.add_argument("--max-n", type=int, default=6, help="Largest graph for scan")

    p = command("vdec", cmd_vdec, "Vertex decomposability with a shedding tree")
    p.add_argument("--graph", help="Use the independence complex of this graph")
    p.add_argument("--ideal", help="Use the complex whose dual is this squarefree ideal")

    p = command("odd-cycle", suite(SUITES["odd-cycle"]), "reg(J^(s)) = reg(J^s) on odd cycles")
    p.add_argument("--n", type=int, nargs="+", default=[3, 5, 7])
    p.add_argument("--smax", type=int, help="Largest power for every cycle (default: 3 for C5, 2 otherwise)")

    p = command("deg-formula", suite(SUITES["deg-formula"]), "Generator degrees of J(C_n)")
    p.add_argument("--max", type=int, default=15)

    p = command("herzog-suite", suite(SUITES["herzog-suite"]), "Closed form against the intersection")
    p.add_argument("--n", type=int, nargs="+", default=[3, 5, 7, 9])
    p.add_argument("--smax", type=int, default=3)

    p = command("truncation-suite", suite(SUITES["truncation-suite"]), "Truncation keeps regularity")
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--max-exp", type=int, default=3)
    p.add_argument("--max-gens", type=int, default=6)

    p = command("bipartite-suite", suite(SUITES["bipartite-suite"]), "Symbolic and ordinary powers agree")
    p.add_argument("--smax", type=int, default=3)

    p = command("cm-corner", suite(SUITES["cm-corner"]), "Cohen-Macaulay odd cycles and the star")
    p.add_argument("--max", type=int, default=9)

    p = command("class-equivalence", suite(SUITES["class-equivalence"]),
                "CM, VD and WP agree on unmixed cactus, bipartite and chordal graphs")
    p.add_argument("--max-n", type=int, default=6)

    for name, help_text in [("wp-vdec", "WP implies vertex decomposable"),
                            ("wp-lq", "WP implies linear quotients")]:
        p = command(name, suite(SUITES[name]), help_text)
        p.add_argument("--max-n", type=int, default=6)
        p.add_argument("--random-count", type=int, default=500)
        p.add_argument("--random-max-n", type=int, default=7)

    p = command("whisker-suite", suite(SUITES["whisker-suite"]), "Clique-whiskering powers")
    p.add_argument("--smax", type=int, default=2)

    command("lideal-suite", suite(SUITES["lideal-suite"]), "L ideals of whiskered cycles")

    p = command(
        "cactus-exchange", suite(SUITES["cactus-exchange"]), "The exchange inside J(C5)^2", aliases=["example-5-1"]
    )
    p.add_argument("--smax", type=int, default=3)

    command("girth-five", suite(SUITES["girth-five"]), "Cohen-Macaulay girth-five graphs")

    p = command("shedding-assembly", suite(SUITES["shedding-assembly"]), "Duals assembled at a shedding vertex")
    p.add_argument("--max-n", type=int, default=4)

    p = command("symbolic-wp", suite(SUITES["symbolic-wp"]), "Symbolic powers of whiskered cycles")
    p.add_argument("--n", type=int, nargs="+", default=[3, 4, 5])
    p.add_argument("--smax", type=int, default=2)

    p = command("scan", suite(SUITES["scan"]), "Search unmixed VD graphs or pure VD complexes for WP orders")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--complexes", action="store_true", help="Scan pure complexes instead of graphs")

    command("all", cmd_all, "Every suite with default parameters")
    return parser


def caps_from_args(args: argparse.Namespace) -> Caps:
    update = {
        "lattice": args.cap_lattice,
        "ambient": args.cap_ambient,
        "jobs": args.jobs,
    }
    return DEFAULT_CAPS.model_copy(update={k: v for k, v in update.items() if v is not None})


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    args.progress = not args.quiet and sys.stderr.isatty()
    try:
        return args.handler(args, caps_from_args(args))
    except (CoverIdealError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
