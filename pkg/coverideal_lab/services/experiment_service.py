"""
Experiment suites.

Each suite builds a list of cases, runs them in input order and returns an
`ExperimentReport`. A case is a closure returning (passed, values); a
`CoverIdealError` raised inside it fails that row only.
"""
import logging
import time
from itertools import combinations
from typing import Any, Callable, Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np
from tqdm import tqdm

from coverideal_lab.config import Caps, get_caps
from coverideal_lab.errors import CoverIdealError
from coverideal_lab.models.complex_model import SimplicialComplex
from coverideal_lab.models.graph_model import CliquePartition, Graph
from coverideal_lab.models.monomial_model import MonomialIdeal, VariableOrder
from coverideal_lab.models.report_model import ExperimentReport, ExperimentRow
from coverideal_lab.networkx_adapter.networkx import connected_graphs
from coverideal_lab.services import graph_service as gs
from coverideal_lab.services import monomial_service as ms
from coverideal_lab.services import resolution_service as rs
from coverideal_lab.services import structure_service as ss
from coverideal_lab.services import symbolic_service as sym

logger = logging.getLogger(__name__)


class Case(NamedTuple):
    name: str
    claim: str
    inputs: Dict[str, Any]
    check: Callable[[], Tuple[bool, Dict[str, Any]]]


def run_case(case: Case) -> ExperimentRow:
    start = time.perf_counter()
    error = None
    try:
        passed, values = case.check()
    except CoverIdealError as e:
        logger.warning("case %s failed: %s", case.name, e)
        passed, values, error = False, {}, f"{type(e).__name__}: {e}"
    return ExperimentRow(
        case=case.name,
        claim=case.claim,
        inputs=case.inputs,
        values=values,
        passed=passed,
        error=error,
        seconds=round(time.perf_counter() - start, 4),
    )


def run_suite(
    experiment: str,
    parameters: Dict[str, Any],
    cases: Sequence[Case],
    progress: bool = False,
) -> ExperimentReport:
    """
    Run cases in order. Rows whose values carry `vacuous: True` are counted
    in the summary instead of being kept.
    """
    rows = []
    vacuous = 0
    for case in tqdm(cases, desc=experiment, disable=not progress):
        row = run_case(case)
        if row.passed and row.values.get("vacuous"):
            vacuous += 1
            continue
        rows.append(row)
    report = ExperimentReport(
        experiment=experiment,
        parameters=parameters,
        rows=rows,
        summary={"cases": len(cases), "vacuous": vacuous, "failed": sum(not r.passed for r in rows)},
    )
    logger.info("%s: %d rows, %d failed", experiment, len(rows), report.summary["failed"])
    return report


# ===== Corpora =====


def random_squarefree_corpus(
    count: int, max_n: int, seed: int = 0, max_gens: int = 6
) -> List[MonomialIdeal]:
    """Random squarefree ideals on 2..max_n variables with 1..max_gens nonzero generators."""
    rng = np.random.default_rng(seed)
    corpus = []
    for _ in range(count):
        n = int(rng.integers(2, max_n + 1))
        k = int(rng.integers(1, max_gens + 1))
        masks = rng.integers(1, 1 << n, size=k)
        gens = [tuple(int(m) >> i & 1 for i in range(n)) for m in masks]
        corpus.append(ms.minimize(gens, n))
    return corpus


def random_monomial_corpus(
    count: int, max_n: int, max_exp: int, max_gens: int, seed: int = 0
) -> List[MonomialIdeal]:
    """Random ideals with exponents in 0..max_exp; all-zero rows are redrawn."""
    rng = np.random.default_rng(seed)
    corpus = []
    while len(corpus) < count:
        n = int(rng.integers(1, max_n + 1))
        k = int(rng.integers(1, max_gens + 1))
        matrix = rng.integers(0, max_exp + 1, size=(k, n))
        gens = [tuple(int(x) for x in row) for row in matrix if row.any()]
        if gens:
            corpus.append(ms.minimize(gens, n))
    return corpus


def connected_graph_corpus(max_n: int, caps: Optional[Caps] = None, progress: bool = False) -> List[Graph]:
    """Connected graphs with at least one edge, one per isomorphism class."""
    return connected_graphs(max_n, min_n=2, caps=caps, progress=progress)


def pure_complex_corpus(max_n: int) -> List[SimplicialComplex]:
    """
    Every pure complex on [n], 2 <= n <= max_n, with facets of a size in 1..n-1.

    Families are the nonempty subsets of the d-subsets of [n], so every
    labelled pure complex of that dimension appears once.
    """
    corpus = []
    for n in range(2, max_n + 1):
        vertices = tuple(range(1, n + 1))
        for d in range(1, n):
            pool = list(combinations(vertices, d))
            for mask in range(1, 1 << len(pool)):
                facets = tuple(pool[k] for k in range(len(pool)) if mask >> k & 1)
                corpus.append(SimplicialComplex(vertex_set=vertices, facets=facets))
    return corpus


def _graph_inputs(graph: Graph, **extra) -> Dict[str, Any]:
    return {"graph": graph.to_json_dict(), **extra}


def _complex_inputs(complex: SimplicialComplex) -> Dict[str, Any]:
    return {"vertex_set": list(complex.vertex_set), "facets": [list(f) for f in complex.facets]}


# ===== Odd cycles =====


def _require_odd(n_list: Iterable[int]) -> None:
    for n in n_list:
        if n < 3 or n % 2 == 0:
            raise ValueError(f"odd cycle length expected, got {n}")


# C5 runs one power further; its regularity is 3s
ODD_CYCLE_SMAX = {5: 3}


def odd_cycle_regularity(
    n_list: Sequence[int] = (3, 5, 7),
    s_max: Optional[int] = None,
    caps: Optional[Caps] = None,
    progress: bool = False,
) -> ExperimentReport:
    """
    reg(J^(s)) = reg(J^s) for odd cycles; for C5 both equal 3s.

    Args:
        n_list: Odd cycle lengths
        s_max: Largest power for every cycle; None takes ODD_CYCLE_SMAX, else 2
        caps: Resource caps
        progress: Show a tqdm bar
    """
    _require_odd(n_list)
    powers = {n: s_max if s_max is not None else ODD_CYCLE_SMAX.get(n, 2) for n in n_list}

    def case(n: int, s: int) -> Case:
        def check():
            graph = gs.cycle_graph(n)
            ordinary = rs.regularity(ms.power(gs.cover_ideal(graph), s), caps)
            symbolic = rs.regularity(sym.symbolic_power(graph, s), caps)
            expected = 3 * s if n == 5 else None
            passed = ordinary == symbolic and (expected is None or ordinary == expected)
            return passed, {"reg_power": ordinary, "reg_symbolic": symbolic, "expected": expected}

        return Case(f"C{n} s={s}", "reg(J^(s)) = reg(J^s)", {"n": n, "s": s}, check)

    cases = [case(n, s) for n in n_list for s in range(1, powers[n] + 1)]
    parameters = {"n_list": list(n_list), "s_max": {str(n): s for n, s in powers.items()}}
    return run_suite("odd-cycle", parameters, cases, progress)


def expected_deg_max(n: int) -> int:
    """Largest minimal vertex cover of C_n for odd n, by n mod 6."""
    if n % 6 == 3:
        return 4 * ((n - 3) // 6) + 2
    if n % 6 == 5:
        return 4 * ((n - 5) // 6) + 3
    return 4 * ((n - 7) // 6) + 4


def deg_formula(n_max: int = 15, progress: bool = False) -> ExperimentReport:
    def case(n: int) -> Case:
        def check():
            J = gs.cover_ideal(gs.cycle_graph(n))
            values = {
                "deg_min": ms.deg_min(J),
                "deg_max": ms.deg_max(J),
                "expected_min": (n - 1) // 2 + 1,
                "expected_max": expected_deg_max(n),
            }
            passed = (
                values["deg_min"] == values["expected_min"]
                and values["deg_max"] == values["expected_max"]
            )
            return passed, values

        return Case(f"C{n}", "generator degrees of J(C_n) follow n mod 6", {"n": n}, check)

    cases = [case(n) for n in range(3, n_max + 1, 2)]
    return run_suite("deg-formula", {"n_max": n_max}, cases, progress)


def herzog_suite(
    n_list: Sequence[int] = (3, 5, 7, 9), s_max: int = 3, progress: bool = False
) -> ExperimentReport:
    """The closed form against the edge-wise intersection, generator for generator."""

    def case(n: int, s: int) -> Case:
        def check():
            report = sym.symbolic_report(gs.cycle_graph(n), s)
            return report.equal, {
                "generators": report.via_intersection.size,
                "deg_min": ms.deg_min(report.via_intersection),
                "deg_max": ms.deg_max(report.via_intersection),
            }

        return Case(f"C{n} s={s}", "closed form equals J^(s)", {"n": n, "s": s}, check)

    _require_odd(n_list)
    cases = [case(n, s) for n in n_list for s in range(1, s_max + 1)]
    return run_suite("herzog-suite", {"n_list": list(n_list), "s_max": s_max}, cases, progress)


def truncation_check(
    n_list: Sequence[int] = (3, 5), s_max: int = 3, progress: bool = False
) -> ExperimentReport:
    def case(n: int, s: int) -> Case:
        def check():
            return sym.truncation_equality_check(gs.cycle_graph(n), s), {}

        return Case(
            f"C{n} s={s}", "J^(s) and J^s agree in degrees >= s Deg(J)", {"n": n, "s": s}, check
        )

    _require_odd(n_list)
    cases = [case(n, s) for n in n_list for s in range(1, s_max + 1)]
    return run_suite("truncation-check", {"n_list": list(n_list), "s_max": s_max}, cases, progress)


def truncation_suite(
    count: int = 200,
    max_n: int = 5,
    max_exp: int = 3,
    max_gens: int = 6,
    seed: int = 0,
    caps: Optional[Caps] = None,
    progress: bool = False,
) -> ExperimentReport:
    """
    reg(R/(I ∩ m^t)) >= reg(R/I) for 1 <= t <= Deg(I) + 2, with equality
    while t <= Deg(I), on random monomial ideals.
    """
    corpus = random_monomial_corpus(count, max_n, max_exp, max_gens, seed)

    def case(k: int, ideal: MonomialIdeal) -> Case:
        def check():
            base = rs.regularity(ideal, caps) - 1
            top = ms.deg_max(ideal)
            by_t = {t: rs.truncation_regularity(ideal, t, caps) - 1 for t in range(1, top + 3)}
            passed = all(r >= base and (t > top or r == base) for t, r in by_t.items())
            return passed, {"reg": base, "deg_max": top, "reg_truncated": by_t}

        return Case(f"ideal {k}", "truncation keeps or raises reg(R/I)", {"ideal": ideal.to_json_dict()}, check)

    cases = [case(k, ideal) for k, ideal in enumerate(corpus)]
    parameters = {"count": count, "max_n": max_n, "max_exp": max_exp, "max_gens": max_gens, "seed": seed}
    return run_suite("truncation-suite", parameters, cases, progress)


# ===== Bipartite and Cohen-Macaulay graphs =====


def _default_bipartite() -> List[Tuple[str, Graph]]:
    return [
        ("C4", gs.cycle_graph(4)),
        ("C6", gs.cycle_graph(6)),
        ("P4", gs.path_graph(4)),
        ("P5", gs.path_graph(5)),
    ]


def bipartite_suite(
    graphs: Optional[Sequence[Tuple[str, Graph]]] = None,
    s_max: int = 3,
    reg_s_max: int = 2,
    caps: Optional[Caps] = None,
    progress: bool = False,
) -> ExperimentReport:
    """
    Symbolic and ordinary powers agree on bipartite graphs; up to reg_s_max
    the regularity also sits between s Deg(J) and (s - 1) Deg(J) + n - 1.
    """
    graphs = list(graphs) if graphs is not None else _default_bipartite()

    def case(name: str, graph: Graph, s: int) -> Case:
        def check():
            J = gs.cover_ideal(graph)
            symbolic = sym.symbolic_power(graph, s)
            values: Dict[str, Any] = {"bipartite": gs.is_bipartite(graph)}
            passed = values["bipartite"] and symbolic == ms.power(J, s)
            if s <= reg_s_max:
                top = ms.deg_max(J)
                reg = rs.regularity(symbolic, caps)
                values.update(reg=reg, lower=s * top, upper=(s - 1) * top + graph.n - 1)
                passed = passed and values["lower"] <= reg <= values["upper"]
            return passed, values

        return Case(f"{name} s={s}", "J^(s) = J^s for bipartite G", _graph_inputs(graph, s=s), check)

    cases = [case(name, g, s) for name, g in graphs for s in range(1, s_max + 1)]
    parameters = {"graphs": [name for name, _ in graphs], "s_max": s_max, "reg_s_max": reg_s_max}
    return run_suite("bipartite-suite", parameters, cases, progress)


def cm_corner(n_max: int = 9, caps: Optional[Caps] = None, progress: bool = False) -> ExperimentReport:
    """Among odd cycles up to n_max only C3 and C5 are Cohen-Macaulay; a star on four vertices has no WP order."""

    def cycle_case(n: int) -> Case:
        def check():
            cm = rs.is_cohen_macaulay_graph(gs.cycle_graph(n), caps)
            return cm == (n in (3, 5)), {"cohen_macaulay": cm}

        return Case(f"C{n}", "C_n is Cohen-Macaulay iff n is 3 or 5", {"n": n}, check)

    def star_case() -> Case:
        graph = gs.star_graph(4)

        def check():
            result = ss.find_wp_order(gs.cover_ideal(graph), caps)
            return result.exhausted, {"explored": result.explored}

        return Case("star4", "J(star) has no WP order", _graph_inputs(graph), check)

    cases = [cycle_case(n) for n in range(3, n_max + 1, 2)] + [star_case()]
    return run_suite("cm-corner", {"n_max": n_max}, cases, progress)


def class_equivalence(
    max_n: int = 6, caps: Optional[Caps] = None, progress: bool = False
) -> ExperimentReport:
    """
    On unmixed cactus, bipartite or chordal graphs: Cohen-Macaulay, vertex
    decomposable, and J(G) and J(G)^2 admitting a WP order all coincide.
    """
    caps = get_caps(caps)

    def case(k: int, graph: Graph) -> Case:
        def check():
            if not gs.is_unmixed(graph) or not (
                gs.is_cactus(graph) or gs.is_bipartite(graph) or gs.is_chordal(graph)
            ):
                return True, {"vacuous": True}
            J = gs.cover_ideal(graph)
            values = {
                "cohen_macaulay": rs.is_cohen_macaulay_graph(graph, caps),
                "vertex_decomposable": gs.is_vertex_decomposable(gs.independence_complex(graph)).decomposable,
                "wp": not ss.find_wp_order(J, caps).exhausted,
                "wp_square": not ss.find_wp_order(ms.power(J, 2), caps).exhausted,
            }
            return len(set(values.values())) == 1, values

        return Case(f"graph {k}", "CM iff VD iff WP order iff WP order of the square", _graph_inputs(graph), check)

    graphs = connected_graph_corpus(max_n, caps, progress)
    cases = [case(k, g) for k, g in enumerate(graphs)]
    return run_suite("class-equivalence", {"max_n": max_n}, cases, progress)


# ===== WP implications =====


def _wp_corpus(
    max_n: int, random_count: int, random_max_n: int, seed: int, caps: Optional[Caps]
) -> List[Tuple[str, MonomialIdeal]]:
    corpus = [
        (f"J(G{k}) n={g.n}", gs.cover_ideal(g))
        for k, g in enumerate(connected_graph_corpus(max_n, caps))
    ]
    corpus += [
        (f"random {k}", ideal)
        for k, ideal in enumerate(random_squarefree_corpus(random_count, random_max_n, seed))
    ]
    return corpus


def wp_implies_vdec_experiment(
    corpus: Sequence[Tuple[str, MonomialIdeal]],
    caps: Optional[Caps] = None,
    progress: bool = False,
    parameters: Optional[Dict[str, Any]] = None,
) -> ExperimentReport:
    """For each squarefree ideal with a WP order, the complex with that dual is vertex decomposable."""

    def case(name: str, ideal: MonomialIdeal) -> Case:
        def check():
            result = ss.find_wp_order(ideal, caps)
            if result.exhausted:
                return True, {"vacuous": True}
            decomposition = gs.is_vertex_decomposable(gs.complex_from_dual(ideal))
            return decomposition.decomposable, {
                "order": list(result.order.ranking),
                "tree_depth": decomposition.tree.depth if decomposition.tree else None,
            }

        return Case(name, "WP order implies vertex decomposable", {"ideal": ideal.to_json_dict()}, check)

    cases = [case(name, ideal) for name, ideal in corpus]
    return run_suite("wp-vdec", parameters or {"corpus": len(corpus)}, cases, progress)


def wp_implies_linear_quotients_experiment(
    corpus: Sequence[Tuple[str, MonomialIdeal]],
    caps: Optional[Caps] = None,
    progress: bool = False,
    parameters: Optional[Dict[str, Any]] = None,
) -> ExperimentReport:
    """WP ideals have linear quotients; equigenerated ones then have a linear resolution."""

    def case(name: str, ideal: MonomialIdeal) -> Case:
        def check():
            result = ss.find_wp_order(ideal, caps)
            if result.exhausted:
                return True, {"vacuous": True}
            quotients = ss.has_linear_quotients(ideal, hint=result.order, caps=caps)
            values: Dict[str, Any] = {"order": list(result.order.ranking), "strategy": quotients.strategy}
            passed = quotients.holds
            if len(set(ideal.degrees())) == 1:
                values["regularity"] = rs.regularity(ideal, caps)
                passed = passed and values["regularity"] == ms.deg_max(ideal)
            return passed, values

        return Case(name, "WP order implies linear quotients", {"ideal": ideal.to_json_dict()}, check)

    cases = [case(name, ideal) for name, ideal in corpus]
    return run_suite("wp-lq", parameters or {"corpus": len(corpus)}, cases, progress)


def wp_vdec(
    max_n: int = 6,
    random_count: int = 500,
    random_max_n: int = 7,
    seed: int = 0,
    caps: Optional[Caps] = None,
    progress: bool = False,
) -> ExperimentReport:
    parameters = {"max_n": max_n, "random_count": random_count, "random_max_n": random_max_n, "seed": seed}
    corpus = _wp_corpus(max_n, random_count, random_max_n, seed, caps)
    return wp_implies_vdec_experiment(corpus, caps, progress, parameters)


def wp_lq(
    max_n: int = 6,
    random_count: int = 500,
    random_max_n: int = 7,
    seed: int = 0,
    caps: Optional[Caps] = None,
    progress: bool = False,
) -> ExperimentReport:
    parameters = {"max_n": max_n, "random_count": random_count, "random_max_n": random_max_n, "seed": seed}
    corpus = _wp_corpus(max_n, random_count, random_max_n, seed, caps)
    return wp_implies_linear_quotients_experiment(corpus, caps, progress, parameters)


def conjecture_scan(max_n: int = 6, caps: Optional[Caps] = None, progress: bool = False) -> ExperimentReport:
    """
    Unmixed connected graphs with a vertex decomposable independence complex,
    searched for a WP order of J(G). An exhausted search is a failed row.
    """

    def case(k: int, graph: Graph) -> Case:
        def check():
            if not gs.is_unmixed(graph):
                return True, {"vacuous": True}
            if not gs.is_vertex_decomposable(gs.independence_complex(graph)).decomposable:
                return True, {"vacuous": True}
            result = ss.find_wp_order(gs.cover_ideal(graph), caps)
            order = list(result.order.ranking) if result.order else None
            return not result.exhausted, {"order": order, "explored": result.explored}

        return Case(f"graph {k} n={graph.n}", "unmixed VD graph has a WP cover ideal", _graph_inputs(graph), check)

    graphs = connected_graph_corpus(max_n, caps, progress)
    cases = [case(k, g) for k, g in enumerate(graphs)]
    return run_suite("scan", {"max_n": max_n}, cases, progress)


def complex_scan(max_n: int = 5, caps: Optional[Caps] = None, progress: bool = False) -> ExperimentReport:
    """Pure vertex decomposable complexes whose dual ideal is searched for a WP order."""

    def case(k: int, complex: SimplicialComplex) -> Case:
        def check():
            if not gs.is_vertex_decomposable(complex).decomposable:
                return True, {"vacuous": True}
            result = ss.find_wp_order(gs.dual_ideal(complex), caps)
            order = list(result.order.ranking) if result.order else None
            return not result.exhausted, {"order": order}

        return Case(f"complex {k}", "pure VD complex has a WP dual", _complex_inputs(complex), check)

    cases = [case(k, c) for k, c in enumerate(pure_complex_corpus(max_n))]
    return run_suite("complex-scan", {"max_n": max_n}, cases, progress)


def _shift_down(complex: SimplicialComplex) -> SimplicialComplex:
    """Relabel a complex on {2..n} onto {1..n-1}."""
    return SimplicialComplex(
        vertex_set=tuple(v - 1 for v in complex.vertex_set),
        facets=tuple(tuple(v - 1 for v in f) for f in complex.facets),
    )


def shedding_assembly_experiment(
    complexes: Sequence[SimplicialComplex], progress: bool = False
) -> ExperimentReport:
    """
    For pure Δ on [n] with shedding vertex 1 whose link and deletion duals are
    WP under 2 > ... > n, the dual of Δ is WP under 1 > ... > n.
    """

    def case(k: int, complex: SimplicialComplex) -> Case:
        def check():
            n = len(complex.vertex_set)
            if n < 2 or not gs.is_pure(complex) or 1 not in complex.used_vertices():
                return True, {"vacuous": True}
            if not gs.is_shedding_vertex(complex, 1):
                return True, {"vacuous": True}
            induced = VariableOrder.identity(n - 1)
            parts = [_shift_down(gs.link(complex, 1)), _shift_down(gs.deletion(complex, 1))]
            if not all(ss.is_weakly_polymatroidal(gs.dual_ideal(p, n - 1), induced).holds for p in parts):
                return True, {"vacuous": True}
            assembled = ss.is_weakly_polymatroidal(gs.dual_ideal(complex, n), VariableOrder.identity(n))
            return assembled.holds, {"violation": None if assembled.holds else str(assembled)}

        return Case(f"complex {k}", "shedding vertex 1 assembles a WP dual", _complex_inputs(complex), check)

    cases = [case(k, c) for k, c in enumerate(complexes)]
    return run_suite("shedding-assembly", {"complexes": len(complexes)}, cases, progress)


GIRTH_FIVE_INSTANCES = [
    ("one cycle", 1, 0, []),
    ("cycle and pendant", 1, 1, [(("x", 1, 1), ("y", 1, 1))]),
    ("cycle and two pendants", 1, 2, [(("x", 1, 1), ("y", 1, 1)), (("x", 1, 2), ("y", 2, 1))]),
    ("two cycles", 2, 0, [(("x", 1, 1), ("x", 2, 1))]),
]


def girth_five_experiment(
    instances: Optional[Sequence[Tuple[str, int, int, list]]] = None,
    caps: Optional[Caps] = None,
    progress: bool = False,
) -> ExperimentReport:
    """Assembled girth-five graphs are Cohen-Macaulay and J(G) is WP under the construction order."""
    instances = list(instances) if instances is not None else GIRTH_FIVE_INSTANCES

    def case(name: str, cycles: int, pendants: int, links: list) -> Case:
        graph, order = gs.cohen_macaulay_girth5_graph(cycles, pendants, links)

        def check():
            girth = gs.girth(graph)
            cm = rs.is_cohen_macaulay_graph(graph, caps)
            wp = ss.is_weakly_polymatroidal(gs.cover_ideal(graph), order).holds
            return (girth == 0 or girth >= 5) and cm and wp, {"girth": girth, "cohen_macaulay": cm, "wp": wp}

        return Case(name, "CM girth-five graph has a WP cover ideal", _graph_inputs(graph), check)

    cases = [case(*instance) for instance in instances]
    return run_suite("girth-five", {"instances": [i[0] for i in instances]}, cases, progress)


def symbolic_wp_experiment(
    n_list: Sequence[int] = (3, 4, 5), s_max: int = 2, progress: bool = False
) -> ExperimentReport:
    """J(W)^(s) is WP under x_1 > ... > x_n > y_1 > ... > y_n for whiskered cycles W."""

    def case(n: int, s: int) -> Case:
        def check():
            whiskered = gs.whisker(gs.cycle_graph(n))
            ideal = sym.symbolic_power(whiskered, s)
            result = ss.is_weakly_polymatroidal(ideal, VariableOrder.identity(whiskered.n))
            return result.holds, {"generators": ideal.size}

        return Case(f"whisker(C{n}) s={s}", "symbolic power of a whiskered cycle is WP", {"n": n, "s": s}, check)

    cases = [case(n, s) for n in n_list for s in range(1, s_max + 1)]
    return run_suite("symbolic-wp", {"n_list": list(n_list), "s_max": s_max}, cases, progress)


# ===== Clique-whiskering =====


def default_whisker_cases() -> List[Tuple[str, Graph, CliquePartition]]:
    def parts(*groups) -> CliquePartition:
        return CliquePartition(parts=[list(g) for g in groups])

    return [
        ("triangle", gs.complete_graph(2), parts((1, 2))),
        ("whisker(P2)", gs.path_graph(2), CliquePartition.trivial(2)),
        ("whisker(P3)", gs.path_graph(3), CliquePartition.trivial(3)),
        ("P3 edge+vertex", gs.path_graph(3), parts((1, 2), (3,))),
        ("K3 one clique", gs.complete_graph(3), parts((1, 2, 3))),
        ("K3 edge+vertex", gs.complete_graph(3), parts((1, 2), (3,))),
        ("whisker(C3)", gs.cycle_graph(3), CliquePartition.trivial(3)),
        ("whisker(C4)", gs.cycle_graph(4), CliquePartition.trivial(4)),
        ("C4 two edges", gs.cycle_graph(4), parts((1, 2), (3, 4))),
        ("K4 two edges", gs.complete_graph(4), parts((1, 2), (3, 4))),
        ("whisker(star4)", gs.star_graph(4), CliquePartition.trivial(4)),
        ("whisker(C5)", gs.cycle_graph(5), CliquePartition.trivial(5)),
    ]


# (name, s) pairs whose regularity is checked against s |V(G)|
WHISKER_REGULARITY = {
    ("triangle", 1), ("triangle", 2),
    ("whisker(P2)", 1), ("whisker(P2)", 2),
    ("whisker(P3)", 1), ("whisker(P3)", 2),
    ("whisker(C5)", 1),
}


def whisker_suite(
    cases: Optional[Sequence[Tuple[str, Graph, CliquePartition]]] = None,
    s_max: int = 2,
    regularity_rows: Optional[Iterable[Tuple[str, int]]] = None,
    caps: Optional[Caps] = None,
    progress: bool = False,
) -> ExperimentReport:
    """
    J(W)^s is WP under the canonical order of the clique-whiskering W, the
    face ideal of its co-complex is J(W), and for the listed (name, s) pairs
    reg(J(W)^s) = reg(J(W)^(s)) = s |V(G)|.
    """
    cases = list(cases) if cases is not None else default_whisker_cases()
    with_reg = set(regularity_rows) if regularity_rows is not None else WHISKER_REGULARITY

    def case(name: str, graph: Graph, partition: CliquePartition, s: int) -> Case:
        def check():
            whiskered = gs.clique_whisker(graph, partition)
            J = gs.cover_ideal(whiskered)
            face = sym.face_ideal(sym.cover_cocomplex(whiskered, graph, partition))
            powered = ms.power(J, s)
            wp = ss.is_weakly_polymatroidal(powered, sym.whisker_order(graph, partition)).holds
            values: Dict[str, Any] = {"wp": wp, "face_ideal_matches": face == J}
            passed = wp and values["face_ideal_matches"]
            if (name, s) in with_reg:
                values["reg_power"] = rs.regularity(powered, caps)
                values["reg_symbolic"] = rs.regularity(sym.symbolic_power(whiskered, s), caps)
                values["expected"] = s * graph.n
                passed = passed and values["reg_power"] == values["reg_symbolic"] == values["expected"]
            return passed, values

        inputs = _graph_inputs(graph, partition=[list(p) for p in partition.parts], s=s)
        return Case(f"{name} s={s}", "J(W)^s is WP under the whisker order", inputs, check)

    rows = [case(name, g, p, s) for name, g, p in cases for s in range(1, s_max + 1)]
    return run_suite("whisker-suite", {"cases": [c[0] for c in cases], "s_max": s_max}, rows, progress)


def lideal_suite(progress: bool = False) -> ExperimentReport:
    """The L family against symbolic powers of whiskered graphs."""
    c5, c3 = gs.cycle_graph(5), gs.cycle_graph(3)

    def matches(graph: Graph, s: int, t: int) -> Case:
        def check():
            whiskered = gs.whisker(graph)
            ideal = sym.l_ideal(graph, s, t)
            symbolic = sym.symbolic_power(whiskered, s)
            wp = ss.is_weakly_polymatroidal(ideal, VariableOrder.identity(whiskered.n)).holds
            return ideal == symbolic and wp, {"equal": ideal == symbolic, "wp": wp}

        return Case(
            f"L({graph.n}-cycle, s={s}, t={t})",
            "L_{s,t} equals J(W)^(s) and is WP",
            _graph_inputs(graph, s=s, t=t),
            check,
        )

    def ordinary(graph: Graph, s: int) -> Case:
        def check():
            J = gs.cover_ideal(gs.whisker(graph))
            return sym.l_ideal(graph, s, 0) == ms.power(J, s), {}

        return Case(f"L({graph.n}-cycle, s={s}, t=0)", "t = 0 gives J^s", _graph_inputs(graph, s=s, t=0), check)

    def face_condition(graph: Graph) -> Case:
        def check():
            whiskered = gs.whisker(graph)
            partition = CliquePartition.trivial(graph.n)
            holds = sym.symbolic_face_condition(sym.cover_cocomplex(whiskered, graph, partition))
            return holds, {"face_condition": holds}

        return Case(f"face condition {graph.n}-cycle", "whisker co-complex meets the face condition", _graph_inputs(graph), check)

    cases = [
        matches(c5, 2, 1),
        matches(c3, 3, 1),
        matches(c3, 2, 1),
        ordinary(c5, 2),
        face_condition(c5),
        face_condition(c3),
    ]
    return run_suite("lideal-suite", {}, cases, progress)


# ===== Cactus exchange =====


def cactus_pentagon() -> Graph:
    """C5 with cycle order y1, y4, y2, y3, y5."""
    return Graph(n=5, edges=[(1, 4), (4, 2), (2, 3), (3, 5), (5, 1)])


def cactus_exchange(s_max: int = 3, progress: bool = False) -> ExperimentReport:
    """
    The exchange between f = (y1y2y3)(y3y4y5) and g = (y2y4y5)(y1y3y4) in
    J(C5)^2: only y4 can serve as the witness, and powers of J(C5) are WP
    under y1 > ... > y5.
    """
    graph = cactus_pentagon()
    J = gs.cover_ideal(graph)
    square = ms.power(J, 2)
    f = (1, 1, 2, 1, 1)
    g = (1, 1, 1, 2, 1)
    inputs = _graph_inputs(graph, f=list(f), g=list(g))

    def assertion(name: str, claim: str, fn: Callable[[], bool]) -> Case:
        def check():
            holds = fn()
            return holds, {"holds": holds}

        return Case(name, claim, inputs, check)

    def witness_case() -> Case:
        def check():
            result = ss.is_weakly_polymatroidal(square, VariableOrder.identity(5))
            if not result.holds:
                return False, {"violation": str(result)}
            witness = next((w for w in result.witnesses if w.u == g and w.q == 3), None)
            p = witness.p if witness else None
            return p == 4, {"p": p}

        return Case("witness", "the pair (g, f) is resolved by y4", inputs, check)

    def power_case(s: int) -> Case:
        def check():
            holds = ss.is_weakly_polymatroidal(ms.power(J, s), VariableOrder.identity(5)).holds
            return holds, {"wp": holds}

        return Case(f"power s={s}", "J(C5)^s is WP under y1 > ... > y5", _graph_inputs(graph, s=s), check)

    cases = [
        assertion("f, g minimal", "f and g are minimal generators of J^2",
                  lambda: f in square.generators and g in square.generators),
        assertion("degree profile", "f and g agree in y1 and y2",
                  lambda: f[0] == g[0] and f[1] == g[1]),
        assertion("g/(y1y2y5)", "g/(y1y2y5) is not in J",
                  lambda: not ms.contains(J, (0, 0, 1, 2, 0))),
        assertion("y3g/y5", "y3 g / y5 is not in J^2",
                  lambda: not ms.contains(square, (1, 1, 2, 2, 0))),
        assertion("y3g/y4", "y3 g / y4 is in J^2",
                  lambda: ms.contains(square, (1, 1, 2, 1, 1))),
        witness_case(),
    ] + [power_case(s) for s in range(1, s_max + 1)]
    return run_suite("cactus-exchange", {"s_max": s_max}, cases, progress)


# ===== Everything =====


def all_suites(caps: Optional[Caps] = None, seed: int = 0, progress: bool = False) -> List[ExperimentReport]:
    """Every suite at its default desk-scale parameters."""
    return [
        odd_cycle_regularity(caps=caps, progress=progress),
        deg_formula(progress=progress),
        herzog_suite(progress=progress),
        truncation_check(progress=progress),
        truncation_suite(seed=seed, caps=caps, progress=progress),
        bipartite_suite(caps=caps, progress=progress),
        cm_corner(caps=caps, progress=progress),
        class_equivalence(caps=caps, progress=progress),
        wp_vdec(seed=seed, caps=caps, progress=progress),
        wp_lq(seed=seed, caps=caps, progress=progress),
        whisker_suite(caps=caps, progress=progress),
        lideal_suite(progress=progress),
        cactus_exchange(progress=progress),
        girth_five_experiment(caps=caps, progress=progress),
        shedding_assembly_experiment(pure_complex_corpus(4), progress=progress),
        symbolic_wp_experiment(progress=progress),
        conjecture_scan(caps=caps, progress=progress),
        complex_scan(caps=caps, progress=progress),
    ]
