"""Symbolic powers of cover ideals, closed-form decompositions and face ideals of co-complexes."""
import logging
from typing import Optional

from coverideal_lab.config import Caps
from coverideal_lab.errors import (
    HypothesisViolationError,
    InvalidComplexError,
    InvalidGraphError,
)
from coverideal_lab.models.complex_model import CoComplex
from coverideal_lab.models.graph_model import CliquePartition, Graph
from coverideal_lab.models.monomial_model import MonomialIdeal, VariableOrder
from coverideal_lab.models.report_model import SymbolicPowerReport
from coverideal_lab.networkx_adapter.networkx import NetworkxAdapter
from coverideal_lab.services import graph_service as gs
from coverideal_lab.services import monomial_service as ms

logger = logging.getLogger(__name__)


def symbolic_power(graph: Graph, s: int) -> MonomialIdeal:
    """
    J(G)^(s) as the intersection of (x_i, x_j)^s over the edges.

    Args:
        graph: Graph with at least one vertex
        s: Exponent, s >= 1

    Returns:
        The symbolic power; the unit ideal for an edgeless graph
    """
    if s < 1:
        raise ValueError(f"symbolic power needs s >= 1, got {s}")
    if graph.n < 1:
        raise InvalidGraphError("graph has no vertices")
    if not graph.edges:
        logger.warning("graph has no edges; its symbolic powers are taken to be the unit ideal")
    primes = [ms.prime_power(graph.n, i - 1, j - 1, s) for i, j in graph.edges]
    return ms.intersect_all(primes, graph.n)


def is_odd_cycle(graph: Graph) -> bool:
    if graph.n < 3 or graph.n % 2 == 0 or graph.edge_count != graph.n:
        return False
    if any(len(nbrs) != 2 for nbrs in graph.adjacency().values()):
        return False
    return gs.is_connected(graph)


def check_odd_cycle_neighborhood(graph: Graph, caps: Optional[Caps] = None) -> bool:
    """True iff every simple odd cycle C has N_G(C) = V(G)."""
    everything = set(graph.vertices)
    for cycle in NetworkxAdapter(graph).odd_cycles(caps):
        if gs.neighborhood(graph, cycle) != everything:
            logger.debug("odd cycle %s misses %s", cycle, sorted(everything - gs.neighborhood(graph, cycle)))
            return False
    return True


def _power_sum(
    base: MonomialIdeal, bump: MonomialIdeal, s: int, terms: int
) -> MonomialIdeal:
    """base^s + bump * base^(s-2) + ... + bump^terms * base^(s-2*terms)."""
    pieces = [ms.power(base, s)]
    bump_power = MonomialIdeal.unit(base.ambient)
    for i in range(1, terms + 1):
        bump_power = ms.multiply(bump_power, bump)
        pieces.append(ms.multiply(bump_power, ms.power(base, s - 2 * i)))
    return ms.add(*pieces)


def herzog_symbolic(graph: Graph, s: int, caps: Optional[Caps] = None) -> MonomialIdeal:
    """
    Closed form J^s + sum over i of (x_1...x_n)^i J^(s-2i), i up to s // 2.

    Args:
        graph: A graph whose odd cycles all neighbour every vertex
        s: Exponent, s >= 1
        caps: Resource caps for the cycle enumeration

    Returns:
        The closed form, equal to the symbolic power under the hypothesis
    """
    if s < 1:
        raise ValueError(f"symbolic power needs s >= 1, got {s}")
    if not check_odd_cycle_neighborhood(graph, caps):
        raise HypothesisViolationError("some odd cycle does not neighbour every vertex")
    return _power_sum(gs.cover_ideal(graph), ms.product_of_variables(graph.n), s, s // 2)


def symbolic_report(graph: Graph, s: int, caps: Optional[Caps] = None) -> SymbolicPowerReport:
    via_formula = None
    if check_odd_cycle_neighborhood(graph, caps):
        via_formula = herzog_symbolic(graph, s, caps)
    return SymbolicPowerReport(
        graph=graph, s=s, via_intersection=symbolic_power(graph, s), via_formula=via_formula
    )


def truncation_equality_check(graph: Graph, s: int) -> bool:
    """Whether J^(s) and J^s agree after truncating at degree s * Deg(J) on an odd cycle."""
    if not is_odd_cycle(graph):
        raise HypothesisViolationError("truncation equality is stated for odd cycles")
    t = ms.deg_max(gs.cover_ideal(graph))
    symbolic = ms.truncate(symbolic_power(graph, s), s * t)
    ordinary = ms.truncate(ms.power(gs.cover_ideal(graph), s), s * t)
    return symbolic == ordinary


# ===== Co-complexes =====


def face_ideal(cocomplex: CoComplex) -> MonomialIdeal:
    """
    Face ideal generated by u_F = prod_{x in F} x * prod_i y_i^(k_i - |F ∩ V_i|).

    x-variables follow the sorted ground set; y_i sits at index |V| + i.

    Args:
        cocomplex: The co-complex

    Returns:
        The minimized face ideal over every face
    """
    ground = cocomplex.ground
    position = {v: k for k, v in enumerate(ground)}
    ambient = len(ground) + cocomplex.t
    gens = []
    for face in cocomplex.faces():
        m = [0] * ambient
        for v in face:
            m[position[v]] = 1
        for i, part in enumerate(cocomplex.parts):
            m[len(ground) + i] = len(part) - len(face.intersection(part))
        gens.append(tuple(m))
    return ms.minimize(gens, ambient)


def cover_cocomplex(whiskered: Graph, graph: Graph, partition: CliquePartition) -> CoComplex:
    """Traces C ∩ V(G) of the minimal vertex covers C of the clique-whiskering."""
    if gs.clique_whisker(graph, partition) != whiskered:
        raise InvalidGraphError("graph is not the clique-whiskering of the given pair")
    base = set(graph.vertices)
    traces = [c & base for c in gs.minimal_vertex_covers(whiskered)]
    return CoComplex.from_faces(partition.parts, traces)


def cocomplex_order(cocomplex: CoComplex) -> VariableOrder:
    """Parts concatenated in part order, then y_1 > ... > y_t, in face-ideal indices."""
    position = {v: k for k, v in enumerate(cocomplex.ground)}
    ranking = [position[v] + 1 for part in cocomplex.parts for v in part]
    ranking += [len(position) + i + 1 for i in range(cocomplex.t)]
    return VariableOrder(ranking=tuple(ranking))


def whisker_order(graph: Graph, partition: CliquePartition) -> VariableOrder:
    """The same order on the labels of the clique-whiskering."""
    ranking = [v for part in partition.parts for v in part]
    ranking += [graph.n + i + 1 for i in range(partition.t)]
    return VariableOrder(ranking=tuple(ranking))


def symbolic_face_condition(cocomplex: CoComplex) -> bool:
    """
    For singleton parts: each vertex i is the meet of two faces whose union is V.

    Args:
        cocomplex: A co-complex whose parts are all singletons

    Returns:
        True iff for every i there are faces F, G with F ∪ G = V and F ∩ G = {i}
    """
    if any(len(part) != 1 for part in cocomplex.parts):
        raise InvalidComplexError("the face condition is stated for singleton parts")
    ground = cocomplex.ground
    for i in ground:
        rest = [v for v in ground if v != i]
        found = False
        for mask in range(1 << len(rest)):
            left = {rest[k] for k in range(len(rest)) if mask >> k & 1}
            right = set(rest) - left
            if cocomplex.contains_face(left | {i}) and cocomplex.contains_face(right | {i}):
                found = True
                break
        if not found:
            return False
    return True


def l_ideal(graph: Graph, s: int, t: int) -> MonomialIdeal:
    """
    J^s + (x y)J^(s-2) + ... + (x y)^t J^(s-2t) for J = J(whisker(G)).

    Args:
        graph: Base graph on 1..n
        s: Power, s >= 1
        t: Number of correction terms, 2t <= s

    Returns:
        The sum in the 2n variables of the whiskered graph
    """
    if 2 * t > s:
        raise ValueError(f"need 2t <= s, got s={s}, t={t}")
    if t < 0:
        raise ValueError(f"negative term count {t}")
    whiskered = gs.whisker(graph)
    return _power_sum(
        gs.cover_ideal(whiskered), ms.product_of_variables(whiskered.n), s, t
    )
