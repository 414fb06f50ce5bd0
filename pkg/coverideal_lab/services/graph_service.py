"""Graphs, vertex covers, independence complexes and simplicial-complex combinatorics."""
import logging
from functools import lru_cache
from typing import FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from coverideal_lab.errors import (
    InvalidComplexError,
    InvalidGraphError,
    NotSquarefreeError,
)
from coverideal_lab.models.complex_model import (
    SheddingTree,
    SimplicialComplex,
    VertexDecomposition,
    maximal_sets,
)
from coverideal_lab.models.graph_model import CliquePartition, Graph
from coverideal_lab.models.monomial_model import MonomialIdeal, VariableOrder
from coverideal_lab.networkx_adapter.networkx import NetworkxAdapter
from coverideal_lab.services import monomial_service as ms

logger = logging.getLogger(__name__)


# ===== Constructors =====


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidGraphError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph(n=n, edges=[(i, i + 1) for i in range(1, n)] + [(1, n)])


def path_graph(n: int) -> Graph:
    """Path 1 - 2 - ... - n."""
    if n < 1:
        raise InvalidGraphError(f"a path needs at least 1 vertex, got {n}")
    return Graph(n=n, edges=[(i, i + 1) for i in range(1, n)])


def star_graph(n: int) -> Graph:
    """Star on n vertices with centre 1."""
    if n < 2:
        raise InvalidGraphError(f"a star needs at least 2 vertices, got {n}")
    return Graph(n=n, edges=[(1, v) for v in range(2, n + 1)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidGraphError(f"a complete graph needs at least 1 vertex, got {n}")
    return Graph(n=n, edges=[(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])


def neighborhood(graph: Graph, vertices: Iterable[int]) -> Set[int]:
    """Vertices adjacent to some vertex of the given set."""
    adj = graph.adjacency()
    result: Set[int] = set()
    for v in vertices:
        result |= adj[v]
    return result


# ===== Covers and ideals =====


def minimal_vertex_covers(graph: Graph) -> List[FrozenSet[int]]:
    """Inclusion-minimal vertex covers, smallest first; an edgeless graph has only ∅."""
    return NetworkxAdapter(graph).minimal_vertex_covers()


def _indicator(n: int, vertices: Iterable[int]) -> Tuple[int, ...]:
    m = [0] * n
    for v in vertices:
        m[v - 1] = 1
    return tuple(m)


def _require_vertices(graph: Graph) -> None:
    if graph.n < 1:
        raise InvalidGraphError("graph has no vertices, so there is no ambient ring")


def cover_ideal(graph: Graph) -> MonomialIdeal:
    """
    J(G), generated by the products over the minimal vertex covers.

    Args:
        graph: Any graph with at least one vertex

    Returns:
        The cover ideal; the unit ideal when the graph has no edges
    """
    _require_vertices(graph)
    if not graph.edges:
        logger.warning("graph has no edges; its cover ideal is taken to be the unit ideal")
    covers = minimal_vertex_covers(graph)
    return MonomialIdeal.from_minimal(graph.n, [_indicator(graph.n, c) for c in covers])


def edge_ideal(graph: Graph) -> MonomialIdeal:
    _require_vertices(graph)
    return MonomialIdeal.from_minimal(graph.n, [_indicator(graph.n, e) for e in graph.edges])


def is_unmixed(graph: Graph) -> bool:
    return len({len(c) for c in minimal_vertex_covers(graph)}) <= 1


def is_bipartite(graph: Graph) -> bool:
    return NetworkxAdapter(graph).is_bipartite()


def girth(graph: Graph) -> int:
    return NetworkxAdapter(graph).girth()


def is_cactus(graph: Graph) -> bool:
    return NetworkxAdapter(graph).is_cactus()


def is_chordal(graph: Graph) -> bool:
    return NetworkxAdapter(graph).is_chordal()


def is_connected(graph: Graph) -> bool:
    return NetworkxAdapter(graph).is_connected()


# ===== Whiskering =====


def is_clique_partition(graph: Graph, partition: CliquePartition) -> bool:
    if partition.covered() != set(graph.vertices):
        return False
    edges = set(graph.edges)
    for part in partition.parts:
        for a in range(len(part)):
            for b in range(a + 1, len(part)):
                if (part[a], part[b]) not in edges:
                    return False
    return True


def clique_whisker(graph: Graph, partition: CliquePartition) -> Graph:
    """
    Attach y_i to every vertex of the part W_i.

    Args:
        graph: The base graph on 1..n
        partition: A clique vertex-partition of the graph

    Returns:
        The graph on 1..n+t where n+i plays the part of y_i
    """
    if not is_clique_partition(graph, partition):
        raise InvalidGraphError(f"{partition.parts} is not a clique vertex-partition")
    edges = list(graph.edges)
    for i, part in enumerate(partition.parts):
        edges.extend((v, graph.n + i + 1) for v in part)
    return Graph(n=graph.n + partition.t, edges=edges)


def whisker(graph: Graph) -> Graph:
    return clique_whisker(graph, CliquePartition.trivial(graph.n))


def cohen_macaulay_girth5_graph(
    cycles: int,
    pendants: int,
    links: Sequence[Tuple[Tuple[str, int, int], Tuple[str, int, int]]] = (),
) -> Tuple[Graph, VariableOrder]:
    """
    Assemble a graph from basic 5-cycles and pendant edges.

    Cycle i has vertices x_i1..x_i5 joined in the order x_i1, x_i4, x_i2, x_i3,
    x_i5, so x_i3, x_i4 and x_i5 keep degree 2. Pendant j is the edge
    y_j1 - y_j2 with y_j2 a leaf. Extra edges may only join the anchors x_i1,
    x_i2 and y_j1.

    Args:
        cycles: Number of basic 5-cycles
        pendants: Number of pendant edges
        links: Extra edges between anchors, each anchor written ("x", i, k)
            or ("y", j, 1) with 1-based indices

    Returns:
        The graph, labelled x_11..x_15, x_21, ..., y_11, y_12, ..., and the
        matching order x_11 > ... > y_12 > ..., which is the identity
    """
    def label(anchor: Tuple[str, int, int]) -> int:
        kind, i, k = anchor
        if kind == "x" and 1 <= i <= cycles and k in (1, 2):
            return 5 * (i - 1) + k
        if kind == "y" and 1 <= i <= pendants and k == 1:
            return 5 * cycles + 2 * (i - 1) + 1
        raise InvalidGraphError(f"{anchor} is not an anchor vertex")

    edges = []
    for c in range(cycles):
        x = [5 * c + k for k in range(1, 6)]
        ring = [x[0], x[3], x[1], x[2], x[4]]
        edges.extend((ring[k], ring[(k + 1) % 5]) for k in range(5))
    for j in range(pendants):
        base = 5 * cycles + 2 * j
        edges.append((base + 1, base + 2))
    for a, b in links:
        edges.append((label(a), label(b)))
    n = 5 * cycles + 2 * pendants
    return Graph(n=n, edges=edges), VariableOrder.identity(n)


# ===== Simplicial complexes =====


def independence_complex(graph: Graph) -> SimplicialComplex:
    return SimplicialComplex(
        vertex_set=tuple(graph.vertices),
        facets=tuple(tuple(sorted(s)) for s in NetworkxAdapter(graph).maximal_independent_sets()),
    )


def _require_vertex(complex: SimplicialComplex, v: int) -> None:
    if v not in complex.vertex_set:
        raise InvalidComplexError(f"{v} is not a vertex of the complex")


def link(complex: SimplicialComplex, v: int) -> SimplicialComplex:
    _require_vertex(complex, v)
    rest = [u for u in complex.vertex_set if u != v]
    faces = [set(f) - {v} for f in complex.facets if v in f]
    return SimplicialComplex.from_faces(rest, faces)


def deletion(complex: SimplicialComplex, v: int) -> SimplicialComplex:
    _require_vertex(complex, v)
    rest = [u for u in complex.vertex_set if u != v]
    return SimplicialComplex.from_faces(rest, [set(f) - {v} for f in complex.facets])


def is_shedding_vertex(complex: SimplicialComplex, v: int) -> bool:
    """No facet of the link is a facet of the deletion."""
    _require_vertex(complex, v)
    without = [frozenset(f) for f in complex.facets if v not in f]
    return all(
        any(frozenset(f) - {v} <= g for g in without) for f in complex.facets if v in f
    )


def is_pure(complex: SimplicialComplex) -> bool:
    return len({len(f) for f in complex.facets}) <= 1


def dimension(complex: SimplicialComplex) -> int:
    """Largest facet size minus one; -1 for {∅} and the void complex."""
    return max((len(f) for f in complex.facets), default=0) - 1


def _canonical_key(facets: Iterable[FrozenSet[int]]) -> Tuple[int, ...]:
    facets = list(facets)
    used = sorted({v for f in facets for v in f})
    dense = {v: k for k, v in enumerate(used)}
    return tuple(sorted(sum(1 << dense[v] for v in f) for f in facets))


def _split(masks: Tuple[int, ...], bit: int) -> Tuple[Tuple[int, ...], Tuple[int, ...], bool]:
    with_v = [m & ~bit for m in masks if m & bit]
    without = [m for m in masks if not m & bit]
    shedding = all(any(f & g == f for g in without) for f in with_v)
    deleted = without + [f for f in with_v if not any(f & g == f for g in without)]
    return tuple(with_v), tuple(deleted), shedding


def _relabel(masks: Iterable[int]) -> Tuple[int, ...]:
    masks = list(masks)
    used = 0
    for m in masks:
        used |= m
    bits = [k for k in range(used.bit_length()) if used >> k & 1]
    dense = {b: k for k, b in enumerate(bits)}
    relabelled = []
    for m in masks:
        relabelled.append(sum(1 << dense[k] for k in bits if m >> k & 1))
    return tuple(sorted(relabelled))


@lru_cache(maxsize=None)
def _decomposable(masks: Tuple[int, ...]) -> bool:
    if len(masks) == 1:
        return True
    used = 0
    for m in masks:
        used |= m
    for k in range(used.bit_length()):
        bit = 1 << k
        if not used & bit:
            continue
        link_masks, deletion_masks, shedding = _split(masks, bit)
        if not shedding:
            continue
        if _decomposable(_relabel(link_masks)) and _decomposable(_relabel(deletion_masks)):
            return True
    return False


def _shedding_tree(complex: SimplicialComplex) -> SheddingTree:
    if complex.is_simplex:
        return SheddingTree()
    for v in sorted(complex.used_vertices()):
        if not is_shedding_vertex(complex, v):
            continue
        lk, dl = link(complex, v), deletion(complex, v)
        if _decomposable(_canonical_key(lk.facet_sets())) and _decomposable(
            _canonical_key(dl.facet_sets())
        ):
            return SheddingTree(vertex=v, link=_shedding_tree(lk), deletion=_shedding_tree(dl))
    raise InvalidComplexError("complex lost decomposability while building its tree")


def is_vertex_decomposable(complex: SimplicialComplex) -> VertexDecomposition:
    """
    Decide vertex decomposability and build a shedding tree.

    Shedding vertices are tried in ascending label order, so the reported tree
    is reproducible. {∅} counts as a simplex.

    Args:
        complex: A non-void simplicial complex

    Returns:
        The decision and, on success, the shedding tree
    """
    if complex.is_void:
        raise InvalidComplexError("the void complex has no decomposability")
    if not _decomposable(_canonical_key(complex.facet_sets())):
        return VertexDecomposition(decomposable=False)
    return VertexDecomposition(decomposable=True, tree=_shedding_tree(complex))


# ===== Stanley-Reisner correspondence =====


def _ambient_of(complex: SimplicialComplex, ambient: Optional[int]) -> int:
    n = ambient if ambient is not None else max(complex.vertex_set, default=0)
    if n < 1 or any(v > n or v < 1 for v in complex.vertex_set):
        raise InvalidComplexError(f"vertices {complex.vertex_set} do not fit in 1..{n}")
    return n


def dual_ideal(complex: SimplicialComplex, ambient: Optional[int] = None) -> MonomialIdeal:
    """I_Δ^∨ = (x_{[n] minus F} : F facet)."""
    n = _ambient_of(complex, ambient)
    everything = set(range(1, n + 1))
    return MonomialIdeal.from_minimal(
        n, [_indicator(n, everything - set(f)) for f in complex.facets]
    )


def stanley_reisner_ideal(complex: SimplicialComplex, ambient: Optional[int] = None) -> MonomialIdeal:
    """Minimal non-faces, obtained as the Alexander dual of the dual ideal."""
    return ms.alexander_dual(dual_ideal(complex, ambient))


def complex_from_dual(ideal: MonomialIdeal) -> SimplicialComplex:
    """The complex Δ on [n] with ideal = I_Δ^∨."""
    if not ms.is_squarefree(ideal):
        raise NotSquarefreeError(f"{ideal} is not squarefree")
    everything = set(range(1, ideal.ambient + 1))
    facets = [everything - {i + 1 for i in ms.support(g)} for g in ideal.generators]
    return SimplicialComplex(
        vertex_set=tuple(sorted(everything)), facets=tuple(maximal_sets(facets))
    )

