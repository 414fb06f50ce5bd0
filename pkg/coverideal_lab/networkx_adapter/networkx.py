import logging
from typing import Dict, FrozenSet, Iterator, List, Optional

import networkx as nx
from tqdm import tqdm

from coverideal_lab.config import Caps, get_caps
from coverideal_lab.errors import CapExceededError
from coverideal_lab.models.graph_model import Graph

logger = logging.getLogger(__name__)

# graph_atlas_g covers every graph with at most this many vertices
ATLAS_MAX_VERTICES = 7


class NetworkxAdapter:
    """Bridge between `Graph` models and networkx for the graph predicates."""

    def __init__(self, graph: Graph):
        self.graph = graph
        self.G = nx.Graph()
        self.G.add_nodes_from(graph.vertices)
        self.G.add_edges_from(graph.edges)

    def get_graph_object(self) -> nx.Graph:
        return self.G

    @classmethod
    def from_networkx(cls, G: nx.Graph) -> Graph:
        """Relabel the nodes of G to 1..n in sorted node order."""
        mapping = {node: k + 1 for k, node in enumerate(sorted(G.nodes()))}
        return Graph(n=len(mapping), edges=[(mapping[a], mapping[b]) for a, b in G.edges()])

    def maximal_independent_sets(self) -> List[FrozenSet[int]]:
        """Maximal cliques of the complement; the empty graph has the single set ∅."""
        if self.graph.n == 0:
            return [frozenset()]
        complement = nx.complement(self.G)
        return sorted(
            (frozenset(c) for c in nx.find_cliques(complement)),
            key=lambda s: (len(s), sorted(s)),
        )

    def minimal_vertex_covers(self) -> List[FrozenSet[int]]:
        everything = frozenset(self.graph.vertices)
        covers = {everything - s for s in self.maximal_independent_sets()}
        return sorted(covers, key=lambda s: (len(s), sorted(s)))

    def is_bipartite(self) -> bool:
        return nx.is_bipartite(self.G)

    def is_chordal(self) -> bool:
        return nx.is_chordal(self.G)

    def is_connected(self) -> bool:
        return self.graph.n > 0 and nx.is_connected(self.G)

    def girth(self) -> int:
        """Length of a shortest cycle, 0 for forests."""
        g = nx.girth(self.G)
        return 0 if g == float("inf") else int(g)

    def is_cactus(self) -> bool:
        """Every block is a single edge or a cycle."""
        for block in nx.biconnected_component_edges(self.G):
            block = list(block)
            nodes = {v for e in block for v in e}
            if len(block) > 1 and len(block) != len(nodes):
                return False
        return True

    def simple_cycles(self, caps: Optional[Caps] = None) -> Iterator[List[int]]:
        """
        Enumerate every simple cycle of the graph.

        Args:
            caps: Resource caps; the vertex count must not exceed caps.cycle_vertices

        Returns:
            Iterator over cycles given as vertex lists
        """
        caps = get_caps(caps)
        if self.graph.n > caps.cycle_vertices:
            raise CapExceededError("cycle enumeration vertices", self.graph.n, caps.cycle_vertices)
        return nx.simple_cycles(self.G)

    def odd_cycles(self, caps: Optional[Caps] = None) -> Iterator[List[int]]:
        return (c for c in self.simple_cycles(caps) if len(c) % 2 == 1)

    def canonical_hash(self) -> str:
        return nx.weisfeiler_lehman_graph_hash(self.G)


def _dedupe_isomorphic(graphs: List[nx.Graph]) -> List[nx.Graph]:
    buckets: Dict[str, List[nx.Graph]] = {}
    kept = []
    for H in graphs:
        key = nx.weisfeiler_lehman_graph_hash(H)
        bucket = buckets.setdefault(key, [])
        if any(nx.is_isomorphic(H, other) for other in bucket):
            continue
        bucket.append(H)
        kept.append(H)
    return kept


def connected_graphs(
    max_n: int, min_n: int = 1, caps: Optional[Caps] = None, progress: bool = False
) -> List[Graph]:
    """
    Connected graphs on min_n..max_n vertices, one per isomorphism class.

    Graphs with up to seven vertices come from the networkx graph atlas. Eight
    vertex graphs are grown from the connected seven vertex ones by attaching a
    new vertex to every nonempty neighbour set; every connected graph has a
    non-cut vertex, so nothing is missed.

    Args:
        max_n: Largest vertex count
        min_n: Smallest vertex count
        caps: Resource caps; max_n must not exceed caps.scan_vertices
        progress: Show a tqdm bar while growing the eight vertex class

    Returns:
        Graphs labelled 1..n, ordered by vertex count then edge count
    """
    caps = get_caps(caps)
    if max_n > caps.scan_vertices:
        raise CapExceededError("graph enumeration vertices", max_n, caps.scan_vertices)
    by_size: Dict[int, List[nx.Graph]] = {}
    for H in nx.graph_atlas_g():
        n = H.number_of_nodes()
        if n == 0 or n > max_n or not nx.is_connected(H):
            continue
        by_size.setdefault(n, []).append(H)
    if max_n > ATLAS_MAX_VERTICES:
        grown = []
        base = by_size.get(ATLAS_MAX_VERTICES, [])
        for H in tqdm(base, desc="growing 8-vertex graphs", disable=not progress):
            nodes = sorted(H.nodes())
            for mask in range(1, 1 << len(nodes)):
                K = H.copy()
                K.add_node(len(nodes))
                K.add_edges_from((len(nodes), nodes[k]) for k in range(len(nodes)) if mask >> k & 1)
                grown.append(K)
        by_size[ATLAS_MAX_VERTICES + 1] = _dedupe_isomorphic(grown)
        logger.info("grew %d connected graphs on 8 vertices", len(by_size[ATLAS_MAX_VERTICES + 1]))
    result = []
    for n in range(max(min_n, 1), max_n + 1):
        graphs = [NetworkxAdapter.from_networkx(H) for H in by_size.get(n, [])]
        result.extend(sorted(graphs, key=lambda g: (g.edge_count, g.edges)))
    return result
