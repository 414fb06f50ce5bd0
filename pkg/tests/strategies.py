"""Hypothesis strategies shared by the property tests."""
import hypothesis.strategies as st

from coverideal_lab.models.complex_model import SimplicialComplex
from coverideal_lab.models.graph_model import CliquePartition, Graph
from coverideal_lab.services import monomial_service as ms


def exponent_vectors(n: int, max_exp: int = 2):
    """Nonzero exponent vectors of length n."""
    return st.lists(st.integers(min_value=0, max_value=max_exp), min_size=n, max_size=n).filter(any)


@st.composite
def monomial_ideals(draw, max_n: int = 3, max_exp: int = 2, max_gens: int = 4):
    n = draw(st.integers(min_value=1, max_value=max_n))
    gens = draw(st.lists(exponent_vectors(n, max_exp), min_size=1, max_size=max_gens))
    return ms.minimize(gens, n)


@st.composite
def ideal_families(draw, count: int, max_n: int = 3, max_exp: int = 2, max_gens: int = 3):
    """`count` nonzero ideals sharing one ambient ring."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    return [
        ms.minimize(draw(st.lists(exponent_vectors(n, max_exp), min_size=1, max_size=max_gens)), n)
        for _ in range(count)
    ]


@st.composite
def squarefree_ideals(draw, max_n: int = 4, max_gens: int = 4):
    n = draw(st.integers(min_value=2, max_value=max_n))
    masks = draw(st.lists(st.integers(min_value=1, max_value=(1 << n) - 1), min_size=1, max_size=max_gens))
    return ms.minimize([tuple(m >> i & 1 for i in range(n)) for m in masks], n)


@st.composite
def graphs(draw, max_n: int = 6):
    n = draw(st.integers(min_value=2, max_value=max_n))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), min_size=1, max_size=len(pairs), unique=True))
    return Graph(n=n, edges=chosen)


@st.composite
def clique_partitioned_graphs(draw, max_n: int = 5):
    """A graph on 1..n together with a clique vertex-partition of it."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    labels = draw(st.lists(st.integers(min_value=0, max_value=n - 1), min_size=n, max_size=n))
    groups = {}
    for v, label in enumerate(labels, start=1):
        groups.setdefault(label, []).append(v)
    parts = sorted(groups.values())
    edges = {(a, b) for part in parts for a in part for b in part if a < b}
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    if pairs:
        edges |= set(draw(st.lists(st.sampled_from(pairs), max_size=len(pairs), unique=True)))
    return Graph(n=n, edges=sorted(edges)), CliquePartition(parts=parts)


@st.composite
def simplicial_complexes(draw, max_n: int = 5, max_faces: int = 5):
    """Non-void complexes on 1..n generated by a few random faces."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    masks = draw(st.lists(st.integers(min_value=0, max_value=(1 << n) - 1), min_size=1, max_size=max_faces))
    faces = [{i + 1 for i in range(n) if m >> i & 1} for m in masks]
    return SimplicialComplex.from_faces(range(1, n + 1), faces)


@st.composite
def permutations_of(draw, n: int):
    return draw(st.permutations(list(range(n))))
