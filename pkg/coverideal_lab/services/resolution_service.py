"""Multigraded Betti numbers via upper Koszul complexes, and the invariants read off them."""
import concurrent.futures
import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from coverideal_lab.config import Caps, get_caps
from coverideal_lab.errors import (
    CapExceededError,
    DimensionMismatchError,
    InvalidComplexError,
    ZeroIdealError,
)
from coverideal_lab.models.complex_model import SimplicialComplex
from coverideal_lab.models.graph_model import Graph
from coverideal_lab.models.monomial_model import Monomial, MonomialIdeal, monomial_sort_key
from coverideal_lab.models.resolution_model import (
    BettiEntry,
    BettiTable,
    KoszulComplex,
    LcmLattice,
)
from coverideal_lab.services import graph_service as gs
from coverideal_lab.services import monomial_service as ms

logger = logging.getLogger(__name__)


def _require_nonzero(ideal: MonomialIdeal) -> None:
    if ideal.is_zero:
        raise ZeroIdealError("the zero ideal has no resolution to speak of")


def lcm_lattice(ideal: MonomialIdeal, caps: Optional[Caps] = None) -> LcmLattice:
    """
    Close G(I) under lcm.

    Every lcm of a nonempty subset is reached by repeatedly taking the lcm
    with one more generator, so the frontier only meets single generators.

    Args:
        ideal: A nonzero ideal
        caps: Resource caps; the element count must stay within caps.lattice

    Returns:
        The lattice without its bottom element
    """
    _require_nonzero(ideal)
    caps = get_caps(caps)
    gens = list(ideal.generators)
    elements = set(gens)
    frontier = set(gens)
    while frontier:
        fresh = set()
        for a in frontier:
            for g in gens:
                m = tuple(x if x >= y else y for x, y in zip(a, g))
                if m not in elements:
                    fresh.add(m)
        elements |= fresh
        if len(elements) > caps.lattice:
            raise CapExceededError("lcm lattice", len(elements), caps.lattice)
        frontier = fresh
    return LcmLattice(
        ambient=ideal.ambient, elements=tuple(sorted(elements, key=monomial_sort_key))
    )


# ===== Homology =====


def _rank(rows: List[List[int]], n_rows: int, n_cols: int) -> int:
    if n_rows == 0 or n_cols == 0:
        return 0
    matrix = DomainMatrix([[ZZ(x) for x in row] for row in rows], (n_rows, n_cols), ZZ)
    return int(matrix.convert_to(QQ).rank())


def reduced_homology_ranks(faces: Iterable[int], matrix_cap: Optional[int] = None) -> List[int]:
    """
    Ranks of reduced homology over Q, indexed by face size.

    Entry k is dim H~_{k-1}; entry 0 is dim H~_{-1}, nonzero only for {∅}.

    Args:
        faces: Every face as a bitmask, ∅ included; must be downward closed
        matrix_cap: Largest allowed boundary-matrix side

    Returns:
        Ranks for sizes 0..max face size; empty for the void complex
    """
    by_size: Dict[int, List[int]] = {}
    for f in faces:
        by_size.setdefault(bin(f).count("1"), []).append(f)
    if not by_size:
        return []
    top = max(by_size)
    index = {k: {f: r for r, f in enumerate(sorted(by_size.get(k, [])))} for k in range(top + 1)}
    boundary_rank = [0] * (top + 2)
    for k in range(1, top + 1):
        rows_of = index[k - 1]
        cols = sorted(by_size.get(k, []))
        if matrix_cap is not None and max(len(rows_of), len(cols)) > matrix_cap:
            raise CapExceededError("boundary matrix", max(len(rows_of), len(cols)), matrix_cap)
        matrix = [[0] * len(cols) for _ in range(len(rows_of))]
        for c, f in enumerate(cols):
            sign = 1
            bit = 0
            while f >> bit:
                if f >> bit & 1:
                    matrix[rows_of[f & ~(1 << bit)]][c] = sign
                    sign = -sign
                bit += 1
        boundary_rank[k] = _rank(matrix, len(rows_of), len(cols))
    return [
        len(by_size.get(k, [])) - boundary_rank[k] - boundary_rank[k + 1] for k in range(top + 1)
    ]


def _koszul_masks(
    generators: Sequence[Monomial], a: Monomial, max_size: Optional[int] = None
) -> Tuple[List[int], List[int]]:
    supp = [i for i, e in enumerate(a) if e]
    generators = [g for g in generators if all(x <= y for x, y in zip(g, a))]
    faces = []
    for mask in range(1 << len(supp)):
        size = bin(mask).count("1")
        if max_size is not None and size > max_size:
            continue
        m = list(a)
        for k, i in enumerate(supp):
            if mask >> k & 1:
                m[i] -= 1
        if any(all(x <= y for x, y in zip(g, m)) for g in generators):
            faces.append(mask)
    return supp, faces


def koszul_complex(ideal: MonomialIdeal, a: Monomial) -> KoszulComplex:
    """Faces b ⊆ supp(a), given as 0-based variable tuples, with x^(a-b) in I."""
    if len(a) != ideal.ambient:
        raise DimensionMismatchError(f"multidegree {a} in ambient {ideal.ambient}")
    supp, masks = _koszul_masks(ideal.generators, a)
    faces = [tuple(supp[k] for k in range(len(supp)) if mask >> k & 1) for mask in masks]
    return KoszulComplex(
        multidegree=tuple(a), faces=tuple(sorted(faces, key=lambda f: (len(f), f)))
    )


def _betti_at(task) -> List[Tuple[int, Tuple[int, ...], int]]:
    generators, a, max_size, matrix_cap = task
    _, faces = _koszul_masks(generators, a, max_size)
    ranks = reduced_homology_ranks(faces, matrix_cap)
    return [(i, a, r) for i, r in enumerate(ranks) if r]


def _collect(
    ambient: int, tasks: List[tuple], caps: Caps
) -> BettiTable:
    entries = []
    if caps.jobs > 1 and len(tasks) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=caps.jobs) as executor:
            chunks = executor.map(_betti_at, tasks, chunksize=max(1, len(tasks) // (4 * caps.jobs)))
            for found in chunks:
                entries.extend(found)
    else:
        for task in tasks:
            entries.extend(_betti_at(task))
    # entries are re-sorted by the table, so scheduling order never shows
    return BettiTable(
        ambient=ambient,
        entries=[BettiEntry(i=i, multidegree=a, rank=r) for i, a, r in entries],
    )


def betti_numbers(ideal: MonomialIdeal, caps: Optional[Caps] = None) -> BettiTable:
    """
    beta_{i,a}(I) = dim H~_{i-1}(K^a(I)) over the lcm lattice.

    Args:
        ideal: A nonzero ideal
        caps: Resource caps for the lattice, the matrices and the worker count

    Returns:
        Every nonzero multigraded Betti number of I as a module
    """
    caps = get_caps(caps)
    lattice = lcm_lattice(ideal, caps)
    logger.debug("betti numbers of %s over %d multidegrees", ideal, lattice.size)
    tasks = [(ideal.generators, a, None, caps.matrix) for a in lattice.elements]
    return _collect(ideal.ambient, tasks, caps)


def truncation_candidates(ideal: MonomialIdeal, t: int, caps: Optional[Caps] = None) -> List[Monomial]:
    """
    Multidegrees that can carry Betti numbers of I ∩ m^t.

    Off the lcm lattice of I, K^a(I) is a cone, and a skeleton of a cone has
    homology only in its top dimension; that needs t <= |a| <= t + |supp a| - 1.
    """
    caps = get_caps(caps)
    found = set(lcm_lattice(ideal, caps).elements)
    for d in range(t, t + ideal.ambient):
        for a in ms.monomials_of_degree(ideal.ambient, d):
            if d <= t + len(ms.support(a)) - 1 and ms.contains(ideal, a):
                found.add(a)
        if len(found) > caps.lattice:
            raise CapExceededError("truncation candidates", len(found), caps.lattice)
    return sorted(found, key=monomial_sort_key)


def truncation_betti_numbers(
    ideal: MonomialIdeal, t: int, caps: Optional[Caps] = None
) -> BettiTable:
    """
    Betti numbers of I ∩ m^t without listing its generators.

    K^a(I ∩ m^t) is the part of K^a(I) with faces of size at most |a| - t.

    Args:
        ideal: A nonzero ideal
        t: Truncation degree
        caps: Resource caps

    Returns:
        The same table as betti_numbers(truncate(ideal, t))
    """
    caps = get_caps(caps)
    _require_nonzero(ideal)
    tasks = [
        (ideal.generators, a, sum(a) - t, caps.matrix)
        for a in truncation_candidates(ideal, t, caps)
        if sum(a) >= t
    ]
    return _collect(ideal.ambient, tasks, caps)


def truncation_regularity(ideal: MonomialIdeal, t: int, caps: Optional[Caps] = None) -> int:
    """
    reg(I ∩ m^t) as a module, from the lcm lattice of I alone.

    Multidegrees off the lattice only ever contribute exactly t, and the
    truncation is generated in degrees >= t, so they can be replaced by t.
    """
    caps = get_caps(caps)
    tasks = [
        (ideal.generators, a, sum(a) - t, caps.matrix)
        for a in lcm_lattice(ideal, caps).elements
        if sum(a) >= t
    ]
    table = _collect(ideal.ambient, tasks, caps)
    return max([t] + [e.degree - e.i for e in table.entries])


# ===== Invariants =====


def regularity_of_table(table: BettiTable) -> int:
    if not table.entries:
        raise ZeroIdealError("empty Betti table")
    return max(e.degree - e.i for e in table.entries)


def regularity(ideal: MonomialIdeal, caps: Optional[Caps] = None) -> int:
    """reg(I) = max |a| - i over the nonzero beta_{i,a}(I)."""
    return regularity_of_table(betti_numbers(ideal, caps))


def quotient_regularity(ideal: MonomialIdeal, caps: Optional[Caps] = None) -> int:
    """reg(R/I) = reg(I) - 1."""
    return regularity(ideal, caps) - 1


def projective_dimension(ideal: MonomialIdeal, caps: Optional[Caps] = None) -> int:
    """pd(R/I) = 1 + the largest homological degree of I; 0 for the zero ideal."""
    if ideal.is_zero:
        return 0
    return 1 + betti_numbers(ideal, caps).max_i


def total_betti_numbers(table: BettiTable) -> List[int]:
    totals = [0] * (table.max_i + 1)
    for e in table.entries:
        totals[e.i] += e.rank
    return totals


def has_linear_resolution(ideal: MonomialIdeal, caps: Optional[Caps] = None) -> bool:
    _require_nonzero(ideal)
    degrees = set(ideal.degrees())
    if len(degrees) != 1:
        return False
    return regularity(ideal, caps) == degrees.pop()


def is_componentwise_linear(ideal: MonomialIdeal, caps: Optional[Caps] = None) -> bool:
    """Each I_<d>, for d a generator degree, has a linear resolution."""
    _require_nonzero(ideal)
    for d in sorted(set(ideal.degrees())):
        if not has_linear_resolution(ms.degree_component(ideal, d), caps):
            logger.info("component of degree %d of %s is not linear", d, ideal)
            return False
    return True


def is_cohen_macaulay_graph(graph: Graph, caps: Optional[Caps] = None) -> bool:
    """pd(R/I(G)) equals the height, the size of a smallest vertex cover."""
    if not graph.edges:
        return True
    height = min(len(c) for c in gs.minimal_vertex_covers(graph))
    return projective_dimension(gs.edge_ideal(graph), caps) == height


def is_cohen_macaulay_complex(
    complex: SimplicialComplex, ambient: Optional[int] = None, caps: Optional[Caps] = None
) -> bool:
    """pd(R/I_Δ) equals the codimension n - (dim Δ + 1)."""
    if complex.is_void:
        raise InvalidComplexError("the void complex has the unit Stanley-Reisner ideal")
    ideal = gs.stanley_reisner_ideal(complex, ambient)
    height = ideal.ambient - (gs.dimension(complex) + 1)
    return projective_dimension(ideal, caps) == height


# ===== Rendering =====


def coarse_table(table: BettiTable) -> np.ndarray:
    """
    Integer array indexed by (j - i - r0, i) where r0 is the lowest row.

    Args:
        table: A Betti table

    Returns:
        The coarse table as a numpy array; shape (0, 0) when empty
    """
    if not table.entries:
        return np.zeros((0, 0), dtype=np.int64)
    low = min(e.degree - e.i for e in table.entries)
    high = max(e.degree - e.i for e in table.entries)
    array = np.zeros((high - low + 1, table.max_i + 1), dtype=np.int64)
    for e in table.entries:
        array[e.degree - e.i - low, e.i] += e.rank
    return array


def render_betti_table(table: BettiTable) -> str:
    """Macaulay2-style text: a total row, then one row per j - i."""
    array = coarse_table(table)
    if array.size == 0:
        return "(zero)"
    low = min(e.degree - e.i for e in table.entries)
    width = max(len(str(int(array.max()))), len(str(int(array.sum(axis=0).max()))), len(str(array.shape[1] - 1)))
    label_width = max(len("total"), len(str(low + array.shape[0] - 1))) + 1

    def row(label: str, values) -> str:
        cells = [(str(int(v)) if v else ".").rjust(width) for v in values]
        return label.rjust(label_width) + " " + " ".join(cells)

    header = " " * label_width + " " + " ".join(str(i).rjust(width) for i in range(array.shape[1]))
    lines = [header, row("total:", array.sum(axis=0))]
    for r in range(array.shape[0]):
        lines.append(row(f"{low + r}:", array[r]))
    return "\n".join(lines)
