from typing import FrozenSet, Iterable, List, Optional, Set, Tuple
from pydantic import BaseModel, ConfigDict, model_validator

from coverideal_lab.errors import InvalidComplexError


def _facet_key(f: Tuple[int, ...]) -> Tuple[int, Tuple[int, ...]]:
    return (-len(f), f)


def maximal_sets(sets: Iterable[Iterable[int]]) -> List[Tuple[int, ...]]:
    """Keep the inclusion-maximal members of a set family, as sorted tuples."""
    unique = sorted({tuple(sorted(s)) for s in sets}, key=_facet_key)
    kept: List[Tuple[int, ...]] = []
    kept_sets: List[FrozenSet[int]] = []
    for s in unique:
        fs = frozenset(s)
        if not any(fs <= k for k in kept_sets):
            kept.append(s)
            kept_sets.append(fs)
    return kept


def minimal_sets(sets: Iterable[Iterable[int]]) -> List[Tuple[int, ...]]:
    """Keep the inclusion-minimal members of a set family, as sorted tuples."""
    unique = sorted({tuple(sorted(s)) for s in sets}, key=lambda f: (len(f), f))
    kept: List[Tuple[int, ...]] = []
    kept_sets: List[FrozenSet[int]] = []
    for s in unique:
        fs = frozenset(s)
        if not any(k <= fs for k in kept_sets):
            kept.append(s)
            kept_sets.append(fs)
    return kept


class SimplicialComplex(BaseModel):
    """A simplicial complex stored by its facets.

    No facets is the void complex; the single facet () is the complex {∅}.
    Faces are never materialized.
    """

    vertex_set: Tuple[int, ...]
    facets: Tuple[Tuple[int, ...], ...]

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_facets(self) -> "SimplicialComplex":
        ground = set(self.vertex_set)
        for f in self.facets:
            if not ground.issuperset(f):
                raise InvalidComplexError(f"facet {f} leaves the vertex set {self.vertex_set}")
        canonical = tuple(maximal_sets(self.facets))
        if len(canonical) != len({tuple(sorted(f)) for f in self.facets}):
            raise InvalidComplexError("facets are not an antichain")
        object.__setattr__(self, "vertex_set", tuple(sorted(ground)))
        object.__setattr__(self, "facets", canonical)
        return self

    @classmethod
    def from_faces(cls, vertex_set: Iterable[int], faces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Generate the complex from any faces; only the maximal ones are kept."""
        return cls(vertex_set=tuple(sorted(vertex_set)), facets=tuple(maximal_sets(faces)))

    @classmethod
    def simplex(cls, vertices: Iterable[int]) -> "SimplicialComplex":
        vs = tuple(sorted(vertices))
        return cls(vertex_set=vs, facets=(vs,))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_simplex(self) -> bool:
        return len(self.facets) == 1

    def facet_sets(self) -> List[FrozenSet[int]]:
        return [frozenset(f) for f in self.facets]

    def used_vertices(self) -> Set[int]:
        """Vertices lying in some facet."""
        return {v for f in self.facets for v in f}

    def contains_face(self, face: Iterable[int]) -> bool:
        target = frozenset(face)
        return any(target <= f for f in self.facet_sets())


class CoComplex(BaseModel):
    """An upward-closed set family on a partitioned ground set.

    The family is stored by its minimal faces; `parts` is the ordered partition.
    """

    parts: Tuple[Tuple[int, ...], ...]
    minimal_faces: Tuple[Tuple[int, ...], ...]

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check(self) -> "CoComplex":
        ground: Set[int] = set()
        for part in self.parts:
            if not part:
                raise InvalidComplexError("empty part in co-complex partition")
            if ground.intersection(part):
                raise InvalidComplexError(f"part {part} overlaps an earlier part")
            ground.update(part)
        for f in self.minimal_faces:
            if not ground.issuperset(f):
                raise InvalidComplexError(f"face {f} leaves the ground set")
        object.__setattr__(self, "minimal_faces", tuple(minimal_sets(self.minimal_faces)))
        return self

    @classmethod
    def from_faces(
        cls, parts: Iterable[Iterable[int]], faces: Iterable[Iterable[int]]
    ) -> "CoComplex":
        """
        Build from an explicit face family, checking upward closure.

        Args:
            parts: Ordered partition of the ground set
            faces: Every face of the co-complex

        Returns:
            The co-complex stored by its minimal faces
        """
        parts = tuple(tuple(sorted(p)) for p in parts)
        family = {frozenset(f) for f in faces}
        ground = sorted(v for p in parts for v in p)
        for f in family:
            for v in ground:
                if v not in f and f | {v} not in family:
                    raise InvalidComplexError(
                        f"family is not upward closed: {sorted(f)} + {v} missing"
                    )
        return cls(parts=parts, minimal_faces=tuple(minimal_sets(family)))

    @property
    def ground(self) -> List[int]:
        return sorted(v for p in self.parts for v in p)

    @property
    def t(self) -> int:
        return len(self.parts)

    def contains_face(self, face: Iterable[int]) -> bool:
        target = frozenset(face)
        return any(frozenset(m) <= target for m in self.minimal_faces)

    def faces(self) -> List[FrozenSet[int]]:
        """Materialize every face: all supersets of the minimal faces inside the ground set."""
        ground = self.ground
        result = set()
        for m in self.minimal_faces:
            rest = [v for v in ground if v not in m]
            for mask in range(1 << len(rest)):
                result.add(frozenset(m).union(rest[k] for k in range(len(rest)) if mask >> k & 1))
        return sorted(result, key=lambda f: (len(f), sorted(f)))


class SheddingTree(BaseModel):
    """Certificate of vertex decomposability.

    A leaf (vertex None) is a simplex; an inner node names the shedding vertex
    and carries the trees of its link and deletion.
    """

    vertex: Optional[int] = None
    link: Optional["SheddingTree"] = None
    deletion: Optional["SheddingTree"] = None

    model_config = ConfigDict(frozen=True)

    @property
    def depth(self) -> int:
        if self.vertex is None:
            return 0
        return 1 + max(self.link.depth, self.deletion.depth)


class VertexDecomposition(BaseModel):
    decomposable: bool
    tree: Optional[SheddingTree] = None


SheddingTree.model_rebuild()
