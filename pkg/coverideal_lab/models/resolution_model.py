from typing import Any, Dict, List, Tuple
from pydantic import BaseModel, ConfigDict

from coverideal_lab.models.monomial_model import Monomial, monomial_sort_key


class LcmLattice(BaseModel):
    """lcms of nonempty subsets of G(I); the bottom element is left out."""

    ambient: int
    elements: Tuple[Tuple[int, ...], ...]

    model_config = ConfigDict(frozen=True)

    @property
    def size(self) -> int:
        return len(self.elements)


class KoszulComplex(BaseModel):
    """Upper Koszul complex of I at a multidegree.

    Faces are 0-based variable subsets b of supp(a) with x^(a-b) in I.
    """

    multidegree: Tuple[int, ...]
    faces: Tuple[Tuple[int, ...], ...]

    model_config = ConfigDict(frozen=True)

    @property
    def is_void(self) -> bool:
        return not self.faces


class BettiEntry(BaseModel):
    i: int
    multidegree: Tuple[int, ...]
    rank: int

    model_config = ConfigDict(frozen=True)

    @property
    def degree(self) -> int:
        return sum(self.multidegree)


class BettiTable(BaseModel):
    """Nonzero multigraded Betti numbers beta_{i,a}(I) of the ideal as a module."""

    ambient: int
    entries: Tuple[BettiEntry, ...] = ()

    model_config = ConfigDict(frozen=True)

    def __init__(self, **data):
        entries = [e if isinstance(e, BettiEntry) else BettiEntry(**e) for e in data.get("entries", ())]
        data["entries"] = tuple(
            sorted(
                (e for e in entries if e.rank),
                key=lambda e: (e.i, monomial_sort_key(e.multidegree)),
            )
        )
        super().__init__(**data)

    def rank(self, i: int, a: Monomial) -> int:
        for e in self.entries:
            if e.i == i and e.multidegree == tuple(a):
                return e.rank
        return 0

    def graded(self) -> Dict[Tuple[int, int], int]:
        """Coarse ranks keyed by (i, j) with j the total degree."""
        coarse: Dict[Tuple[int, int], int] = {}
        for e in self.entries:
            key = (e.i, e.degree)
            coarse[key] = coarse.get(key, 0) + e.rank
        return coarse

    @property
    def max_i(self) -> int:
        return max((e.i for e in self.entries), default=-1)

    def to_json_dict(self) -> Dict[str, Any]:
        return {
            "entries": [
                {"i": e.i, "multidegree": list(e.multidegree), "rank": e.rank}
                for e in self.entries
            ]
        }

    def entries_of(self, i: int) -> List[BettiEntry]:
        return [e for e in self.entries if e.i == i]
