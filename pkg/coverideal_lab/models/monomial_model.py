from typing import Any, Dict, Iterable, List, Sequence, Tuple
from pydantic import BaseModel, ConfigDict, Field, model_validator

from coverideal_lab.errors import DimensionMismatchError

Monomial = Tuple[int, ...]


def monomial_sort_key(m: Monomial) -> Tuple[int, Tuple[int, ...]]:
    """Graded order first, then x1 > x2 > ... lexicographically."""
    return (sum(m), tuple(-e for e in m))


def minimal_generators(gens: Iterable[Sequence[int]]) -> List[Monomial]:
    """
    Drop every monomial that is a proper multiple of another one.

    Args:
        gens: Candidate generators, all of one length

    Returns:
        The minimal elements in canonical order
    """
    unique = sorted({tuple(int(e) for e in g) for g in gens}, key=monomial_sort_key)
    kept: List[Monomial] = []
    for m in unique:
        if not any(all(x <= y for x, y in zip(k, m)) for k in kept):
            kept.append(m)
    return kept


def monomial_to_text(m: Monomial) -> str:
    """Render x1^a1*x2^a2*... with zero exponents omitted and `1` for the unit."""
    factors = []
    for i, e in enumerate(m):
        if e == 1:
            factors.append(f"x{i + 1}")
        elif e > 1:
            factors.append(f"x{i + 1}^{e}")
    return "*".join(factors) if factors else "1"


class MonomialIdeal(BaseModel):
    """A monomial ideal stored by its minimal generators in canonical order.

    The empty generator tuple is the zero ideal and the single all-zeros
    generator is the unit ideal.
    """

    ambient: int = Field(gt=0)
    generators: Tuple[Tuple[int, ...], ...] = ()

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="before")
    @classmethod
    def _canonicalize(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        ambient = data.get("ambient")
        gens = [tuple(int(e) for e in g) for g in data.get("generators", ())]
        for g in gens:
            if ambient is not None and len(g) != ambient:
                raise DimensionMismatchError(
                    f"generator {g} has length {len(g)}, ambient is {ambient}"
                )
            if any(e < 0 for e in g):
                raise ValueError(f"negative exponent in {g}")
        return {**data, "generators": tuple(minimal_generators(gens))}

    @classmethod
    def from_minimal(cls, ambient: int, gens: Iterable[Monomial]) -> "MonomialIdeal":
        """Build from generators already known to be minimal, skipping validation."""
        ordered = tuple(sorted(set(gens), key=monomial_sort_key))
        return cls.model_construct(ambient=ambient, generators=ordered)

    @classmethod
    def zero(cls, ambient: int) -> "MonomialIdeal":
        return cls.model_construct(ambient=ambient, generators=())

    @classmethod
    def unit(cls, ambient: int) -> "MonomialIdeal":
        return cls.model_construct(ambient=ambient, generators=((0,) * ambient,))

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return len(self.generators) == 1 and not any(self.generators[0])

    @property
    def size(self) -> int:
        return len(self.generators)

    def degrees(self) -> List[int]:
        return [sum(g) for g in self.generators]

    def to_text(self) -> str:
        return "\n".join(monomial_to_text(g) for g in self.generators)

    def to_json_dict(self) -> Dict[str, Any]:
        return {"ambient": self.ambient, "generators": [list(g) for g in self.generators]}

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(monomial_to_text(g) for g in self.generators) + ")"


class Polarization(BaseModel):
    """A polarized ideal with the block of new variables for each old one."""

    ideal: MonomialIdeal
    blocks: Tuple[Tuple[int, ...], ...]

    model_config = ConfigDict(frozen=True)


class VariableOrder(BaseModel):
    """A total order on the variables x1..xn.

    ranking[r] is the (1-based) variable at rank r; rank 0 is the greatest.
    """

    ranking: Tuple[int, ...]

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_permutation(self) -> "VariableOrder":
        if sorted(self.ranking) != list(range(1, len(self.ranking) + 1)):
            raise ValueError(f"ranking {self.ranking} is not a permutation of 1..n")
        return self

    @classmethod
    def identity(cls, n: int) -> "VariableOrder":
        return cls(ranking=tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> "VariableOrder":
        """Parse a comma separated ranking such as `3,1,2`."""
        return cls(ranking=tuple(int(p) for p in text.split(",") if p.strip()))

    @property
    def n(self) -> int:
        return len(self.ranking)

    def indices(self) -> List[int]:
        """0-based variable indices from greatest to least."""
        return [v - 1 for v in self.ranking]

    def rank_of(self) -> Dict[int, int]:
        """Map 0-based variable index to its rank."""
        return {v - 1: r for r, v in enumerate(self.ranking)}

    def __str__(self) -> str:
        return " > ".join(f"x{v}" for v in self.ranking)
