from typing import Optional, Tuple, Union
from pydantic import BaseModel, ConfigDict

from coverideal_lab.models.monomial_model import VariableOrder, monomial_to_text


class WpWitness(BaseModel):
    """Exchange x_q u / x_p, with q and p given as 1-based variable labels.

    The witness depends only on u and q, so one entry serves every v
    whose first difference with u falls at q.
    """

    u: Tuple[int, ...]
    q: int
    p: int

    model_config = ConfigDict(frozen=True)

    def exchanged(self) -> Tuple[int, ...]:
        w = list(self.u)
        w[self.q - 1] += 1
        w[self.p - 1] -= 1
        return tuple(w)


class WpCertificate(BaseModel):
    order: VariableOrder
    witnesses: Tuple[WpWitness, ...] = ()

    model_config = ConfigDict(frozen=True)

    @property
    def holds(self) -> bool:
        return True


class WpViolation(BaseModel):
    """A pair u, v with a_q < b_q at the first difference and no admissible p."""

    order: VariableOrder
    u: Tuple[int, ...]
    v: Tuple[int, ...]
    q: int
    reason: str = "no admissible p ranked below q"

    model_config = ConfigDict(frozen=True)

    @property
    def holds(self) -> bool:
        return False

    def __str__(self) -> str:
        return (
            f"{monomial_to_text(self.u)} vs {monomial_to_text(self.v)} at x{self.q}: {self.reason}"
        )


WpResult = Union[WpCertificate, WpViolation]


class OrderSearchResult(BaseModel):
    """Outcome of the exhaustive WP order search; order None means exhausted."""

    order: Optional[VariableOrder] = None
    certificate: Optional[WpCertificate] = None
    explored: int = 0

    @property
    def exhausted(self) -> bool:
        return self.order is None


class LinearQuotientsResult(BaseModel):
    holds: bool
    order: Tuple[Tuple[int, ...], ...] = ()
    strategy: Optional[str] = None
