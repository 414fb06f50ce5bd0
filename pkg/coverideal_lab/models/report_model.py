from typing import Any, Dict, List, Optional
from pydantic import BaseModel, Field

from coverideal_lab.models.graph_model import Graph
from coverideal_lab.models.monomial_model import MonomialIdeal


class SymbolicPowerReport(BaseModel):
    """Symbolic power computed edge-wise and, when the hypothesis holds, in closed form."""

    graph: Graph
    s: int
    via_intersection: MonomialIdeal
    via_formula: Optional[MonomialIdeal] = None
    equal: bool = False

    def __init__(self, **data):
        formula = data.get("via_formula")
        data["equal"] = formula is not None and formula == data["via_intersection"]
        super().__init__(**data)


class ExperimentRow(BaseModel):
    """One case of a suite; `claim` names what the row asserts."""

    case: str
    claim: str
    inputs: Dict[str, Any] = Field(default_factory=dict)
    values: Dict[str, Any] = Field(default_factory=dict)
    passed: bool
    error: Optional[str] = None
    seconds: float = 0.0


# Bumped when the serialized report layout changes
REPORT_SCHEMA_VERSION = 1


class ExperimentReport(BaseModel):
    """Rows in input order; `summary` counts the cases a suite skipped as vacuous."""

    schema_version: int = REPORT_SCHEMA_VERSION
    experiment: str
    parameters: Dict[str, Any] = Field(default_factory=dict)
    rows: List[ExperimentRow] = Field(default_factory=list)
    summary: Dict[str, Any] = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)

    @property
    def failures(self) -> List[ExperimentRow]:
        return [row for row in self.rows if not row.passed]
