from typing import Any, Dict, List, Set, Tuple
from pydantic import BaseModel, ConfigDict, model_validator

from coverideal_lab.errors import InvalidGraphError


class Graph(BaseModel):
    """A simple graph on the vertices 1..n.

    Edges are stored as sorted pairs in sorted order, so equal graphs compare equal.
    """

    n: int
    edges: Tuple[Tuple[int, int], ...] = ()

    model_config = ConfigDict(frozen=True)

    def __init__(self, **data):
        # Accept any iterable of pairs, e.g. straight from JSON
        if "edges" in data:
            data["edges"] = [tuple(e) for e in data["edges"]]
        super().__init__(**data)

    @model_validator(mode="after")
    def _check_edges(self) -> "Graph":
        if self.n < 0:
            raise InvalidGraphError(f"negative vertex count {self.n}")
        seen = set()
        for e in self.edges:
            if len(e) != 2:
                raise InvalidGraphError(f"edge {e} is not a pair")
            i, j = e
            if i == j:
                raise InvalidGraphError(f"loop at vertex {i}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise InvalidGraphError(f"edge {e} leaves the vertex range 1..{self.n}")
            seen.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        return self

    @property
    def vertices(self) -> List[int]:
        return list(range(1, self.n + 1))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def adjacency(self) -> Dict[int, Set[int]]:
        adj: Dict[int, Set[int]] = {v: set() for v in self.vertices}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in set(self.edges)

    def to_json_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}


class CliquePartition(BaseModel):
    """Ordered parts W_1..W_t; part i gets the whisker vertex y_i."""

    parts: Tuple[Tuple[int, ...], ...]

    model_config = ConfigDict(frozen=True)

    def __init__(self, **data):
        if "parts" in data:
            data["parts"] = [tuple(sorted(p)) for p in data["parts"]]
        super().__init__(**data)

    @model_validator(mode="after")
    def _check_disjoint(self) -> "CliquePartition":
        seen: Set[int] = set()
        for part in self.parts:
            if not part:
                raise InvalidGraphError("empty part in partition")
            overlap = seen.intersection(part)
            if overlap:
                raise InvalidGraphError(f"vertices {sorted(overlap)} appear in two parts")
            seen.update(part)
        return self

    @classmethod
    def trivial(cls, n: int) -> "CliquePartition":
        """Singleton parts {1},...,{n}."""
        return cls(parts=[(v,) for v in range(1, n + 1)])

    @property
    def t(self) -> int:
        return len(self.parts)

    def covered(self) -> Set[int]:
        return {v for part in self.parts for v in part}
