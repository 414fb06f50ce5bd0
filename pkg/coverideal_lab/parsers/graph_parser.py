from typing import List, Optional, Tuple

from pydantic import ValidationError

from . import ParseError, error_trace, numbered_lines, read_json, write_json
from coverideal_lab.models.graph_model import CliquePartition, Graph


class GraphParser:
    """Reads graphs as JSON {"n", "edges"} or as an `i j` edge list.

    An edge list may start with a line `n <count>` to declare isolated vertices.
    """

    def __init__(self, path: str):
        self.path = path

    def load(self) -> Graph:
        if self.path.endswith(".json"):
            return self.from_json(read_json(self.path))
        return self.from_edge_list(numbered_lines(self.path))

    def from_json(self, document) -> Graph:
        try:
            return Graph(n=document["n"], edges=document.get("edges", []))
        except (KeyError, TypeError, ValidationError) as e:
            error_trace(e)
            raise ParseError(self.path, f"bad graph document: {e}") from e

    def from_edge_list(self, lines: List[Tuple[int, str]]) -> Graph:
        n: Optional[int] = None
        edges = []
        for number, line in lines:
            fields = line.split()
            if fields[0] == "n" and len(fields) == 2:
                try:
                    n = int(fields[1])
                except ValueError as e:
                    raise ParseError(self.path, f"line {number}: bad vertex count in {line!r}") from e
                continue
            if len(fields) != 2:
                raise ParseError(self.path, f"line {number}: expected `i j`, got {line!r}")
            try:
                edges.append((int(fields[0]), int(fields[1])))
            except ValueError as e:
                raise ParseError(self.path, f"line {number}: non-integer vertex in {line!r}") from e
        if n is None:
            n = max((max(e) for e in edges), default=0)
        try:
            return Graph(n=n, edges=edges)
        except ValidationError as e:
            raise ParseError(self.path, str(e)) from e

    def load_partition(self, path: str) -> CliquePartition:
        """Partitions are JSON lists of vertex lists."""
        document = read_json(path)
        try:
            return CliquePartition(parts=document)
        except (TypeError, ValidationError) as e:
            raise ParseError(path, f"bad partition: {e}") from e

    @staticmethod
    def dump(graph: Graph, path: str) -> None:
        if path.endswith(".json"):
            write_json(path, graph.to_json_dict())
            return
        with open(path, "w") as f:
            f.write(f"n {graph.n}\n")
            for i, j in graph.edges:
                f.write(f"{i} {j}\n")
