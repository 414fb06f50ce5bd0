import json
import os
import shutil
import sys
import tempfile
import unittest

# Adjust path to import from the project root
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from coverideal_lab.parsers import ParseError, read_lines
from coverideal_lab.parsers.graph_parser import GraphParser
from coverideal_lab.parsers.ideal_parser import IdealParser
from coverideal_lab.services import graph_service as gs
from coverideal_lab.services import monomial_service as ms


class TestParsers(unittest.TestCase):
    """Ideal and graph files in both formats."""

    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def write(self, name: str, text: str) -> str:
        path = os.path.join(self.tmp, name)
        with open(path, "w") as f:
            f.write(text)
        return path

    def test_read_lines_strips_comments(self):
        path = self.write("lines.txt", "# header\nx1*x2  # edge\n\n  x3\n")
        self.assertEqual(read_lines(path), ["x1*x2", "x3"])

    def test_text_ideal(self):
        path = self.write("j.txt", "# J(C3)\nx1*x2\nx1*x3\nx2 * x3\nx1*x2*x3\n")
        ideal = IdealParser(path).load()
        self.assertEqual(ideal, gs.cover_ideal(gs.cycle_graph(3)))

    def test_text_ideal_with_exponents(self):
        path = self.write("i.txt", "x1^2*x3\nx2\n")
        ideal = IdealParser(path, ambient=4).load()
        self.assertEqual(ideal.ambient, 4)
        self.assertEqual(ideal.generators, ((0, 1, 0, 0), (2, 0, 1, 0)))

    def test_unit_line(self):
        path = self.write("unit.txt", "1\nx1\n")
        self.assertTrue(IdealParser(path).load().is_unit)

    def test_bad_factor(self):
        path = self.write("bad.txt", "x1*y2\n")
        with self.assertRaises(ParseError):
            IdealParser(path).load()

    def test_variable_past_ambient(self):
        path = self.write("wide.txt", "x5\n")
        with self.assertRaises(ParseError):
            IdealParser(path, ambient=3).load()

    def test_json_ideal(self):
        path = self.write("i.json", json.dumps({"ambient": 2, "generators": [[1, 1], [1, 0]]}))
        self.assertEqual(IdealParser(path).load().generators, ((1, 0),))

    def test_bad_json_ideal(self):
        path = self.write("short.json", json.dumps({"ambient": 3, "generators": [[1, 1]]}))
        with self.assertRaises(ParseError):
            IdealParser(path).load()
        path = self.write("broken.json", "{not json")
        with self.assertRaises(ParseError):
            IdealParser(path).load()

    def test_missing_file(self):
        with self.assertRaises(ParseError):
            IdealParser(os.path.join(self.tmp, "nowhere.txt")).load()

    def test_ideal_dump_and_load(self):
        ideal = ms.power(gs.cover_ideal(gs.cycle_graph(3)), 2)
        for name in ("out.json", "out.txt"):
            path = os.path.join(self.tmp, name)
            IdealParser.dump(ideal, path)
            self.assertEqual(IdealParser(path, ambient=3).load(), ideal)

    def test_edge_list(self):
        path = self.write("c5.txt", "n 6\n1 2\n2 3\n3 4\n4 5\n5 1\n")
        graph = GraphParser(path).load()
        self.assertEqual(graph.n, 6)
        self.assertEqual(graph.edges, gs.cycle_graph(5).edges)

    def test_edge_list_infers_vertex_count(self):
        path = self.write("p.txt", "1 2\n2 3\n")
        self.assertEqual(GraphParser(path).load(), gs.path_graph(3))

    def test_bad_edge_lists(self):
        for text in ("1 2 3\n", "1 a\n", "1 1\n"):
            path = self.write("bad.txt", text)
            with self.assertRaises(ParseError):
                GraphParser(path).load()

    def test_bad_vertex_count_header(self):
        path = self.write("header.txt", "# C3\nn x\n1 2\n")
        with self.assertRaises(ParseError) as ctx:
            GraphParser(path).load()
        self.assertIn("line 2", str(ctx.exception))

    def test_json_graph_and_partition(self):
        path = self.write("g.json", json.dumps({"n": 3, "edges": [[1, 2], [2, 3]]}))
        self.assertEqual(GraphParser(path).load(), gs.path_graph(3))
        parts = self.write("w.json", json.dumps([[1, 2], [3]]))
        self.assertEqual(GraphParser(path).load_partition(parts).parts, ((1, 2), (3,)))
        overlapping = self.write("o.json", json.dumps([[1, 2], [2, 3]]))
        with self.assertRaises(ParseError):
            GraphParser(path).load_partition(overlapping)

    def test_graph_dump_and_load(self):
        graph = gs.cycle_graph(5)
        for name in ("g.json", "g.txt"):
            path = os.path.join(self.tmp, name)
            GraphParser.dump(graph, path)
            self.assertEqual(GraphParser(path).load(), graph)


if __name__ == "__main__":
    unittest.main()
