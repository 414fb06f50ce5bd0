import io
import json
import os
import shutil
import sys
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout

# Adjust path to import from the project root
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from coverideal_lab import cli
from coverideal_lab.errors import ZeroIdealError
from coverideal_lab.models.report_model import REPORT_SCHEMA_VERSION
from coverideal_lab.parsers.graph_parser import GraphParser
from coverideal_lab.services import experiment_service as es
from coverideal_lab.services import graph_service as gs
from coverideal_lab.services import monomial_service as ms


def _raise_zero():
    raise ZeroIdealError("nothing to resolve")


class TestRunner(unittest.TestCase):
    """Cases, rows and the vacuous summary."""

    def test_error_fails_only_its_row(self):
        with self.assertLogs("coverideal_lab", level="WARNING"):
            row = es.run_case(es.Case("bad", "always raises", {}, _raise_zero))
        self.assertFalse(row.passed)
        self.assertTrue(row.error.startswith("ZeroIdealError"))

    def test_other_errors_propagate(self):
        def broken():
            raise RuntimeError("bug")

        with self.assertRaises(RuntimeError):
            es.run_case(es.Case("bug", "propagates", {}, broken))

    def test_vacuous_rows_are_counted(self):
        cases = [
            es.Case("skip", "c", {}, lambda: (True, {"vacuous": True})),
            es.Case("ok", "c", {"k": 1}, lambda: (True, {"value": 2})),
            es.Case("fail", "c", {}, lambda: (False, {})),
        ]
        report = es.run_suite("demo", {"p": 1}, cases)
        self.assertEqual([r.case for r in report.rows], ["ok", "fail"])
        self.assertEqual(report.summary, {"cases": 3, "vacuous": 1, "failed": 1})
        self.assertFalse(report.passed)
        self.assertEqual(len(report.failures), 1)


class TestCorpora(unittest.TestCase):
    """Seeded random corpora and the exhaustive ones."""

    def test_squarefree_corpus_is_seeded(self):
        first = es.random_squarefree_corpus(20, 5, seed=3)
        self.assertEqual(first, es.random_squarefree_corpus(20, 5, seed=3))
        for ideal in first:
            self.assertTrue(ms.is_squarefree(ideal))
            self.assertTrue(2 <= ideal.ambient <= 5)

    def test_monomial_corpus(self):
        corpus = es.random_monomial_corpus(10, 3, 2, 4, seed=1)
        self.assertEqual(len(corpus), 10)
        self.assertFalse(any(ideal.is_zero or ideal.is_unit for ideal in corpus))

    def test_exhaustive_corpora(self):
        self.assertEqual(len(es.pure_complex_corpus(3)), 17)
        self.assertEqual(len(es.connected_graph_corpus(4)), 9)


class TestSuites(unittest.TestCase):
    """Small runs of the experiment suites; every row must pass."""

    def assertAllPassed(self, report):
        self.assertTrue(report.passed, [(r.case, r.values, r.error) for r in report.failures])

    def test_degree_formula(self):
        self.assertEqual([es.expected_deg_max(n) for n in (3, 5, 7, 9)], [2, 3, 4, 6])
        report = es.deg_formula(13)
        self.assertEqual(len(report.rows), 6)
        self.assertAllPassed(report)

    def test_odd_cycle_regularity(self):
        report = es.odd_cycle_regularity((3, 5), 2)
        self.assertEqual(len(report.rows), 4)
        self.assertAllPassed(report)
        with self.assertRaises(ValueError):
            es.odd_cycle_regularity((4,), 1)

    def test_pentagon_runs_to_the_third_power_by_default(self):
        report = es.odd_cycle_regularity((3, 5))
        self.assertEqual([r.case for r in report.rows], ["C3 s=1", "C3 s=2", "C5 s=1", "C5 s=2", "C5 s=3"])
        self.assertAllPassed(report)
        third = report.rows[-1].values
        self.assertEqual((third["reg_power"], third["reg_symbolic"]), (9, 9))

    def test_closed_form_and_truncation(self):
        self.assertAllPassed(es.herzog_suite((3, 5), 2))
        self.assertAllPassed(es.truncation_check((3, 5), 2))

    def test_truncation_suite(self):
        report = es.truncation_suite(count=5, max_n=3, max_exp=2, max_gens=3, seed=2)
        self.assertEqual(report.summary["cases"], 5)
        self.assertAllPassed(report)

    def test_bipartite_suite(self):
        report = es.bipartite_suite([("P3", gs.path_graph(3)), ("C4", gs.cycle_graph(4))], s_max=2)
        self.assertEqual(len(report.rows), 4)
        self.assertAllPassed(report)

    def test_cm_corner(self):
        report = es.cm_corner(7)
        self.assertEqual([r.case for r in report.rows], ["C3", "C5", "C7", "star4"])
        self.assertAllPassed(report)

    def test_class_equivalence(self):
        report = es.class_equivalence(4)
        self.assertEqual(report.summary["cases"], 9)
        self.assertAllPassed(report)

    def test_wp_implications(self):
        corpus = [("C3", gs.cover_ideal(gs.cycle_graph(3))), ("C5", gs.cover_ideal(gs.cycle_graph(5)))]
        corpus += [(f"r{k}", ideal) for k, ideal in enumerate(es.random_squarefree_corpus(15, 5, seed=4))]
        self.assertAllPassed(es.wp_implies_vdec_experiment(corpus))
        self.assertAllPassed(es.wp_implies_linear_quotients_experiment(corpus))

    def test_whisker_suite(self):
        cases = [c for c in es.default_whisker_cases() if c[0] in ("triangle", "whisker(P3)", "K3 edge+vertex")]
        report = es.whisker_suite(cases, s_max=2, regularity_rows=[("triangle", 2), ("whisker(P3)", 1)])
        self.assertEqual(len(report.rows), 6)
        self.assertAllPassed(report)

    def test_lideal_suite(self):
        report = es.lideal_suite()
        self.assertEqual(len(report.rows), 6)
        self.assertAllPassed(report)

    def test_cactus_exchange(self):
        graph = es.cactus_pentagon()
        self.assertEqual(gs.girth(graph), 5)
        report = es.cactus_exchange(2)
        self.assertEqual(len(report.rows), 8)
        self.assertAllPassed(report)
        witness = next(r for r in report.rows if r.case == "witness")
        self.assertEqual(witness.values, {"p": 4})

    def test_girth_five(self):
        self.assertAllPassed(es.girth_five_experiment(es.GIRTH_FIVE_INSTANCES[:3]))

    def test_shedding_assembly(self):
        report = es.shedding_assembly_experiment(es.pure_complex_corpus(4))
        self.assertGreater(len(report.rows), 0)
        self.assertAllPassed(report)

    def test_symbolic_wp(self):
        self.assertAllPassed(es.symbolic_wp_experiment((3, 4), 2))

    def test_scans(self):
        self.assertAllPassed(es.conjecture_scan(5))
        self.assertAllPassed(es.complex_scan(3))


class TestCommandLine(unittest.TestCase):
    """The console entry point."""

    def setUp(self):
        self.tmp = tempfile.mkdtemp()
        self.triangle = os.path.join(self.tmp, "c3.json")
        GraphParser.dump(gs.cycle_graph(3), self.triangle)
        self.star = os.path.join(self.tmp, "star.txt")
        GraphParser.dump(gs.star_graph(4), self.star)

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def run_cli(self, *argv):
        out, err = io.StringIO(), io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            code = cli.main(list(argv) + ["--quiet"])
        return code, out.getvalue(), err.getvalue()

    def test_deg_formula_tsv(self):
        code, out, _ = self.run_cli("deg-formula", "--max", "9", "--format", "tsv")
        lines = out.strip().splitlines()
        self.assertEqual(code, 0)
        self.assertEqual(lines[0].split("\t"), cli.TSV_COLUMNS)
        self.assertEqual(len(lines), 5)

    def test_odd_cycle_tsv(self):
        code, out, _ = self.run_cli("odd-cycle", "--n", "5", "--smax", "2", "--format", "tsv")
        self.assertEqual(code, 0)
        self.assertEqual(len(out.strip().splitlines()), 3)

    def test_suite_json(self):
        code, out, _ = self.run_cli("cm-corner", "--max", "5")
        self.assertEqual(code, 0)
        document = json.loads(out)
        self.assertEqual(document["schema_version"], REPORT_SCHEMA_VERSION)
        self.assertEqual(document["experiment"], "cm-corner")
        self.assertEqual(len(document["rows"]), 3)

    def test_odd_cycle_default_powers(self):
        code, out, _ = self.run_cli("odd-cycle", "--n", "5", "--format", "tsv")
        self.assertEqual(code, 0)
        self.assertEqual(len(out.strip().splitlines()), 4)

    def test_cactus_exchange_alias(self):
        code, out, _ = self.run_cli("example-5-1", "--smax", "1")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["experiment"], "cactus-exchange")

    def test_wp_commands(self):
        code, out, _ = self.run_cli("wp", "check", "--graph", self.triangle)
        self.assertEqual(code, 0)
        self.assertTrue(json.loads(out)["holds"])
        code, out, _ = self.run_cli("wp", "search", "--graph", self.star, "--format", "tsv")
        self.assertEqual(code, 1)
        self.assertEqual(out.strip(), "exhausted")

    def test_reg_and_betti(self):
        code, out, _ = self.run_cli("reg", "--graph", self.triangle)
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["regularity"], 2)
        code, out, _ = self.run_cli("betti", "--graph", self.triangle, "--format", "tsv")
        self.assertEqual(code, 0)
        self.assertIn("total:", out)

    def test_graph_info(self):
        code, out, _ = self.run_cli("graph", self.triangle)
        info = json.loads(out)
        self.assertEqual(code, 0)
        self.assertEqual(info["minimal_vertex_covers"], [[1, 2], [1, 3], [2, 3]])
        self.assertTrue(info["unmixed"])

    def test_ideal_dual_text(self):
        ideal = os.path.join(self.tmp, "j.txt")
        with open(ideal, "w") as f:
            f.write("x1*x2\nx1*x3\nx2*x3\n")
        code, out, _ = self.run_cli("ideal", ideal, "--op", "dual", "--format", "tsv")
        self.assertEqual(code, 0)
        self.assertEqual(out.strip().splitlines(), ["x1*x2", "x1*x3", "x2*x3"])

    def test_errors_exit_with_one(self):
        code, _, err = self.run_cli("graph", os.path.join(self.tmp, "missing.txt"))
        self.assertEqual(code, 1)
        self.assertIn("error:", err)
        code, _, err = self.run_cli("reg")
        self.assertEqual(code, 1)


if __name__ == "__main__":
    unittest.main()
