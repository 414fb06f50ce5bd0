#!/usr/bin/env python3
"""
Test runner script to execute every test case of the cover ideal toolkit.
"""
import unittest
import sys
import os

# Add the project root to the path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

# Import test cases
from tests.test_monomial_core import TestDuality, TestIdealAlgebra, TestMonomialArithmetic, TestTruncation
from tests.test_graph_complex import TestComplexes, TestGraphs, TestNetworkxAdapter, TestWhiskering
from tests.test_cover_symbolic import TestCoComplexes, TestLIdeals, TestSymbolicPowers
from tests.test_resolution import TestBettiNumbers, TestHomology, TestInvariants, TestTruncatedResolutions
from tests.test_structure_checks import TestLinearQuotients, TestOrderSearch, TestWeakPolymatroidal
from tests.test_parsers import TestParsers
from tests.test_experiments import TestCommandLine, TestCorpora, TestRunner, TestSuites


def run_tests() -> bool:
    """
    Run all test cases, library first and suites last.
    """
    loader = unittest.TestLoader()
    test_suite = unittest.TestSuite()

    for case in [
        TestMonomialArithmetic,
        TestIdealAlgebra,
        TestDuality,
        TestTruncation,
        TestGraphs,
        TestWhiskering,
        TestComplexes,
        TestNetworkxAdapter,
        TestSymbolicPowers,
        TestCoComplexes,
        TestLIdeals,
        TestHomology,
        TestBettiNumbers,
        TestTruncatedResolutions,
        TestInvariants,
        TestWeakPolymatroidal,
        TestOrderSearch,
        TestLinearQuotients,
        TestParsers,
        TestRunner,
        TestCorpora,
        TestSuites,
        TestCommandLine,
    ]:
        test_suite.addTest(loader.loadTestsFromTestCase(case))

    runner = unittest.TextTestRunner(verbosity=2)
    return runner.run(test_suite).wasSuccessful()


if __name__ == "__main__":
    sys.exit(0 if run_tests() else 1)
