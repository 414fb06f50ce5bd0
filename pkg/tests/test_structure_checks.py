import os
import sys
import unittest

from hypothesis import given, settings
import hypothesis.strategies as st

# Adjust path to import from the project root
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from coverideal_lab.config import Caps
from coverideal_lab.errors import CapExceededError, ZeroIdealError
from coverideal_lab.models.monomial_model import MonomialIdeal, VariableOrder
from coverideal_lab.models.structure_model import WpCertificate
from coverideal_lab.services import graph_service as gs
from coverideal_lab.services import monomial_service as ms
from coverideal_lab.services import structure_service as st_service
from tests.strategies import permutations_of, squarefree_ideals


class TestWeakPolymatroidal(unittest.TestCase):
    """The exchange check under a fixed order."""

    def setUp(self):
        self.triangle = gs.cover_ideal(gs.cycle_graph(3))

    def test_triangle_under_identity(self):
        result = st_service.is_weakly_polymatroidal(self.triangle, VariableOrder.identity(3))
        self.assertTrue(result.holds)
        self.assertTrue(st_service.verify_certificate(self.triangle, result))
        witness = next(w for w in result.witnesses if w.u == (1, 0, 1))
        self.assertEqual((witness.q, witness.p), (2, 3))
        self.assertEqual(witness.exchanged(), (1, 1, 0))

    def test_star_violation(self):
        star = gs.cover_ideal(gs.star_graph(4))
        result = st_service.is_weakly_polymatroidal(star, VariableOrder.identity(4))
        self.assertFalse(result.holds)
        self.assertEqual(result.u, (0, 1, 1, 1))
        self.assertEqual(result.q, 1)
        self.assertIn("at x1", str(result))

    def test_empty_certificate_is_rejected(self):
        bare = WpCertificate(order=VariableOrder.identity(3))
        self.assertFalse(st_service.verify_certificate(self.triangle, bare))

    def test_bad_inputs(self):
        with self.assertRaises(ValueError):
            st_service.is_weakly_polymatroidal(self.triangle, VariableOrder.identity(4))
        with self.assertRaises(ZeroIdealError):
            st_service.is_weakly_polymatroidal(MonomialIdeal.zero(3), VariableOrder.identity(3))

    def test_single_generator(self):
        ideal = ms.minimize([(2, 1, 0)], 3)
        self.assertTrue(st_service.is_weakly_polymatroidal(ideal, VariableOrder.identity(3)).holds)

    @settings(max_examples=40, deadline=None)
    @given(squarefree_ideals(max_n=4), st.data())
    def test_relabelling_carries_the_order(self, ideal, data):
        perm = data.draw(permutations_of(ideal.ambient))
        search = st_service.find_wp_order(ideal)
        if search.exhausted:
            return
        relabelled = ms.permute_variables(ideal, perm)
        ranking = tuple(perm[v - 1] + 1 for v in search.order.ranking)
        result = st_service.is_weakly_polymatroidal(relabelled, VariableOrder(ranking=ranking))
        self.assertTrue(result.holds)


class TestOrderSearch(unittest.TestCase):
    """Exhaustive search for a weakly polymatroidal order."""

    def test_triangle_gets_the_least_order(self):
        result = st_service.find_wp_order(gs.cover_ideal(gs.cycle_graph(3)))
        self.assertFalse(result.exhausted)
        self.assertEqual(result.order.ranking, (1, 2, 3))
        self.assertTrue(result.certificate.holds)

    def test_star_is_exhausted(self):
        self.assertTrue(st_service.find_wp_order(gs.cover_ideal(gs.star_graph(4))).exhausted)

    def test_heptagon_is_exhausted(self):
        self.assertTrue(st_service.find_wp_order(gs.cover_ideal(gs.cycle_graph(7))).exhausted)

    def test_pentagon_has_an_order(self):
        ideal = gs.cover_ideal(gs.cycle_graph(5))
        result = st_service.find_wp_order(ideal)
        self.assertFalse(result.exhausted)
        self.assertTrue(st_service.verify_certificate(ideal, result.certificate))

    def test_ambient_cap(self):
        with self.assertRaises(CapExceededError):
            st_service.find_wp_order(gs.cover_ideal(gs.cycle_graph(3)), Caps(ambient=2))

    @settings(max_examples=40, deadline=None)
    @given(squarefree_ideals(max_n=5, max_gens=5))
    def test_found_orders_check_out(self, ideal):
        result = st_service.find_wp_order(ideal)
        if not result.exhausted:
            self.assertTrue(st_service.verify_certificate(ideal, result.certificate))

    @settings(max_examples=30, deadline=None)
    @given(squarefree_ideals(max_n=5, max_gens=5))
    def test_weakly_polymatroidal_ideals_have_linear_quotients(self, ideal):
        result = st_service.find_wp_order(ideal)
        if not result.exhausted:
            self.assertTrue(st_service.has_linear_quotients(ideal, result.order).holds)

    @settings(max_examples=30, deadline=None)
    @given(squarefree_ideals(max_n=5, max_gens=5))
    def test_weakly_polymatroidal_duals_are_decomposable(self, ideal):
        result = st_service.find_wp_order(ideal)
        if not result.exhausted:
            complex = gs.complex_from_dual(ideal)
            self.assertTrue(gs.is_vertex_decomposable(complex).decomposable)


class TestLinearQuotients(unittest.TestCase):
    """Orders of the generators with linear colons."""

    def test_explicit_orders(self):
        self.assertTrue(st_service.is_linear_quotient_order([(1, 1, 0), (1, 0, 1), (0, 1, 1)]))
        self.assertFalse(st_service.is_linear_quotient_order([(1, 1, 0, 0), (0, 0, 1, 1)]))

    def test_square_has_none(self):
        result = st_service.has_linear_quotients(gs.cover_ideal(gs.cycle_graph(4)))
        self.assertFalse(result.holds)
        self.assertEqual(result.strategy, "search")

    def test_pentagon_has_them(self):
        result = st_service.has_linear_quotients(gs.cover_ideal(gs.cycle_graph(5)))
        self.assertTrue(result.holds)
        self.assertTrue(st_service.is_linear_quotient_order(result.order))

    @settings(max_examples=40, deadline=None)
    @given(squarefree_ideals(max_n=5, max_gens=5))
    def test_decomposable_complexes_give_linear_quotients(self, ideal):
        if gs.is_vertex_decomposable(gs.complex_from_dual(ideal)).decomposable:
            self.assertTrue(st_service.has_linear_quotients(ideal).holds)

    def test_generator_cap(self):
        with self.assertRaises(CapExceededError):
            st_service.has_linear_quotients(gs.cover_ideal(gs.cycle_graph(5)), caps=Caps(generators=2))


if __name__ == "__main__":
    unittest.main()
