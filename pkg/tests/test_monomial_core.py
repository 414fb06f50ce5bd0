import itertools
import os
import sys
import unittest

from hypothesis import given, settings
import hypothesis.strategies as st

# Adjust path to import from the project root
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from coverideal_lab.errors import DimensionMismatchError, NotSquarefreeError, ZeroIdealError
from coverideal_lab.models.monomial_model import MonomialIdeal, VariableOrder
from coverideal_lab.services import monomial_service as ms
from tests.strategies import exponent_vectors, ideal_families, monomial_ideals, squarefree_ideals


def _all_monomials(n: int, bound: int):
    return itertools.product(range(bound + 1), repeat=n)


class TestMonomialArithmetic(unittest.TestCase):
    """Monomial helpers and canonical generating sets."""

    def test_lcm_gcd(self):
        self.assertEqual(ms.lcm((2, 0, 1), (1, 3, 1)), (2, 3, 1))
        self.assertEqual(ms.gcd((2, 0, 1), (1, 3, 1)), (1, 0, 1))
        self.assertEqual(ms.monomial_degree((2, 0, 1)), 3)

    def test_dimension_mismatch(self):
        with self.assertRaises(DimensionMismatchError):
            ms.lcm((1, 0), (1, 0, 0))
        with self.assertRaises(DimensionMismatchError):
            ms.intersect(MonomialIdeal.unit(2), MonomialIdeal.unit(3))

    def test_minimize_drops_multiples(self):
        ideal = ms.minimize([(1, 1, 0), (1, 0, 0), (0, 1, 1), (1, 0, 0)], 3)
        self.assertEqual(ideal.generators, ((1, 0, 0), (0, 1, 1)))

    def test_model_rejects_wrong_length(self):
        with self.assertRaises(ValueError):
            MonomialIdeal(ambient=2, generators=[[1]])

    def test_zero_and_unit(self):
        zero = MonomialIdeal.zero(3)
        unit = MonomialIdeal.unit(3)
        self.assertTrue(zero.is_zero)
        self.assertEqual(str(zero), "(0)")
        self.assertTrue(unit.is_unit)
        self.assertTrue(ms.contains(unit, (0, 0, 0)))
        self.assertFalse(ms.contains(zero, (5, 5, 5)))

    def test_power(self):
        ideal = ms.minimize([(1, 0), (0, 1)], 2)
        self.assertTrue(ms.power(ideal, 0).is_unit)
        self.assertEqual(ms.power(ideal, 2).generators, ((2, 0), (1, 1), (0, 2)))
        with self.assertRaises(ValueError):
            ms.power(ideal, -1)

    def test_intersect_and_add(self):
        x1 = ms.prime_ideal(2, [0])
        x2 = ms.prime_ideal(2, [1])
        self.assertEqual(ms.intersect(x1, x2).generators, ((1, 1),))
        self.assertEqual(ms.add(x1, x2).generators, ((1, 0), (0, 1)))
        self.assertTrue(ms.intersect_all([], 2).is_unit)

    def test_prime_power(self):
        ideal = ms.prime_power(3, 0, 2, 2)
        self.assertEqual(ideal.generators, ((2, 0, 0), (1, 0, 1), (0, 0, 2)))

    def test_colon(self):
        ideal = ms.minimize([(1, 1, 0), (0, 0, 1)], 3)
        self.assertEqual(ms.colon(ideal, (1, 0, 0)).generators, ((0, 1, 0), (0, 0, 1)))

    def test_permute_variables(self):
        ideal = ms.prime_ideal(2, [0])
        self.assertEqual(ms.permute_variables(ideal, [1, 0]).generators, ((0, 1),))
        with self.assertRaises(ValueError):
            ms.permute_variables(ideal, [0, 0])

    def test_variable_order(self):
        order = VariableOrder.parse("3,1,2")
        self.assertEqual(order.indices(), [2, 0, 1])
        self.assertEqual(order.rank_of(), {2: 0, 0: 1, 1: 2})
        self.assertEqual(str(order), "x3 > x1 > x2")
        with self.assertRaises(ValueError):
            VariableOrder.parse("1,1,2")


class TestIdealAlgebra(unittest.TestCase):
    """Laws of the ideal operations on random ideals."""

    @settings(max_examples=50, deadline=None)
    @given(ideal_families(3))
    def test_intersect_is_commutative_and_associative(self, ideals):
        I, J, K = ideals
        self.assertEqual(ms.intersect(I, J), ms.intersect(J, I))
        self.assertEqual(ms.intersect(ms.intersect(I, J), K), ms.intersect(I, ms.intersect(J, K)))

    @settings(max_examples=40, deadline=None)
    @given(ideal_families(2))
    def test_intersection_membership(self, ideals):
        I, J = ideals
        both = ms.intersect(I, J)
        for a in _all_monomials(I.ambient, 3):
            self.assertEqual(ms.contains(both, a), ms.contains(I, a) and ms.contains(J, a), a)

    @settings(max_examples=30, deadline=None)
    @given(
        monomial_ideals(max_gens=3),
        st.integers(min_value=0, max_value=2),
        st.integers(min_value=0, max_value=2),
    )
    def test_powers_add_exponents(self, ideal, a, b):
        self.assertEqual(ms.power(ideal, a + b), ms.multiply(ms.power(ideal, a), ms.power(ideal, b)))

    @settings(max_examples=50, deadline=None)
    @given(st.data())
    def test_minimize_is_idempotent_and_order_free(self, data):
        n = data.draw(st.integers(min_value=1, max_value=4))
        raw = data.draw(st.lists(exponent_vectors(n), min_size=1, max_size=6))
        ideal = ms.minimize(raw, n)
        self.assertEqual(ms.minimize(ideal.generators, n), ideal)
        self.assertEqual(ms.minimize(data.draw(st.permutations(raw)), n), ideal)
        self.assertEqual(ms.minimize(raw + raw, n), ideal)

    @settings(max_examples=30, deadline=None)
    @given(monomial_ideals())
    def test_zero_ideal_absorbs_products(self, ideal):
        zero = MonomialIdeal.zero(ideal.ambient)
        self.assertTrue(ms.multiply(ideal, zero).is_zero)
        self.assertTrue(ms.multiply(zero, ideal).is_zero)


class TestDuality(unittest.TestCase):
    """Alexander duality and polarization."""

    def test_dual_of_triangle_edges(self):
        edges = ms.minimize([(1, 1, 0), (1, 0, 1), (0, 1, 1)], 3)
        self.assertEqual(ms.alexander_dual(edges), edges)

    def test_dual_of_zero_and_unit(self):
        self.assertTrue(ms.alexander_dual(MonomialIdeal.zero(2)).is_unit)
        self.assertTrue(ms.alexander_dual(MonomialIdeal.unit(2)).is_zero)

    def test_dual_needs_squarefree(self):
        with self.assertRaises(NotSquarefreeError):
            ms.alexander_dual(ms.minimize([(2, 0)], 2))

    @settings(max_examples=60, deadline=None)
    @given(squarefree_ideals())
    def test_dual_is_an_involution(self, ideal):
        self.assertEqual(ms.alexander_dual(ms.alexander_dual(ideal)), ideal)

    def test_polarize(self):
        polarization = ms.polarize(ms.minimize([(2, 0), (1, 1)], 2))
        self.assertEqual(polarization.blocks, ((0, 1), (2,)))
        self.assertEqual(polarization.ideal.ambient, 3)
        self.assertEqual(polarization.ideal.generators, ((1, 1, 0), (1, 0, 1)))
        self.assertTrue(ms.is_squarefree(polarization.ideal))


class TestTruncation(unittest.TestCase):
    """I ∩ m^t and the degree invariants."""

    def test_truncate_principal(self):
        ideal = ms.prime_ideal(2, [0])
        self.assertEqual(ms.truncate(ideal, 2).generators, ((2, 0), (1, 1)))
        self.assertEqual(ms.truncate(ideal, 0), ideal)

    def test_degree_component(self):
        ideal = ms.minimize([(1, 0), (0, 2)], 2)
        self.assertEqual(ms.degree_component(ideal, 2).generators, ((2, 0), (1, 1), (0, 2)))

    def test_degree_bounds(self):
        ideal = ms.minimize([(1, 0, 0), (0, 2, 1)], 3)
        self.assertEqual(ms.deg_min(ideal), 1)
        self.assertEqual(ms.deg_max(ideal), 3)
        with self.assertRaises(ZeroIdealError):
            ms.deg_max(MonomialIdeal.zero(3))

    @settings(max_examples=40, deadline=None)
    @given(monomial_ideals(), st.integers(min_value=0, max_value=4))
    def test_truncation_membership(self, ideal, t):
        truncated = ms.truncate(ideal, t)
        for a in _all_monomials(ideal.ambient, 4):
            expected = ms.contains(ideal, a) and sum(a) >= t
            self.assertEqual(ms.contains(truncated, a), expected, a)


if __name__ == "__main__":
    unittest.main()
