import numpy as np
from hypothesis import given, strategies as st

from django.test import SimpleTestCase

from core.exceptions import EmptySubset, IndexOutOfRange, OrdlabError
from poset_lab.catalog import (
    antichain, chain, sign_modulus_poset, sign_modulus_utilities,
    reciprocal_poset, reciprocal_utilities, standard_example, vee
)
from poset_lab.preorder import (
    FinitePreorder, classify_monotone, comparability_components,
    from_relation, height, is_conditionally_connected, maximal_elements,
    quotient
)

# labels of the sign-modulus poset by position
MX, MY, MZ, X, Y, Z = range(6)


class FromRelationTests(SimpleTestCase):

    def test_chain_closure(self) -> None:
        """Test 0 below 2 is added by transitivity"""
        P = from_relation(3, [(0, 1), (1, 2)])
        self.assertTrue(P.le(0, 2))
        self.assertFalse(P.le(2, 0))
        self.assertTrue(P.is_total())

    def test_antichain(self) -> None:
        """Test no pairs gives only the reflexive part"""
        P = from_relation(2, [])
        self.assertEqual(P.pairs(), [])
        self.assertTrue(P.le(0, 0) and P.le(1, 1))

    def test_sign_modulus_closure(self) -> None:
        """Test the six covering pairs close to the sign-modulus poset"""
        P = from_relation(6, [
            (MX, MY), (MY, MZ), (X, Y), (Y, Z), (MX, X), (MY, Y), (MZ, Z)
        ])
        for pair in ((MX, Y), (MX, Z), (MY, Z)):
            self.assertTrue(P.le(*pair))
        self.assertFalse(P.comparable(X, MY))
        self.assertEqual(P, sign_modulus_poset())

    def test_index_out_of_range(self) -> None:
        """Test pairs must name existing elements"""
        with self.assertRaises(IndexOutOfRange):
            from_relation(2, [(0, 2)])

    def test_rejects_intransitive_matrix(self) -> None:
        """Test a relation matrix must already be transitive"""
        with self.assertRaises(OrdlabError):
            FinitePreorder.from_matrix(
                [[1, 1, 0], [0, 1, 1], [0, 0, 1]]
            )

    @given(st.integers(1, 7).flatmap(lambda n: st.tuples(
        st.just(n),
        st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
                 max_size=12)
    )))
    def test_closure_contains_pairs(self, relation) -> None:
        """Test the closure is reflexive, transitive and keeps every pair"""
        n, pairs = relation
        P = from_relation(n, pairs)
        matrix = P.matrix.astype(int)
        self.assertTrue(P.matrix.diagonal().all())
        self.assertFalse(((matrix @ matrix > 0) & ~P.matrix).any())
        for i, j in pairs:
            self.assertTrue(P.le(i, j))


class QuotientTests(SimpleTestCase):

    def test_collapses_cycle(self) -> None:
        """Test mutually related elements form one class"""
        P = from_relation(4, [(0, 1), (1, 0), (1, 2)])
        ordered, classes = quotient(P)
        self.assertEqual(classes, [(0, 1), (2,), (3,)])
        self.assertTrue(ordered.is_antisymmetric())
        self.assertTrue(ordered.le(0, 1))
        self.assertFalse(ordered.comparable(0, 2))

    def test_partial_order_unchanged(self) -> None:
        """Test the quotient of a partial order is itself"""
        P = standard_example(3)
        ordered, classes = quotient(P)
        self.assertEqual(ordered, P)
        self.assertEqual(len(classes), 6)


class MaximalElementsTests(SimpleTestCase):

    def test_chain(self) -> None:
        self.assertEqual(maximal_elements(chain(4), range(4)), (3,))

    def test_antichain(self) -> None:
        self.assertEqual(maximal_elements(antichain(3), range(3)), (0, 1, 2))

    def test_sign_modulus(self) -> None:
        """Test {-x, x, -y} has maximal elements x and -y"""
        self.assertEqual(
            maximal_elements(sign_modulus_poset(), [MX, X, MY]), (MY, X)
        )

    def test_empty_subset(self) -> None:
        with self.assertRaises(EmptySubset):
            maximal_elements(chain(2), [])


class ClassifyMonotoneTests(SimpleTestCase):

    def test_rank_on_chain(self) -> None:
        """Test the rank on a chain is injective"""
        flags = classify_monotone(chain(3), (0, 1, 2))
        self.assertTrue(flags.monotone)
        self.assertTrue(flags.strict_monotone)
        self.assertTrue(flags.injective_monotone)

    def test_constant_on_antichain(self) -> None:
        """Test a constant is monotone but not injective"""
        flags = classify_monotone(antichain(2), (0, 0))
        self.assertTrue(flags.monotone)
        self.assertFalse(flags.injective_monotone)

    def test_identity_on_reciprocal_poset(self) -> None:
        """Test u_1(x) = x is a strict monotone"""
        u1, _ = reciprocal_utilities()
        flags = classify_monotone(reciprocal_poset(), u1)
        self.assertTrue(flags.monotone)
        self.assertTrue(flags.strict_monotone)

    def test_identity_on_sign_modulus(self) -> None:
        """Test u(x) = x fails on the negative chain -1 below -2"""
        flags = classify_monotone(sign_modulus_poset(), (-1, -2, -3, 1, 2, 3))
        self.assertFalse(flags.monotone)
        self.assertFalse(flags.strict_monotone)

    def test_sign_first_encoding(self) -> None:
        """Test the sign-first encoding is an injective monotone"""
        sign_first, _ = sign_modulus_utilities()
        flags = classify_monotone(sign_modulus_poset(), sign_first)
        self.assertTrue(flags.injective_monotone)

    def test_tie_across_strict_pair(self) -> None:
        """Test a tie along a strict pair is monotone but not strict"""
        flags = classify_monotone(chain(2), (1, 1))
        self.assertTrue(flags.monotone)
        self.assertFalse(flags.strict_monotone)


class StructureTests(SimpleTestCase):

    def test_conditionally_connected(self) -> None:
        self.assertTrue(is_conditionally_connected(chain(5)))
        self.assertFalse(is_conditionally_connected(vee()))
        self.assertTrue(is_conditionally_connected(antichain(3)))

    def test_height(self) -> None:
        self.assertEqual(height(chain(4)), 4)
        self.assertEqual(height(antichain(3)), 1)
        self.assertEqual(height(standard_example(3)), 2)
        self.assertEqual(height(from_relation(3, [(0, 1), (1, 0)])), 1)

    def test_comparability_components(self) -> None:
        P = from_relation(5, [(0, 1), (3, 4)])
        self.assertEqual(comparability_components(P), [0, 0, 1, 2, 2])

    def test_restrict(self) -> None:
        """Test restricting the sign-modulus poset to its positives"""
        sub = sign_modulus_poset().restrict([X, Y, Z])
        self.assertTrue(sub.is_total())
        self.assertEqual(sub.labels, ("1", "2", "3"))
        np.testing.assert_array_equal(sub.matrix, chain(3).matrix)
