from fractions import Fraction

import numpy as np
from hypothesis import given, strategies as st

from django.test import SimpleTestCase

from core.exceptions import (
    HypothesisViolated, NotIrreducible, NotNormalized, NotStationary,
    ZeroTargetMass
)
from dist_core.dist import new_dist, uniform
from fluct_lab.chains import (
    MarkovChainSpec, exact_stationary_dist, is_irreducible,
    metropolis_matrix, nearest_neighbour_proposal, reversed_chain,
    satisfies_detailed_balance, stationary_dist, uniform_proposal
)

RANK_ONE = np.array([[2 / 3, 2 / 3], [1 / 3, 1 / 3]])
ROTATION = np.roll(np.eye(3), 1, axis=0)


class StationaryTests(SimpleTestCase):

    def test_rank_one(self) -> None:
        np.testing.assert_allclose(
            stationary_dist(RANK_ONE).array, [2 / 3, 1 / 3], atol=1e-12
        )

    def test_doubly_stochastic(self) -> None:
        M = np.array([[0.2, 0.5, 0.3], [0.5, 0.3, 0.2], [0.3, 0.2, 0.5]])
        np.testing.assert_allclose(
            stationary_dist(M).array, np.full(3, 1 / 3), atol=1e-12
        )

    def test_identity_not_irreducible(self) -> None:
        with self.assertRaises(NotIrreducible):
            stationary_dist(np.eye(2))

    def test_exact(self) -> None:
        M = ((Fraction(2, 3), Fraction(2, 3)),
             (Fraction(1, 3), Fraction(1, 3)))
        self.assertEqual(exact_stationary_dist(M).probs,
                         (Fraction(2, 3), Fraction(1, 3)))


class IrreducibleTests(SimpleTestCase):

    def test_positive(self) -> None:
        self.assertTrue(is_irreducible(RANK_ONE))

    def test_identity(self) -> None:
        self.assertFalse(is_irreducible(np.eye(3)))

    def test_absorbing_state(self) -> None:
        """Test a chain that never leaves state 0 is reducible"""
        self.assertFalse(is_irreducible(np.array([[1.0, 0.5], [0.0, 0.5]])))

    def test_rotation(self) -> None:
        self.assertTrue(is_irreducible(ROTATION))


class DetailedBalanceTests(SimpleTestCase):

    @given(st.floats(0.05, 0.95), st.floats(0.05, 0.95))
    def test_two_states(self, a, b) -> None:
        """Test every irreducible two-state chain is reversible"""
        M = np.array([[1 - a, b], [a, 1 - b]])
        self.assertTrue(satisfies_detailed_balance(M, stationary_dist(M)))

    def test_symmetric_uniform(self) -> None:
        M = np.array([[0.2, 0.5, 0.3], [0.5, 0.3, 0.2], [0.3, 0.2, 0.5]])
        self.assertTrue(satisfies_detailed_balance(M, uniform(3)))

    def test_rotation_has_cyclic_flow(self) -> None:
        self.assertFalse(satisfies_detailed_balance(ROTATION, uniform(3)))

    def test_not_stationary(self) -> None:
        with self.assertRaises(NotStationary):
            satisfies_detailed_balance(RANK_ONE, uniform(2))


class MetropolisTests(SimpleTestCase):

    def test_uniform_target_keeps_proposal(self) -> None:
        Q = nearest_neighbour_proposal(4)
        np.testing.assert_allclose(metropolis_matrix(uniform(4), Q), Q)

    def test_swap_proposal(self) -> None:
        M = metropolis_matrix(
            new_dist(["2/3", "1/3"]), np.array([[0.0, 1.0], [1.0, 0.0]])
        )
        np.testing.assert_allclose(M, [[0.5, 1.0], [0.5, 0.0]])
        self.assertTrue(
            satisfies_detailed_balance(M, new_dist([2 / 3, 1 / 3]), tol=1e-14)
        )

    def test_zero_target_mass(self) -> None:
        with self.assertRaises(ZeroTargetMass):
            metropolis_matrix(new_dist([1.0, 0.0]), uniform_proposal(2))

    def test_asymmetric_proposal(self) -> None:
        with self.assertRaises(HypothesisViolated):
            metropolis_matrix(uniform(2), np.array([[1.0, 0.5], [0.0, 0.5]]))

    def test_disconnected_proposal(self) -> None:
        block = np.array([[0.5, 0.5], [0.5, 0.5]])
        Q = np.kron(np.eye(2), block)
        M = metropolis_matrix(new_dist([0.1, 0.2, 0.3, 0.4]), Q)
        self.assertFalse(is_irreducible(M))

    @given(st.integers(2, 5), st.integers(0, 10 ** 6), st.booleans())
    def test_always_reversible(self, n, seed, local) -> None:
        """Test the output is stochastic and reversible for its target"""
        rng = np.random.default_rng(seed)
        weights = rng.dirichlet(np.ones(n)) + 1e-3
        target = new_dist((weights / weights.sum()).tolist())
        Q = nearest_neighbour_proposal(n) if local else uniform_proposal(n)
        M = metropolis_matrix(target, Q)
        np.testing.assert_allclose(M.sum(axis=0), np.ones(n), atol=1e-12)
        self.assertTrue(satisfies_detailed_balance(M, target))


class ChainSpecTests(SimpleTestCase):

    def test_exact_build(self) -> None:
        spec = MarkovChainSpec.build(
            new_dist(["1/2", "1/2"]), [[["2/3", "2/3"], ["1/3", "1/3"]]]
        )
        self.assertTrue(spec.exact)
        self.assertEqual(spec.N, 1)
        self.assertEqual(spec.exact_mats[0][1][0], Fraction(1, 3))
        np.testing.assert_allclose(spec.mats[0], RANK_ONE)

    def test_float_build(self) -> None:
        spec = MarkovChainSpec.build(uniform(2), [RANK_ONE.tolist()])
        self.assertFalse(spec.exact)

    def test_column_sum(self) -> None:
        with self.assertRaisesRegex(NotNormalized, r"mats\[0\] column 1"):
            MarkovChainSpec(uniform(2), (np.array([[0.5, 0.5], [0.5, 0.48]]),))

    def test_reversed(self) -> None:
        """Test the backward chain starts from p_N with reversed matrices"""
        half = np.full((2, 2), 0.5)
        spec = MarkovChainSpec(uniform(2), (half, RANK_ONE))
        backward = reversed_chain(spec)
        np.testing.assert_allclose(backward.p0.array, [2 / 3, 1 / 3])
        np.testing.assert_allclose(backward.mats[0], RANK_ONE)
        np.testing.assert_allclose(backward.mats[1], half)
