import math

import numpy as np
from hypothesis import given, strategies as st

from django.test import SimpleTestCase

from core.exceptions import (
    DegenerateTarget, InfeasibleBound, TargetOutOfRange
)
from dist_core.dist import ScoreVector, boltzmann, shannon_entropy
from maxent.solvers import (
    Bound, LinearConstraint, expected, solve_bounded_rational, solve_maxent
)

E3 = ScoreVector.of((1, -1, 0))
T_ROOT = (1 + math.sqrt(61)) / 6


class MaxentTests(SimpleTestCase):

    def test_three_outcome_example(self) -> None:
        """Test beta = -log t with 3t^2 - t - 5 = 0 at target 1/4"""
        p, beta = solve_maxent(LinearConstraint(E3, 0.25))
        self.assertAlmostEqual(beta, -math.log(T_ROOT), delta=1e-9)
        self.assertAlmostEqual(beta, -0.38415, delta=1e-4)
        for got, want in zip(p, (0.46624, 0.21624, 0.31752)):
            self.assertAlmostEqual(got, want, delta=1e-5)
        self.assertAlmostEqual(expected(E3, p), 0.25, delta=1e-10)

    def test_uniform_mean(self) -> None:
        """Test the uniform mean as target gives the uniform and beta 0"""
        E = ScoreVector.of((3, 1, 2))
        p, beta = solve_maxent(LinearConstraint(E, 2.0))
        self.assertEqual(beta, 0.0)
        self.assertEqual(p.probs, (1 / 3, 1 / 3, 1 / 3))

    def test_two_outcomes(self) -> None:
        p, _ = solve_maxent(LinearConstraint(ScoreVector.of((1, 0)), 2 / 3))
        self.assertAlmostEqual(p[0], 2 / 3, delta=1e-9)
        self.assertAlmostEqual(p[1], 1 / 3, delta=1e-9)

    def test_target_out_of_range(self) -> None:
        with self.assertRaises(TargetOutOfRange):
            LinearConstraint(E3, 1.5)

    def test_degenerate_target(self) -> None:
        """Test an extreme target forces the achieving support"""
        E = ScoreVector.of((1, -1, 1))
        p, beta = solve_maxent(LinearConstraint(E, 1.0))
        self.assertEqual(p.probs, (0.5, 0.0, 0.5))
        self.assertEqual(beta, -math.inf)
        with self.assertRaises(DegenerateTarget):
            solve_maxent(LinearConstraint(E, 1.0), strict_interior=True)

    def test_maximizes_entropy(self) -> None:
        """Test no point of the constraint set has larger entropy"""
        p, _ = solve_maxent(LinearConstraint(E3, 0.25))
        best = shannon_entropy(p)
        for lam in np.linspace(0, 3, 301):
            q = [(5 - lam) / 8, (3 - lam) / 8, 2 * lam / 8]
            entropy = -sum(x * math.log(x) for x in q if x > 0)
            self.assertLessEqual(entropy, best + 1e-12)

    @given(st.lists(st.integers(-5, 5), min_size=2, max_size=5)
           .filter(lambda values: len(set(values)) > 1),
           st.floats(-3, 3), st.floats(-3, 3))
    def test_moment_decreasing(self, values, a, b) -> None:
        """Test <E> under exp(-beta E) decreases with beta"""
        E = ScoreVector.of(values)
        lo, hi = sorted((a, b))
        low = expected(E, boltzmann(-E, hi))
        high = expected(E, boltzmann(-E, lo))
        self.assertLessEqual(low, high + 1e-12)


class BoundedRationalTests(SimpleTestCase):

    def test_full_entropy_floor(self) -> None:
        p, beta = solve_bounded_rational(E3, Bound.entropy_floor(math.log(3)))
        self.assertEqual(beta, 0.0)
        self.assertEqual(p.probs, (1 / 3, 1 / 3, 1 / 3))

    def test_zero_entropy_floor(self) -> None:
        """Test no constraint recovers pure maximization"""
        p, beta = solve_bounded_rational(E3, Bound.entropy_floor(0.0))
        self.assertEqual(beta, 1e3)
        self.assertAlmostEqual(p[0], 1.0, delta=1e-12)

    def test_entropy_floor_duality(self) -> None:
        """Test the entropy of the target-1/4 maxent solution as floor
        returns that same distribution"""
        maxent, beta = solve_maxent(LinearConstraint(E3, 0.25))
        p, beta_u = solve_bounded_rational(
            E3, Bound.entropy_floor(shannon_entropy(maxent))
        )
        self.assertAlmostEqual(beta_u, -beta, delta=1e-8)
        for got, want in zip(p, maxent):
            self.assertAlmostEqual(got, want, delta=1e-8)

    def test_utility_floor_duality(self) -> None:
        """Test maxent at targets below the uniform mean equals the
        utility-floor solution for -E"""
        rng = np.random.default_rng(3)
        for _ in range(50):
            E = ScoreVector.of(rng.normal(size=4))
            mean, low = E.array.mean(), E.array.min()
            target = float(low + rng.uniform(0.05, 0.95) * (mean - low))
            p, beta = solve_maxent(LinearConstraint(E, target))
            q, beta_u = solve_bounded_rational(
                -E, Bound.utility_floor(-target)
            )
            self.assertAlmostEqual(beta, beta_u, delta=1e-6)
            np.testing.assert_allclose(p.array, q.array, atol=1e-8)

    def test_slack_utility_floor(self) -> None:
        p, beta = solve_bounded_rational(E3, Bound.utility_floor(-0.5))
        self.assertEqual(beta, 0.0)
        self.assertEqual(p.probs, (1 / 3, 1 / 3, 1 / 3))

    def test_infeasible(self) -> None:
        with self.assertRaises(InfeasibleBound):
            solve_bounded_rational(E3, Bound.entropy_floor(2.0))
        with self.assertRaises(InfeasibleBound):
            solve_bounded_rational(E3, Bound.utility_floor(1.5))
