import math
from fractions import Fraction

import numpy as np
from hypothesis import given, settings, strategies as st

from django.test import SimpleTestCase

from core.exceptions import (
    IrrationalReference, NegativeEntry, NonFiniteScore, NotNormalized
)
from dist_core.dist import (
    Dist, ScoreVector, as_exact, boltzmann, new_dist, partial_sum_utilities,
    shannon_entropy, snap_rational, sorted_desc, uniform
)


def weights(n_min=2, n_max=5):
    """Strategy for non-negative weight vectors with positive total"""
    return st.lists(
        st.floats(min_value=0.0, max_value=10.0),
        min_size=n_min, max_size=n_max
    ).filter(lambda w: sum(w) > 1e-3)


def normalize(w):
    total = sum(w)
    return new_dist([x / total for x in w])


def simplex_grid(m: int) -> np.ndarray:
    """All points (i, j, m-i-j)/m of the 3-outcome simplex"""
    points = [
        (i, j, m - i - j) for i in range(m + 1) for j in range(m + 1 - i)
    ]
    return np.array(points, dtype=float) / m


class NewDistTests(SimpleTestCase):

    def test_uniform_accepted(self) -> None:
        """Test a uniform pair of floats is a valid distribution"""
        p = new_dist([0.5, 0.5])
        self.assertEqual(p.probs, (0.5, 0.5))
        self.assertFalse(p.exact)

    def test_not_normalized(self) -> None:
        """Test entries summing to 1.1 are rejected"""
        with self.assertRaises(NotNormalized):
            new_dist([0.5, 0.6])

    def test_negative_entry(self) -> None:
        """Test negative entries are rejected"""
        with self.assertRaises(NegativeEntry):
            new_dist([1.5, -0.5])

    def test_exact_strings(self) -> None:
        """Test rational strings produce an exact distribution"""
        p = new_dist(["2/3", "1/6", "1/6"])
        self.assertTrue(p.exact)
        self.assertEqual(p[0], Fraction(2, 3))

    def test_exact_must_sum_to_one(self) -> None:
        """Test exact entries are not renormalized"""
        with self.assertRaises(NotNormalized):
            new_dist(["1/3", "1/3"])

    def test_parse_tolerance_renormalizes(self) -> None:
        """Test human-entered decimals within 1e-9 are renormalized"""
        p = new_dist([0.3333333333, 0.3333333333, 0.3333333334])
        self.assertAlmostEqual(sum(p.probs), 1.0, places=12)

    def test_snap_rational(self) -> None:
        """Test floats snap to small-denominator rationals"""
        self.assertEqual(snap_rational(2 / 3), Fraction(2, 3))
        with self.assertRaises(IrrationalReference):
            snap_rational(math.pi / 4)

    def test_as_exact(self) -> None:
        """Test a float distribution converts to the exact backend"""
        p = as_exact(new_dist([2 / 3, 1 / 3]))
        self.assertEqual(p.probs, (Fraction(2, 3), Fraction(1, 3)))


class RearrangementTests(SimpleTestCase):

    def test_sorted_desc(self) -> None:
        """Test the non-increasing rearrangement"""
        p = sorted_desc(new_dist([0.1, 0.7, 0.2]))
        self.assertEqual(p.probs, (0.7, 0.2, 0.1))

    def test_sorted_desc_uniform_fixed_point(self) -> None:
        """Test uniform is a fixed point of the rearrangement"""
        self.assertEqual(sorted_desc(uniform(4)), uniform(4))

    def test_sorted_desc_exact(self) -> None:
        """Test rearranging an exact distribution"""
        p = sorted_desc(new_dist(["1/6", "2/3", "1/6"]))
        self.assertEqual(p, new_dist(["2/3", "1/6", "1/6"]))

    def test_partial_sum_utilities(self) -> None:
        """Test u_i is minus the sum of the i largest entries"""
        u = partial_sum_utilities(new_dist(["1/2", "1/4", "1/4"]))
        self.assertEqual(u, (Fraction(-1, 2), Fraction(-3, 4)))

        u = partial_sum_utilities(uniform(3, exact=True))
        self.assertEqual(u, (Fraction(-1, 3), Fraction(-2, 3)))

        u = partial_sum_utilities(new_dist([1, 0, 0]))
        self.assertEqual(u, (-1, -1))

    @given(weights())
    def test_partial_sums_non_increasing(self, w) -> None:
        """Test u_i decreases in i and never drops below -1"""
        u = partial_sum_utilities(normalize(w))
        for a, b in zip(u, u[1:]):
            self.assertLessEqual(b, a + 1e-12)
        if u:
            self.assertGreaterEqual(u[-1], -1 - 1e-12)


class EntropyTests(SimpleTestCase):

    def test_point_mass(self) -> None:
        """Test a point mass has zero entropy"""
        self.assertEqual(shannon_entropy(new_dist([1, 0])), 0.0)

    def test_uniform_two(self) -> None:
        """Test the entropy of a fair coin is ln 2"""
        self.assertAlmostEqual(shannon_entropy(uniform(2)), math.log(2))

    def test_quarter_split(self) -> None:
        """Test H(1/2, 1/4, 1/4) = 0.5 ln 2 + 0.5 ln 4"""
        h = shannon_entropy(new_dist(["1/2", "1/4", "1/4"]))
        self.assertAlmostEqual(h, 1.039721, delta=1e-6)

    @given(weights(), st.randoms(use_true_random=False))
    def test_permutation_invariance(self, w, rnd) -> None:
        """Test entropy ignores the order of outcomes"""
        p = normalize(w)
        shuffled = list(p.probs)
        rnd.shuffle(shuffled)
        self.assertAlmostEqual(
            shannon_entropy(p), shannon_entropy(new_dist(shuffled)), places=12
        )
        self.assertAlmostEqual(
            shannon_entropy(p), shannon_entropy(sorted_desc(p)), places=12
        )

    @given(weights())
    def test_entropy_bounds(self, w) -> None:
        """Test 0 <= H(p) <= ln n"""
        p = normalize(w)
        h = shannon_entropy(p)
        self.assertGreaterEqual(h, -1e-12)
        self.assertLessEqual(h, math.log(p.n) + 1e-12)


class BoltzmannTests(SimpleTestCase):

    def test_ln2_example(self) -> None:
        """Test U = (1, 0) at beta = ln 2 gives (2/3, 1/3)"""
        p = boltzmann(ScoreVector.of([1, 0]), math.log(2))
        self.assertAlmostEqual(p[0], 2 / 3, places=12)
        self.assertAlmostEqual(p[1], 1 / 3, places=12)

    def test_zero_beta_is_uniform(self) -> None:
        """Test beta = 0 gives the uniform distribution"""
        p = boltzmann(ScoreVector.of([3.0, -1.0, 7.5]), 0.0)
        for x in p:
            self.assertAlmostEqual(x, 1 / 3, places=12)

    def test_constant_utility_is_uniform(self) -> None:
        """Test a constant utility gives the uniform distribution"""
        p = boltzmann(ScoreVector.of([0, 0, 0]), 5.0)
        for x in p:
            self.assertAlmostEqual(x, 1 / 3, places=12)

    def test_overflow_safe(self) -> None:
        """Test large scores do not overflow"""
        p = boltzmann(ScoreVector.of([1000.0, 999.0]), 1.0)
        self.assertAlmostEqual(p[0], 1 / (1 + math.exp(-1)), places=12)

    def test_non_finite_score(self) -> None:
        """Test non-finite scores are rejected"""
        with self.assertRaises(NonFiniteScore):
            ScoreVector.of([1.0, float("inf")])
        with self.assertRaises(NonFiniteScore):
            boltzmann(ScoreVector.of([1.0, 0.0]), float("nan"))

    @settings(max_examples=25, deadline=None)
    @given(
        st.lists(st.floats(-3, 3), min_size=3, max_size=3),
        st.floats(0, 4)
    )
    def test_boltzmann_maximizes_free_utility(self, values, beta) -> None:
        """Test no simplex grid point beats beta E[U] + H at Boltzmann"""
        U = ScoreVector.of(values)
        p = boltzmann(U, beta)
        best = beta * float(np.dot(p.array, U.array)) + shannon_entropy(p)

        grid = simplex_grid(140)
        with np.errstate(divide="ignore", invalid="ignore"):
            logs = np.where(grid > 0, np.log(grid), 0.0)
        scores = beta * grid @ U.array - np.sum(grid * logs, axis=1)

        self.assertGreaterEqual(grid.shape[0], 10 ** 4)
        self.assertLessEqual(scores.max(), best + 1e-6)


class DistValueTests(SimpleTestCase):

    def test_immutable(self) -> None:
        """Test distributions are frozen values"""
        p = new_dist([0.5, 0.5])
        with self.assertRaises(AttributeError):
            p.probs = (1.0, 0.0)

    def test_direct_construction_validates(self) -> None:
        """Test the dataclass constructor enforces the invariants"""
        with self.assertRaises(NotNormalized):
            Dist((0.2, 0.2))
