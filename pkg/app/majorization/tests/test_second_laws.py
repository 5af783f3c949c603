from fractions import Fraction

import numpy as np

from django.test import SimpleTestCase

from dist_core.dist import new_dist
from dist_core.samples import random_dist
from majorization.order import MAJORIZATION, UNCERTAINTY, OrderVerdict
from majorization.second_laws import (
    birkhoff_mixture, check_second_laws_family, entropy_member,
    negative_entropy_member, random_comparable_pair, stern_brocot,
    strict_monotone_family, top_sum_family
)


class SternBrocotTests(SimpleTestCase):

    def test_first_levels(self) -> None:
        """Test the breadth-first order of the tree"""
        self.assertEqual(
            stern_brocot(7),
            [Fraction(1), Fraction(1, 2), Fraction(2),
             Fraction(1, 3), Fraction(2, 3), Fraction(3, 2), Fraction(3)]
        )

    def test_distinct(self) -> None:
        """Test no rational is produced twice"""
        found = stern_brocot(50)
        self.assertEqual(len(set(found)), 50)


class BirkhoffTests(SimpleTestCase):

    def test_doubly_stochastic(self) -> None:
        """Test rows and columns of a mixture sum to 1"""
        matrix = birkhoff_mixture(4, np.random.default_rng(0))
        np.testing.assert_allclose(matrix.sum(axis=0), np.ones(4))
        np.testing.assert_allclose(matrix.sum(axis=1), np.ones(4))
        self.assertTrue((matrix >= 0).all())


class SecondLawsTests(SimpleTestCase):

    def test_top_sums_fail_on_tie(self) -> None:
        """Test the top-sum family misses a strict pair with s_1 tied"""
        p = new_dist(["1/2", "1/4", "1/4"])
        q = new_dist(["1/2", "1/2", "0"])
        report = check_second_laws_family(
            top_sum_family(3), [(p, q)], MAJORIZATION
        )
        self.assertFalse(report.ok)
        self.assertEqual(report.verdicts, [OrderVerdict.STRICTLY_LESS])
        violation = report.violations[0]
        self.assertEqual(violation.clause, "ii")
        self.assertEqual(violation.members, ("s_1",))

    def test_corrected_family_passes(self) -> None:
        """Test u_i + r H passes on 500 comparable pairs for n = 3"""
        rng = np.random.default_rng(7)
        pairs = [random_comparable_pair(3, rng) for _ in range(500)]
        report = check_second_laws_family(
            strict_monotone_family(3, count=20), pairs, UNCERTAINTY
        )
        self.assertEqual(report.violations, [])
        self.assertIn(OrderVerdict.STRICTLY_LESS, report.verdicts)

    def test_entropy_alone_for_two_outcomes(self) -> None:
        """Test H alone is a family of second laws for n = 2"""
        rng = np.random.default_rng(8)
        pairs = [random_comparable_pair(2, rng) for _ in range(250)]
        pairs += [(random_dist(2, rng), random_dist(2, rng))
                  for _ in range(250)]
        report = check_second_laws_family([entropy_member], pairs,
                                          UNCERTAINTY)
        self.assertTrue(report.ok)
        self.assertNotIn(OrderVerdict.INCOMPARABLE, report.verdicts)

    def test_negative_entropy_under_majorization(self) -> None:
        """Test -H works as the monotone of M for n = 2"""
        rng = np.random.default_rng(9)
        pairs = [random_comparable_pair(2, rng) for _ in range(100)]
        report = check_second_laws_family([negative_entropy_member], pairs,
                                          MAJORIZATION)
        self.assertTrue(report.ok)

    def test_entropy_alone_fails_on_incomparable(self) -> None:
        """Test a single monotone cannot witness an incomparable pair"""
        p = new_dist(["1/2", "1/2", "0"])
        q = new_dist(["2/3", "1/6", "1/6"])
        report = check_second_laws_family([entropy_member], [(p, q)],
                                          UNCERTAINTY)
        self.assertEqual(report.verdicts, [OrderVerdict.INCOMPARABLE])
        self.assertEqual(report.violations[0].clause, "iii")

    def test_equivalent_pair_needs_constant_members(self) -> None:
        """Test rearranged pairs pass clause (i)"""
        p = new_dist(["1/2", "1/3", "1/6"])
        q = new_dist(["1/6", "1/2", "1/3"])
        report = check_second_laws_family(
            strict_monotone_family(3, count=5), [(p, q)], UNCERTAINTY
        )
        self.assertEqual(report.verdicts, [OrderVerdict.EQUIVALENT])
        self.assertTrue(report.ok)
