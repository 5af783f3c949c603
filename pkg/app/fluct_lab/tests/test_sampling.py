import math

import numpy as np

from django.test import SimpleTestCase

from core.exceptions import ParameterOutOfRange
from dist_core.dist import new_dist, uniform
from fluct_lab.chains import MarkovChainSpec
from fluct_lab.energies import EnergyFamily, energy_family_from_chain
from fluct_lab.sampling import (
    _inverse_cdf, jarzynski_mc, sample_paths, sample_works
)

RANK_ONE = np.array([[2 / 3, 2 / 3], [1 / 3, 1 / 3]])
SWAP = np.array([[0.0, 1.0], [1.0, 0.0]])
TRAILING_ZERO = np.array([[0.5] * 3, [0.5] * 3, [0.0] * 3])
EXAMPLE = MarkovChainSpec(uniform(2), (RANK_ONE,))


class SamplePathsTests(SimpleTestCase):

    def test_deterministic_chain(self) -> None:
        spec = MarkovChainSpec(new_dist([1.0, 0.0]), (SWAP,) * 3)
        paths = sample_paths(spec, 50, seed=9)
        self.assertEqual(paths.shape, (50, 4))
        self.assertTrue((paths == [0, 1, 0, 1]).all())

    def test_same_seed(self) -> None:
        np.testing.assert_array_equal(sample_paths(EXAMPLE, 500, seed=3),
                                      sample_paths(EXAMPLE, 500, seed=3))

    def test_seeds_differ(self) -> None:
        self.assertFalse(np.array_equal(sample_paths(EXAMPLE, 500, seed=3),
                                        sample_paths(EXAMPLE, 500, seed=4)))

    def test_workers_do_not_change_output(self) -> None:
        """Test a multi-block run is identical for 1 and 3 workers"""
        np.testing.assert_array_equal(
            sample_paths(EXAMPLE, 10000, seed=1, jobs=1),
            sample_paths(EXAMPLE, 10000, seed=1, jobs=3),
        )

    def test_step_frequencies(self) -> None:
        """Test the first two states follow p0 and M within 4 sigma"""
        count = 20000
        paths = sample_paths(EXAMPLE, count, seed=7)
        for column, p in ((0, 0.5), (1, 2 / 3)):
            sigma = math.sqrt(p * (1 - p) / count)
            frequency = float((paths[:, column] == 0).mean())
            self.assertLess(abs(frequency - p), 4 * sigma)

    def test_states_without_mass_are_never_drawn(self) -> None:
        spec = MarkovChainSpec(new_dist([0.5, 0.5, 0.0]), (TRAILING_ZERO,))
        paths = sample_paths(spec, 5000, seed=2)
        self.assertFalse((paths == 2).any())

    def test_short_cdf_column_stops_at_last_mass(self) -> None:
        """Test a column summing to just under 1 never lands on the
        trailing state without mass"""
        cdf = np.array([[0.5], [0.75], [0.75]])
        self.assertEqual(_inverse_cdf(cdf, np.array([0.8]))[0], 1)
        cdf = np.array([[0.5], [1 - 1e-12], [1 - 1e-12]])
        self.assertEqual(_inverse_cdf(cdf, np.array([1 - 1e-13]))[0], 1)

    def test_count(self) -> None:
        with self.assertRaises(ParameterOutOfRange):
            sample_paths(EXAMPLE, 0)


class MonteCarloTests(SimpleTestCase):

    def test_work_frequency(self) -> None:
        """Test P(W = ln 3/4) = 1/2 on 10^5 paths"""
        works = sample_works(EXAMPLE, energy_family_from_chain(EXAMPLE),
                             10 ** 5, seed=0)
        share = float((np.abs(works - math.log(3 / 4)) < 1e-9).mean())
        self.assertAlmostEqual(share, 0.5, delta=0.005)

    def test_jarzynski_estimate(self) -> None:
        value = jarzynski_mc(EXAMPLE, energy_family_from_chain(EXAMPLE),
                             10 ** 5, seed=0)
        self.assertAlmostEqual(value, 1.0, delta=0.01)

    def test_constant_protocol_is_exact(self) -> None:
        spec = MarkovChainSpec(new_dist([2 / 3, 1 / 3]), (RANK_ONE,) * 2)
        E = EnergyFamily.from_energies(1.0, [[0.5, 1.2]] * 3)
        self.assertEqual(jarzynski_mc(spec, E, 1000, seed=5), 1.0)

    def test_band_across_seeds(self) -> None:
        E = energy_family_from_chain(EXAMPLE)
        count = 400
        for seed in range(20):
            value = jarzynski_mc(EXAMPLE, E, count, seed=seed)
            self.assertLessEqual(abs(value - 1), 5 / math.sqrt(count))
