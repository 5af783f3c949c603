import numpy as np

from django.test import SimpleTestCase

from core.exceptions import ParameterOutOfRange
from core.seeding import (
    SEED_MAX, block_rng, block_sizes, check_seed, run_blocks
)


class SeedingTests(SimpleTestCase):

    def test_seed_range(self) -> None:
        self.assertEqual(check_seed(SEED_MAX), SEED_MAX)
        for bad in (-1, SEED_MAX + 1, True):
            with self.assertRaises(ParameterOutOfRange):
                check_seed(bad)

    def test_streams_are_reproducible_and_distinct(self) -> None:
        first = block_rng(5, 0, 3).random(4)
        np.testing.assert_array_equal(first, block_rng(5, 0, 3).random(4))
        self.assertFalse(np.array_equal(first, block_rng(5, 1, 3).random(4)))
        self.assertFalse(np.array_equal(first, block_rng(5, 0, 4).random(4)))
        self.assertFalse(np.array_equal(first, block_rng(6, 0, 3).random(4)))

    def test_block_sizes(self) -> None:
        self.assertEqual(block_sizes(10, 4), [(0, 4), (1, 4), (2, 2)])
        self.assertEqual(block_sizes(0, 4), [])

    def test_results_independent_of_workers(self) -> None:
        def work(index: int, length: int) -> np.ndarray:
            return block_rng(9, 0, index).random(length)

        serial = np.concatenate(run_blocks(work, 1000, jobs=1, size=64))
        pooled = np.concatenate(run_blocks(work, 1000, jobs=4, size=64))
        self.assertEqual(serial.size, 1000)
        np.testing.assert_array_equal(serial, pooled)
