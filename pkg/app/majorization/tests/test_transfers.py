from fractions import Fraction

from hypothesis import given, strategies as st

from django.test import SimpleTestCase

from core.exceptions import StepBudgetExceeded
from dist_core.dist import Dist, new_dist
from majorization.order import uncertainty_leq
from majorization.transfers import (
    TransferStep, apply_path, pigou_dalton_path
)


@st.composite
def transfer_chains(draw):
    """An exact distribution and the result of random equalizing moves"""
    n = draw(st.integers(2, 5))
    counts = draw(st.lists(st.integers(0, 12), min_size=n, max_size=n)
                  .filter(lambda c: sum(c) > 0))
    total = sum(counts)
    x = [Fraction(c, total) for c in counts]
    for _ in range(draw(st.integers(0, 4))):
        i, j = draw(st.integers(0, n - 1)), draw(st.integers(0, n - 1))
        if x[i] > x[j]:
            share = draw(st.fractions(0, 1, max_denominator=8))
            moved = share * (x[i] - x[j])
            x[i] -= moved
            x[j] += moved
    rnd = draw(st.randoms(use_true_random=False))
    start = [Fraction(c, total) for c in counts]
    rnd.shuffle(x)
    return new_dist(start), new_dist(x)


class PigouDaltonTests(SimpleTestCase):

    def test_single_transfer(self) -> None:
        """Test one transfer of 1/6 from the first to the second outcome"""
        p = new_dist(["5/6", "0", "1/6"])
        q = new_dist(["2/3", "1/6", "1/6"])
        steps = pigou_dalton_path(p, q, max_steps=8)
        self.assertEqual(steps, [TransferStep(0, 1, Fraction(1, 6))])

    def test_equal_distributions(self) -> None:
        """Test the path from p to itself is empty"""
        p = new_dist(["1/2", "1/3", "1/6"])
        self.assertEqual(pigou_dalton_path(p, p), [])

    def test_equalizing_move(self) -> None:
        """Test (1, 0) reaches (1/2, 1/2) in one move"""
        steps = pigou_dalton_path(new_dist([1, 0]), new_dist(["1/2", "1/2"]))
        self.assertEqual(steps, [TransferStep(0, 1, Fraction(1, 2))])

    def test_absent_when_not_below(self) -> None:
        """Test no path exists from a more uncertain distribution"""
        p = new_dist(["1/2", "1/2"])
        q = new_dist(["1", "0"])
        self.assertIsNone(pigou_dalton_path(p, q))

    def test_float_path_replays(self) -> None:
        """Test a float path replays within 1e-9"""
        p = new_dist([0.7, 0.2, 0.1])
        q = new_dist([0.3, 0.4, 0.3])
        replayed = apply_path(p, pigou_dalton_path(p, q))
        for a, b in zip(replayed, q):
            self.assertAlmostEqual(a, b, delta=1e-9)

    def test_step_budget(self) -> None:
        """Test the step budget is enforced"""
        p = new_dist(["1", "0", "0", "0"])
        q = new_dist(["1/4", "1/4", "1/4", "1/4"])
        with self.assertRaises(StepBudgetExceeded):
            pigou_dalton_path(p, q, max_steps=1)

    @given(transfer_chains())
    def test_exact_replay(self, chain) -> None:
        """Test paths replay exactly and use at most n - 1 transfers plus
        the swaps of one permutation"""
        p, q = chain
        self.assertTrue(uncertainty_leq(p, q))
        steps = pigou_dalton_path(p, q)
        self.assertIsNotNone(steps)
        self.assertEqual(apply_path(p, steps), q)
        self.assertLessEqual(len(steps), 2 * (p.n - 1))

    def test_steps_move_mass_downhill(self) -> None:
        """Test every step leaves a more likely outcome for a less likely"""
        p = new_dist(["1/2", "1/12", "1/3", "1/12"])
        q = new_dist(["1/4", "1/4", "1/4", "1/4"])
        x = list(p.probs)
        for step in pigou_dalton_path(p, q):
            self.assertGreater(x[step.from_index], x[step.to_index])
            self.assertLessEqual(
                step.mass, x[step.from_index] - x[step.to_index]
            )
            x[step.from_index] -= step.mass
            x[step.to_index] += step.mass
        self.assertEqual(Dist(tuple(x)), q)
