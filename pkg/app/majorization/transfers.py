"""Pigou-Dalton transfers: from a less uncertain distribution to a more
uncertain one by permutations and transfers of probability mass from more
likely to less likely outcomes.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from core.exceptions import OrdlabError, StepBudgetExceeded
from dist_core.dist import Dist, Number, new_dist
from majorization.order import TIE_TOL, check_lengths, uncertainty_leq

logger = logging.getLogger(__name__)

REPLAY_TOL = 1e-9


@dataclass(frozen=True)
class TransferStep:
    """Move `mass` from outcome `from_index` to outcome `to_index`

    A mass equal to the gap between the two entries swaps them.
    """
    from_index: int
    to_index: int
    mass: Number

    def __post_init__(self):
        if not self.mass > 0:
            raise OrdlabError(f"transfer mass must be positive: {self.mass}")
        if self.from_index == self.to_index:
            raise OrdlabError("transfer needs two distinct outcomes")


def _apply(x: list, step: TransferStep, tol: float) -> None:
    source, target = x[step.from_index], x[step.to_index]
    gap = source - target
    if step.mass > source + tol or not gap > 0 or step.mass > gap + tol:
        raise OrdlabError(
            f"invalid transfer {step} on entries {source}, {target}"
        )
    x[step.from_index] = source - step.mass
    x[step.to_index] = target + step.mass


def apply_path(p: Dist, steps: Sequence[TransferStep],
               tol: float = TIE_TOL) -> Dist:
    """Replay transfer steps on p, validating every step"""
    x = list(p.probs)
    for step in steps:
        _apply(x, step, tol)
    if not p.exact:
        x = [max(v, 0.0) for v in x]
    return new_dist(x)


def pigou_dalton_path(p: Dist, q: Dist, max_steps: int = 64,
                      tol: float = TIE_TOL
                      ) -> Optional[List[TransferStep]]:
    """Transfers turning p into q, or None when p is not below q

    Entries are first swapped so that p is ordered like q (ties in q broken
    towards the larger entry of p), then the classical Hardy-Littlewood-Polya
    construction moves mass at the first index where the cumulative sums
    differ; at most n - 1 transfers follow the swaps.
    """
    check_lengths(p, q)
    if not uncertainty_leq(p, q, tol):
        return None

    exact = p.exact and q.exact
    eps = 0 if exact else tol
    x = list(p.probs) if exact else [float(v) for v in p.probs]
    target = list(q.probs) if exact else [float(v) for v in q.probs]
    n = len(x)
    steps: List[TransferStep] = []

    def record(step: TransferStep) -> None:
        if len(steps) >= max_steps:
            raise StepBudgetExceeded(f"more than {max_steps} steps needed")
        _apply(x, step, tol)
        steps.append(step)

    positions = sorted(range(n), key=lambda i: (-target[i], -x[i], i))

    for k, here in enumerate(positions):
        best = max(positions[k:], key=lambda i: (x[i], i == here))
        if x[best] > x[here] + eps:
            record(TransferStep(best, here, x[best] - x[here]))

    while True:
        diffs = [x[i] - target[i] for i in positions]
        j = next((i for i, d in enumerate(diffs) if abs(d) > eps), None)
        if j is None:
            break
        if diffs[j] < 0:
            raise OrdlabError(f"{p} is not below {q}: cumulative sums cross")
        k = next((i for i in range(j + 1, n) if diffs[i] < -eps), None)
        if k is None:
            logger.warning("residual %s left below tolerance", diffs[j])
            break
        mass = min(diffs[j], -diffs[k])
        source, sink = positions[j], positions[k]
        record(TransferStep(source, sink, mass))
        if not exact:
            # pin the settled entry to stop rounding drift
            if mass == diffs[j]:
                x[source] = target[source]
            if mass == -diffs[k]:
                x[sink] = target[sink]

    replayed = apply_path(p, steps, tol)
    error = max(abs(Fraction(a) - Fraction(b)) if exact
                else abs(float(a) - float(b))
                for a, b in zip(replayed.probs, q.probs))
    if error > (0 if exact else REPLAY_TOL):
        logger.warning("transfer path replays to within %s only", error)
    logger.debug("%d transfer steps from %s to %s", len(steps), p, q)
    return steps
