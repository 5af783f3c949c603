import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from numbers import Rational
from typing import Iterable, Sequence, Tuple, Union

import numpy as np
from scipy.special import softmax
from scipy.stats import entropy

from core.exceptions import (
    IrrationalReference, NegativeEntry, NonFiniteScore, NotNormalized
)

logger = logging.getLogger(__name__)

Number = Union[float, Fraction]

PARSE_TOL = 1e-9
SUM_TOL = 1e-12
SNAP_MAX_DENOMINATOR = 1024


def parse_number(raw) -> Number:
    """Parse a float, an integer or an exact "a/b" string"""
    if isinstance(raw, Fraction):
        return raw
    if isinstance(raw, bool):
        raise NotNormalized(f"boolean entry {raw!r}")
    if isinstance(raw, Rational):
        return Fraction(int(raw.numerator), int(raw.denominator))
    if isinstance(raw, str):
        text = raw.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            return float(text)
    return float(raw)


@dataclass(frozen=True)
class Dist:
    """Probability vector over a finite outcome set

    Entries are either all `Fraction` (exact mode) or all `float`.
    """
    probs: Tuple[Number, ...]

    def __post_init__(self):
        if not self.probs:
            raise NotNormalized("empty distribution")
        if any(x < 0 for x in self.probs):
            raise NegativeEntry(f"negative entry in {self.probs}")
        total = sum(self.probs)
        if self.exact:
            if total != 1:
                raise NotNormalized(f"entries sum to {total}")
        elif abs(total - 1) > SUM_TOL:
            raise NotNormalized(f"entries sum to {total!r}")

    @property
    def exact(self) -> bool:
        return all(isinstance(x, Fraction) for x in self.probs)

    @property
    def n(self) -> int:
        return len(self.probs)

    @property
    def array(self) -> np.ndarray:
        return np.array([float(x) for x in self.probs], dtype=float)

    def __len__(self) -> int:
        return len(self.probs)

    def __iter__(self):
        return iter(self.probs)

    def __getitem__(self, index: int) -> Number:
        return self.probs[index]

    def __str__(self) -> str:
        return "(" + ", ".join(str(x) for x in self.probs) + ")"


@dataclass(frozen=True)
class ScoreVector:
    """Utility or energy values, one per outcome"""
    values: Tuple[float, ...]

    def __post_init__(self):
        if not all(math.isfinite(float(v)) for v in self.values):
            raise NonFiniteScore(f"non-finite score in {self.values}")

    @classmethod
    def of(cls, values: Iterable) -> "ScoreVector":
        return cls(tuple(float(v) for v in values))

    @property
    def array(self) -> np.ndarray:
        return np.array(self.values, dtype=float)

    def __len__(self) -> int:
        return len(self.values)

    def __neg__(self) -> "ScoreVector":
        return ScoreVector(tuple(-v for v in self.values))


def new_dist(raw: Iterable) -> Dist:
    """Validate raw entries into a Dist

    Exact entries must sum to exactly 1; float entries are accepted within
    PARSE_TOL and renormalized.
    """
    entries = [parse_number(x) for x in raw]
    if not entries:
        raise NotNormalized("empty distribution")
    if not all(isinstance(x, Fraction) for x in entries):
        entries = [float(x) for x in entries]
        if not all(math.isfinite(x) for x in entries):
            raise NotNormalized("non-finite entry")
    if any(x < 0 for x in entries):
        raise NegativeEntry(f"negative entry in {tuple(entries)}")

    total = sum(entries)
    if isinstance(total, Fraction):
        if total != 1:
            raise NotNormalized(f"entries sum to {total}")
        return Dist(tuple(entries))

    if abs(total - 1.0) > PARSE_TOL:
        raise NotNormalized(f"entries sum to {total!r}")
    return Dist(tuple(x / total for x in entries))


def uniform(n: int, exact: bool = False) -> Dist:
    """Uniform distribution over n outcomes"""
    if exact:
        return Dist(tuple(Fraction(1, n) for _ in range(n)))
    return Dist(tuple(1.0 / n for _ in range(n)))


def point_mass(n: int, index: int, exact: bool = False) -> Dist:
    one, zero = (Fraction(1), Fraction(0)) if exact else (1.0, 0.0)
    return Dist(tuple(one if i == index else zero for i in range(n)))


def as_float(p: Dist) -> Dist:
    return new_dist(float(x) for x in p.probs)


def as_exact(p: Dist,
             max_denominator: int = SNAP_MAX_DENOMINATOR,
             tol: float = PARSE_TOL) -> Dist:
    """Snap a float Dist to rationals with bounded denominators"""
    if p.exact:
        return p
    snapped = [snap_rational(x, max_denominator, tol) for x in p.probs]
    return new_dist(snapped)


def snap_rational(x: Number,
                  max_denominator: int = SNAP_MAX_DENOMINATOR,
                  tol: float = PARSE_TOL) -> Fraction:
    """Best rational approximation of x with a bounded denominator"""
    if isinstance(x, Fraction):
        return x
    candidate = Fraction(x).limit_denominator(max_denominator)
    if abs(float(candidate) - x) > tol:
        raise IrrationalReference(
            f"{x!r} is not within {tol} of a rational with denominator "
            f"<= {max_denominator}"
        )
    return candidate


def from_rows(rows: Iterable[Sequence]) -> list:
    """Parse one Dist per row (batch input)"""
    return [new_dist(row) for row in rows]


def sorted_desc(p: Dist) -> Dist:
    """Non-increasing rearrangement of p"""
    return Dist(tuple(sorted(p.probs, reverse=True)))


def top_sums(p: Dist) -> Tuple[Number, ...]:
    """Cumulative sums of the i largest entries, i = 1..n"""
    return tuple(accumulate(sorted(p.probs, reverse=True)))


def partial_sum_utilities(p: Dist) -> Tuple[Number, ...]:
    """u_i(p) = -(sum of the i largest entries) for i = 1..n-1"""
    return tuple(-s for s in top_sums(p)[:-1])


def shannon_entropy(p: Dist) -> float:
    """Shannon entropy in nats with 0 log 0 = 0"""
    return float(entropy(p.array))


def boltzmann(U: ScoreVector, beta: float) -> Dist:
    """p(x) proportional to exp(beta U(x)), max-shifted by softmax"""
    if not math.isfinite(beta):
        raise NonFiniteScore(f"inverse temperature {beta!r}")
    probs = softmax(beta * U.array)
    return new_dist(probs.tolist())
