"""The interval domain on rational endpoints and the bisection method"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence

import sympy

from core.exceptions import (
    EmptyInterval, NoSignChange, NotDirected, NotWayBelow, ParameterOutOfRange
)
from dist_core.dist import parse_number

logger = logging.getLogger(__name__)

X = sympy.Symbol('x')


def _rational(value) -> Fraction:
    number = parse_number(value)
    return number if isinstance(number, Fraction) else Fraction(number)


@dataclass(frozen=True)
class RationalInterval:
    """[lo, hi]; smaller intervals carry more information"""
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", _rational(self.lo))
        object.__setattr__(self, "hi", _rational(self.hi))
        if self.lo > self.hi:
            raise EmptyInterval(f"[{self.lo}, {self.hi}]")

    @classmethod
    def parse(cls, text: str) -> "RationalInterval":
        """Read "a/b,c/d" """
        lo, sep, hi = text.partition(",")
        if not sep:
            raise EmptyInterval(f"expected 'lo,hi', got {text!r}")
        return cls(lo.strip(), hi.strip())

    @classmethod
    def point(cls, x) -> "RationalInterval":
        return cls(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def __str__(self) -> str:
        return f"{self.lo},{self.hi}"


def interval_leq(I: RationalInterval, J: RationalInterval) -> bool:
    """I below J when J lies inside I"""
    return I.lo <= J.lo and J.hi <= I.hi


def interval_way_below(I: RationalInterval, J: RationalInterval) -> bool:
    """J lies in the interior of I"""
    return I.lo < J.lo and J.hi < I.hi


def interval_sup(intervals: Sequence[RationalInterval],
                 check_directed: bool = True) -> RationalInterval:
    """Intersection of a directed family of intervals"""
    if not intervals:
        raise NotDirected("empty family")
    lo = max(I.lo for I in intervals)
    hi = min(I.hi for I in intervals)
    if check_directed and lo > hi:
        raise NotDirected(f"intervals do not meet (max lo {lo} > min hi {hi})")
    return RationalInterval(lo, hi)


def interpolate(I: RationalInterval, J: RationalInterval) -> RationalInterval:
    """K with I << K << J, halfway between the endpoints"""
    if not interval_way_below(I, J):
        raise NotWayBelow(f"[{I}] is not way below [{J}]")
    return RationalInterval((I.lo + J.lo) / 2, (J.hi + I.hi) / 2)


def approximating_chains(J: RationalInterval,
                         depth: int) -> List[List[RationalInterval]]:
    """Increasing chains whose supremum is J in the limit

    One chain shrinks onto J from both sides, two more keep one endpoint of
    J fixed.
    """
    margin = max(J.width, Fraction(1))
    steps = [margin / 2 ** k for k in range(depth + 1)]
    return [
        [RationalInterval(J.lo - s, J.hi + s) for s in steps],
        [RationalInterval(J.lo - s, J.hi) for s in steps],
        [RationalInterval(J.lo, J.hi + s) for s in steps],
    ]


def way_below_by_chain(I: RationalInterval, J: RationalInterval,
                       depth: int = 64) -> bool:
    """Way-below tested against the definition on the approximating chains:
    each chain converging to J must reach above I at some finite stage"""
    return all(
        any(interval_leq(I, a) for a in chain)
        for chain in approximating_chains(J, depth)
    )


def rational_poly(coeffs: Sequence) -> sympy.Poly:
    """Polynomial over QQ from coefficients in ascending degree"""
    terms = [
        sympy.Rational(value.numerator, value.denominator)
        for value in map(_rational, coeffs)
    ]
    return sympy.Poly(list(reversed(terms)) or [0], X, domain=sympy.QQ)


def _sign(poly: sympy.Poly, x: Fraction) -> int:
    value = poly.eval(sympy.Rational(x.numerator, x.denominator))
    if value == 0:
        return 0
    return 1 if value > 0 else -1


def bisection_run(coeffs: Sequence, q, q_prime,
                  eps) -> List[RationalInterval]:
    """Every interval the bisection method visits, starting from [q, q']

    Each step halves the interval towards the sign change; the run stops
    once the width is at most eps or a midpoint is an exact root, which is
    then returned as a point interval.
    """
    poly = rational_poly(coeffs)
    q, q_prime, eps = _rational(q), _rational(q_prime), _rational(eps)
    if eps <= 0:
        raise ParameterOutOfRange(f"eps {eps} must be positive")
    lo, hi = min(q, q_prime), max(q, q_prime)
    sign_lo, sign_hi = _sign(poly, lo), _sign(poly, hi)
    if sign_lo * sign_hi >= 0:
        raise NoSignChange(f"p({lo}) and p({hi}) do not have opposite signs")

    run = [RationalInterval(lo, hi)]
    while hi - lo > eps:
        mid = (lo + hi) / 2
        sign_mid = _sign(poly, mid)
        if sign_mid == 0:
            run.append(RationalInterval.point(mid))
            break
        if sign_lo * sign_mid < 0:
            hi = mid
        else:
            lo, sign_lo = mid, sign_mid
        run.append(RationalInterval(lo, hi))
    logger.debug("bisection took %s halvings", len(run) - 1)
    return run
