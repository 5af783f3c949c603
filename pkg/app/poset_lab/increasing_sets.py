"""Families of increasing sets, the monotones they build and the density
conditions of finite preorders"""
import enum
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Iterable, Tuple

from core.exceptions import NotMonotone, RadixOutOfRange
from dist_core.dist import Number, parse_number
from poset_lab.preorder import FinitePreorder, check_indices

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IncreasingSetFamily:
    sets: Tuple[FrozenSet[int], ...]

    @classmethod
    def of(cls, sets: Iterable[Iterable[int]]) -> "IncreasingSetFamily":
        return cls(tuple(frozenset(int(x) for x in s) for s in sets))

    @classmethod
    def principal_filters(cls, P: FinitePreorder) -> "IncreasingSetFamily":
        """The up-set of every element"""
        return cls(tuple(P.up_set(x) for x in range(P.n)))

    def __len__(self) -> int:
        return len(self.sets)

    def is_valid_for(self, P: FinitePreorder) -> bool:
        """Every set is closed upwards"""
        for members in self.sets:
            check_indices(P, members)
            if any(not P.up_set(x) <= members for x in members):
                return False
        return True


class SeparationMode(enum.Enum):
    MULTI_UTILITY = "multi_utility"
    STRICT = "strict"
    INJECTIVE = "injective"


class DensityMode(enum.Enum):
    ORDER_DENSE = "order_dense"
    DEBREU_DENSE = "debreu_dense"
    UPPER_DENSE = "upper_dense"
    DEBREU_UPPER_DENSE = "debreu_upper_dense"


def monotone_from_increasing_sets(P: FinitePreorder,
                                  family: IncreasingSetFamily,
                                  r: Number = Fraction(1, 3)
                                  ) -> Tuple[Fraction, ...]:
    """f(x) = sum of r^k over the sets A_k containing x

    With 0 < r < 1/2 two elements get the same value exactly when they lie
    in the same sets. Values are exact rationals.
    """
    radix = Fraction(parse_number(r))
    if not 0 < radix < Fraction(1, 2):
        raise RadixOutOfRange(f"radix {r} outside (0, 1/2)")
    for members in family.sets:
        check_indices(P, members)
    weights = [radix ** k for k in range(len(family))]
    return tuple(
        sum((w for w, members in zip(weights, family.sets) if x in members),
            Fraction(0))
        for x in range(P.n)
    )


def _separates(family: IncreasingSetFamily, x: int, y: int) -> bool:
    """Some set contains y but not x"""
    return any(y in members and x not in members for members in family.sets)


def separation_check(P: FinitePreorder, family: IncreasingSetFamily,
                     mode: SeparationMode = SeparationMode.MULTI_UTILITY
                     ) -> bool:
    """Does the family separate the pairs the chosen monotone class needs?

    multi_utility: x from y whenever y is not below x.
    strict: x from y whenever x is strictly below y.
    injective: every non-equivalent pair in some direction.
    """
    mode = SeparationMode(mode)
    if not family.is_valid_for(P):
        raise NotMonotone("family contains a set that is not increasing")
    for x, y in itertools.product(range(P.n), repeat=2):
        if mode is SeparationMode.MULTI_UTILITY:
            needed = not P.le(y, x)
            ok = _separates(family, x, y)
        elif mode is SeparationMode.STRICT:
            needed = P.lt(x, y)
            ok = _separates(family, x, y)
        else:
            needed = not P.equivalent(x, y)
            ok = _separates(family, x, y) or _separates(family, y, x)
        if needed and not ok:
            logger.debug("pair (%s, %s) not separated in %s mode",
                         P.label(x), P.label(y), mode.value)
            return False
    return True


def density_check(P: FinitePreorder, dense: Iterable[int],
                  mode: DensityMode = DensityMode.DEBREU_DENSE) -> bool:
    """Does the subset witness the chosen density condition?

    order_dense: x < y has some d with x < d < y.
    debreu_dense: x < y has some d with x <= d <= y.
    upper_dense: x, y incomparable has some d incomparable to x, d < y.
    debreu_upper_dense: the same with d <= y.
    """
    mode = DensityMode(mode)
    dense = check_indices(P, dense)
    for x, y in itertools.product(range(P.n), repeat=2):
        if mode is DensityMode.ORDER_DENSE:
            needed = P.lt(x, y)
            ok = any(P.lt(x, d) and P.lt(d, y) for d in dense)
        elif mode is DensityMode.DEBREU_DENSE:
            needed = P.lt(x, y)
            ok = any(P.le(x, d) and P.le(d, y) for d in dense)
        elif mode is DensityMode.UPPER_DENSE:
            needed = not P.comparable(x, y)
            ok = any(not P.comparable(x, d) and P.lt(d, y) for d in dense)
        else:
            needed = not P.comparable(x, y)
            ok = any(not P.comparable(x, d) and P.le(d, y) for d in dense)
        if needed and not ok:
            return False
    return True
