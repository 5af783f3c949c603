"""Multi-utilities, strict monotone multi-utilities and thermodynamic
representations of finite preorders"""
import itertools
import logging
import math
from dataclasses import dataclass
from numbers import Real
from typing import Optional, Sequence, Tuple

from core.exceptions import (
    LengthMismatch, NotARepresentation, NonFiniteScore, ScaleExceeded
)
from poset_lab.preorder import (
    FinitePreorder, check_vector, comparability_components,
    maximal_elements
)

logger = logging.getLogger(__name__)

OPTIMIZATION_MAX_N = 14


@dataclass(frozen=True)
class RealFamily:
    """Finitely many real functions, each given by its values on 0..n-1"""
    funcs: Tuple[Tuple[Real, ...], ...]

    def __post_init__(self):
        lengths = {len(f) for f in self.funcs}
        if len(lengths) > 1:
            raise LengthMismatch(f"function lengths {sorted(lengths)} differ")
        for f in self.funcs:
            if not all(math.isfinite(float(v)) for v in f):
                raise NonFiniteScore(f"non-finite value in {f}")

    @classmethod
    def of(cls, *funcs: Sequence) -> "RealFamily":
        return cls(tuple(tuple(f) for f in funcs))

    def __len__(self) -> int:
        return len(self.funcs)

    def __iter__(self):
        return iter(self.funcs)

    def values_at(self, x: int) -> Tuple[Real, ...]:
        return tuple(f[x] for f in self.funcs)


def _check_family(P: FinitePreorder, family: RealFamily) -> None:
    for f in family:
        check_vector(P, f)


def is_multi_utility(P: FinitePreorder, family: RealFamily) -> bool:
    """x below y exactly when every member is at most as large at x"""
    _check_family(P, family)
    for x, y in itertools.product(range(P.n), repeat=2):
        encoded = all(f[x] <= f[y] for f in family)
        if encoded != P.le(x, y):
            return False
    return True


def is_strict_monotone_multi_utility(P: FinitePreorder,
                                     family: RealFamily) -> bool:
    """A multi-utility that also encodes the strict part with strict
    inequalities in every member"""
    if not is_multi_utility(P, family):
        return False
    for x, y in itertools.product(range(P.n), repeat=2):
        encoded = all(f[x] < f[y] for f in family)
        if encoded != P.lt(x, y):
            return False
    return True


def is_thermo_representation(P: FinitePreorder, conserved: RealFamily,
                             entropy: Sequence) -> bool:
    """x below y iff every conserved quantity agrees and entropy grows"""
    _check_family(P, conserved)
    check_vector(P, entropy)
    for x, y in itertools.product(range(P.n), repeat=2):
        encoded = (all(g[x] == g[y] for g in conserved)
                   and entropy[x] <= entropy[y])
        if encoded != P.le(x, y):
            return False
    return True


def thermo_to_multi_utility(P: FinitePreorder, conserved: RealFamily,
                            entropy: Sequence) -> RealFamily:
    """The 2|G| + 1 functions g, -g for each conserved g, and the entropy"""
    if not is_thermo_representation(P, conserved, entropy):
        raise NotARepresentation(
            "the conserved quantities and entropy do not represent the "
            "preorder"
        )
    funcs = [tuple(g) for g in conserved]
    funcs += [tuple(-v for v in g) for g in conserved]
    funcs.append(tuple(entropy))
    return RealFamily(tuple(funcs))


Representation = Tuple[RealFamily, Tuple[int, ...]]


def find_thermo_representation(P: FinitePreorder
                               ) -> Optional[Representation]:
    """A representation with one conserved quantity, if any exists

    Conserved quantities are constant on comparability components, so a
    representation exists iff every component is totally preordered; the
    component id and the down-set size then represent P.
    """
    component = comparability_components(P)
    entropy = tuple(len(P.down_set(x)) for x in range(P.n))
    conserved = RealFamily((tuple(component),))
    if is_thermo_representation(P, conserved, entropy):
        return conserved, entropy
    logger.debug("no thermodynamic representation for %s", P)
    return None


def optimization_principle_check(P: FinitePreorder, f: Sequence) -> bool:
    """Maximizing f over any nonempty subset only yields maximal elements"""
    check_vector(P, f)
    if P.n > OPTIMIZATION_MAX_N:
        raise ScaleExceeded(
            f"subset sweep handles at most {OPTIMIZATION_MAX_N} elements"
        )
    above = [
        sum(1 << y for y in range(P.n) if P.lt(x, y)) for x in range(P.n)
    ]
    for mask in range(1, 1 << P.n):
        members = [x for x in range(P.n) if mask >> x & 1]
        best = max(f[x] for x in members)
        for x in members:
            if f[x] == best and above[x] & mask:
                logger.debug(
                    "maximizer %s of subset %s is not maximal; maximal "
                    "elements are %s", x, members,
                    maximal_elements(P, members)
                )
                return False
    return True
