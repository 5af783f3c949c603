"""Finite directed-complete partial orders: directed subsets, way-below,
Scott opens and bases, all by exhaustive enumeration"""
import itertools
import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, List, Tuple

from core.exceptions import NotAntisymmetric, NotDirected, ScaleExceeded
from poset_lab.preorder import FinitePreorder, check_indices

logger = logging.getLogger(__name__)

DCPO_MAX_N = 12


@dataclass(frozen=True)
class FiniteDcpo:
    """A finite partial order; every directed subset has a largest member"""
    order: FinitePreorder

    def __post_init__(self):
        if not self.order.is_antisymmetric():
            raise NotAntisymmetric("a dcpo must be a partial order")
        if self.order.n > DCPO_MAX_N:
            raise ScaleExceeded(
                f"{self.order.n} elements, enumeration handles "
                f"n <= {DCPO_MAX_N}"
            )

    @property
    def n(self) -> int:
        return self.order.n

    def le(self, x: int, y: int) -> bool:
        return self.order.le(x, y)


def as_dcpo(P) -> FiniteDcpo:
    return P if isinstance(P, FiniteDcpo) else FiniteDcpo(P)


def is_directed(P, subset: Iterable[int]) -> bool:
    """Nonempty, and any two members have an upper bound inside"""
    D = as_dcpo(P)
    members = check_indices(D.order, subset)
    if not members:
        return False
    return all(
        any(D.le(x, z) and D.le(y, z) for z in members)
        for x, y in itertools.combinations(members, 2)
    )


def directed_sup(P, subset: Iterable[int]) -> int:
    """Largest member of a directed subset"""
    D = as_dcpo(P)
    members = check_indices(D.order, subset)
    for top in members:
        if all(D.le(x, top) for x in members):
            return top
    raise NotDirected(f"{sorted(members)} has no largest member")


def _directed_with_sups(D: FiniteDcpo
                        ) -> Iterator[Tuple[FrozenSet[int], int]]:
    """Each directed subset with its supremum m: the sets below m holding m"""
    for top in range(D.n):
        below = sorted(D.order.down_set(top) - {top})
        for size in range(len(below) + 1):
            for rest in itertools.combinations(below, size):
                yield frozenset(rest) | {top}, top


def directed_subsets(P) -> Iterator[FrozenSet[int]]:
    for subset, _ in _directed_with_sups(as_dcpo(P)):
        yield subset


def finite_way_below(P, x: int, y: int) -> bool:
    """Every directed set whose supremum is above y has a member above x"""
    D = as_dcpo(P)
    check_indices(D.order, (x, y))
    return all(
        any(D.le(x, a) for a in A)
        for A, top in _directed_with_sups(D)
        if D.le(y, top)
    )


def compact_elements(P) -> FrozenSet[int]:
    D = as_dcpo(P)
    return frozenset(x for x in range(D.n) if finite_way_below(D, x, x))


def upper_sets(P) -> List[FrozenSet[int]]:
    D = as_dcpo(P)
    ups = [sum(1 << y for y in D.order.up_set(x)) for x in range(D.n)]
    found = [
        frozenset(x for x in range(D.n) if mask >> x & 1)
        for mask in range(1 << D.n)
        if all(ups[x] & ~mask == 0 for x in range(D.n) if mask >> x & 1)
    ]
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def scott_opens(P) -> List[FrozenSet[int]]:
    """Upper sets that no directed supremum enters from outside"""
    D = as_dcpo(P)
    directed = list(_directed_with_sups(D))
    opens = [
        O for O in upper_sets(D)
        if all(O & A for A, top in directed if top in O)
    ]
    logger.debug("%s Scott opens on %s elements", len(opens), D.n)
    return opens


def order_from_opens_check(P) -> bool:
    """x below y exactly when every Scott open holding x holds y"""
    D = as_dcpo(P)
    opens = scott_opens(D)
    return all(
        D.le(x, y) == all(y in O for O in opens if x in O)
        for x in range(D.n) for y in range(D.n)
    )


def weak_basis_check(P, basis: Iterable[int]) -> bool:
    """Each element is the supremum of a directed subset of the basis"""
    D = as_dcpo(P)
    B = frozenset(check_indices(D.order, basis))
    reached = {top for A, top in _directed_with_sups(D) if A <= B}
    missing = sorted(set(range(D.n)) - reached)
    if missing:
        logger.debug("no directed subset of %s reaches %s", sorted(B), missing)
    return not missing
