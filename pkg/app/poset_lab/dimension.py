"""Linear extensions, realizers and the Dushnik-Miller dimension

The dimension search works on critical pairs: a family of linear
extensions realizes a partial order iff every critical pair (a, b) is
reversed, with b placed before a, by at least one member. Deciding
"dimension <= k" is then a colouring of the critical pairs by k classes
whose added constraints stay acyclic.
"""
import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from core.exceptions import (
    EmptySequence, InvalidRealizer, LengthMismatch, NotAntisymmetric,
    NotMonotone, ScaleExceeded
)
from poset_lab.preorder import (
    FinitePreorder, check_vector, classify_monotone, quotient
)
from poset_lab.representations import RealFamily

logger = logging.getLogger(__name__)

DIMENSION_MAX_N = 10


@dataclass(frozen=True)
class Realizer:
    """Linear orders, each listed from bottom to top"""
    extensions: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if not self.extensions:
            raise InvalidRealizer("a realizer needs at least one order")
        n = len(self.extensions[0])
        for order in self.extensions:
            if sorted(order) != list(range(n)):
                raise InvalidRealizer(
                    f"{order} is not a permutation of 0..{n - 1}"
                )

    @classmethod
    def of(cls, *orders: Sequence[int]) -> "Realizer":
        return cls(tuple(tuple(int(x) for x in order) for order in orders))

    @property
    def n(self) -> int:
        return len(self.extensions[0])

    def __len__(self) -> int:
        return len(self.extensions)

    def positions(self) -> List[List[int]]:
        """positions()[i][x] is the rank of x in the i-th order"""
        ranks = []
        for order in self.extensions:
            rank = [0] * len(order)
            for position, x in enumerate(order):
                rank[x] = position
            ranks.append(rank)
        return ranks


def _require_partial_order(P: FinitePreorder) -> None:
    if not P.is_antisymmetric():
        raise NotAntisymmetric(
            "distinct equivalent elements; pass the quotient instead"
        )


def linear_extension_by_monotone(P: FinitePreorder,
                                 u: Sequence) -> Tuple[int, ...]:
    """Topological order of P preferring smaller values of u, then index

    Whenever x and y are incomparable and u(x) < u(y), x comes first.
    """
    _require_partial_order(P)
    check_vector(P, u)
    if not classify_monotone(P, u).monotone:
        raise NotMonotone(f"{tuple(u)} is not monotone")
    order = nx.lexicographical_topological_sort(
        P.strict_graph(), key=lambda x: (u[x], x)
    )
    return tuple(int(x) for x in order)


def limit_of_relations(sequence: Sequence) -> np.ndarray:
    """Pairs that eventually stay in every relation of the sequence

    The finite sequence is read as eventually periodic: the period is the
    smallest k such that the last 2k relations are two copies of one block
    (k = 1 when nothing repeats), and the limit is the intersection of
    that block.
    """
    if not len(sequence):
        raise EmptySequence("limit of an empty sequence of relations")
    relations = [np.asarray(r, dtype=bool) for r in sequence]
    shapes = {r.shape for r in relations}
    if len(shapes) > 1:
        raise LengthMismatch(f"relation shapes {sorted(shapes)} differ")

    period = 1
    for k in range(1, len(relations) // 2 + 1):
        head, tail = relations[-2 * k:-k], relations[-k:]
        if all(np.array_equal(a, b) for a, b in zip(head, tail)):
            period = k
            break
    logger.debug("relation sequence of length %s has period %s",
                 len(relations), period)
    return np.logical_and.reduce(relations[-period:])


def realizer_is_valid(P: FinitePreorder, R: Realizer) -> bool:
    """Every order extends P and their intersection is exactly P"""
    if R.n != P.n or not P.is_antisymmetric():
        return False
    ranks = R.positions()
    for x, y in itertools.permutations(range(P.n), 2):
        below_everywhere = all(rank[x] < rank[y] for rank in ranks)
        if below_everywhere != P.le(x, y):
            return False
    return True


def multi_utility_from_realizer(P: FinitePreorder,
                                R: Realizer) -> RealFamily:
    """One rank function per linear order of the realizer"""
    if not realizer_is_valid(P, R):
        raise InvalidRealizer("the orders do not realize the partial order")
    return RealFamily(tuple(tuple(rank) for rank in R.positions()))


def critical_pairs(P: FinitePreorder) -> List[Tuple[int, int]]:
    """Incomparable (a, b) with everything below a below b and everything
    above b above a"""
    _require_partial_order(P)
    strict = P.strict
    found = []
    for a, b in itertools.permutations(range(P.n), 2):
        if P.comparable(a, b):
            continue
        downs = strict[:, a] & ~strict[:, b]
        ups = strict[b, :] & ~strict[a, :]
        if not downs.any() and not ups.any():
            found.append((a, b))
    return found


def _add_constraint(reach: List[int], before: int,
                    after: int) -> Optional[List[int]]:
    """Force `before` below `after` in a transitively closed DAG

    `reach[v]` is the bitmask of elements above v. Returns None when the
    new edge closes a cycle.
    """
    if reach[after] >> before & 1:
        return None
    gained = reach[after] | (1 << after)
    updated = list(reach)
    for w in range(len(reach)):
        if w == before or reach[w] >> before & 1:
            updated[w] |= gained
    return updated


def _colour_pairs(P: FinitePreorder, pairs: List[Tuple[int, int]],
                  k: int) -> Optional[List[List[int]]]:
    """Reach masks of k extensions reversing every pair, or None"""
    base = [
        sum(1 << y for y in range(P.n) if P.strict[x, y]) for x in range(P.n)
    ]
    classes = [list(base) for _ in range(k)]

    def search(index: int, used: int) -> bool:
        if index == len(pairs):
            return True
        a, b = pairs[index]
        if any(reach[b] >> a & 1 for reach in classes[:used]):
            return search(index + 1, used)
        for c in range(min(used + 1, k)):
            previous = classes[c]
            updated = _add_constraint(previous, b, a)
            if updated is None:
                continue
            classes[c] = updated
            if search(index + 1, max(used, c + 1)):
                return True
            classes[c] = previous
        return False

    return classes if search(0, 0) else None


def _extension_from_reach(reach: List[int]) -> Tuple[int, ...]:
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(reach)))
    graph.add_edges_from(
        (x, y) for x in range(len(reach)) for y in range(len(reach))
        if reach[x] >> y & 1
    )
    return tuple(nx.lexicographical_topological_sort(graph))


def _realizer_of_size(P: FinitePreorder, pairs: List[Tuple[int, int]],
                      k: int) -> Optional[Realizer]:
    classes = _colour_pairs(P, pairs, k)
    if classes is None:
        logger.debug("no realizer of size %s for %s", k, P)
        return None
    return Realizer(tuple(_extension_from_reach(reach) for reach in classes))


def _search(P: FinitePreorder, max_k: Optional[int],
            jobs: int) -> Optional[Realizer]:
    """Smallest realizer with at most max_k orders, sizes tried in parallel"""
    if P.n > DIMENSION_MAX_N:
        raise ScaleExceeded(
            f"dimension search handles at most {DIMENSION_MAX_N} elements"
        )
    pairs = critical_pairs(P)
    if max_k is None:
        max_k = max(2, P.n // 2)
    sizes = range(1, max_k + 1)
    with ThreadPoolExecutor(max_workers=max(1, jobs)) as pool:
        found = list(pool.map(lambda k: _realizer_of_size(P, pairs, k), sizes))
    return next((R for R in found if R is not None), None)


def dm_dimension(P: FinitePreorder, max_k: Optional[int] = None,
                 jobs: int = 1) -> Optional[int]:
    """Least number of linear extensions realizing P, None past max_k

    Equivalent elements are collapsed first. Without max_k the search runs
    up to max(2, n // 2), which bounds the dimension of any partial order.
    """
    ordered, _ = quotient(P)
    realizer = _search(ordered, max_k, jobs)
    return None if realizer is None else len(realizer)


def minimal_realizer(P: FinitePreorder, max_k: Optional[int] = None,
                     jobs: int = 1) -> Optional[Realizer]:
    _require_partial_order(P)
    return _search(P, max_k, jobs)
