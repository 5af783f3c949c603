"""Finite preordered sets and their elementary structure"""
import itertools
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from core.exceptions import (
    EmptySubset, IndexOutOfRange, LengthMismatch, OrdlabError
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FinitePreorder:
    """Reflexive and transitive relation on the elements 0..n-1

    `leq[i][j]` reads "i is below j". Labels are only used for display.
    """
    leq: Tuple[Tuple[bool, ...], ...]
    labels: Optional[Tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        n = len(self.leq)
        if n == 0:
            raise OrdlabError("a preorder needs at least one element")
        if any(len(row) != n for row in self.leq):
            raise OrdlabError("relation matrix is not square")
        matrix = self.matrix
        if not matrix.diagonal().all():
            raise OrdlabError("relation is not reflexive")
        steps = matrix.astype(int)
        if ((steps @ steps > 0) & ~matrix).any():
            raise OrdlabError("relation is not transitive")
        if self.labels is not None and len(self.labels) != n:
            raise LengthMismatch(f"{len(self.labels)} labels for {n} elements")

    @classmethod
    def from_matrix(cls, matrix, labels: Optional[Sequence] = None
                    ) -> "FinitePreorder":
        rows = tuple(tuple(bool(v) for v in row) for row in np.asarray(matrix))
        return cls(rows, tuple(str(x) for x in labels) if labels else None)

    @classmethod
    def from_predicate(cls, items: Sequence, leq: Callable[..., bool],
                       labels: Optional[Sequence] = None) -> "FinitePreorder":
        """Tabulate `leq(a, b)` over every ordered pair of items"""
        rows = tuple(tuple(bool(leq(a, b)) for b in items) for a in items)
        if labels is None:
            labels = [str(x) for x in items]
        return cls(rows, tuple(str(x) for x in labels))

    @cached_property
    def matrix(self) -> np.ndarray:
        matrix = np.array(self.leq, dtype=bool)
        matrix.flags.writeable = False
        return matrix

    @cached_property
    def strict(self) -> np.ndarray:
        strict = self.matrix & ~self.matrix.T
        strict.flags.writeable = False
        return strict

    @property
    def n(self) -> int:
        return len(self.leq)

    def le(self, i: int, j: int) -> bool:
        return self.leq[i][j]

    def lt(self, i: int, j: int) -> bool:
        return self.leq[i][j] and not self.leq[j][i]

    def equivalent(self, i: int, j: int) -> bool:
        return self.leq[i][j] and self.leq[j][i]

    def comparable(self, i: int, j: int) -> bool:
        return self.leq[i][j] or self.leq[j][i]

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else str(i)

    def is_antisymmetric(self) -> bool:
        both = self.matrix & self.matrix.T
        return not (both & ~np.eye(self.n, dtype=bool)).any()

    def is_total(self) -> bool:
        return bool((self.matrix | self.matrix.T).all())

    def pairs(self) -> List[Tuple[int, int]]:
        """Related pairs (i, j) with i != j"""
        return [(int(i), int(j)) for i, j in zip(*np.nonzero(self.matrix))
                if i != j]

    def up_set(self, i: int) -> frozenset:
        return frozenset(int(j) for j in np.nonzero(self.matrix[i])[0])

    def down_set(self, i: int) -> frozenset:
        return frozenset(int(j) for j in np.nonzero(self.matrix[:, i])[0])

    def restrict(self, elements: Sequence[int]) -> "FinitePreorder":
        elements = check_indices(self, elements)
        sub = self.matrix[np.ix_(elements, elements)]
        labels = [self.label(i) for i in elements] if self.labels else None
        return FinitePreorder.from_matrix(sub, labels)

    def strict_graph(self) -> nx.DiGraph:
        """Directed graph of the strict part"""
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(
            (int(i), int(j)) for i, j in zip(*np.nonzero(self.strict))
        )
        return graph

    def __str__(self) -> str:
        related = ", ".join(
            f"{self.label(i)}<={self.label(j)}" for i, j in self.pairs()
        )
        return f"FinitePreorder(n={self.n}; {related})"


def check_indices(P: FinitePreorder, elements: Iterable[int]) -> List[int]:
    elements = [int(x) for x in elements]
    bad = [x for x in elements if not 0 <= x < P.n]
    if bad:
        raise IndexOutOfRange(f"elements {bad} outside 0..{P.n - 1}")
    return elements


def check_vector(P: FinitePreorder, f: Sequence) -> None:
    if len(f) != P.n:
        raise LengthMismatch(f"{len(f)} values for {P.n} elements")


def from_relation(n: int, pairs: Iterable[Tuple[int, int]],
                  labels: Optional[Sequence] = None) -> FinitePreorder:
    """Reflexive and transitive closure of the given related pairs"""
    pairs = [(int(i), int(j)) for i, j in pairs]
    bad = [pair for pair in pairs if not all(0 <= x < n for x in pair)]
    if bad:
        raise IndexOutOfRange(f"pairs {bad} outside 0..{n - 1}")
    graph = nx.DiGraph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(pairs)
    closure = nx.transitive_closure(graph, reflexive=True)
    matrix = np.eye(n, dtype=bool)
    for i, j in closure.edges:
        matrix[i, j] = True
    return FinitePreorder.from_matrix(matrix, labels)


def quotient(P: FinitePreorder
             ) -> Tuple[FinitePreorder, List[Tuple[int, ...]]]:
    """Collapse equivalence classes into a partial order

    Classes are listed by their smallest member; class k of the result
    stands for the members `classes[k]`.
    """
    equivalent = P.matrix & P.matrix.T
    classes: List[Tuple[int, ...]] = []
    seen = set()
    for i in range(P.n):
        if i in seen:
            continue
        members = tuple(int(j) for j in np.nonzero(equivalent[i])[0])
        seen.update(members)
        classes.append(members)
    heads = [members[0] for members in classes]
    labels = None
    if P.labels:
        labels = ["~".join(P.label(i) for i in members)
                  for members in classes]
    return (FinitePreorder.from_matrix(P.matrix[np.ix_(heads, heads)], labels),
            classes)


def maximal_elements(P: FinitePreorder,
                     subset: Iterable[int]) -> Tuple[int, ...]:
    """Members of the subset with nothing strictly above them in it"""
    subset = sorted(set(check_indices(P, subset)))
    if not subset:
        raise EmptySubset("maximal elements of an empty subset")
    return tuple(
        x for x in subset if not any(P.lt(x, y) for y in subset)
    )


@dataclass(frozen=True)
class MonotoneFlags:
    monotone: bool
    strict_monotone: bool
    injective_monotone: bool


def classify_monotone(P: FinitePreorder, f: Sequence) -> MonotoneFlags:
    """Which monotone classes the real function f falls into

    Injective means injective on the quotient: equal values only on
    equivalent elements.
    """
    check_vector(P, f)
    monotone = strict = injective = True
    for x, y in itertools.product(range(P.n), repeat=2):
        if P.le(x, y) and f[x] > f[y]:
            monotone = False
        if P.lt(x, y) and not f[x] < f[y]:
            strict = False
        if f[x] == f[y] and not P.equivalent(x, y):
            injective = False
    strict = strict and monotone
    return MonotoneFlags(monotone, strict, injective and strict)


def is_conditionally_connected(P: FinitePreorder) -> bool:
    """Every two elements with a common upper bound are comparable"""
    steps = P.matrix.astype(int)
    bounded = (steps @ steps.T) > 0
    comparable = P.matrix | P.matrix.T
    return not (bounded & ~comparable).any()


def comparability_components(P: FinitePreorder) -> List[int]:
    """Component id of each element in the comparability graph"""
    graph = nx.Graph()
    graph.add_nodes_from(range(P.n))
    graph.add_edges_from(P.pairs())
    component = [0] * P.n
    ordered = sorted(nx.connected_components(graph), key=min)
    for index, members in enumerate(ordered):
        for x in members:
            component[x] = index
    return component


def height(P: FinitePreorder) -> int:
    """Number of classes on a longest chain"""
    ordered, _ = quotient(P)
    return nx.dag_longest_path_length(ordered.strict_graph()) + 1
