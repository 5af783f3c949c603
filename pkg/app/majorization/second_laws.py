"""Falsifying candidate families of second laws of (d-)disorder

A family of monotones is a family of second laws for a preorder when it is
constant on equivalent pairs, strictly increases along strict pairs and
contains members moving in both directions on incomparable pairs.
"""
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, List, Sequence, Tuple

import numpy as np

from dist_core.dist import (
    Dist, new_dist, partial_sum_utilities, shannon_entropy, top_sums
)
from dist_core.samples import random_dist
from majorization.order import (
    MAJORIZATION, Order, OrderVerdict, TIE_TOL, compare
)

VALUE_TOL = 1e-9


@dataclass(frozen=True)
class Monotone:
    """Named real-valued map on distributions"""
    name: str
    func: Callable[[Dist], float]

    def __call__(self, p: Dist) -> float:
        return float(self.func(p))


@dataclass(frozen=True)
class Violation:
    pair_index: int
    clause: str
    verdict: OrderVerdict
    members: Tuple[str, ...]


@dataclass
class SecondLawsReport:
    verdicts: List[OrderVerdict] = field(default_factory=list)
    violations: List[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def top_sum_family(n: int) -> List[Monotone]:
    """s_i(p) = sum of the i largest entries, i = 1..n-1"""
    return [
        Monotone(f"s_{i + 1}", lambda p, i=i: top_sums(p)[i])
        for i in range(n - 1)
    ]


def partial_sum_family(n: int) -> List[Monotone]:
    """u_i(p), the monotones of the uncertainty preorder"""
    return [
        Monotone(f"u_{i + 1}", lambda p, i=i: partial_sum_utilities(p)[i])
        for i in range(n - 1)
    ]


entropy_member = Monotone("H", shannon_entropy)
negative_entropy_member = Monotone("-H", lambda p: -shannon_entropy(p))


def stern_brocot(count: int) -> List[Fraction]:
    """First `count` positive rationals in breadth-first Stern-Brocot order"""
    found: List[Fraction] = []
    queue = [((0, 1), (1, 0))]
    while len(found) < count:
        (a, b), (c, d) = queue.pop(0)
        mediant = (a + c, b + d)
        found.append(Fraction(*mediant))
        queue.append(((a, b), mediant))
        queue.append((mediant, (c, d)))
    return found


def strict_monotone_family(n: int, count: int = 20) -> List[Monotone]:
    """u_i + r H for i = 1..n-1 and the first `count` positive rationals r"""
    family = []
    for r in stern_brocot(count):
        for i in range(n - 1):
            family.append(Monotone(
                f"u_{i + 1}+{r}H",
                lambda p, i=i, r=float(r):
                    float(partial_sum_utilities(p)[i]) + r * shannon_entropy(p)
            ))
    return family


def birkhoff_mixture(n: int, rng: np.random.Generator) -> np.ndarray:
    """Random doubly stochastic matrix as a mixture of permutation matrices"""
    perms = list(itertools.permutations(range(n)))
    weights = rng.dirichlet(np.ones(len(perms)))
    matrix = np.zeros((n, n))
    for weight, perm in zip(weights, perms):
        matrix[np.arange(n), perm] += weight
    return matrix


def random_comparable_pair(n: int,
                           rng: np.random.Generator) -> Tuple[Dist, Dist]:
    """(p, q) with p at most as uncertain as q, q = D p for doubly
    stochastic D"""
    p = random_dist(n, rng)
    q = birkhoff_mixture(n, rng) @ p.array
    return p, new_dist(q.tolist())


def _moves(family: Sequence[Monotone], x: Dist, y: Dist,
           tol: float) -> Iterator[Tuple[str, int]]:
    """Direction (-1, 0, 1) of each member from x to y"""
    for member in family:
        delta = member(y) - member(x)
        sign = 0 if abs(delta) <= tol else (1 if delta > 0 else -1)
        yield member.name, sign


def check_second_laws_family(family: Sequence[Monotone],
                             pairs: Sequence[Tuple[Dist, Dist]],
                             order: Order = MAJORIZATION,
                             tol: float = TIE_TOL,
                             value_tol: float = VALUE_TOL
                             ) -> SecondLawsReport:
    """Check the three clauses of a family of second laws on every pair

    Clause (i) is checked first, so equivalent pairs are judged on the
    quotient and never reach clause (iii).
    """
    report = SecondLawsReport()
    for index, (x, y) in enumerate(pairs):
        verdict = compare(x, y, order, tol)
        report.verdicts.append(verdict)
        moves = dict(_moves(family, x, y, value_tol))

        if verdict is OrderVerdict.EQUIVALENT:
            bad = tuple(name for name, move in moves.items() if move != 0)
            clause = "i"
        elif verdict.strict:
            wanted = 1 if verdict is OrderVerdict.STRICTLY_LESS else -1
            bad = tuple(
                name for name, move in moves.items() if move != wanted
            )
            clause = "ii"
        else:
            ups = any(move > 0 for move in moves.values())
            downs = any(move < 0 for move in moves.values())
            bad = () if ups and downs else tuple(moves)
            clause = "iii"

        if bad:
            report.violations.append(Violation(index, clause, verdict, bad))
    return report
