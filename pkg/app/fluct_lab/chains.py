"""Time-inhomogeneous Markov chains on a finite state space

Matrices are column stochastic: M[x, y] is the probability of moving to x
from y.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

import numpy as np
import sympy
from scipy.linalg import null_space
from scipy.sparse.csgraph import connected_components

from core.exceptions import (
    HypothesisViolated, LengthMismatch, NegativeEntry, NotIrreducible,
    NotNormalized, NotStationary, ZeroTargetMass
)
from dist_core.dist import Dist, new_dist, parse_number

logger = logging.getLogger(__name__)

COLUMN_TOL = 1e-12
STATIONARY_TOL = 1e-12
BALANCE_TOL = 1e-10

ExactMatrix = Tuple[Tuple[Fraction, ...], ...]


def check_stochastic(M: np.ndarray, index: int = 0,
                     tol: float = COLUMN_TOL) -> None:
    n = len(M)
    if M.shape != (n, n):
        raise LengthMismatch(f"mats[{index}] is not square")
    if (M < 0).any():
        raise NegativeEntry(f"mats[{index}] has a negative entry")
    sums = M.sum(axis=0)
    bad = np.nonzero(np.abs(sums - 1) > tol)[0]
    if bad.size:
        raise NotNormalized(
            f"mats[{index}] column {int(bad[0])} sums to {sums[bad[0]]!r}"
        )


@dataclass(frozen=True, eq=False)
class MarkovChainSpec:
    """Initial distribution p0 and the transition matrices M_1..M_N

    `exact_mats` holds the same matrices as Fractions when the chain was
    given with exact entries.
    """
    p0: Dist
    mats: Tuple[np.ndarray, ...]
    exact_mats: Optional[Tuple[ExactMatrix, ...]] = None

    def __post_init__(self):
        mats = tuple(np.array(M, dtype=float) for M in self.mats)
        object.__setattr__(self, "mats", mats)
        for index, M in enumerate(mats):
            if len(M) != self.n:
                raise LengthMismatch(
                    f"mats[{index}] is {len(M)}x{len(M)} for {self.n} states"
                )
            check_stochastic(M, index)
            M.setflags(write=False)

    @classmethod
    def build(cls, p0: Dist, mats: Sequence[Sequence[Sequence]]
              ) -> "MarkovChainSpec":
        """Parse matrix entries; exact entries keep an exact copy"""
        parsed = [
            [[parse_number(x) for x in row] for row in M] for M in mats
        ]
        exact = p0.exact and all(
            isinstance(x, Fraction) for M in parsed for row in M for x in row
        )
        arrays = tuple(np.array(M, dtype=float) for M in parsed)
        if exact:
            for index, M in enumerate(parsed):
                for column in zip(*M):
                    if sum(column) != 1:
                        raise NotNormalized(
                            f"mats[{index}] has a column summing to "
                            f"{sum(column)}"
                        )
            return cls(p0, arrays, tuple(
                tuple(tuple(row) for row in M) for M in parsed
            ))
        return cls(p0, arrays)

    @property
    def n(self) -> int:
        return self.p0.n

    @property
    def N(self) -> int:
        return len(self.mats)

    @property
    def exact(self) -> bool:
        return self.exact_mats is not None


def is_irreducible(M: np.ndarray) -> bool:
    """Whether the digraph of positive entries is strongly connected"""
    count, _ = connected_components(
        np.asarray(M) > 0, directed=True, connection='strong'
    )
    return count == 1


def stationary_dist(M: np.ndarray, tol: float = STATIONARY_TOL) -> Dist:
    """The unique p with Mp = p of an irreducible matrix"""
    M = np.asarray(M, dtype=float)
    if not is_irreducible(M):
        raise NotIrreducible("transition graph is not strongly connected")
    basis = null_space(M - np.eye(len(M)))
    vector = basis[:, 0]
    vector = np.clip(vector / vector.sum(), 0.0, None)
    vector /= vector.sum()
    residual = np.abs(M @ vector - vector).max()
    if residual > tol:
        logger.warning("stationary residual %s above %s", residual, tol)
    return new_dist(vector.tolist())


def exact_stationary_dist(M: ExactMatrix) -> Dist:
    """Stationary distribution of an exact matrix, as Fractions"""
    if not is_irreducible(np.array(M, dtype=float)):
        raise NotIrreducible("transition graph is not strongly connected")
    matrix = sympy.Matrix([
        [sympy.Rational(x.numerator, x.denominator) for x in row]
        for row in M
    ]) - sympy.eye(len(M))
    basis = matrix.nullspace()
    if len(basis) != 1:
        raise NotIrreducible(f"{len(basis)} independent stationary vectors")
    vector = basis[0] / sum(basis[0])
    return new_dist(
        Fraction(int(v.p), int(v.q)) for v in vector
    )


def satisfies_detailed_balance(M: np.ndarray, p: Dist,
                               tol: float = BALANCE_TOL) -> bool:
    """M[y, x] p(x) = M[x, y] p(y) for every pair of states"""
    M = np.asarray(M, dtype=float)
    probs = p.array
    if len(probs) != len(M):
        raise LengthMismatch(f"{len(probs)} probabilities for {len(M)} states")
    gap = np.abs(M @ probs - probs).max()
    if gap > tol:
        raise NotStationary(f"p is not stationary for M (residual {gap})")
    flow = M * probs[None, :]
    return bool(np.abs(flow - flow.T).max() <= tol)


def uniform_proposal(n: int) -> np.ndarray:
    return np.full((n, n), 1.0 / n)


def nearest_neighbour_proposal(n: int) -> np.ndarray:
    """Move one step left or right with probability 1/2, staying at the ends"""
    Q = np.zeros((n, n))
    for y in range(n):
        for x in (y - 1, y + 1):
            Q[min(max(x, 0), n - 1), y] += 0.5
    return Q


def metropolis_matrix(target: Dist, proposal: np.ndarray) -> np.ndarray:
    """Metropolis chain for `target` from a symmetric proposal

    The move y -> x is accepted with probability min(1, target(x)/target(y));
    rejected mass stays on the diagonal.
    """
    pi = target.array
    Q = np.asarray(proposal, dtype=float)
    if (pi <= 0).any():
        raise ZeroTargetMass(f"target {target} has a zero entry")
    if Q.shape != (len(pi), len(pi)):
        raise LengthMismatch(f"proposal shape {Q.shape} for {len(pi)} states")
    check_stochastic(Q)
    if not np.allclose(Q, Q.T, atol=COLUMN_TOL):
        raise HypothesisViolated("proposal is not symmetric")
    acceptance = np.minimum(1.0, pi[:, None] / pi[None, :])
    M = Q * acceptance
    np.fill_diagonal(M, 0.0)
    np.fill_diagonal(M, 1.0 - M.sum(axis=0))
    return M


def metropolis_chain(p0: Dist, targets: Sequence[Dist],
                     proposal: Optional[np.ndarray] = None
                     ) -> MarkovChainSpec:
    """Chain whose n-th matrix is the Metropolis chain of targets[n-1]"""
    if proposal is None:
        proposal = uniform_proposal(p0.n)
    return MarkovChainSpec(
        p0, tuple(metropolis_matrix(t, proposal) for t in targets)
    )


def random_stochastic(n: int, rng: np.random.Generator) -> np.ndarray:
    """Column-stochastic matrix with Dirichlet(1) columns"""
    M = rng.dirichlet(np.ones(n), size=n).T
    return M / M.sum(axis=0, keepdims=True)


def random_chain(n: int, N: int, rng: np.random.Generator) -> MarkovChainSpec:
    """Strictly positive p0 and irreducible matrices"""
    weights = np.clip(rng.dirichlet(np.ones(n)), 1e-6, None)
    p0 = new_dist((weights / weights.sum()).tolist())
    mats = tuple(random_stochastic(n, rng) for _ in range(N))
    return MarkovChainSpec(p0, mats)


def reversed_chain(spec: MarkovChainSpec) -> MarkovChainSpec:
    """Backward process: p_N as initial law and the matrices in reverse"""
    if not spec.N:
        p_last = spec.p0
    elif spec.exact:
        p_last = exact_stationary_dist(spec.exact_mats[-1])
    else:
        p_last = stationary_dist(spec.mats[-1])
    exact = tuple(reversed(spec.exact_mats)) if spec.exact else None
    return MarkovChainSpec(p_last, tuple(reversed(spec.mats)), exact)
