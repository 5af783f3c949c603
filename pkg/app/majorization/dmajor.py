"""Majorization relative to a reference distribution d

Two equivalent routes: the cell-splitting embedding that sends d to the
uniform distribution, and the existence of a stochastic matrix fixing d.
"""
import logging
import math
from bisect import bisect_left
from fractions import Fraction
from itertools import accumulate
from typing import List, Tuple

import numpy as np
from scipy.optimize import linprog

from core.exceptions import (
    IrrationalReference, SolverScaleExceeded, ZeroReference
)
from dist_core.dist import Dist, Number, snap_rational
from majorization.order import TIE_TOL, check_lengths

logger = logging.getLogger(__name__)

ORACLE_MAX_N = 5


def reference_cells(d: Dist) -> Tuple[int, List[int]]:
    """Cell count alpha and the cells |A_x| = alpha d(x) of each outcome"""
    if any(x == 0 for x in d.probs):
        raise ZeroReference(f"reference {d} has a zero entry")
    if d.exact:
        ratios = list(d.probs)
    else:
        ratios = [snap_rational(x) for x in d.probs]
        logger.debug("reference %s snapped to %s", d,
                     [str(r) for r in ratios])
    if sum(ratios) != 1:
        raise IrrationalReference(
            f"snapped reference {[str(r) for r in ratios]} does not sum to 1"
        )
    alpha = math.lcm(*(r.denominator for r in ratios))
    return alpha, [int(r * alpha) for r in ratios]


def lambda_d_embed(p: Dist, d: Dist) -> Dist:
    """Split outcome x into alpha d(x) equal cells carrying p(x)"""
    check_lengths(p, d)
    _, counts = reference_cells(d)
    entries: List[Number] = []
    for mass, cells in zip(p.probs, counts):
        share = Fraction(mass) / cells if p.exact else float(mass) / cells
        entries.extend([share] * cells)
    return Dist(tuple(entries))


def _embedded_top_sums(p: Dist, counts: List[int]):
    """Top-i sum of the embedding of p as a function of i

    The embedding's cells are grouped by outcome, so its Lorenz curve is
    piecewise linear with breaks at cumulative cell counts.
    """
    exact = p.exact
    blocks = sorted(
        ((Fraction(m) / c if exact else float(m) / c, c)
         for m, c in zip(p.probs, counts)),
        key=lambda block: block[0], reverse=True
    )
    cells = [0] + list(accumulate(c for _, c in blocks))
    masses = [0] + list(accumulate(share * c for share, c in blocks))

    def top_sum(i: int) -> Number:
        segment = max(bisect_left(cells, i) - 1, 0)
        share = blocks[segment][0] if segment < len(blocks) else 0
        return masses[segment] + (i - cells[segment]) * share

    return cells, top_sum


def d_majorization_leq(p: Dist, q: Dist, d: Dist,
                       tol: float = TIE_TOL) -> bool:
    """p is d-majorized by q: the embedding of p is majorized by that of q

    Both top-sum curves are concave and piecewise linear, so comparing them
    at the union of their breakpoints decides every index.
    """
    check_lengths(p, q, d)
    _, counts = reference_cells(d)
    cells_p, top_p = _embedded_top_sums(p, counts)
    cells_q, top_q = _embedded_top_sums(q, counts)
    exact = p.exact and q.exact
    for i in sorted(set(cells_p) | set(cells_q)):
        a, b = top_p(i), top_q(i)
        if exact:
            if a > b:
                return False
        elif float(a) > float(b) + tol:
            return False
    return True


def d_majorization_oracle(p: Dist, q: Dist, d: Dist) -> bool:
    """Is there a column-stochastic matrix P with P d = d and P q = p?

    Solved as a linear feasibility problem over the n^2 entries of P.
    """
    check_lengths(p, q, d)
    n = p.n
    if n > ORACLE_MAX_N:
        raise SolverScaleExceeded(f"oracle handles n <= {ORACLE_MAX_N}")
    if any(x == 0 for x in d.probs):
        raise ZeroReference(f"reference {d} has a zero entry")

    p_arr, q_arr, d_arr = p.array, q.array, d.array
    rows = []
    rhs = []
    for y in range(n):
        row = np.zeros((n, n))
        row[:, y] = 1.0
        rows.append(row.ravel())
        rhs.append(1.0)
    for vector, image in ((d_arr, d_arr), (q_arr, p_arr)):
        for x in range(n):
            row = np.zeros((n, n))
            row[x, :] = vector
            rows.append(row.ravel())
            rhs.append(image[x])

    result = linprog(
        c=np.zeros(n * n),
        A_eq=np.array(rows),
        b_eq=np.array(rhs),
        bounds=[(0, None)] * (n * n),
        method="highs",
    )
    logger.debug("oracle status %s: %s", result.status, result.message)
    return bool(result.status == 0)
