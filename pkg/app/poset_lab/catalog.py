"""Named finite posets used by the checks, the sweeps and the CLI"""
import itertools
from fractions import Fraction
from typing import Iterator, Sequence, Tuple

import numpy as np

from core.exceptions import OrdlabError, ScaleExceeded
from poset_lab.increasing_sets import IncreasingSetFamily
from poset_lab.preorder import FinitePreorder, from_relation
from poset_lab.representations import RealFamily

ALL_POSETS_MAX_N = 4
SIGN_MODULUS_VALUES = (-1, -2, -3, 1, 2, 3)


def chain(k: int) -> FinitePreorder:
    """0 below 1 below ... below k-1"""
    return from_relation(k, [(i, i + 1) for i in range(k - 1)])


def antichain(k: int) -> FinitePreorder:
    return from_relation(k, [])


def vee() -> FinitePreorder:
    """Two incomparable elements below a common top"""
    return from_relation(3, [(0, 2), (1, 2)], labels=["a", "b", "top"])


def disjoint_chains(*lengths: int) -> FinitePreorder:
    """Chains side by side, numbered one after the other"""
    pairs, start = [], 0
    for length in lengths:
        pairs += [(start + i, start + i + 1) for i in range(length - 1)]
        start += length
    return from_relation(start, pairs)


def standard_example(k: int) -> FinitePreorder:
    """a_0..a_{k-1}, b_0..b_{k-1} with a_i below b_j iff i != j"""
    pairs = [(i, k + j) for i in range(k) for j in range(k) if i != j]
    labels = [f"a{i}" for i in range(k)] + [f"b{j}" for j in range(k)]
    return from_relation(2 * k, pairs, labels)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _check_nonzero(values: Sequence) -> None:
    if any(v == 0 for v in values) or len(set(values)) != len(values):
        raise OrdlabError("values must be distinct and nonzero")


def sign_modulus_poset(values: Sequence = SIGN_MODULUS_VALUES
                       ) -> FinitePreorder:
    """x below y iff |x| <= |y| and sgn x <= sgn y"""
    _check_nonzero(values)
    return FinitePreorder.from_predicate(
        values, lambda x, y: abs(x) <= abs(y) and _sign(x) <= _sign(y)
    )


def sign_modulus_utilities(values: Sequence = SIGN_MODULUS_VALUES
                           ) -> RealFamily:
    """Two injective monotones encoding the sign-modulus poset

    The first sorts by sign, then modulus; the second by modulus, then
    sign. Together they form a strict monotone multi-utility.
    """
    _check_nonzero(values)
    moduli = sorted({abs(Fraction(v)) for v in values})
    gaps = [b - a for a, b in zip(moduli, moduli[1:])]
    shift = 1 + moduli[-1]
    delta = min(gaps, default=Fraction(1)) / 4
    sign_first = tuple(_sign(v) * shift + abs(Fraction(v)) for v in values)
    modulus_first = tuple(abs(Fraction(v)) + _sign(v) * delta for v in values)
    return RealFamily((sign_first, modulus_first))


def reciprocal_poset(values: Sequence = (-3, -2, -1, 1, 2, 3)
                     ) -> FinitePreorder:
    """x below y iff x <= y and 1/x <= 1/y"""
    _check_nonzero(values)
    return FinitePreorder.from_predicate(
        values,
        lambda x, y: x <= y and Fraction(1) / Fraction(x)
        <= Fraction(1) / Fraction(y)
    )


def reciprocal_utilities(values: Sequence = (-3, -2, -1, 1, 2, 3)
                         ) -> RealFamily:
    """u_1(x) = x and u_2(x) = 1/x"""
    _check_nonzero(values)
    return RealFamily((
        tuple(Fraction(v) for v in values),
        tuple(Fraction(1) / Fraction(v) for v in values),
    ))


def split_interval_leq(x, y) -> bool:
    """The preorder on [0, 1] and [2, 3]

    [0, 1] is a chain; [2, 3] is an antichain; x in [2, 3] lies below
    y in [0, 1] iff x - 2 < y.
    """
    low_x, low_y = x <= 1, y <= 1
    if low_x and low_y:
        return x <= y
    if not low_x and not low_y:
        return x == y
    return not low_x and x - 2 < y


def split_interval_points(lows: Sequence) -> Tuple[Fraction, ...]:
    """The sampled low points followed by their copies shifted by 2"""
    lows = sorted(Fraction(x) for x in lows)
    if not lows or lows[0] < 0 or lows[-1] > 1 or len(set(lows)) < len(lows):
        raise OrdlabError("sample points must be distinct and in [0, 1]")
    return tuple(lows) + tuple(x + 2 for x in lows)


def split_interval_truncation(lows: Sequence) -> FinitePreorder:
    points = split_interval_points(lows)
    return FinitePreorder.from_predicate(points, split_interval_leq)


def split_interval_family(lows: Sequence) -> IncreasingSetFamily:
    """Sets A_c = {y : c + 2 below y} restricted to the sample

    c runs over the sampled low points and a point just below each of
    them, whose set on the sample is the low points from there upwards.
    """
    points = split_interval_points(lows)
    lows = points[:len(points) // 2]
    gap = min((b - a for a, b in zip(lows, lows[1:])), default=Fraction(1))
    cuts = sorted(set(lows) | {max(x - gap / 2, Fraction(0)) for x in lows})
    return IncreasingSetFamily(tuple(
        frozenset(
            i for i, y in enumerate(points) if split_interval_leq(c + 2, y)
        )
        for c in cuts
    ))


def all_posets(n: int) -> Iterator[FinitePreorder]:
    """Every partial order on the labelled elements 0..n-1"""
    if n > ALL_POSETS_MAX_N:
        raise ScaleExceeded(f"enumeration handles n <= {ALL_POSETS_MAX_N}")
    off_diagonal = [
        (i, j) for i, j in itertools.product(range(n), repeat=2) if i != j
    ]
    for chosen in itertools.product((False, True), repeat=len(off_diagonal)):
        matrix = np.eye(n, dtype=bool)
        for (i, j), related in zip(off_diagonal, chosen):
            matrix[i, j] = related
        if (matrix & matrix.T & ~np.eye(n, dtype=bool)).any():
            continue
        steps = matrix.astype(int)
        if ((steps @ steps > 0) & ~matrix).any():
            continue
        yield FinitePreorder.from_matrix(matrix)


def random_poset(n: int, rng: np.random.Generator,
                 density: float = 0.3) -> FinitePreorder:
    """Closure of random edges i -> j with i < j, then shuffled labels"""
    pairs = [
        (i, j) for i, j in itertools.combinations(range(n), 2)
        if rng.random() < density
    ]
    perm = rng.permutation(n)
    return from_relation(n, [(int(perm[i]), int(perm[j])) for i, j in pairs])
