"""Cantor pairing of natural numbers"""
import math
from typing import Tuple

from core.exceptions import ParameterOutOfRange


def _triangle(k: int) -> int:
    return k * (k + 1) // 2


def cantor_pair(n: int, m: int) -> int:
    """<n, m> = ((n + m)^2 + 3n + m) / 2"""
    if n < 0 or m < 0:
        raise ParameterOutOfRange(
            f"pairing is defined on naturals, got {n}, {m}"
        )
    return _triangle(n + m) + n


def cantor_unpair(k: int) -> Tuple[int, int]:
    if k < 0:
        raise ParameterOutOfRange(f"{k} is not a natural number")
    diagonal = (math.isqrt(8 * k + 1) - 1) // 2
    n = k - _triangle(diagonal)
    return n, diagonal - n
