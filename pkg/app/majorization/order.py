import enum
from dataclasses import dataclass
from typing import Optional

from core.exceptions import LengthMismatch, OrdlabError
from dist_core.dist import Dist, partial_sum_utilities

TIE_TOL = 1e-12


class OrderVerdict(enum.Enum):
    STRICTLY_LESS = "StrictlyLess"
    EQUIVALENT = "Equivalent"
    STRICTLY_GREATER = "StrictlyGreater"
    INCOMPARABLE = "Incomparable"

    @classmethod
    def from_directions(cls, leq: bool, geq: bool) -> "OrderVerdict":
        """Combine the two directional checks into one verdict"""
        if leq and geq:
            return cls.EQUIVALENT
        if leq:
            return cls.STRICTLY_LESS
        if geq:
            return cls.STRICTLY_GREATER
        return cls.INCOMPARABLE

    @property
    def strict(self) -> bool:
        return self in (OrderVerdict.STRICTLY_LESS,
                        OrderVerdict.STRICTLY_GREATER)


@dataclass(frozen=True)
class Order:
    """Which preorder to compare under: U, M or d-majorization"""
    kind: str
    reference: Optional[Dist] = None

    def __post_init__(self):
        if self.kind not in ("U", "M", "d"):
            raise OrdlabError(f"unknown order {self.kind!r}")
        if self.kind == "d" and self.reference is None:
            raise OrdlabError("d-majorization needs a reference distribution")

    @classmethod
    def d(cls, reference: Dist) -> "Order":
        return cls("d", reference)

    def __str__(self) -> str:
        return self.kind


UNCERTAINTY = Order("U")
MAJORIZATION = Order("M")


def check_lengths(*dists: Dist) -> None:
    lengths = {p.n for p in dists}
    if len(lengths) > 1:
        raise LengthMismatch(f"lengths {sorted(lengths)} differ")


def uncertainty_leq(p: Dist, q: Dist, tol: float = TIE_TOL) -> bool:
    """p is at most as uncertain as q: u_i(p) <= u_i(q) for every i"""
    check_lengths(p, q)
    exact = p.exact and q.exact
    for a, b in zip(partial_sum_utilities(p), partial_sum_utilities(q)):
        if exact:
            if a > b:
                return False
        elif a > b + tol:
            return False
    return True


def majorized_by(p: Dist, q: Dist, tol: float = TIE_TOL) -> bool:
    """p is majorized by q: the top-i sums of p never exceed those of q"""
    return uncertainty_leq(q, p, tol)


def compare(p: Dist, q: Dist, order: Order = UNCERTAINTY,
            tol: float = TIE_TOL) -> OrderVerdict:
    """Verdict of p against q under the chosen preorder"""
    if order.kind == "U":
        leq = uncertainty_leq(p, q, tol)
        geq = uncertainty_leq(q, p, tol)
    elif order.kind == "M":
        leq = majorized_by(p, q, tol)
        geq = majorized_by(q, p, tol)
    else:
        from majorization.dmajor import d_majorization_leq

        leq = d_majorization_leq(p, q, order.reference, tol)
        geq = d_majorization_leq(q, p, order.reference, tol)
    return OrderVerdict.from_directions(leq, geq)
