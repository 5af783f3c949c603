"""`ordlab domain`: interval bisection, Cantor words, Scott opens, pairing"""
import json

from core.cli import add_action, command_group
from core.emit import Table
from core.loaders import load_poset
from domain_lab.cantor import (
    CantorWord, cantor_leq, cantor_sup, cantor_way_below
)
from domain_lab.dcpo import (
    FiniteDcpo, compact_elements, order_from_opens_check, scott_opens,
    weak_basis_check
)
from domain_lab.intervals import (
    RationalInterval, bisection_run, interpolate, interval_leq,
    interval_way_below
)
from domain_lab.pairing import cantor_pair, cantor_unpair


def bisect_command(config):
    run = bisection_run(config.options["poly"], config.options["lo"],
                        config.options["hi"], config.options["eps"])
    return Table(("step", "lo", "hi", "width"), [
        (step, I.lo, I.hi, I.width) for step, I in enumerate(run)
    ])


def way_below_command(config):
    I = RationalInterval.parse(config.options["I"])
    J = RationalInterval.parse(config.options["J"])
    way_below = interval_way_below(I, J)
    return {
        "leq": interval_leq(I, J),
        "way_below": way_below,
        "interpolant": str(interpolate(I, J)) if way_below else None,
    }


def cantor_command(config):
    alphabet = config.options["alphabet"]
    x = CantorWord.parse(config.options["x"], alphabet)
    y = CantorWord.parse(config.options["y"], alphabet)
    leq, geq = cantor_leq(x, y), cantor_leq(y, x)
    return {
        "leq": leq,
        "way_below": cantor_way_below(x, y),
        "sup": str(cantor_sup([x, y])) if leq or geq else None,
    }


def scott_command(config):
    P = FiniteDcpo(load_poset(config.options["poset"]))
    result = {
        "opens": scott_opens(P),
        "order_from_opens": order_from_opens_check(P),
        "compact": compact_elements(P),
    }
    if config.options["basis"] is not None:
        result["weak_basis"] = weak_basis_check(P, config.options["basis"])
    return result


def pair_command(config):
    return {"k": cantor_pair(config.options["n"], config.options["m"])}


def unpair_command(config):
    n, m = cantor_unpair(config.options["k"])
    return {"n": n, "m": m}


@command_group("domain", "interval and Cantor domains, finite dcpos")
def register(group) -> None:
    bisect = add_action(group, "bisect", bisect_command,
                        "exact bisection of a rational polynomial")
    bisect.add_argument("--poly", type=json.loads, required=True,
                        help='coefficients in ascending degree, "[-2,0,1]"')
    bisect.add_argument("--lo", required=True)
    bisect.add_argument("--hi", required=True)
    bisect.add_argument("--eps", required=True)

    way_below = add_action(group, "way-below", way_below_command,
                           "interval order and way-below of I and J")
    way_below.add_argument("--I", required=True, help='"a/b,c/d"')
    way_below.add_argument("--J", required=True, help='"a/b,c/d"')

    cantor = add_action(group, "cantor", cantor_command,
                        "prefix order of two words such as 01 or 0(10)")
    cantor.add_argument("--alphabet", default="01")
    cantor.add_argument("x")
    cantor.add_argument("y")

    scott = add_action(group, "scott", scott_command,
                       "Scott opens and compact elements of a finite poset")
    scott.add_argument("--basis", type=json.loads, default=None,
                       help="check these elements form a weak basis")
    scott.add_argument("poset")

    pair = add_action(group, "pair", pair_command, "Cantor pairing <n, m>")
    pair.add_argument("n", type=int)
    pair.add_argument("m", type=int)

    unpair = add_action(group, "unpair", unpair_command,
                        "inverse of the Cantor pairing")
    unpair.add_argument("k", type=int)
