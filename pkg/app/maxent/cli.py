"""`ordlab maxent`: Boltzmann solvers and maximal points of a constraint"""
from core.cli import add_action, command_group
from core.emit import Table
from core.loaders import load_scores
from majorization.order import TIE_TOL
from maxent.segments import DEFAULT_GRID, maximal_on_segment
from maxent.solvers import (
    MOMENT_TOL, Bound, LinearConstraint, solve_bounded_rational, solve_maxent
)


def solve_command(config):
    constraint = LinearConstraint(load_scores(config.options["E"]),
                                  config.options["target"])
    p, beta = solve_maxent(constraint, config.tolerance(MOMENT_TOL),
                           config.options["strict_interior"])
    return {"p": p, "beta": beta}


def bounded_command(config):
    U = load_scores(config.options["U"])
    if config.options["entropy_floor"] is not None:
        bound = Bound.entropy_floor(config.options["entropy_floor"])
    else:
        bound = Bound.utility_floor(config.options["utility_floor"])
    p, beta = solve_bounded_rational(U, bound, config.tolerance(MOMENT_TOL))
    return {"bound": bound.kind, "p": p, "beta": beta}


def maximal_segment_command(config):
    E = load_scores(config.options["E"])
    maximal = maximal_on_segment(E, config.options["target"],
                                 config.options["grid"],
                                 config.tolerance(TIE_TOL), config.jobs)
    return Table(tuple(f"p{i}" for i in range(len(E))),
                 [p.probs for p in maximal])


@command_group("maxent", "maximum entropy and bounded rationality")
def register(group) -> None:
    solve = add_action(group, "solve", solve_command,
                       "entropy maximizer with a fixed expected score")
    solve.add_argument("--E", required=True, help="score vector file")
    solve.add_argument("--target", type=float, required=True)
    solve.add_argument("--strict-interior", action="store_true")

    bounded = add_action(group, "bounded", bounded_command,
                         "Boltzmann policy under an entropy or utility floor")
    bounded.add_argument("--U", required=True, help="utility vector file")
    floor = bounded.add_mutually_exclusive_group(required=True)
    floor.add_argument("--entropy-floor", type=float)
    floor.add_argument("--utility-floor", type=float)

    segment = add_action(group, "maximal-segment", maximal_segment_command,
                         "grid points of <E> = target that are maximal in "
                         "the uncertainty preorder")
    segment.add_argument("--E", required=True, help="score vector file")
    segment.add_argument("--target", type=float, required=True)
    segment.add_argument("--grid", type=int, default=DEFAULT_GRID)
