"""`ordlab majo`: order comparisons, transfer paths and second-law checks"""
from core.cli import add_action, command_group
from core.emit import CSV, Table
from core.exceptions import LengthMismatch, UnknownFlag
from core.loaders import load_dist, load_inputs
from core.seeding import block_rng
from majorization.dmajor import (
    d_majorization_leq, d_majorization_oracle, lambda_d_embed,
    reference_cells
)
from majorization.order import TIE_TOL, Order, compare
from majorization.second_laws import (
    check_second_laws_family, entropy_member, negative_entropy_member,
    partial_sum_family, random_comparable_pair, strict_monotone_family,
    top_sum_family
)
from majorization.transfers import pigou_dalton_path

ORDERS = {"u": "U", "m": "M", "d": "d"}
# family name -> (builder, order the family increases along)
FAMILIES = {
    "top-sums": (top_sum_family, "m"),
    "partial-sums": (partial_sum_family, "u"),
    "corrected": (strict_monotone_family, "u"),
    "entropy": (lambda n: [entropy_member], "u"),
    "negentropy": (lambda n: [negative_entropy_member], "m"),
}


def _order(config) -> Order:
    kind = ORDERS[config.options["order"]]
    if kind != "d":
        return Order(kind)
    if not config.options.get("d"):
        raise UnknownFlag("--order d needs a reference file in --d")
    return Order.d(load_dist(config.options["d"]))


def compare_command(config):
    order = _order(config)
    ps, qs = load_inputs((config.options["p"], config.options["q"]), "dists")
    if len(ps) != len(qs):
        raise LengthMismatch(f"{len(ps)} rows against {len(qs)} rows")
    tol = config.tolerance(TIE_TOL)
    verdicts = [compare(p, q, order, tol) for p, q in zip(ps, qs)]
    if len(verdicts) == 1 and config.emit != CSV:
        return {"order": str(order), "verdict": verdicts[0]}
    return Table(("row", "order", "verdict"), [
        (row, str(order), verdict) for row, verdict in enumerate(verdicts)
    ])


def embed_command(config):
    d = load_dist(config.options["d"])
    p = load_dist(config.options["p"])
    alpha, cells = reference_cells(d)
    return {"alpha": alpha, "cells": cells, "embedding": lambda_d_embed(p, d)}


def oracle_command(config):
    d = load_dist(config.options["d"])
    p, q = load_inputs((config.options["p"], config.options["q"]), "dist")
    return {
        "leq": d_majorization_leq(p, q, d, config.tolerance(TIE_TOL)),
        "oracle": d_majorization_oracle(p, q, d),
    }


def path_command(config):
    p, q = load_inputs((config.options["p"], config.options["q"]), "dist")
    steps = pigou_dalton_path(p, q, tol=config.tolerance(TIE_TOL))
    table = Table(("from", "to", "mass"), [
        (step.from_index, step.to_index, step.mass) for step in steps or ()
    ])
    if config.emit == CSV:
        return table
    return {"reachable": steps is not None, "steps": table}


def second_laws_command(config):
    n = config.options["n"]
    rng = block_rng(config.seed, 0, 0)
    pairs = [random_comparable_pair(n, rng)
             for _ in range(config.options["pairs"])]
    build, increases_along = FAMILIES[config.options["family"]]
    order = Order(ORDERS[config.options["order"] or increases_along])
    report = check_second_laws_family(
        build(n), pairs, order, tol=config.tolerance(TIE_TOL)
    )
    violations = Table(("pair", "clause", "verdict", "members"), [
        (v.pair_index, v.clause, v.verdict, v.members)
        for v in report.violations
    ])
    if config.emit == CSV:
        return violations
    return {
        "family": config.options["family"],
        "order": str(order),
        "pairs": len(pairs),
        "ok": report.ok,
        "violations": violations,
    }


@command_group("majo", "majorization and the uncertainty preorder")
def register(group) -> None:
    compare_parser = add_action(
        group, "compare", compare_command,
        "verdict of p against q; CSV inputs are compared row by row"
    )
    compare_parser.add_argument("--order", choices=ORDERS, default="u")
    compare_parser.add_argument("--d", help="reference distribution file")
    compare_parser.add_argument("p")
    compare_parser.add_argument("q")

    embed = add_action(group, "embed", embed_command,
                       "cells of the reference d and the embedding of p")
    embed.add_argument("--d", required=True,
                       help="reference distribution file")
    embed.add_argument("p")

    oracle = add_action(group, "oracle", oracle_command,
                        "d-majorization of p by q, by embedding and by a "
                        "linear program")
    oracle.add_argument("--d", required=True,
                        help="reference distribution file")
    oracle.add_argument("p")
    oracle.add_argument("q")

    path_parser = add_action(group, "path", path_command,
                             "Pigou-Dalton transfers taking p to q")
    path_parser.add_argument("p")
    path_parser.add_argument("q")

    laws = add_action(group, "second-laws", second_laws_command,
                      "check a monotone family on random comparable pairs")
    laws.add_argument("--family", choices=FAMILIES, default="corrected")
    laws.add_argument("--order", choices=("u", "m"), default=None,
                      help="default: the order the family increases along")
    laws.add_argument("--n", type=int, default=3)
    laws.add_argument("--pairs", type=int, default=500)
