"""`ordlab poset`: dimension, linear extensions and representation checks"""
import json
from dataclasses import asdict

from core.cli import add_action, command_group
from core.emit import Table
from core.loaders import load_family, load_poset, load_relations
from poset_lab.dimension import (
    Realizer, limit_of_relations, linear_extension_by_monotone,
    minimal_realizer, realizer_is_valid
)
from poset_lab.increasing_sets import (
    DensityMode, IncreasingSetFamily, SeparationMode, density_check,
    monotone_from_increasing_sets, separation_check
)
from poset_lab.preorder import (
    classify_monotone, comparability_components, height,
    is_conditionally_connected, maximal_elements, quotient
)
from poset_lab.representations import (
    find_thermo_representation, is_multi_utility,
    is_strict_monotone_multi_utility, optimization_principle_check
)

CHECKS = {
    "multi-utility": is_multi_utility,
    "strict-monotone": is_strict_monotone_multi_utility,
}
SEPARATION_MODES = {m.value.replace("_", "-"): m for m in SeparationMode}
DENSITY_MODES = {m.value.replace("_", "-"): m for m in DensityMode}


def dim_command(config):
    """Dimension of the quotient; realizer orders list every member of a
    class, classes in order"""
    ordered, classes = quotient(load_poset(config.options["poset"]))
    realizer = minimal_realizer(ordered, config.options["max_k"],
                                config.jobs)
    if realizer is None:
        return {"dimension": None, "realizer": [], "classes": classes}
    return {
        "dimension": len(realizer),
        "realizer": [
            [x for k in order for x in classes[k]]
            for order in realizer.extensions
        ],
        "classes": classes,
    }


def extend_command(config):
    P = load_poset(config.options["poset"])
    order = linear_extension_by_monotone(P, config.options["u"])
    return Table(("rank", "element", "label"), [
        (rank, x, P.label(x)) for rank, x in enumerate(order)
    ])


def props_command(config):
    P = load_poset(config.options["poset"])
    subset = config.options["subset"]
    return {
        "antisymmetric": P.is_antisymmetric(),
        "height": height(P),
        "conditionally_connected": is_conditionally_connected(P),
        "components": comparability_components(P),
        "maximal": maximal_elements(
            P, range(P.n) if subset is None else subset
        ),
    }


def monotone_command(config):
    P = load_poset(config.options["poset"])
    f = config.options["f"]
    flags = asdict(classify_monotone(P, f))
    flags["optimization_principle"] = optimization_principle_check(P, f)
    return flags


def check_command(config):
    P = load_poset(config.options["poset"])
    family = load_family(config.options["funcs"])
    kind = config.options["kind"]
    return {"kind": kind, "holds": CHECKS[kind](P, family)}


def realizer_command(config):
    P = load_poset(config.options["poset"])
    R = Realizer.of(*config.options["orders"])
    return {"valid": realizer_is_valid(P, R)}


def sets_command(config):
    P = load_poset(config.options["poset"])
    family = IncreasingSetFamily.of(config.options["sets"])
    mode = config.options["mode"]
    return {
        "mode": mode,
        "separates": separation_check(P, family, SEPARATION_MODES[mode]),
        "monotone": monotone_from_increasing_sets(P, family,
                                                  config.options["r"]),
    }


def dense_command(config):
    P = load_poset(config.options["poset"])
    mode = config.options["mode"]
    return {
        "mode": mode,
        "holds": density_check(P, config.options["subset"],
                               DENSITY_MODES[mode]),
    }


def limit_command(config):
    limit = limit_of_relations(load_relations(config.options["relations"]))
    return {
        "limit": limit,
        "pairs": [[int(i), int(j)] for i, j in zip(*limit.nonzero())],
    }


def thermo_command(config):
    P = load_poset(config.options["poset"])
    found = find_thermo_representation(P)
    result = {
        "exists": found is not None,
        "conditionally_connected": is_conditionally_connected(P),
    }
    if found is not None:
        conserved, entropy = found
        result["conserved"] = list(conserved.funcs)
        result["entropy"] = list(entropy)
    return result


@command_group("poset", "finite preorders and their representations")
def register(group) -> None:
    dim = add_action(group, "dim", dim_command,
                     "Dushnik-Miller dimension and a minimal realizer")
    dim.add_argument("--max-k", type=int, default=None)
    dim.add_argument("poset")

    extend = add_action(group, "extend", extend_command,
                        "linear extension ordered by a monotone u")
    extend.add_argument("--u", type=json.loads, required=True,
                        help='monotone values, e.g. "[0, 2, 1]"')
    extend.add_argument("poset")

    props = add_action(group, "props", props_command,
                       "height, components, connectedness and maximal "
                       "elements")
    props.add_argument("--subset", type=json.loads, default=None,
                       help='elements to maximize over, e.g. "[0, 1]"')
    props.add_argument("poset")

    monotone = add_action(group, "monotone", monotone_command,
                          "monotone classes of f and its optimization "
                          "principle")
    monotone.add_argument("--f", type=json.loads, required=True,
                          help='values of f, e.g. "[0, 0, 1]"')
    monotone.add_argument("poset")

    check = add_action(group, "check", check_command,
                       "is the family a (strict monotone) multi-utility")
    check.add_argument("--kind", choices=CHECKS, default="multi-utility")
    check.add_argument("poset")
    check.add_argument("funcs")

    realizer = add_action(group, "realizer", realizer_command,
                          "do the linear orders realize the partial order")
    realizer.add_argument("--orders", type=json.loads, required=True,
                          help='orders from bottom to top, "[[0,1],[1,0]]"')
    realizer.add_argument("poset")

    sets = add_action(group, "sets", sets_command,
                      "separation by a family of increasing sets")
    sets.add_argument("--sets", type=json.loads, required=True,
                      help='increasing sets, e.g. "[[2], [0, 2]]"')
    sets.add_argument("--mode", choices=SEPARATION_MODES,
                      default="multi-utility")
    sets.add_argument("--r", default="1/3",
                      help="radix of the monotone, in (0, 1/2)")
    sets.add_argument("poset")

    dense = add_action(group, "dense", dense_command,
                       "density condition witnessed by a subset")
    dense.add_argument("--subset", type=json.loads, required=True)
    dense.add_argument("--mode", choices=DENSITY_MODES,
                       default="debreu-dense")
    dense.add_argument("poset")

    limit = add_action(group, "limit", limit_command,
                       "limit of an eventually periodic relation sequence")
    limit.add_argument("relations")

    thermo = add_action(group, "thermo", thermo_command,
                        "thermodynamic representation, when one exists")
    thermo.add_argument("poset")
