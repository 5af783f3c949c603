"""`ordlab dist`: validated distributions and their summary statistics"""
from core.cli import add_action, command_group
from core.loaders import load_dist, load_scores
from dist_core.dist import (
    boltzmann, partial_sum_utilities, shannon_entropy, sorted_desc, top_sums
)


def describe_command(config):
    p = load_dist(config.options["p"])
    return {
        "p": p,
        "sorted": sorted_desc(p),
        "top_sums": top_sums(p),
        "partial_sums": partial_sum_utilities(p),
        "entropy": shannon_entropy(p),
    }


def boltzmann_command(config):
    p = boltzmann(load_scores(config.options["U"]), config.options["beta"])
    return {"p": p, "entropy": shannon_entropy(p)}


@command_group("dist", "probability vectors on finitely many outcomes")
def register(group) -> None:
    describe = add_action(group, "describe", describe_command,
                          "sorted entries, top sums, partial-sum utilities "
                          "and entropy of p")
    describe.add_argument("p")

    gibbs = add_action(group, "boltzmann", boltzmann_command,
                       "p(x) proportional to exp(beta U(x))")
    gibbs.add_argument("--U", required=True, help="score file")
    gibbs.add_argument("--beta", type=float, required=True)
