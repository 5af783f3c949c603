"""`ordlab fluct`: exact and sampled fluctuation theorems, simulations"""
import json

from core.cli import add_action, command_group
from core.emit import Table
from core.loaders import (
    load_chain, load_chain_spec, load_dist, load_samples
)
from fluct_lab.chains import (
    BALANCE_TOL, exact_stationary_dist, is_irreducible, metropolis_matrix,
    nearest_neighbour_proposal, reversed_chain, satisfies_detailed_balance,
    stationary_dist, uniform_proposal
)
from fluct_lab.energies import delta_F
from fluct_lab.estimators import (
    MEAN, MEAN_EXP_NEG, bootstrap_ci, crooks_mc_curve, kde_density
)
from fluct_lab.experiment import (
    BACKWARD_STREAM, DEFAULT_THETA, FORWARD_STREAM, SimulationProtocol,
    coverage, simulate_protocol
)
from fluct_lab.losses import LossModel
from fluct_lab.sampling import jarzynski_mc, sample_works
from fluct_lab.theorems import (
    GROUP_TOL, crooks_check, exact_work_distribution, jarzynski_exact,
    log_prime_form, rational_crooks_check, rational_work_distribution
)

DEFAULT_SAMPLES = 100000
LOSSES = {
    "exp-quadratic": lambda o: LossModel.exp_quadratic(o["theta"], o["b"]),
    "mexican-hat": lambda o: LossModel.mexican_hat(o["theta"], o["sigma"]),
    "mixture": lambda o: LossModel.mixture(o["theta"], o["weight"], o["b"],
                                           o["sigma"]),
}
STATISTICS = {"mean": MEAN, "mean-exp-neg": MEAN_EXP_NEG}
PROPOSALS = {
    "uniform": uniform_proposal,
    "nearest": nearest_neighbour_proposal,
}


def jarzynski_command(config):
    spec, E = load_chain(config.options["chain"])
    if config.options["rational"]:
        law = rational_work_distribution(spec)
        return {"mode": "rational", "value": law.jarzynski()}
    if config.options["mc"]:
        count = config.options["samples"]
        value = jarzynski_mc(spec, E, count, config.seed, config.jobs)
        return {"mode": "mc", "samples": count, "value": value,
                "delta_F": delta_F(E)}
    return {"mode": "exact", "value": jarzynski_exact(spec, E),
            "delta_F": delta_F(E)}


def crooks_command(config):
    spec, E = load_chain(config.options["chain"])
    if config.options["rational"]:
        return Table(("ratio", "work", "forward", "backward"), [
            (ratio, str(log_prime_form(ratio)), forward, backward)
            for ratio, forward, backward in rational_crooks_check(spec)
        ])
    if config.options["mc"]:
        count = config.options["samples"]
        grid = config.options["grid"]
        if grid is None:
            forward_law = exact_work_distribution(spec, E)
            grid = [w for w, _ in forward_law.support]
        forward = sample_works(spec, E, count, config.seed, config.jobs,
                               FORWARD_STREAM)
        backward = sample_works(reversed_chain(spec), E.reversed(), count,
                                config.seed, config.jobs, BACKWARD_STREAM)
        curve = crooks_mc_curve(forward, backward, E.beta, delta_F(E), grid)
        return Table(("w", "lhs", "rhs"), [tuple(point) for point in curve])
    report = crooks_check(spec, E, config.tolerance(GROUP_TOL))
    return Table(("w", "lhs", "rhs", "gap"), [
        (row.w, row.lhs, row.rhs, row.gap) for row in report.rows
    ])


def chain_command(config):
    """Stationary law of each matrix and whether it is in detailed balance"""
    spec = load_chain_spec(config.options["chain"])
    tol = config.tolerance(BALANCE_TOL)
    rows = []
    for step, M in enumerate(spec.mats, start=1):
        if not is_irreducible(M):
            rows.append((step, False, None, None))
            continue
        if spec.exact:
            p = exact_stationary_dist(spec.exact_mats[step - 1])
        else:
            p = stationary_dist(M)
        rows.append((step, True, p, satisfies_detailed_balance(M, p, tol)))
    return Table(("step", "irreducible", "stationary", "detailed_balance"),
                 rows)


def metropolis_command(config):
    target = load_dist(config.options["target"])
    proposal = PROPOSALS[config.options["proposal"]](target.n)
    M = metropolis_matrix(target, proposal)
    return {
        "matrix": M,
        "stationary": stationary_dist(M),
        "detailed_balance": satisfies_detailed_balance(
            M, target, config.tolerance(BALANCE_TOL)
        ),
    }


def simulate_command(config):
    options = config.options
    protocol = SimulationProtocol(
        loss=LOSSES[options["loss"]](options),
        beta=options["beta"],
        cycles=options["cycles"],
        resamples=options["resamples"],
        level=options["level"],
        randomized=options["randomized"],
    )
    if options["repetitions"]:
        covered = coverage(protocol, options["repetitions"], config.seed,
                           config.jobs)
        return {"repetitions": options["repetitions"], "covered": covered}
    result = simulate_protocol(protocol, config.seed, config.jobs)
    return {
        "delta_F": result.delta_F,
        "estimate": result.estimate,
        "ci": list(result.ci),
        "covers_one": result.covers_one,
        "forward_works": result.forward_works,
        "backward_works": result.backward_works,
    }


def bootstrap_command(config):
    options = config.options
    samples = load_samples(options["samples_file"])
    lo, hi = bootstrap_ci(samples, options["resamples"], options["level"],
                          STATISTICS[options["statistic"]], options["beta"],
                          config.seed, config.jobs)
    return {"statistic": options["statistic"], "lo": lo, "hi": hi}


def kde_command(config):
    density = kde_density(load_samples(config.options["samples_file"]),
                          config.options["bandwidth"])
    grid = config.options["grid"]
    return Table(("w", "density"),
                 [(w, density(w)) for w in grid])


def _add_mode(parser) -> None:
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true",
                      help="enumerate every path (default)")
    mode.add_argument("--mc", action="store_true", help="sample paths")
    mode.add_argument("--rational", action="store_true",
                      help="exact rational work values")
    parser.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)


@command_group("fluct", "Jarzynski and Crooks for finite Markov chains")
def register(group) -> None:
    jarzynski = add_action(group, "jarzynski", jarzynski_command,
                           "E[exp(-beta (W - dF))] of a chain")
    _add_mode(jarzynski)
    jarzynski.add_argument("chain")

    crooks = add_action(group, "crooks", crooks_command,
                        "forward against backward work law")
    _add_mode(crooks)
    crooks.add_argument("--grid", type=json.loads, default=None,
                        help="work values of the sampled curve")
    crooks.add_argument("chain")

    chain = add_action(group, "chain", chain_command,
                       "stationary laws and detailed balance of the matrices")
    chain.add_argument("chain")

    metropolis = add_action(group, "metropolis", metropolis_command,
                            "Metropolis matrix of a target distribution")
    metropolis.add_argument("--proposal", choices=PROPOSALS,
                            default="uniform")
    metropolis.add_argument("target")

    simulate = add_action(group, "simulate", simulate_command,
                          "work samples of the trial protocol with a "
                          "bootstrap interval")
    simulate.add_argument("--loss", choices=LOSSES, default="exp-quadratic")
    simulate.add_argument("--theta", type=json.loads,
                          default=list(DEFAULT_THETA))
    simulate.add_argument("--b", type=float, default=0.0)
    simulate.add_argument("--sigma", type=float, default=4.0)
    simulate.add_argument("--weight", type=float, default=0.5)
    simulate.add_argument("--beta", type=float, default=0.5)
    simulate.add_argument("--cycles", type=int, default=20)
    simulate.add_argument("--resamples", type=int, default=1000)
    simulate.add_argument("--level", type=float, default=0.99)
    simulate.add_argument("--randomized", action="store_true")
    simulate.add_argument("--repetitions", type=int, default=0,
                          help="count intervals containing 1 over seeds")

    bootstrap = add_action(group, "bootstrap", bootstrap_command,
                           "percentile interval of a sample statistic")
    bootstrap.add_argument("--statistic", choices=STATISTICS, default="mean")
    bootstrap.add_argument("--beta", type=float, default=1.0)
    bootstrap.add_argument("--resamples", type=int, default=1000)
    bootstrap.add_argument("--level", type=float, default=0.99)
    bootstrap.add_argument("samples_file", metavar="samples")

    kde = add_action(group, "kde", kde_command,
                     "Gaussian kernel density on a grid")
    kde.add_argument("--grid", type=json.loads, required=True)
    kde.add_argument("--bandwidth", type=float, default=None)
    kde.add_argument("samples_file", metavar="samples")
