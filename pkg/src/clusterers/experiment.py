"""
Experiment runners producing pandas DataFrames (written out as CSV by the CLI).

Trial k always draws from derive_rng(seed, k), so results do not depend on how many
worker processes run the trials.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from typing import Any

import pandas as pd

from src.clusterers.greedy import make_tree, make_tree_generalized, run_greedy
from src.clusterers.linkage import LINKAGE_METHODS, linkage
from src.clusterers.oracles import optimal_tree_bruteforce
from src.config.constants import (
    BRUTEFORCE_CAP,
    EXACT_CUT_CAP,
    GREEDY_BOUND_FACTOR,
    PLANTED_DELTA,
    REL_TOL,
)
from src.config.settings import EXPERIMENT_METHODS, ExperimentSettings
from src.cost.engine import cost, generalized_cost
from src.cost.planted import PlantedModel, epsilon_good, planted_gap_bound, recovery_epsilon
from src.cost.scaling import ScalingFunction, parse_scaling
from src.generators.instances import derive_rng, gen_random_graph, sample_planted
from src.graph import Graph
from src.tree import ClusterTree
from src.utils.errors import CapacityError, ValidationError

logger = logging.getLogger(__name__)

PLANTED_COLUMNS = [
    "trial", "n", "p", "q", "method", "eps", "cost", "optimal_cost", "ratio",
    "eps_good", "certified", "gap_bound", "recovery_eps", "seed",
]
APPROXIMATION_COLUMNS = [
    "instance", "n", "edges", "method", "scaling", "cost", "optimal_cost", "ratio",
    "bound", "within_bound", "seed",
]


def _map(fn: Callable[[Any], list[dict[str, Any]]], tasks: Sequence[Any], jobs: int) -> list[dict[str, Any]]:
    """Run tasks in order, across processes when jobs > 1; results keep task order."""
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            batches = list(executor.map(fn, tasks))
    else:
        batches = [fn(task) for task in tasks]
    return [row for batch in batches for row in batch]


def _ratio(value: float, optimum: float | None) -> float:
    if optimum is None:
        return math.nan
    if optimum == 0:
        return 1.0 if value == 0 else math.inf
    return value / optimum


def _build(method: str, graph: Graph, cut_mode: str, seed: int, optimal: ClusterTree | None) -> tuple[ClusterTree, bool]:
    if method == "optimal":
        if optimal is None:
            raise CapacityError("optimal tree", graph.n, BRUTEFORCE_CAP)
        return optimal, True
    if method in LINKAGE_METHODS:
        return linkage(graph, method), False
    mode = {"greedy-exact": "exact", "greedy-heuristic": "heuristic"}.get(method, cut_mode)
    outcome = run_greedy(graph, cut=mode, seed=seed)
    return outcome.tree, outcome.certified


def _planted_trial(task: tuple[Any, ...]) -> list[dict[str, Any]]:
    trial, model, epsilons, methods, cut_mode, seed = task
    rng = derive_rng(seed, trial)
    graph = sample_planted(model, rng)
    cut_seed = int(rng.integers(2**31 - 1))
    left, right = model.clusters

    optimal_tree: ClusterTree | None = None
    optimal_cost: float | None = None
    if model.n <= BRUTEFORCE_CAP:
        optimal_tree, optimal_cost = optimal_tree_bruteforce(graph)

    try:
        recovery_eps = recovery_epsilon(model.n, model.p, model.q, PLANTED_DELTA)
    except ValidationError:
        recovery_eps = math.nan

    rows = []
    for method in methods:
        tree, certified = _build(method, graph, cut_mode, cut_seed, optimal_tree)
        value = cost(graph, tree).total
        for eps in epsilons:
            good, _ = epsilon_good(tree, left, right, eps)
            rows.append({
                "trial": trial,
                "n": model.n,
                "p": model.p,
                "q": model.q,
                "method": method,
                "eps": eps,
                "cost": value,
                "optimal_cost": math.nan if optimal_cost is None else optimal_cost,
                "ratio": _ratio(value, optimal_cost),
                "eps_good": good,
                "certified": certified,
                "gap_bound": planted_gap_bound(model.n, model.p, model.q, eps),
                "recovery_eps": recovery_eps,
                "seed": seed,
            })
    return rows


def planted_experiment(
    model: PlantedModel,
    trials: int,
    epsilons: Iterable[float],
    seed: int = 0,
    methods: Sequence[str] = ("greedy-heuristic",),
    cut_mode: str = "auto",
    jobs: int = 1,
) -> pd.DataFrame:
    """
    Sample planted graphs and record, per trial and method, the tree cost, the
    brute-force optimum (when n <= BRUTEFORCE_CAP) and eps-goodness for each eps.

    Raises:
        ValidationError: On a non-simple model, no trials or unknown methods
        CapacityError: When a method needs exact search beyond its cap
    """
    if model.kind != "simple":
        raise ValidationError("planted experiments need the simple (n, p, q) model")
    if trials < 1:
        raise ValidationError(f"trials must be positive, got {trials}")
    eps_list = list(epsilons)
    for method in methods:
        if method not in EXPERIMENT_METHODS:
            raise ValidationError(f"unknown method {method!r}")
    if "optimal" in methods and model.n > BRUTEFORCE_CAP:
        raise CapacityError("optimal tree", model.n, BRUTEFORCE_CAP)
    if "greedy-exact" in methods and model.n > EXACT_CUT_CAP:
        raise CapacityError("exact cut enumeration", model.n, EXACT_CUT_CAP)

    logger.info(
        "planted experiment n=%d p=%s q=%s: %d trials, methods %s", model.n, model.p, model.q,
        trials, ", ".join(methods),
    )
    tasks = [(trial, model, eps_list, list(methods), cut_mode, seed) for trial in range(trials)]
    rows = _map(_planted_trial, tasks, jobs)
    return pd.DataFrame(rows, columns=PLANTED_COLUMNS)


def generalized_bound(f: ScalingFunction, n: int) -> float:
    """c_n ln n with c_n = 3 max_{1 <= k <= n} f(k) / f(ceil(k/3))."""
    c_n = 3 * max(f(k) / f(-(-k // 3)) for k in range(1, n + 1))
    return c_n * math.log(n)


def _approximation_instance(task: tuple[Any, ...]) -> list[dict[str, Any]]:
    instance, min_n, max_n, edge_probability, scaling, seed = task
    rng = derive_rng(seed, instance)
    n = int(rng.integers(min_n, max_n + 1))
    graph = gen_random_graph(n, edge_probability, rng, connected=True)
    base = {"instance": instance, "n": n, "edges": len(graph.edges), "seed": seed}

    rows = []
    tree = make_tree(graph, cut="exact")
    value = cost(graph, tree).total
    _, optimum = optimal_tree_bruteforce(graph)
    bound = GREEDY_BOUND_FACTOR * math.log(n)
    ratio = _ratio(value, optimum)
    rows.append({
        **base, "method": "greedy", "scaling": "linear", "cost": value,
        "optimal_cost": optimum, "ratio": ratio, "bound": bound,
        "within_bound": ratio <= bound + REL_TOL,
    })

    for spec in scaling:
        f = parse_scaling(spec)
        tree = make_tree_generalized(graph, f, mode="exact")
        value = generalized_cost(graph, tree, f).total
        _, optimum = optimal_tree_bruteforce(graph, f)
        bound = generalized_bound(f, n)
        ratio = _ratio(value, optimum)
        rows.append({
            **base, "method": "greedy-f", "scaling": f.spec, "cost": value,
            "optimal_cost": optimum, "ratio": ratio, "bound": bound,
            "within_bound": ratio <= bound + REL_TOL,
        })
    return rows


def approximation_experiment(settings: ExperimentSettings) -> pd.DataFrame:
    """
    Random connected unit-weight graphs with min_n <= n <= max_n: greedy top-down
    cost with exact cuts against the brute-force optimum and the (27/4) ln n bound,
    plus the generalized comparison for every configured scaling function.

    Raises:
        CapacityError: If max_n exceeds BRUTEFORCE_CAP
    """
    if settings.max_n > BRUTEFORCE_CAP:
        raise CapacityError("approximation corpus", settings.max_n, BRUTEFORCE_CAP)
    for spec in settings.scaling:
        parse_scaling(spec)
    logger.info(
        "approximation corpus: %d graphs, n in [%d, %d], p=%s",
        settings.trials, settings.min_n, settings.max_n, settings.edge_probability,
    )
    tasks = [
        (i, settings.min_n, settings.max_n, settings.edge_probability, list(settings.scaling), settings.seed)
        for i in range(settings.trials)
    ]
    rows = _map(_approximation_instance, tasks, settings.jobs)
    return pd.DataFrame(rows, columns=APPROXIMATION_COLUMNS)


def run_experiment(settings: ExperimentSettings) -> pd.DataFrame:
    """Dispatch on settings.kind."""
    if settings.kind == "approximation":
        return approximation_experiment(settings)
    model = PlantedModel.simple(settings.n, settings.p, settings.q)
    return planted_experiment(
        model,
        trials=settings.trials,
        epsilons=settings.epsilons,
        seed=settings.seed,
        methods=settings.methods,
        cut_mode=settings.cut_mode,
        jobs=settings.jobs,
    )


def summarize(df: pd.DataFrame) -> pd.DataFrame:
    """One aggregate row per method (and eps or scaling): mean cost, max ratio, rates."""
    if "eps" in df.columns:
        keys = ["method", "eps"]
        agg = df.groupby(keys, sort=False).agg(
            trials=("trial", "count"),
            cost=("cost", "mean"),
            optimal_cost=("optimal_cost", "mean"),
            ratio=("ratio", "max"),
            eps_good=("eps_good", "mean"),
        )
    else:
        keys = ["method", "scaling"]
        agg = df.groupby(keys, sort=False).agg(
            trials=("instance", "count"),
            cost=("cost", "mean"),
            optimal_cost=("optimal_cost", "mean"),
            ratio=("ratio", "max"),
            bound=("bound", "max"),
            within_bound=("within_bound", "mean"),
        )
    return agg.reset_index()


def with_aggregate(df: pd.DataFrame) -> pd.DataFrame:
    """Per-trial rows followed by aggregate rows labelled "aggregate"."""
    summary = summarize(df)
    id_column = "trial" if "trial" in df.columns else "instance"
    summary = summary.drop(columns=["trials"]).assign(**{id_column: "aggregate"})
    return pd.concat([df.astype({id_column: object}), summary], ignore_index=True)[list(df.columns)]
