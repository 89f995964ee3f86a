"""
CLI entry point for hiercost
Runs when the user types 'hiercost' in a terminal
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, NoReturn

from rich.table import Table

from src.clusterers import (
    LINKAGE_METHODS,
    linkage,
    optimal_tree_bruteforce,
    run_experiment,
    run_greedy,
    summarize,
    with_aggregate,
)
from src.config.constants import EXIT_DATA, EXIT_OK, EXIT_USAGE, HIERCOST_NAME, HIERCOST_VERSION
from src.config.settings import load_settings
from src.cost import CostReport, cost, generalized_cost, parse_scaling
from src.cuts import CUT_MODES
from src.generators import (
    clusters_sidecar,
    gen_clique,
    gen_general_planted,
    gen_line,
    gen_planted,
    gen_two_cliques,
)
from src.graph import Graph, dump_graph, read_graph, write_graph
from src.hardness import (
    assignment_to_tree,
    from_naesat,
    naesat_brute,
    read_dimacs,
    reduce_to_graph,
    remove_redundancies,
)
from src.tree import ClusterTree
from src.utils.errors import HierCostError, UsageError
from src.utils.logger import get_logger, reset_logger

GEN_KINDS = ("line", "clique", "two-cliques", "planted", "general-planted")
CLUSTER_METHODS = ("greedy", "greedy-f", *LINKAGE_METHODS, "optimal")


class _ArgumentParser(argparse.ArgumentParser):
    """argparse exits with 2 on bad usage; usage errors exit with 1 here"""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_arguments(argv: list[str] | None = None) -> argparse.Namespace:
    """Parses command line arguments"""
    parser = _ArgumentParser(
        prog=HIERCOST_NAME,
        description="hiercost - hierarchical clustering cost: evaluate, optimize, audit",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument(
        "-d", "--debug", action="store_true", help="Enables debug mode with detailed logs"
    )
    parser.add_argument("--log-file", type=str, default=None, help="Also write DEBUG logs here")
    parser.add_argument("-v", "--version", action="store_true", help="Shows hiercost version")

    sub = parser.add_subparsers(dest="command", parser_class=_ArgumentParser)

    gen = sub.add_parser("gen", help="Generate a graph instance")
    gen.add_argument("kind", choices=GEN_KINDS)
    gen.add_argument("--n", type=int, default=None, help="Node count (line, clique, planted)")
    gen.add_argument("--l", type=int, default=None, help="Left clique size (two-cliques)")
    gen.add_argument("--r", type=int, default=None, help="Right clique size (two-cliques)")
    gen.add_argument("--p", type=float, default=None, help="In-cluster edge probability")
    gen.add_argument("--q", type=float, default=None, help="Cross-cluster edge probability")
    gen.add_argument(
        "--sizes", type=str, default=None, help="Comma-separated cluster sizes (general-planted)"
    )
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", type=str, default=None, help="Edge-list path (stdout if omitted)")

    cluster = sub.add_parser("cluster", help="Build a cluster tree for a graph")
    cluster.add_argument("graph", help="Edge-list file")
    cluster.add_argument("--method", choices=CLUSTER_METHODS, default="greedy")
    cluster.add_argument("--f", type=str, default=None, help="Scaling function, e.g. log, power:2")
    cluster.add_argument("--cut", choices=CUT_MODES, default="auto")
    cluster.add_argument("--seed", type=int, default=0)
    cluster.add_argument("--out", type=str, default=None, help="JSON path (stdout if omitted)")

    cost_cmd = sub.add_parser("cost", help="Evaluate the cost of a stored tree")
    cost_cmd.add_argument("graph", help="Edge-list file")
    cost_cmd.add_argument("tree", help="Tree JSON (nested lists, or a cluster output file)")
    cost_cmd.add_argument("--f", type=str, default=None, help="Scaling function")
    cost_cmd.add_argument("--out", type=str, default=None)

    experiment = sub.add_parser("experiment", help="Run an experiment from a YAML config")
    experiment.add_argument("config", help="YAML config file")
    experiment.add_argument("--out", type=str, default=None, help="CSV path (stdout if omitted)")
    experiment.add_argument("--seed", type=int, default=None, help="Overrides the config seed")
    experiment.add_argument("--jobs", type=int, default=None, help="Worker processes")

    reduce = sub.add_parser("reduce", help="Reduce a NAESAT* formula to a clustering instance")
    reduce.add_argument("cnf", help="DIMACS CNF file")
    reduce.add_argument("--out", type=str, default=None, help="Edge-list path for the graph")
    reduce.add_argument(
        "--from-naesat",
        action="store_true",
        help="Input is plain 3-clause NAESAT; rewrite it first",
    )
    reduce.add_argument(
        "--witness", action="store_true", help="Search for an assignment and audit its tree"
    )
    reduce.add_argument("--jobs", type=int, default=1)

    args = parser.parse_args(argv)
    if not args.version and args.command is None:
        parser.error("a command is required")
    return args


def _emit(data: Any, out: str | None) -> None:
    text = json.dumps(data, indent=2)
    if out:
        Path(out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def _sidecar_path(out: str, suffix: str) -> Path:
    path = Path(out)
    return path.with_name(f"{path.stem}{suffix}")


def _require(value: Any, flag: str, kind: str) -> Any:
    if value is None:
        raise UsageError(f"gen {kind} needs {flag}")
    return value


def cmd_gen(args: argparse.Namespace) -> int:
    """Generate a graph and its ground-truth sidecar"""
    logger = get_logger()
    kind = args.kind
    logger.log_run_start(f"gen {kind}", args.seed)
    clusters: list[frozenset[int]] = []
    params: dict[str, Any]

    if kind in ("line", "clique"):
        n = _require(args.n, "--n", kind)
        if n < 1:
            raise UsageError(f"--n must be at least 1, got {n}")
        graph = gen_line(n) if kind == "line" else gen_clique(n)
        params = {"n": n}
    elif kind == "two-cliques":
        l, r = _require(args.l, "--l", kind), _require(args.r, "--r", kind)
        graph, clusters = gen_two_cliques(l, r)
        params = {"l": l, "r": r}
    elif kind == "planted":
        n = _require(args.n, "--n", kind)
        p, q = _require(args.p, "--p", kind), _require(args.q, "--q", kind)
        graph, left, right = gen_planted(n, p, q, args.seed)
        clusters = [left, right]
        params = {"n": n, "p": p, "q": q}
    else:
        spec = _require(args.sizes, "--sizes", kind)
        try:
            sizes = [int(s) for s in spec.split(",")]
        except ValueError:
            raise UsageError(f"--sizes must be comma-separated integers, got {spec!r}")
        p, q = _require(args.p, "--p", kind), _require(args.q, "--q", kind)
        graph, clusters = gen_general_planted(sizes, p, q, args.seed)
        params = {"sizes": sizes, "p": p, "q": q}

    sidecar = clusters_sidecar(kind, params, clusters, seed=args.seed)
    if args.out:
        write_graph(graph, args.out)
        sidecar_path = _sidecar_path(args.out, ".clusters.json")
        sidecar_path.write_text(json.dumps(sidecar, indent=2) + "\n", encoding="utf-8")
        logger.log_output(f"{graph.n}-node graph", args.out)
        logger.log_output("ground truth", sidecar_path)
    else:
        sys.stdout.write(dump_graph(graph))
    return EXIT_OK


def cmd_cluster(args: argparse.Namespace) -> int:
    """Build a tree with the chosen method and report its cost"""
    logger = get_logger()
    graph = read_graph(args.graph)
    f = parse_scaling(args.f) if args.f else None
    if args.method == "greedy-f" and f is None:
        raise UsageError("--method greedy-f needs --f")
    logger.log_run_start(f"cluster --method {args.method}", args.seed, {"cut": args.cut, "f": args.f})

    metadata: dict[str, Any] = {"method": args.method, "seed": args.seed, "cut_mode": args.cut}
    if args.method in ("greedy", "greedy-f"):
        outcome = run_greedy(graph, cut=args.cut, seed=args.seed, f=f if args.method == "greedy-f" else None)
        tree = outcome.tree
        metadata.update(certified=outcome.certified, solvers=list(outcome.solvers_used))
        logger.log_solver(", ".join(outcome.solvers_used) or "none", outcome.certified)
    elif args.method == "optimal":
        tree, _ = optimal_tree_bruteforce(graph, f)
        metadata.update(certified=True, solvers=["bruteforce"])
    else:
        tree = linkage(graph, args.method)
        metadata.update(certified=None, solvers=["linkage"])

    scaled = f if args.method != "greedy" else None
    report = _cost_report(graph, tree, scaled)
    metadata["scaling"] = report.scaling
    _emit({"tree": tree.to_json(), "cost": report.to_dict(), "metadata": metadata}, args.out)
    logger.info(f"{args.method} tree on {graph.n} nodes: cost {report.total:g}")
    return EXIT_OK


def _cost_report(graph: Graph, tree: ClusterTree, f: Any) -> CostReport:
    return cost(graph, tree) if f is None else generalized_cost(graph, tree, f)


def _load_tree(path: str) -> ClusterTree:
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if isinstance(data, dict):
        if "tree" not in data:
            raise UsageError(f"{path} has no 'tree' entry")
        data = data["tree"]
    return ClusterTree.from_json(data)


def cmd_cost(args: argparse.Namespace) -> int:
    """Audit the cost of a stored tree"""
    graph = read_graph(args.graph)
    f = parse_scaling(args.f) if args.f else None
    report = _cost_report(graph, _load_tree(args.tree), f)
    _emit(report.to_dict(), args.out)
    return EXIT_OK


def _summary_table(summary: Any) -> Table:
    table = Table(title="Experiment summary")
    for column in summary.columns:
        table.add_column(str(column), justify="right")
    for row in summary.itertuples(index=False):
        table.add_row(*(f"{v:.4g}" if isinstance(v, float) else str(v) for v in row))
    return table


def cmd_experiment(args: argparse.Namespace) -> int:
    """Run an experiment config and write per-trial rows plus aggregates as CSV"""
    logger = get_logger()
    settings = load_settings(args.config)
    if args.seed is not None:
        settings.seed = args.seed
    if args.jobs is not None:
        settings.jobs = args.jobs
    valid, message = settings.validate()
    if not valid:
        raise UsageError(message or "invalid settings")
    logger.log_run_start(f"experiment {settings.kind}", settings.seed, settings.to_dict())

    df = run_experiment(settings)
    table = with_aggregate(df)
    if args.out:
        table.to_csv(args.out, index=False)
        logger.log_output(f"{len(df)} rows", args.out)
    else:
        table.to_csv(sys.stdout, index=False)
    logger.console.print(_summary_table(summarize(df)))
    return EXIT_OK


def cmd_reduce(args: argparse.Namespace) -> int:
    """remove_redundancies -> validate -> reduce_to_graph, with an optional witness"""
    logger = get_logger()
    phi = read_dimacs(args.cnf)
    if args.from_naesat:
        phi = from_naesat(phi)
    phi = remove_redundancies(phi)
    reduction = reduce_to_graph(phi)
    data = reduction.to_dict()
    data["edges"] = len(reduction.graph.edges)
    logger.log_reduction(reduction.graph.n, data["edges"], reduction.M, reduction.W)

    if args.witness:
        assignment = naesat_brute(phi, jobs=args.jobs)
        if assignment is None or phi.num_vars == 0:
            data["witness"] = None
            logger.info("No NAE-satisfying assignment; no witness tree")
        else:
            tree = assignment_to_tree(phi, assignment)
            total = cost(reduction.graph, tree).total
            data["witness"] = {
                "assignment": assignment,
                "tree": tree.to_json(),
                "cost": total,
                "meets_threshold": total >= reduction.M,
            }
            logger.log_witness(total, reduction.M)

    if args.out:
        write_graph(reduction.graph, args.out)
        _emit(data, str(_sidecar_path(args.out, ".reduction.json")))
    else:
        _emit(data, None)
    return EXIT_OK


COMMANDS = {
    "gen": cmd_gen,
    "cluster": cmd_cluster,
    "cost": cmd_cost,
    "experiment": cmd_experiment,
    "reduce": cmd_reduce,
}


def main(argv: list[str] | None = None) -> int:
    """
    Main entry point for the 'hiercost' command

    Returns:
        0 on success, 1 on usage errors, 2 on data or validation errors
    """
    try:
        args = parse_arguments(argv)
    except SystemExit as e:
        return int(e.code or 0)

    if args.version:
        print_version()
        return EXIT_OK

    reset_logger()
    logger = get_logger(log_file=args.log_file, level=logging.DEBUG if args.debug else logging.INFO)
    if args.debug:
        logger.debug("DEBUG mode enabled")

    try:
        return COMMANDS[args.command](args)
    except UsageError as e:
        print(f"{HIERCOST_NAME}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (HierCostError, OSError, json.JSONDecodeError) as e:
        if args.debug:
            logger.log_error_with_context(e, args.command)
        print(f"{HIERCOST_NAME}: error: {e}", file=sys.stderr)
        return EXIT_DATA


def print_version():
    """Shows hiercost version"""
    print(f"{HIERCOST_NAME} {HIERCOST_VERSION}")
    print(f"Python:   {sys.version.split()[0]}")
    print(f"Platform: {sys.platform}")


if __name__ == "__main__":
    sys.exit(main())
