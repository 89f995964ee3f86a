"""
Experiment configuration loaded from a YAML file.

Example:

    kind: planted
    n: 40
    p: 0.8
    q: 0.2
    trials: 50
    epsilons: [0.2]
    methods: [greedy-heuristic]
    seed: 7
"""

from __future__ import annotations

from pathlib import Path
from typing import Any

import yaml

from src.utils.errors import ConfigError

EXPERIMENT_KINDS = ("planted", "approximation")
EXPERIMENT_METHODS = (
    "greedy-exact",
    "greedy-heuristic",
    "greedy-auto",
    "optimal",
    "single",
    "average",
    "complete",
)


class ExperimentSettings:
    """Settings for one experiment run"""

    DEFAULT_KIND = "planted"
    DEFAULT_N = 40
    DEFAULT_P = 0.8
    DEFAULT_Q = 0.2
    DEFAULT_TRIALS = 50
    DEFAULT_EPSILONS = (0.2,)
    DEFAULT_METHODS = ("greedy-heuristic",)
    DEFAULT_SEED = 0
    DEFAULT_CUT_MODE = "auto"
    DEFAULT_MIN_N = 3
    DEFAULT_MAX_N = 8
    DEFAULT_EDGE_PROBABILITY = 0.5
    DEFAULT_JOBS = 1

    def __init__(
        self,
        kind: str | None = None,
        n: int | None = None,
        p: float | None = None,
        q: float | None = None,
        trials: int | None = None,
        epsilons: list[float] | None = None,
        methods: list[str] | None = None,
        seed: int | None = None,
        cut_mode: str | None = None,
        min_n: int | None = None,
        max_n: int | None = None,
        edge_probability: float | None = None,
        scaling: list[str] | None = None,
        jobs: int | None = None,
    ):
        """
        Args:
            kind: "planted" (epsilon-goodness runs) or "approximation" (ratio corpus)
            n, p, q: Planted model parameters
            trials: Planted trials, or corpus size for approximation runs
            epsilons: Epsilon values checked on every planted tree
            methods: Tree builders compared in planted runs
            seed: Master seed; trial k uses stream k
            cut_mode: Cut mode for the greedy-auto method
            min_n, max_n: Node-count range of the approximation corpus
            edge_probability: Erdos-Renyi edge probability of the corpus graphs
            scaling: Scaling function specs for the generalized corpus
            jobs: Worker processes (1 runs sequentially)
        """
        self.kind = kind if kind is not None else self.DEFAULT_KIND
        self.n = n if n is not None else self.DEFAULT_N
        self.p = p if p is not None else self.DEFAULT_P
        self.q = q if q is not None else self.DEFAULT_Q
        self.trials = trials if trials is not None else self.DEFAULT_TRIALS
        self.epsilons = list(epsilons) if epsilons is not None else list(self.DEFAULT_EPSILONS)
        self.methods = list(methods) if methods is not None else list(self.DEFAULT_METHODS)
        self.seed = seed if seed is not None else self.DEFAULT_SEED
        self.cut_mode = cut_mode or self.DEFAULT_CUT_MODE
        self.min_n = min_n if min_n is not None else self.DEFAULT_MIN_N
        self.max_n = max_n if max_n is not None else self.DEFAULT_MAX_N
        self.edge_probability = (
            edge_probability if edge_probability is not None else self.DEFAULT_EDGE_PROBABILITY
        )
        self.scaling = list(scaling) if scaling is not None else []
        self.jobs = jobs if jobs is not None else self.DEFAULT_JOBS

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> ExperimentSettings:
        """
        Raises:
            ConfigError: On unknown keys
        """
        known = {
            "kind", "n", "p", "q", "trials", "epsilons", "methods", "seed", "cut_mode",
            "min_n", "max_n", "edge_probability", "scaling", "jobs",
        }
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError(f"unknown config keys: {', '.join(unknown)}")
        return cls(**data)

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "n": self.n,
            "p": self.p,
            "q": self.q,
            "trials": self.trials,
            "epsilons": list(self.epsilons),
            "methods": list(self.methods),
            "seed": self.seed,
            "cut_mode": self.cut_mode,
            "min_n": self.min_n,
            "max_n": self.max_n,
            "edge_probability": self.edge_probability,
            "scaling": list(self.scaling),
            "jobs": self.jobs,
        }

    def validate(self) -> tuple[bool, str | None]:
        """
        Validates that the configuration is correct

        Returns:
            Tuple (is_valid, error_message)
        """
        if self.kind not in EXPERIMENT_KINDS:
            return False, f"kind must be one of {', '.join(EXPERIMENT_KINDS)}, got {self.kind!r}"
        if not isinstance(self.trials, int) or self.trials < 1:
            return False, f"trials must be a positive integer, got {self.trials!r}"
        if not isinstance(self.seed, int) or self.seed < 0:
            return False, f"seed must be a nonnegative integer, got {self.seed!r}"
        if not isinstance(self.jobs, int) or self.jobs < 1:
            return False, f"jobs must be a positive integer, got {self.jobs!r}"
        if self.cut_mode not in ("exact", "heuristic", "auto"):
            return False, f"cut_mode must be exact, heuristic or auto, got {self.cut_mode!r}"

        if self.kind == "planted":
            if not isinstance(self.n, int) or self.n < 2 or self.n % 2:
                return False, f"n must be an even integer >= 2, got {self.n!r}"
            if not (0.0 <= self.q < self.p <= 1.0):
                return False, f"need 0 <= q < p <= 1, got p={self.p}, q={self.q}"
            if not self.epsilons or any(not 0.0 <= e <= 1.0 for e in self.epsilons):
                return False, f"epsilons must be a nonempty list in [0, 1], got {self.epsilons}"
            bad = [m for m in self.methods if m not in EXPERIMENT_METHODS]
            if not self.methods or bad:
                return False, f"unknown methods {bad}; expected {', '.join(EXPERIMENT_METHODS)}"
        else:
            if not isinstance(self.max_n, int) or not isinstance(self.min_n, int):
                return False, "min_n and max_n must be integers"
            if not 2 <= self.min_n <= self.max_n:
                return False, f"need 2 <= min_n <= max_n, got {self.min_n}, {self.max_n}"
            if not 0.0 < self.edge_probability <= 1.0:
                return False, f"edge_probability must lie in (0, 1], got {self.edge_probability}"

        return True, None

    def __repr__(self) -> str:
        return f"ExperimentSettings({self.to_dict()})"


def load_settings(path: str | Path) -> ExperimentSettings:
    """
    Read and validate an experiment config.

    Raises:
        ConfigError: If the file is missing, not a YAML mapping or invalid
    """
    config_path = Path(path)
    try:
        raw = config_path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"cannot read config {config_path}: {e}")
    try:
        data = yaml.safe_load(raw)
    except yaml.YAMLError as e:
        raise ConfigError(f"invalid YAML in {config_path}: {e}")
    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise ConfigError(f"config {config_path} must be a mapping of keys to values")

    settings = ExperimentSettings.from_dict(data)
    is_valid, error = settings.validate()
    if not is_valid:
        raise ConfigError(f"invalid config {config_path}: {error}")
    return settings
