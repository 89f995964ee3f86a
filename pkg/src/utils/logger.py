"""
Logging system for hiercost
Console output goes through Rich on stderr, an optional log file gets everything
"""

import logging
from pathlib import Path
from typing import Any

from rich.console import Console
from rich.logging import RichHandler

LOGGER_NAME = "src"


class HierCostLogger:
    """Package logger with a Rich console handler and optional file handler"""

    def __init__(
        self, name: str = LOGGER_NAME, log_file: str | None = None, level: int = logging.INFO
    ):
        """
        Initialize the logger

        Args:
            name: Logger name. Module loggers (logging.getLogger(__name__)) under
                the package propagate here.
            log_file: Path to log file (optional, no file logging when omitted)
            level: Console logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        """
        self.logger = logging.getLogger(name)
        # Always DEBUG at logger level so the file handler receives everything
        self.logger.setLevel(logging.DEBUG)
        self.logger.handlers.clear()
        self.logger.propagate = False

        self.console = Console(stderr=True)

        console_handler = RichHandler(
            console=self.console,
            show_time=True,
            show_path=False,
            rich_tracebacks=True,
        )
        console_handler.setLevel(level)
        console_handler.setFormatter(logging.Formatter("%(message)s", datefmt="[%X]"))
        self.logger.addHandler(console_handler)

        if log_file:
            log_path = Path(log_file)
            log_path.parent.mkdir(parents=True, exist_ok=True)

            file_handler = logging.FileHandler(log_file, encoding="utf-8")
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(
                logging.Formatter(
                    "%(asctime)s | %(name)s | %(levelname)s | %(funcName)s:%(lineno)d | %(message)s",
                    datefmt="%Y-%m-%d %H:%M:%S",
                )
            )
            self.logger.addHandler(file_handler)

    def _log(self, level: int, message: str, **kwargs) -> None:
        self.logger.log(level, message, extra=kwargs, stacklevel=3)

    def debug(self, message: str, **kwargs):
        self._log(logging.DEBUG, message, **kwargs)

    def info(self, message: str, **kwargs):
        self._log(logging.INFO, message, **kwargs)

    def warning(self, message: str, **kwargs):
        self._log(logging.WARNING, message, **kwargs)

    def error(self, message: str, **kwargs):
        self._log(logging.ERROR, message, **kwargs)

    def log_run_start(self, command: str, seed: int | None, params: dict[str, Any] | None = None):
        """Log the start of a CLI command with its reproducibility parameters"""
        self.info(f"Running {command} (seed={seed})")
        if params:
            self.debug(f"   Params: {params}")

    def log_solver(self, solver: str, certified: bool):
        """Log which cut solver produced a tree"""
        status = "certified" if certified else "uncertified"
        self.info(f"Cut solver: {solver} ({status})")

    def log_output(self, what: str, path: str | Path) -> None:
        self.info(f"Wrote {what} to {path}")

    def log_reduction(self, nodes: int, edges: int, threshold: int, heavy_weight: int) -> None:
        self.info(f"Reduction graph: {nodes} nodes, {edges} edges, M={threshold}, W={heavy_weight}")

    def log_witness(self, total: float, threshold: int) -> None:
        verdict = "meets" if total >= threshold else "MISSES"
        level = logging.INFO if total >= threshold else logging.WARNING
        self._log(level, f"Witness tree cost {total:g} {verdict} M={threshold}")

    def log_error_with_context(self, error: Exception, context: str):
        """Log an error raised while running a command, traceback at DEBUG"""
        self.error(f"Error in {context}: {type(error).__name__}: {error}")
        self.logger.debug("Full traceback:", exc_info=True)


_global_logger: HierCostLogger | None = None


def get_logger(log_file: str | None = None, level: int = logging.INFO) -> HierCostLogger:
    """
    Gets the global logger instance

    Args:
        log_file: Path to log file (only used on first call)
        level: Console logging level

    Returns:
        HierCostLogger: Logger instance
    """
    global _global_logger

    if _global_logger is None:
        _global_logger = HierCostLogger(name=LOGGER_NAME, log_file=log_file, level=level)

    return _global_logger


def reset_logger() -> None:
    """Drop the global instance so the next get_logger() call rebuilds it"""
    global _global_logger
    _global_logger = None


def set_log_level(level: int):
    """
    Changes the console logging level

    Args:
        level: New level (logging.DEBUG, INFO, WARNING, ERROR, CRITICAL)
    """
    logger = get_logger()
    # File handler stays at DEBUG, only the Rich console handler changes
    for handler in logger.logger.handlers:
        if isinstance(handler, RichHandler):
            handler.setLevel(level)
