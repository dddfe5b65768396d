"""Verification suites, one per subcommand.

Each suite module exposes NAME and run(config, rng) -> SuiteResult. Suites
only compute; reporting and I/O happen in the shell layer.
"""

from collections.abc import Callable

import numpy as np

from src.core.config import SUITE_NAMES, RunConfig
from src.core.report import SuiteResult
from src.suites import affine, axioms, bgl, geodesic, jordan, modular, semigroup

SuiteRunner = Callable[[RunConfig, np.random.Generator], SuiteResult]

SUITES: dict[str, SuiteRunner] = {
    module.NAME: module.run
    for module in (axioms, modular, geodesic, jordan, semigroup, bgl, affine)
}

ALL = "all"


def suites_for(command: str) -> list[str]:
    """Suite names run by a subcommand, in report order.

    Raises:
        KeyError: If the command names no suite
    """
    if command == ALL:
        return list(SUITE_NAMES)
    if command not in SUITES:
        raise KeyError(command)
    return [command]


__all__ = ["ALL", "SUITES", "SuiteRunner", "suites_for"]
