"""Aff(R) on the log-frequency grid: Borchers relation, V and the monotone geodesic."""

import math

import numpy as np

from src.core.affine_flow import (
    INCLUSION_ORIENTATION,
    AffineElement,
    AffineGrid,
    borchers_probe,
    borchers_residual,
    conjugate,
    default_v_vectors,
    dist_to_v,
    geodesic_motion,
    grid_function,
    group_law_residual,
    monotonicity_experiment,
    norm,
    positive_energy_form,
    smooth_v_vectors,
    tomita_square_residual,
    translate,
)
from src.core.config import RunConfig
from src.core.report import CheckResult, SuiteResult
from src.suites.common import add_check, residual_check


NAME = "affine"
BORCHERS_TOLERANCE = 1e-9
GROUP_TOLERANCE = 1e-8
TOMITA_TOLERANCE = 1e-9
MEMBERSHIP_TOLERANCE = 1e-10
INCLUSION_TOLERANCE = 1e-6
MIN_VIOLATION = 1e-3
ALPHA_TOLERANCE = 1e-6
BORCHERS_PARAMETERS = ((0.5, 0.3), (1.0, 0.3))
GROUP_ELEMENTS = (
    AffineElement(0.5, 0.3),
    AffineElement(-0.4, -0.2, odd=True),
    AffineElement(1.0, 0.1, odd=True),
)
MONOTONICITY_BS = (-1.0, -0.5, 0.0, 0.1, 0.5, 1.0)
CURVE_CHECK = "monotonicity"
ENERGY_SAMPLES = 16
# s < 0 pushes γ(t) = U_{t/2}V outside itself
MOTION_DILATION = -0.3


def grid_for(config: RunConfig) -> AffineGrid:
    return AffineGrid(config.grid_n, config.grid_l, config.band)


def run(config: RunConfig, rng: np.random.Generator) -> SuiteResult:
    """Borchers relation, group law, Tomita operator, monotonicity and α = 1."""
    suite = SuiteResult(NAME)
    grid = grid_for(config)
    probe = borchers_probe(grid)
    vs = default_v_vectors(grid)
    inclusion_tol = config.tol_for(NAME, INCLUSION_TOLERANCE)

    def borchers() -> CheckResult:
        residuals = {f"b={b},s={s}": borchers_residual(probe, b, s) for b, s in BORCHERS_PARAMETERS}
        return residual_check("borchers", residuals.values(), config.tol_for(NAME, BORCHERS_TOLERANCE), residuals=residuals)

    add_check(suite, "borchers", borchers)

    def group_law() -> CheckResult:
        residuals = [group_law_residual(a, b, probe) for a in GROUP_ELEMENTS for b in GROUP_ELEMENTS]
        return residual_check("group-law", residuals, config.tol_for(NAME, GROUP_TOLERANCE))

    add_check(suite, "group-law", group_law)

    def reflection() -> CheckResult:
        residuals = [
            norm(conjugate(translate(conjugate(probe), b)) - translate(probe, -b)) / norm(probe)
            for b in (0.5, 1.0)
        ]
        return residual_check("j-reverses-translations", residuals, config.tol_for(NAME, GROUP_TOLERANCE))

    add_check(suite, "j-reverses-translations", reflection)

    def tomita() -> CheckResult:
        residuals = [tomita_square_residual(v) for v in smooth_v_vectors(grid)]
        return residual_check("tomita-square", residuals, config.tol_for(NAME, TOMITA_TOLERANCE))

    add_check(suite, "tomita-square", tomita)

    def membership() -> CheckResult:
        distances = [dist_to_v(v) for v in vs]
        return residual_check("v-membership", distances, config.tol_for(NAME, MEMBERSHIP_TOLERANCE))

    add_check(suite, "v-membership", membership)

    def monotonicity() -> CheckResult:
        report = monotonicity_experiment(MONOTONICITY_BS, vs, inclusion_tol)
        alpha_error = math.inf if report.alpha is None else abs(report.alpha - 1.0)
        detail = {
            "curve": [[b, d] for b, d in report.curve],
            "orientation": report.orientation,
            "alpha": report.alpha,
            "max-inclusion-distance": report.max_inclusion_distance,
            "min-violation-distance": report.min_violation_distance,
            "failures": report.failures,
        }
        ok = (
            report.passed
            and report.orientation == INCLUSION_ORIENTATION
            and report.min_violation_distance >= MIN_VIOLATION
            and alpha_error <= config.tol_for(NAME, ALPHA_TOLERANCE)
        )
        return CheckResult.boolean(CURVE_CHECK, ok, detail)

    add_check(suite, CURVE_CHECK, monotonicity)

    def positive_energy() -> CheckResult:
        values = [
            positive_energy_form(grid_function(grid, rng.normal(size=grid.n) + 1j * rng.normal(size=grid.n)))
            for _ in range(ENERGY_SAMPLES)
        ]
        values += [positive_energy_form(v) for v in vs]
        return CheckResult.boolean("positive-energy", min(values) >= 0, {"min": min(values)})

    add_check(suite, "positive-energy", positive_energy)

    def motion() -> CheckResult:
        moved = geodesic_motion(1.0, MOTION_DILATION, vs)
        return CheckResult.boolean("dilation-moves-geodesic", moved > inclusion_tol, {"distance": moved})

    add_check(suite, "dilation-moves-geodesic", motion)

    return suite
