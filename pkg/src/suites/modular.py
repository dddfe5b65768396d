"""Equivalence of Stand, Mod and Hom_gr models and their dilation structures."""

import math

import numpy as np

from src.core.antilinear import ModularPair, polar_decompose_antilinear, standard_conjugation
from src.core.config import RunConfig
from src.core.errors import NotStandard
from src.core.linalg import relative_distance
from src.core.reflection import verify_dilation_axioms, verify_reflection_axioms
from src.core.report import CheckResult, SuiteResult
from src.core.sampling import random_basis, random_modular_pair, random_skew
from src.core.stand_geometry import (
    GradedHomSpace,
    ModSpace,
    StandSpace,
    intertwining_residuals,
    loos_standard,
    sharp,
    sharp_subspaces,
    stand_bullet,
    theta_residuals,
)
from src.core.standard_subspace import (
    StandardSubspace,
    graded_hom_of,
    is_lagrangian,
    make_standard,
    modular_objects,
    modular_of,
    real_space,
    standard_from_modular,
    subspace_for_hom,
    subspace_gap,
    symplectic_complement,
    tomita_operator,
)
from src.suites.common import add_check, residual_check


NAME = "modular"
TOLERANCE = 1e-8
WORKED_TOLERANCE = 1e-12
BULLET_RATIOS = (-1.0, math.e, 1 / math.e, math.exp(1 / 3))

# V = span_R{e1, i e1 + e2} in C^2
WORKED_BASIS = np.array([[1.0, 1j], [0.0, 1.0]], dtype=np.complex128)
WORKED_DELTA = np.array([[1.0, -2j], [2j, 5.0]], dtype=np.complex128)


def worked_example_residual() -> float:
    """Distance of Δ_V for the worked C^2 example to its closed form and the A^T conj(A) oracle."""
    pair = modular_objects(make_standard(WORKED_BASIS))
    a = WORKED_BASIS @ np.linalg.inv(WORKED_BASIS.conj())
    oracle = a.T @ a.conj()
    eigenvalues = np.linalg.eigvalsh(pair.delta)
    expected = np.array([3 - 2 * math.sqrt(2), 3 + 2 * math.sqrt(2)])
    return max(
        float(np.abs(pair.delta - WORKED_DELTA).max()),
        float(np.abs(oracle - WORKED_DELTA).max()),
        float(np.abs(eigenvalues - expected).max()),
    )


def _pair_distance(p: ModularPair, q: ModularPair) -> float:
    return max(relative_distance(p.delta, q.delta), relative_distance(p.j.matrix, q.j.matrix))


def round_trip_residuals(pair: ModularPair, v: StandardSubspace) -> dict[str, float]:
    """Φ, Ψ and their inverses composed around the triangle of models."""
    phi = standard_from_modular(pair)
    gamma = graded_hom_of(pair)
    return {
        "mod->stand->mod": _pair_distance(modular_objects(phi), pair),
        "mod->hom->mod": _pair_distance(modular_of(gamma), pair),
        "hom->stand": subspace_gap(subspace_for_hom(gamma), phi),
        "stand->mod->stand": subspace_gap(standard_from_modular(modular_objects(v)), v),
    }


def _fiber_witness(n: int, rng: np.random.Generator) -> dict[str, float]:
    """V1 = R^n and V2 ≠ V1 with J2 = J1: • fixes V2, ♯ moves it."""
    v1 = real_space(n)
    v2 = loos_standard(standard_conjugation(n), random_skew(rng, n))
    return {
        "bullet": subspace_gap(stand_bullet(v1, -1.0, v2), v2),
        "sharp": subspace_gap(sharp_subspaces(v1, v2), v2),
    }


def run(config: RunConfig, rng: np.random.Generator) -> SuiteResult:
    """Worked constant, round trips, intertwining, the three spaces' axioms and ♯."""
    tol = config.tol_for(NAME, TOLERANCE)
    n = config.n
    suite = SuiteResult(NAME)

    add_check(
        suite, "worked-example",
        lambda: CheckResult("worked-example", worked_example_residual(), config.tol_for(NAME, WORKED_TOLERANCE)),
    )

    def round_trips() -> CheckResult:
        worst: dict[str, float] = {}
        for _ in range(config.trials):
            values = round_trip_residuals(random_modular_pair(rng, n), make_standard(random_basis(rng, n)))
            for key, value in values.items():
                worst[key] = max(worst.get(key, 0.0), value)
        return residual_check("round-trips", worst.values(), tol, trials=config.trials, residuals=worst)

    add_check(suite, "round-trips", round_trips)

    def intertwining() -> CheckResult:
        worst: dict[str, float] = {}
        for _ in range(config.trials):
            p1, p2 = random_modular_pair(rng, n), random_modular_pair(rng, n)
            r = BULLET_RATIOS[int(rng.integers(len(BULLET_RATIOS)))]
            values = intertwining_residuals(p1, r, p2)
            values.update({f"theta-{k}": v for k, v in theta_residuals(p1, r, p2).items()})
            for key, value in values.items():
                worst[key] = max(worst.get(key, 0.0), value)
        return residual_check("intertwining", worst.values(), tol, trials=config.trials, residuals=worst)

    add_check(suite, "intertwining", intertwining)

    def polar() -> CheckResult:
        v = make_standard(random_basis(rng, n))
        decomposition = polar_decompose_antilinear(tomita_operator(v))
        detail = {"reconstruction": decomposition.residual}
        ok = decomposition.involutive and decomposition.residual <= tol
        return CheckResult.boolean("polar-decomposition", ok, detail)

    add_check(suite, "polar-decomposition", polar)

    def degenerate() -> CheckResult:
        b = np.zeros((n, n), dtype=np.complex128)
        b[:, 0] = 1.0
        b[:, 1] = 1j
        try:
            make_standard(b)
        except NotStandard:
            return CheckResult.boolean("rejects-non-standard", True)
        return CheckResult.boolean("rejects-non-standard", False)

    if n >= 2:
        add_check(suite, "rejects-non-standard", degenerate)

    def complements() -> CheckResult:
        v = make_standard(random_basis(rng, n))
        double = subspace_gap(symplectic_complement(symplectic_complement(v)), v)
        ok = double <= tol and is_lagrangian(real_space(n))
        return CheckResult.boolean("symplectic-complement", ok, {"double-complement": double})

    add_check(suite, "symplectic-complement", complements)

    samples = min(config.samples, config.trials)
    for space in (StandSpace(n), ModSpace(n), GradedHomSpace(n)):
        add_check(
            suite, f"reflection:{space.name}",
            lambda: verify_reflection_axioms(space, space.sample, samples, tol, rng),
        )
        add_check(
            suite, f"dilation:{space.name}",
            lambda: verify_dilation_axioms(space, space.sample, samples, tol, rng),
        )

    def sharp_checks() -> CheckResult:
        g = np.asarray(np.linalg.qr(random_basis(rng, n))[0], dtype=np.complex128)
        identity = np.eye(n, dtype=np.complex128)
        witness = _fiber_witness(n, rng)
        residuals = {
            "sharp(I, I)": subspace_gap(sharp(identity, identity), real_space(n)),
            "sharp(g, g)": subspace_gap(sharp(g, g), make_standard(g)),
            "bullet-fixes-fiber": witness["bullet"],
        }
        ok = max(residuals.values()) <= tol and witness["sharp"] > 1e3 * tol
        return CheckResult.boolean("sharp-product", ok, {**residuals, "sharp-moves-fiber": witness["sharp"]})

    if n >= 2:
        add_check(suite, "sharp-product", sharp_checks)
    return suite
