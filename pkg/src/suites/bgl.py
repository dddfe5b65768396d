"""The BGL map from graded homomorphisms to standard subspaces."""

import numpy as np

from src.core.antilinear import GradedOperator
from src.core.bgl import (
    DefiningRep,
    GradedGroupRep,
    GradedHomIntoG,
    TensorSquareRep,
    bgl_bullet_residual,
    bgl_equivariance_check,
    bgl_map,
    conjugate_hom,
    differential_from_images,
    is_positive_energy,
    random_graded_hom_into,
    random_group_element,
    semigroup_membership,
)
from src.core.config import RunConfig
from src.core.errors import NotInG1
from src.core.linalg import expm, relative_distance
from src.core.report import CheckResult, SuiteResult
from src.core.sampling import complex_uniform
from src.suites.common import add_check, residual_check
from src.suites.modular import BULLET_RATIOS


NAME = "bgl"
TOLERANCE = 1e-8
MAX_CONJUGATORS = 100
STABILIZER_TIMES = (-0.7, 0.4, 1.3)


def representations(n: int) -> list[GradedGroupRep]:
    """Defining representation on C^m and the tensor square of AU(C^2) on C^4."""
    return [DefiningRep(max(2, min(n, 4))), TensorSquareRep(2)]


def _hom_distance(g1: GradedHomIntoG, g2: GradedHomIntoG) -> float:
    return max(relative_distance(g1.x, g2.x), relative_distance(g1.sigma.matrix, g2.sigma.matrix))


def run(config: RunConfig, rng: np.random.Generator) -> SuiteResult:
    """Equivariance under even and odd conjugators, stabilizers, bullets and positive energy."""
    tol = config.tol_for(NAME, TOLERANCE)
    suite = SuiteResult(NAME)

    for rep in representations(config.n):
        m = rep.m

        def equivariance() -> CheckResult:
            count = min(config.trials, MAX_CONJUGATORS)
            gaps = {"even": 0.0, "odd": 0.0}
            for i in range(count):
                odd = i % 2 == 1
                report = bgl_equivariance_check(
                    rep, random_graded_hom_into(rng, m), random_group_element(rng, m, odd), tol,
                )
                key = "odd" if odd else "even"
                gaps[key] = max(gaps[key], report.max_residual)
            return residual_check(f"equivariance:{rep.name}", gaps.values(), tol, conjugators=count, gaps=gaps)

        add_check(suite, f"equivariance:{rep.name}", equivariance)

        def stabilizer() -> CheckResult:
            gamma = random_graded_hom_into(rng, m)
            v = bgl_map(rep, gamma)
            modular = [GradedOperator(expm(s * gamma.x)) for s in STABILIZER_TIMES]
            generic = random_group_element(rng, m)
            fixes = all(_hom_distance(conjugate_hom(gamma, g), gamma) <= tol for g in modular)
            members = all(semigroup_membership(rep, g, v, tol) for g in modular)
            moved = _hom_distance(conjugate_hom(gamma, generic), gamma) > tol
            excluded = not semigroup_membership(rep, generic, v, tol)
            try:
                semigroup_membership(rep, random_group_element(rng, m, odd=True), v, tol)
                odd_rejected = False
            except NotInG1:
                odd_rejected = True
            detail = {"fixes": fixes, "members": members, "generic-moved": moved, "generic-excluded": excluded}
            return CheckResult.boolean(f"stabilizer:{rep.name}", fixes and members and moved == excluded and odd_rejected, detail)

        add_check(suite, f"stabilizer:{rep.name}", stabilizer)

        def bullets() -> CheckResult:
            gamma, eta = random_graded_hom_into(rng, m), random_graded_hom_into(rng, m)
            residuals = {f"r={r:.4g}": bgl_bullet_residual(rep, gamma, r, eta) for r in BULLET_RATIOS}
            return residual_check(f"bullet:{rep.name}", residuals.values(), tol, residuals=residuals)

        add_check(suite, f"bullet:{rep.name}", bullets)

        def positive_energy() -> CheckResult:
            a = complex_uniform(rng, (m, m), 1.0)
            h = a @ a.conj().T
            ok = is_positive_energy(rep, 1j * h) and not is_positive_energy(rep, -1j * (h + np.eye(m)))
            return CheckResult.boolean(f"positive-energy:{rep.name}", ok)

        add_check(suite, f"positive-energy:{rep.name}", positive_energy)

        def differential() -> CheckResult:
            gamma = random_graded_hom_into(rng, m)
            residual = relative_distance(differential_from_images(rep, gamma), rep.differential(gamma.x))
            return residual_check(f"differential:{rep.name}", [residual], tol)

        add_check(suite, f"differential:{rep.name}", differential)

    return suite
