"""Geodesics of reflection spaces, of Stand(C^n), and the G_α representations they generate."""

import numpy as np

from src.core.antilinear import Conjugation, GradedOperator, ModularPair, conjugate_linear, standard_conjugation
from src.core.config import RunConfig
from src.core.linalg import expm, positive_log, relative_distance
from src.core.reflection import (
    Geodesic,
    GroupSpace,
    VectorDilationSpace,
    geodesic_from_one_param,
    is_involutive_geodesic,
    one_parameter_group,
    verify_geodesic,
)
from src.core.report import CheckResult, SuiteResult
from src.core.sampling import (
    near_identity,
    random_conjugation,
    random_hermitian,
    random_modular_pair,
    random_skew,
    random_unitary,
    uniform,
)
from src.core.stand_geometry import (
    StandGeodesic,
    StandSpace,
    canonical_involution,
    dilation_rep_from_geodesic,
    geodesic_standard,
    loos_generator,
    loos_product,
    loos_standard,
    stand_bullet,
)
from src.core.standard_subspace import (
    apply_operator,
    make_standard,
    modular_objects,
    standard_from_modular,
    subspace_gap,
)
from src.suites.common import add_check, residual_check
from src.suites.modular import BULLET_RATIOS, WORKED_BASIS


NAME = "geodesic"
TOLERANCE = 1e-10
CONJUGATION_TOLERANCE = 1e-9
ALPHA_TOLERANCE = 1e-6
LOOS_TOLERANCE = 1e-8
GEODESIC_TS = (-1.0, -0.4, 0.0, 0.3, 1.0)
GROUP_ELEMENTS = ((0.0, 0.0, 0), (0.7, 0.0, 0), (0.0, -0.6, 0), (0.4, 0.5, 1), (-1.2, 0.3, 1))
MAX_LOOS_TRIALS = 100

NILPOTENT = np.array([[0.0, 1.0], [0.0, 0.0]])
DIAGONAL_INVOLUTION = np.diag([1.0, -1.0])
# J z = F conj(z) with F the coordinate flip; V = Fix(J) = span_R{(1, 1), (i, -i)}
FLIP = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=np.complex128)
FLIP_BASIS = np.array([[1.0, 1j], [1.0, -1j]], dtype=np.complex128)
FLIP_GENERATOR = np.array([[0.0, 1j], [-1j, 0.0]], dtype=np.complex128)


def constrained_generator(j: Conjugation, x: np.ndarray) -> np.ndarray:
    """Hermitian H = (X + JXJ)/2, so that J exp(itH) J = exp(-itH)."""
    h = (x + conjugate_linear(j, x)) / 2
    return (h + h.conj().T) / 2


def commuting_geodesic(k: np.ndarray) -> StandGeodesic:
    """Geodesic with Δ = exp(-iK) and H = -K² for real skew K; W and U commute."""
    delta = expm(-1j * k)
    n = k.shape[0]
    pair = ModularPair((delta + delta.conj().T) / 2, standard_conjugation(n))
    v = standard_from_modular(pair)
    return geodesic_standard(v, -(k @ k).astype(np.complex128))


def conjugation_product(j1: Conjugation, j2: Conjugation) -> np.ndarray:
    """Matrix of the conjugation J1 J2 J1."""
    op1 = GradedOperator(j1.matrix, antilinear=True)
    return (op1 @ GradedOperator(j2.matrix, antilinear=True) @ op1).matrix


def run(config: RunConfig, rng: np.random.Generator) -> SuiteResult:
    """One-parameter geodesics, the Stand(C^n) geodesic law, G_α and the Loos normal form."""
    tol = config.tol_for(NAME, TOLERANCE)
    conj_tol = config.tol_for(NAME, CONJUGATION_TOLERANCE)
    alpha_tol = config.tol_for(NAME, ALPHA_TOLERANCE)
    loos_tol = config.tol_for(NAME, LOOS_TOLERANCE)
    n = config.n
    m = max(2, min(n, 3))
    suite = SuiteResult(NAME)

    group = GroupSpace(m)
    sl2 = GroupSpace(2)

    def group_geodesics() -> CheckResult:
        worst: dict[str, float] = {}
        x = uniform(rng, (m, m), 0.5)
        gamma = geodesic_from_one_param(group, one_parameter_group(x), near_identity(rng, m, 0.1), x)
        worst["random"] = verify_geodesic(group, gamma, GEODESIC_TS, tol).max_residual
        shear = geodesic_from_one_param(sl2, one_parameter_group(NILPOTENT), DIAGONAL_INVOLUTION, NILPOTENT)
        worst["shear"] = verify_geodesic(sl2, shear, GEODESIC_TS, tol).max_residual
        worst["closed-form"] = max(
            relative_distance(shear(t), np.array([[1.0, t], [0.0, 1.0]]) @ DIAGONAL_INVOLUTION) for t in GEODESIC_TS
        )
        return residual_check("one-parameter-geodesics", worst.values(), tol, residuals=worst)

    add_check(suite, "one-parameter-geodesics", group_geodesics)

    def rejects_quadratic() -> CheckResult:
        x = uniform(rng, (m, m), 0.5)
        g = near_identity(rng, m, 0.1)
        curve = Geodesic(at=lambda t: group.multiply(np.asarray(expm(t * t * x).real), g))
        report = verify_geodesic(group, curve, GEODESIC_TS, tol)
        return CheckResult.boolean("rejects-non-geodesic", not report.passed, {"residual": report.max_residual})

    add_check(suite, "rejects-non-geodesic", rejects_quadratic)

    def involutive() -> CheckResult:
        eta = one_parameter_group(NILPOTENT)
        positive = is_involutive_geodesic(eta, DIAGONAL_INVOLUTION, GEODESIC_TS, conj_tol)
        negative = is_involutive_geodesic(eta, np.eye(2), GEODESIC_TS, conj_tol)
        return CheckResult.boolean("involutive-geodesic", positive and not negative)

    add_check(suite, "involutive-geodesic", involutive)

    def dilation_compatible() -> CheckResult:
        space = VectorDilationSpace((1.0, 2.0), (1, 1))
        line = Geodesic(at=lambda t: t * np.array([1.0, 0.0]))
        other = Geodesic(at=lambda t: t * np.array([0.0, 1.0]))
        accepted = verify_geodesic(space, line, GEODESIC_TS, tol, exponent=1.0)
        rejected = verify_geodesic(space, other, GEODESIC_TS, tol, exponent=1.0)
        detail = {"eigenline": accepted.max_residual, "other-line": rejected.max_residual}
        return CheckResult.boolean("dilation-geodesic", accepted.passed and not rejected.passed, detail)

    add_check(suite, "dilation-geodesic", dilation_compatible)

    def flip_geodesic() -> CheckResult:
        v = make_standard(FLIP_BASIS)
        gamma = geodesic_standard(v, FLIP_GENERATOR, GEODESIC_TS, tol)
        constant = geodesic_standard(v, np.zeros((2, 2), dtype=np.complex128))
        residuals = {
            "j-is-flip": relative_distance(modular_objects(v).j.matrix, FLIP),
            "morphism": verify_geodesic(StandSpace(2), gamma, GEODESIC_TS, tol).max_residual,
            "constant": subspace_gap(constant(1.0), v),
        }
        u_rel = max(gamma.conjugation_residual(t) for t in GEODESIC_TS)
        ok = max(residuals.values()) <= tol and u_rel <= conj_tol
        return CheckResult.boolean("flip-geodesic", ok, {**residuals, "u-rel": u_rel})

    add_check(suite, "flip-geodesic", flip_geodesic)

    def random_geodesics() -> CheckResult:
        worst = {"morphism": 0.0, "u-rel": 0.0}
        space = StandSpace(n)
        for _ in range(min(config.trials, MAX_LOOS_TRIALS)):
            v = standard_from_modular(random_modular_pair(rng, n))
            h = constrained_generator(modular_objects(v).j, random_hermitian(rng, n, 0.5))
            gamma = geodesic_standard(v, h, GEODESIC_TS, conj_tol)
            worst["morphism"] = max(worst["morphism"], verify_geodesic(space, gamma, GEODESIC_TS, conj_tol).max_residual)
            worst["u-rel"] = max(worst["u-rel"], max(gamma.conjugation_residual(t) for t in GEODESIC_TS))
        ok = max(worst.values()) <= conj_tol
        return CheckResult.boolean("stand-geodesics", ok, worst)

    add_check(suite, "stand-geodesics", random_geodesics)

    def commuting_rep() -> CheckResult:
        gamma = commuting_geodesic(random_skew(rng, n, 0.5))
        rep = dilation_rep_from_geodesic(gamma, tol=alpha_tol)
        residuals = [
            rep.homomorphism_residual(g1, g2, f)
            for g1 in GROUP_ELEMENTS
            for g2 in GROUP_ELEMENTS
            for f in rep.backend.probes()
        ]
        identity = max(rep.backend.norm(rep.apply(GROUP_ELEMENTS[0], f) - f) for f in rep.backend.probes())
        worst = max(max(residuals), identity)
        ok = worst <= conj_tol and abs(rep.alpha) <= alpha_tol
        return CheckResult.boolean("alpha-zero-rep", ok, {"homomorphism": worst, "alpha": rep.alpha})

    add_check(suite, "alpha-zero-rep", commuting_rep)

    def loos_round_trip() -> CheckResult:
        worst = {"subspace": 0.0, "generator": 0.0}
        for _ in range(min(config.trials, MAX_LOOS_TRIALS)):
            j, _ = random_conjugation(rng, n)
            k = random_skew(rng, n)
            v = loos_standard(j, k)
            k2 = loos_generator(v)
            worst["subspace"] = max(worst["subspace"], subspace_gap(loos_standard(j, k2), v))
            worst["generator"] = max(worst["generator"], relative_distance(k2, k))
        pair = modular_objects(make_standard(WORKED_BASIS))
        a = 1j * positive_log(pair.delta)
        worst["worked-jaj"] = relative_distance(conjugate_linear(pair.j, a), a)
        return residual_check("loos-round-trip", worst.values(), loos_tol, residuals=worst)

    add_check(suite, "loos-round-trip", loos_round_trip)

    def normal_form() -> CheckResult:
        j, _ = random_conjugation(rng, n)
        v1, v2 = loos_standard(j, random_skew(rng, n)), loos_standard(j, random_skew(rng, n))
        g1, g2 = random_unitary(rng, n), random_unitary(rng, n)
        moved = stand_bullet(apply_operator(GradedOperator(g1), v1), -1.0, apply_operator(GradedOperator(g2), v2))
        residuals = {
            "normal-form": subspace_gap(moved, loos_product(j, g1, v1, g2, v2)),
            "fiber": subspace_gap(stand_bullet(v1, -1.0, v2), v2),
        }
        return residual_check("loos-normal-form", residuals.values(), loos_tol, residuals=residuals)

    add_check(suite, "loos-normal-form", normal_form)

    def conjugation_morphism() -> CheckResult:
        worst = 0.0
        for _ in range(min(config.trials, MAX_LOOS_TRIALS)):
            p1, p2 = random_modular_pair(rng, n), random_modular_pair(rng, n)
            v1, v2 = standard_from_modular(p1), standard_from_modular(p2)
            j = modular_objects(stand_bullet(v1, -1.0, v2)).j
            worst = max(worst, relative_distance(j.matrix, conjugation_product(p1.j, p2.j)))
        return residual_check("conjugation-morphism", [worst], loos_tol)

    add_check(suite, "conjugation-morphism", conjugation_morphism)

    def involution_compatibility() -> CheckResult:
        v1 = standard_from_modular(random_modular_pair(rng, n))
        v2 = standard_from_modular(random_modular_pair(rng, n))
        residuals = {
            f"r={r:.4g}": subspace_gap(
                canonical_involution(stand_bullet(v1, r, v2)),
                stand_bullet(v1, r, canonical_involution(v2)),
            )
            for r in BULLET_RATIOS
        }
        return residual_check("canonical-involution", residuals.values(), loos_tol, residuals=residuals)

    add_check(suite, "canonical-involution", involution_compatibility)

    return suite


