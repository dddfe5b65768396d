"""Jordan algebra identities, the Cayley transform and the conformal Lie structure."""

import numpy as np

from src.core.config import RunConfig
from src.core.conformal import (
    ConfWord,
    NegInversion,
    Structure,
    Translate,
    as_field,
    compose,
    conf_act_strict,
    cone_sample_points,
    exp_quadratic,
    exp_quadratic_ode,
    field_distance,
    grading,
    inverse,
    lie_bracket,
    lie_grade_check,
    lie_triple,
    theta_tilde,
    word_distance,
)
from src.core.jordan import (
    JordanAlgebra,
    cayley,
    coords,
    element_distance,
    from_coords,
    is_euclidean,
    jmul,
    jordan_identity_residual,
    jordan_inverse,
    lop,
    make_algebra,
    quad_p,
    random_cone_automorphism,
    random_cone_point,
    random_element,
    trace_form,
    unit,
)
from src.core.linalg import relative_distance
from src.core.report import CheckResult, SuiteResult
from src.suites.common import add_check, residual_check


NAME = "jordan"
TOLERANCE = 1e-10
GRADE_TOLERANCE = 1e-8
BRACKET_TOLERANCE = 1e-6
FLOW_TOLERANCE = 1e-8
ALGEBRAS = (("sym", 3), ("herm", 2), ("spin", 4))
GRADE_RATIOS = (2.0, 1 / 3)
EXPECTED_GRADINGS = {"translate": 1, "structure(-id)": -1, "neg-inversion": 1}
FIELD_POINTS = 8
FLOW_TIME = 0.5


def algebras() -> list[JordanAlgebra]:
    """Sym_3(R), Herm_2(C) and the spin factor Λ_4."""
    return [make_algebra(kind, n) for kind, n in ALGEBRAS]


def quadratic_residuals(alg: JordanAlgebra, x: np.ndarray, y: np.ndarray) -> dict[str, float]:
    """P(z, e) = L(z), P(x)y = xyx for matrix kinds, and x^{-1} = P(x)^{-1}x."""
    e = unit(alg)
    out = {"P(z,e)": relative_distance(quad_p(alg, x, e), lop(alg, x))}
    if alg.is_matrix:
        out["P(x)y"] = element_distance(alg, from_coords(alg, quad_p(alg, x) @ coords(alg, y)), x @ y @ x)
    cone_x = x @ x.conj().T + np.eye(alg.n) if alg.is_matrix else np.concatenate([[1.0 + np.linalg.norm(x)], x[1:]])
    via_p = from_coords(alg, np.linalg.solve(quad_p(alg, cone_x), coords(alg, cone_x)))
    out["inverse"] = element_distance(alg, jordan_inverse(alg, cone_x), via_p)
    out["x.x^-1"] = element_distance(alg, jmul(alg, cone_x, jordan_inverse(alg, cone_x)), e)
    return out


def sample_word(alg: JordanAlgebra, rng: np.random.Generator) -> ConfWord:
    """x -> -(T(x + c))^{-1} - c0 with c, c0 in E_+ and T ∈ Aut(E_+), defined on all of E_+."""
    c = random_cone_point(alg, rng, (0.1, 1.0))
    c0 = random_cone_point(alg, rng, (0.1, 1.0))
    t = random_cone_automorphism(alg, rng, 0.3)
    return (Translate(-c0), NegInversion(), Structure(t), Translate(c))


def run(config: RunConfig, rng: np.random.Generator) -> SuiteResult:
    """Identities on Sym_3, Herm_2 and Λ_4 plus the grading, Lie and flow checks."""
    tol = config.tol_for(NAME, TOLERANCE)
    grade_tol = config.tol_for(NAME, GRADE_TOLERANCE)
    bracket_tol = config.tol_for(NAME, BRACKET_TOLERANCE)
    flow_tol = config.tol_for(NAME, FLOW_TOLERANCE)
    suite = SuiteResult(NAME)

    for alg in algebras():
        name = alg.name

        def identity() -> CheckResult:
            residuals = [
                jordan_identity_residual(alg, random_element(alg, rng), random_element(alg, rng))
                for _ in range(config.samples)
            ]
            return residual_check(f"jordan-identity:{name}", residuals, tol, samples=config.samples)

        add_check(suite, f"jordan-identity:{name}", identity)

        def euclidean() -> CheckResult:
            positive = all(trace_form(alg, x, x) > 0 for x in (random_element(alg, rng) for _ in range(config.samples)))
            return CheckResult.boolean(f"euclidean:{name}", is_euclidean(alg) and positive)

        add_check(suite, f"euclidean:{name}", euclidean)

        def quadratic() -> CheckResult:
            worst: dict[str, float] = {}
            for _ in range(config.samples):
                values = quadratic_residuals(alg, random_element(alg, rng), random_element(alg, rng))
                for key, value in values.items():
                    worst[key] = max(worst.get(key, 0.0), value)
            return residual_check(f"quadratic:{name}", worst.values(), tol, residuals=worst)

        add_check(suite, f"quadratic:{name}", quadratic)

        def cayley_points() -> CheckResult:
            e = unit(alg).astype(np.complex128)
            residuals = {
                "p(ie)": float(np.linalg.norm(cayley(alg, 1j * e))),
                "p(0)": float(np.linalg.norm(cayley(alg, np.zeros(alg.shape, dtype=np.complex128)) + e)),
            }
            return residual_check(f"cayley:{name}", residuals.values(), tol, residuals=residuals)

        add_check(suite, f"cayley:{name}", cayley_points)

        def gradings() -> CheckResult:
            measured = {
                "translate": grading(alg, (Translate(unit(alg)),)),
                "structure(-id)": grading(alg, (Structure(-np.eye(alg.dim)),)),
                "neg-inversion": grading(alg, (NegInversion(),)),
            }
            return CheckResult.boolean(f"grading:{name}", measured == EXPECTED_GRADINGS, measured)

        add_check(suite, f"grading:{name}", gradings)

        points = cone_sample_points(alg, FIELD_POINTS)

        def grade_scaling() -> CheckResult:
            xi = lie_triple(alg, u=random_element(alg, rng), t=lop(alg, random_element(alg, rng)), v=random_element(alg, rng))
            reports = {f"r={r:.4g}": lie_grade_check(alg, xi, r, points, grade_tol).max_residual for r in GRADE_RATIOS}
            return residual_check(f"lie-grade:{name}", reports.values(), grade_tol, residuals=reports)

        add_check(suite, f"lie-grade:{name}", grade_scaling)

        def bracket() -> CheckResult:
            u = random_element(alg, rng, 1.0)
            lhs = lie_bracket(alg, as_field(alg, lie_triple(alg, u=unit(alg))), as_field(alg, theta_tilde(alg, u)))
            rhs = as_field(alg, lie_triple(alg, t=2 * lop(alg, u)))
            return residual_check(f"bracket:{name}", [field_distance(alg, lhs, rhs, points)], bracket_tol)

        add_check(suite, f"bracket:{name}", bracket)

        def flow() -> CheckResult:
            c = random_cone_point(alg, rng, (0.1, 1.0))
            x = random_cone_point(alg, rng, (0.1, 1.0))
            closed = conf_act_strict(alg, exp_quadratic(alg, c, FLOW_TIME), x)
            numeric = exp_quadratic_ode(alg, c, FLOW_TIME, x)
            return residual_check(f"quadratic-flow:{name}", [element_distance(alg, closed, numeric)], flow_tol)

        add_check(suite, f"quadratic-flow:{name}", flow)

        def word_inverse() -> CheckResult:
            word = sample_word(alg, rng)
            residuals = {
                "w.w^-1": word_distance(alg, compose(word, inverse(word)), (), points),
                "w^-1.w": word_distance(alg, compose(inverse(word), word), (), points),
            }
            return residual_check(f"word-inverse:{name}", residuals.values(), grade_tol, residuals=residuals)

        add_check(suite, f"word-inverse:{name}", word_inverse)

    return suite
