"""Compression semigroup of the cone and the induced order on G_1/H_1."""

import numpy as np

from src.core.codec import encode_element
from src.core.config import RunConfig
from src.core.conformal import (
    ConfWord,
    NegInversion,
    Structure,
    Translate,
    compose,
    conf_act,
    tau_conj,
    word_equal,
)
from src.core.jordan import (
    JordanAlgebra,
    make_algebra,
    random_cone_automorphism,
    random_cone_point,
    random_element,
    unit,
)
from src.core.report import CheckResult, SuiteResult
from src.core.semigroup import (
    COMPRESSION_TOL,
    CompressionVerdict,
    compression_witnesses,
    cone_image_arc,
    cone_image_inclusion,
    cone_samples,
    in_right_wedge,
    is_cone_automorphism,
    koufany_compose,
    order_leq,
    sl2_factorization,
    word_to_sl2,
)
from src.suites.common import add_check


NAME = "semigroup"
ALGEBRA_SIZES = {"spin": 4, "sym": 3, "herm": 2}
MAX_SYMMETRY_PAIRS = 20
RANK_ONE_SAMPLES = (0.01, 0.3, 1.0, 4.0, 100.0)
INTERIOR_SPECTRUM = (0.1, 1.0)


def algebra_for(kind: str) -> JordanAlgebra:
    return make_algebra(kind, ALGEBRA_SIZES[kind])


def semigroup_word(alg: JordanAlgebra, rng: np.random.Generator) -> ConfWord:
    """Random element of exp(C_+) Aut(E_+)_0 exp(θ(C_+))."""
    return koufany_compose(
        alg,
        random_cone_point(alg, rng, INTERIOR_SPECTRUM),
        Structure(random_cone_automorphism(alg, rng, 0.3)),
        random_cone_point(alg, rng, INTERIOR_SPECTRUM),
    )


def affine_word(alg: JordanAlgebra, rng: np.random.Generator) -> ConfWord:
    """x -> a(x) + b with a ∈ Aut(E_+)_0, an element of G_1."""
    return (Translate(random_element(alg, rng, 1.0)), Structure(random_cone_automorphism(alg, rng, 0.3)))


def ordered_pair(alg: JordanAlgebra, rng: np.random.Generator) -> tuple[ConfWord, ConfWord, bool]:
    """(g1, g2, g1 ≤ g2): g1 = g2 s with s compressing, or g1 = g2 t_{-c} with c ∈ E_+."""
    g2 = affine_word(alg, rng)
    if rng.random() < 0.5:
        return compose(g2, semigroup_word(alg, rng)), g2, True
    return compose(g2, (Translate(-random_cone_point(alg, rng, INTERIOR_SPECTRUM)),)), g2, False


def run(config: RunConfig, rng: np.random.Generator) -> SuiteResult:
    """Koufany words and their products, non-members, order agreement and symmetries, and the rank-one model.

    One Koufany word per sample, half as many product pairs, and one order
    pair per trial.
    """
    tol = config.tol_for(NAME, COMPRESSION_TOL)
    alg = algebra_for(config.algebra)
    suite = SuiteResult(NAME)
    interior, boundary = config.budget_interior, config.budget_boundary

    def verdict(word: ConfWord) -> CompressionVerdict:
        return compression_witnesses(alg, word, interior, boundary, tol)

    def leq(g1: ConfWord, g2: ConfWord) -> bool:
        return order_leq(alg, g1, g2, interior, boundary, tol)

    def compresses() -> CheckResult:
        count = config.samples
        failures = sum(not verdict(semigroup_word(alg, rng)).compresses for _ in range(count))
        return CheckResult.boolean("koufany-compresses", failures == 0, {"words": count, "failures": failures})

    add_check(suite, "koufany-compresses", compresses)

    def closure() -> CheckResult:
        count = max(1, config.samples // 2)
        failures = 0
        for _ in range(count):
            product = compose(semigroup_word(alg, rng), semigroup_word(alg, rng))
            failures += not verdict(product).compresses
        return CheckResult.boolean("semigroup-closure", failures == 0, {"pairs": count, "failures": failures})

    add_check(suite, "semigroup-closure", closure)

    def rejects_translation() -> CheckResult:
        result = verdict((Translate(-unit(alg)),))
        detail: dict[str, object] = {"checked": result.checked, "witnesses": len(result.witnesses)}
        if result.witnesses:
            detail["example"] = encode_element(alg, result.witnesses[0][0])
        return CheckResult.boolean("rejects-negative-translation", not result.compresses, detail)

    add_check(suite, "rejects-negative-translation", rejects_translation)

    def automorphisms() -> CheckResult:
        ok = is_cone_automorphism(alg, Structure(random_cone_automorphism(alg, rng)))
        ok = ok and not is_cone_automorphism(alg, Structure(-np.eye(alg.dim)))
        return CheckResult.boolean("cone-automorphisms", ok)

    add_check(suite, "cone-automorphisms", automorphisms)

    def agreement() -> CheckResult:
        count = config.trials
        disagreements = 0
        wrong = 0
        for _ in range(count):
            g1, g2, expected = ordered_pair(alg, rng)
            ordered = leq(g1, g2)
            disagreements += ordered != cone_image_inclusion(alg, g1, g2, interior, boundary, tol)
            wrong += ordered != expected
        detail = {"pairs": count, "disagreements": disagreements, "unexpected": wrong}
        return CheckResult.boolean("order-agreement", disagreements == 0 and wrong == 0, detail)

    add_check(suite, "order-agreement", agreement)

    def symmetries() -> CheckResult:
        count = min(config.trials, MAX_SYMMETRY_PAIRS)
        failures = {"reflexive": 0, "invariant": 0, "tau-reversal": 0}
        for _ in range(count):
            g1, g2, _ = ordered_pair(alg, rng)
            h = affine_word(alg, rng)
            forward = leq(g1, g2)
            failures["reflexive"] += not leq(g1, g1)
            failures["invariant"] += leq(compose(h, g1), compose(h, g2)) != forward
            reversed_order = leq(tau_conj(g1), tau_conj(g2))
            failures["tau-reversal"] += reversed_order != leq(g2, g1)
        return CheckResult.boolean("order-symmetries", not any(failures.values()), {"pairs": count, **failures})

    add_check(suite, "order-symmetries", symmetries)

    line = make_algebra("sym", 1)

    def rank_one() -> CheckResult:
        c1, scale, c2 = (float(v) for v in rng.uniform(0.1, 2.0, size=3))
        word = koufany_compose(line, np.array([[c1]]), Structure(np.array([[scale]])), np.array([[c2]]))
        factors = sl2_factorization(word_to_sl2(line, word))
        if factors is None:
            return CheckResult.boolean("rank-one", False, {"error": "no triangular factorization"})
        arc = cone_image_arc(line, word)
        images = [conf_act(line, word, np.array([[x]])) for x in RANK_ONE_SAMPLES]
        inside = all(y is not None and arc.contains(float(y[0, 0])) for y in images)
        outside = cone_image_arc(line, (Translate(np.array([[-1.0]])),)).start < 0
        inverted = cone_image_arc(line, (NegInversion(),))
        ok = (
            factors.in_semigroup()
            and word_equal(line, factors.to_word(line), word)
            and inside
            and outside
            and arc.start >= 0
            and inverted.kind == "half-line"
            and inverted.end < 0
        )
        detail = {"c1": factors.c1, "scale": factors.scale, "c2": factors.c2, "arc": [arc.start, arc.end, arc.kind]}
        return CheckResult.boolean("rank-one", ok, detail)

    add_check(suite, "rank-one", rank_one)

    def right_wedge() -> CheckResult:
        spin = make_algebra("spin", 4)
        inside = in_right_wedge(spin, np.array([0.0, 1.0, 0.0, 0.0]))
        on_edge = in_right_wedge(spin, np.array([1.0, 1.0, 0.0, 0.0]))
        cone_hits = sum(in_right_wedge(spin, x) for x in cone_samples(spin, 64, 16))
        return CheckResult.boolean("right-wedge", inside and not on_edge and cone_hits == 0, {"cone-hits": cone_hits})

    add_check(suite, "right-wedge", right_wedge)

    return suite
