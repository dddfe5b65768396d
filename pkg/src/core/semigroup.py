"""Compression semigroup of the cone E_+ and the order on G_1/H_1.

S = {g in G_1 : g(E_+) ⊆ E_+} is decided by seeded Monte Carlo sampling of
the open cone, including near-boundary points. The order g1 ≤ g2 holds iff
g2^{-1} g1 ∈ S, equivalently g1(E_+) ⊆ g2(E_+).

In rank one (E = R) words are mapped to SL_2(R) and compressions factor as
    [[1, c1], [0, 1]] · diag(√λ, 1/√λ) · [[1, 0], [c2, 1]],  c1, c2 ≥ 0, λ > 0.
"""

import logging
import math
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from src.core.conformal import (
    ConfWord,
    Structure,
    Translate,
    compose,
    conf_act,
    exp_quadratic,
    grading,
    grading_points,
    inverse,
)
from src.core.errors import AlgebraMismatch, ConePreconditionViolated, NotInG1
from src.core.jordan import (
    AlgebraKind,
    Element,
    JordanAlgebra,
    apply_linear,
    check_element,
    in_closed_cone,
    in_cone,
    random_boundary_point,
    random_cone_point,
)


logger = logging.getLogger(__name__)

DEFAULT_INTERIOR_BUDGET = 512
DEFAULT_BOUNDARY_BUDGET = 128
COMPRESSION_SEED = 31415
COMPRESSION_TOL = 1e-9


@dataclass
class CompressionVerdict:
    """Result of sampling g on E_+.

    Attributes:
        checked: Number of sampled cone points
        witnesses: (x, g(x) or None) for each point mapped outside the closed cone
    """
    checked: int
    witnesses: list[tuple[Element, Element | None]] = field(default_factory=list)

    @property
    def compresses(self) -> bool:
        return not self.witnesses


def _require_even(alg: JordanAlgebra, word: ConfWord) -> None:
    if grading(alg, word) != 1:
        raise NotInG1("word maps E_+ onto -E_+")


def cone_samples(
    alg: JordanAlgebra,
    interior: int = DEFAULT_INTERIOR_BUDGET,
    boundary: int = DEFAULT_BOUNDARY_BUDGET,
    seed: int = COMPRESSION_SEED,
) -> list[Element]:
    """Seeded interior and near-boundary points of E_+."""
    rng = np.random.default_rng(seed)
    points = [random_cone_point(alg, rng) for _ in range(interior)]
    points += [random_boundary_point(alg, rng) for _ in range(boundary)]
    return points


def compression_witnesses(
    alg: JordanAlgebra,
    word: ConfWord,
    interior: int = DEFAULT_INTERIOR_BUDGET,
    boundary: int = DEFAULT_BOUNDARY_BUDGET,
    tol: float = COMPRESSION_TOL,
    seed: int = COMPRESSION_SEED,
) -> CompressionVerdict:
    """Sample g on E_+ and collect every point whose image leaves the closed cone.

    Pure function.

    Args:
        alg: Jordan algebra
        word: Conformal word of grading +1
        interior: Number of interior samples
        boundary: Number of near-boundary samples
        tol: Relative margin allowed below the cone
        seed: Sampling seed

    Returns:
        CompressionVerdict with the failing points

    Raises:
        NotInG1: If the word has grading -1
    """
    _require_even(alg, word)
    points = cone_samples(alg, interior, boundary, seed)
    verdict = CompressionVerdict(checked=len(points))
    for x in points:
        image = conf_act(alg, word, x)
        if image is None or not in_closed_cone(alg, image, tol):
            verdict.witnesses.append((x, image))
    if verdict.witnesses:
        logger.debug("compression failed on %d of %d samples", len(verdict.witnesses), verdict.checked)
    return verdict


def compresses_cone(
    alg: JordanAlgebra,
    word: ConfWord,
    interior: int = DEFAULT_INTERIOR_BUDGET,
    boundary: int = DEFAULT_BOUNDARY_BUDGET,
    tol: float = COMPRESSION_TOL,
) -> bool:
    """Monte Carlo decision of g(E_+) ⊆ closure(E_+)."""
    return compression_witnesses(alg, word, interior, boundary, tol).compresses


def is_cone_automorphism(alg: JordanAlgebra, a: Structure, tol: float = 1e-12) -> bool:
    """a(E_+) = E_+ on the grading sample points, in both directions."""
    a_inv = np.linalg.inv(a.t)
    return all(
        in_cone(alg, apply_linear(alg, a.t, x), -tol) and in_cone(alg, apply_linear(alg, a_inv, x), -tol)
        for x in grading_points(alg)
    )


def koufany_compose(alg: JordanAlgebra, c1: Element, a: Structure, c2: Element) -> ConfWord:
    """Translate(c1) ∘ a ∘ exp_quadratic(c2, 1), an element of exp(C_+) Aut(E_+) exp(θ(C_+)).

    Raises:
        ConePreconditionViolated: If c1 or c2 is outside the closed cone or a
            does not preserve E_+
    """
    c1, c2 = check_element(alg, c1), check_element(alg, c2)
    if not in_closed_cone(alg, c1) or not in_closed_cone(alg, c2):
        raise ConePreconditionViolated("translation parts must lie in the closed cone")
    if not is_cone_automorphism(alg, a):
        raise ConePreconditionViolated("structure part must preserve E_+")
    return compose((Translate(c1), a), exp_quadratic(alg, c2, 1.0))


def order_leq(
    alg: JordanAlgebra,
    g1: ConfWord,
    g2: ConfWord,
    interior: int = DEFAULT_INTERIOR_BUDGET,
    boundary: int = DEFAULT_BOUNDARY_BUDGET,
    tol: float = COMPRESSION_TOL,
) -> bool:
    """g1 ≤ g2 iff g2^{-1} g1 compresses E_+.

    Raises:
        NotInG1: If either word has grading -1
    """
    _require_even(alg, g1)
    _require_even(alg, g2)
    return compresses_cone(alg, compose(inverse(g2), g1), interior, boundary, tol)


def cone_image_inclusion(
    alg: JordanAlgebra,
    g1: ConfWord,
    g2: ConfWord,
    interior: int = DEFAULT_INTERIOR_BUDGET,
    boundary: int = DEFAULT_BOUNDARY_BUDGET,
    tol: float = COMPRESSION_TOL,
) -> bool:
    """Sampled g1(E_+) ⊆ g2(E_+): each image point is pulled back through g2 separately."""
    g2_inv = inverse(g2)
    for x in cone_samples(alg, interior, boundary):
        y = conf_act(alg, g1, x)
        if y is None:
            return False
        z = conf_act(alg, g2_inv, y)
        if z is None or not in_closed_cone(alg, z, tol):
            return False
    return True


def same_coset(alg: JordanAlgebra, g1: ConfWord, g2: ConfWord, **budget: int) -> bool:
    """g1 H_1 = g2 H_1, i.e. equal cone images."""
    return order_leq(alg, g1, g2, **budget) and order_leq(alg, g2, g1, **budget)


def in_right_wedge(alg: JordanAlgebra, x: Element) -> bool:
    """x_1 > |x_0| in Minkowski coordinates of Λ_n.

    Raises:
        AlgebraMismatch: For matrix algebras
    """
    if alg.kind != AlgebraKind.SPIN:
        raise AlgebraMismatch("the right wedge lives in a spin factor")
    x = check_element(alg, x)
    return bool(x[1] > abs(x[0]))


# --- rank one ---------------------------------------------------------------

def _require_rank_one(alg: JordanAlgebra) -> None:
    if alg.kind == AlgebraKind.SPIN or alg.n != 1:
        raise AlgebraMismatch("the SL2 model needs E = R")


def word_to_sl2(alg: JordanAlgebra, word: ConfWord) -> NDArray[np.float64]:
    """Matrix of a rank-one word in SL_2(R), up to sign.

    Raises:
        NotInG1: If a structure generator reverses orientation
    """
    _require_rank_one(alg)
    m = np.eye(2)
    for gen in word:
        if isinstance(gen, Translate):
            step = np.array([[1.0, float(np.asarray(gen.b).ravel()[0])], [0.0, 1.0]])
        elif isinstance(gen, Structure):
            lam = float(gen.t[0, 0])
            if lam <= 0:
                raise NotInG1("orientation-reversing scaling is not in SL2(R)")
            step = np.diag([math.sqrt(lam), 1 / math.sqrt(lam)])
        else:
            step = np.array([[0.0, -1.0], [1.0, 0.0]])
        m = m @ step
    return m


@dataclass(frozen=True)
class SL2Factorization:
    """[[1, c1], [0, 1]] · diag(√scale, 1/√scale) · [[1, 0], [c2, 1]]."""
    c1: float
    scale: float
    c2: float

    def in_semigroup(self, tol: float = 1e-12) -> bool:
        return self.c1 >= -tol and self.c2 >= -tol and self.scale > 0

    def to_word(self, alg: JordanAlgebra) -> ConfWord:
        return compose(
            (Translate(np.array([[self.c1]])), Structure(np.array([[self.scale]]))),
            exp_quadratic(alg, np.array([[self.c2]]), 1.0),
        )


def sl2_factorization(m: NDArray[np.float64], tol: float = 1e-14) -> SL2Factorization | None:
    """Upper-diagonal-lower factorization of ±m; None when m[1,1] = 0."""
    m = np.asarray(m, dtype=np.float64)
    det = float(np.linalg.det(m))
    if det <= 0:
        return None
    m = m / math.sqrt(det)
    if abs(m[1, 1]) <= tol:
        return None
    if m[1, 1] < 0:
        m = -m
    d = float(m[1, 1])
    return SL2Factorization(c1=float(m[0, 1]) / d, scale=1 / (d * d), c2=float(m[1, 0]) / d)


@dataclass(frozen=True)
class ConeImageArc:
    """Image of (0, ∞) under a Möbius map, as an arc of R ∪ {∞}.

    Attributes:
        start: g(0) (inf for ∞)
        end: g(∞) (inf for ∞)
        kind: "interval", "half-line" or "complement"
    """
    start: float
    end: float
    kind: str

    def contains(self, y: float, tol: float = 1e-12) -> bool:
        lo, hi = sorted((self.start, self.end))
        if self.kind == "complement":
            return y <= lo + tol * max(1.0, abs(lo)) or y >= hi - tol * max(1.0, abs(hi))
        if self.kind == "half-line":
            slack = tol * max(1.0, abs(self.start))
            return y >= self.start - slack if self.end > 0 else y <= self.start + slack
        return lo - tol * max(1.0, abs(lo)) <= y <= hi + tol * max(1.0, abs(hi))


def _mobius(m: NDArray[np.float64], x: float) -> float:
    num = m[0, 0] * x + m[0, 1]
    den = m[1, 0] * x + m[1, 1]
    return math.inf if den == 0 else float(num / den)


def cone_image_arc(alg: JordanAlgebra, word: ConfWord) -> ConeImageArc:
    """Endpoints g(0), g(∞) of g(R_+) and its shape on the chart R."""
    m = word_to_sl2(alg, word)
    a, b, c, d = m[0, 0], m[0, 1], m[1, 0], m[1, 1]
    start = math.inf if d == 0 else float(b / d)
    end = math.inf if c == 0 else float(a / c)
    pole_inside = c != 0 and -d / c > 0
    if pole_inside:
        return ConeImageArc(start, end, "complement")
    if not (math.isfinite(start) and math.isfinite(end)):
        # sign of the infinite end: direction of travel from g(1)
        mid = _mobius(m, 1.0)
        finite = start if math.isfinite(start) else end
        return ConeImageArc(finite, math.inf if mid > finite else -math.inf, "half-line")
    return ConeImageArc(start, end, "interval")
