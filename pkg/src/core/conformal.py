"""Conformal group of a euclidean Jordan algebra, as words of birational maps.

A word is a tuple of generators; the leftmost generator is applied last:
    (g1, g2, g3) acts as x -> g1(g2(g3(x))).
Generators are translations, structure maps T with T(E_+) = ±E_+ and the
negative inversion -j(x) = -x^{-1}.

The Lie algebra g = g_1 + g_0 + g_{-1} is realized by polynomial vector fields
    X(z) = u + T z - P(z) v
with bracket [X, Y] = dX·Y - dY·X, so that [h, ·] has eigenvalues +1, 0, -1
on (u, T, v) for the Euler field h(z) = z.

All functions are pure with no side effects.
"""

from collections.abc import Callable, Sequence
from dataclasses import dataclass
from typing import Union

import numpy as np
from numpy.typing import NDArray
from scipy.integrate import solve_ivp

from src.core.errors import GradingUndefined, PointOutsideDomain, SingularElement
from src.core.jordan import (
    Element,
    JordanAlgebra,
    apply_linear,
    check_element,
    coords,
    element_distance,
    from_coords,
    in_cone,
    jordan_inverse,
    linear_map_matrix,
    quad_p,
    random_boundary_point,
    random_cone_point,
    unit,
    zero,
)
from src.core.linalg import RealMatrix
from src.core.report import AxiomReport


WORD_EQUALITY_POINTS = 64
WORD_EQUALITY_TOL = 1e-8
WORD_EQUALITY_SEED = 20170514


@dataclass(frozen=True, eq=False)
class Translate:
    """x -> x + b."""
    b: Element


@dataclass(frozen=True, eq=False)
class Structure:
    """x -> T x for a coordinate matrix T with T(E_+) = ±E_+.

    The cone condition is not checked here; grading() rejects words whose
    structure maps violate it.
    """
    t: RealMatrix


@dataclass(frozen=True)
class NegInversion:
    """x -> -x^{-1}."""


Generator = Union[Translate, Structure, NegInversion]
ConfWord = tuple[Generator, ...]
VectorField = Callable[[Element], Element]


def _apply_generator(alg: JordanAlgebra, gen: Generator, x: Element) -> Element:
    if isinstance(gen, Translate):
        return x + gen.b
    if isinstance(gen, Structure):
        return apply_linear(alg, gen.t, x)
    return -jordan_inverse(alg, x)


def conf_act_strict(alg: JordanAlgebra, word: ConfWord, x: Element) -> Element:
    """Apply a word, raising PointOutsideDomain where it is undefined."""
    x = check_element(alg, x)
    for gen in reversed(word):
        try:
            x = _apply_generator(alg, gen, x)
        except SingularElement as e:
            raise PointOutsideDomain(f"word undefined at the point: {e}") from e
    return x


def conf_act(alg: JordanAlgebra, word: ConfWord, x: Element) -> Element | None:
    """Apply a word; None where an inversion meets a singular element."""
    try:
        return conf_act_strict(alg, word, x)
    except PointOutsideDomain:
        return None


def compose(*words: ConfWord) -> ConfWord:
    """compose(a, b) acts as a ∘ b."""
    out: ConfWord = ()
    for w in words:
        out = out + tuple(w)
    return out


def _invert_generator(gen: Generator) -> Generator:
    if isinstance(gen, Translate):
        return Translate(-gen.b)
    if isinstance(gen, Structure):
        return Structure(np.linalg.inv(gen.t))
    return gen


def inverse(word: ConfWord) -> ConfWord:
    return tuple(_invert_generator(g) for g in reversed(word))


def tau_conj(word: ConfWord) -> ConfWord:
    """Word for γ(-1) g γ(-1), i.e. x -> -g(-x)."""
    return tuple(Translate(-g.b) if isinstance(g, Translate) else g for g in word)


def structure(alg: JordanAlgebra, fn: Callable[[Element], Element]) -> Structure:
    """Structure generator from a linear map given as a function on elements."""
    return Structure(linear_map_matrix(alg, fn))


def gamma_scalar(alg: JordanAlgebra, r: float) -> ConfWord:
    """γ(r) = r id_E."""
    if r == 0:
        raise ValueError("γ is defined on nonzero reals only")
    return (Structure(r * np.eye(alg.dim)),)


def exp_quadratic(alg: JordanAlgebra, c: Element, t: float = 1.0) -> ConfWord:
    """Flow of the quadratic field z -> -P(z)c at time t: x -> (x^{-1} + tc)^{-1}."""
    c = check_element(alg, c)
    return (NegInversion(), Translate(-t * c), NegInversion())


def exp_quadratic_ode(alg: JordanAlgebra, c: Element, t: float, x: Element, rtol: float = 1e-11) -> Element:
    """Integrate ż = -P(z)c from z(0) = x numerically."""
    c = check_element(alg, c)

    def rhs(_: float, y: NDArray[np.float64]) -> NDArray[np.float64]:
        z = from_coords(alg, y)
        return -quad_p(alg, z) @ coords(alg, c)

    sol = solve_ivp(rhs, (0.0, t), coords(alg, x), method="DOP853", rtol=rtol, atol=1e-13)
    return from_coords(alg, sol.y[:, -1])


# --- differentials and the grading ------------------------------------------

def conf_differential(alg: JordanAlgebra, word: ConfWord, x: Element) -> RealMatrix:
    """dg(x) as a coordinate matrix, by the chain rule with d(-j)(x) = P(x)^{-1}.

    Raises:
        PointOutsideDomain: If the word is undefined at x or at an intermediate point
    """
    x = check_element(alg, x)
    total = np.eye(alg.dim)
    for gen in reversed(word):
        if isinstance(gen, Structure):
            step = gen.t
        elif isinstance(gen, NegInversion):
            try:
                jordan_inverse(alg, x)
            except SingularElement as e:
                raise PointOutsideDomain(f"inversion undefined: {e}") from e
            step = np.linalg.inv(quad_p(alg, x))
        else:
            step = np.eye(alg.dim)
        total = step @ total
        x = _apply_generator(alg, gen, x)
    return total


def grading_points(alg: JordanAlgebra) -> list[Element]:
    """Deterministic points used to measure the grading."""
    e = unit(alg)
    rng = np.random.default_rng(WORD_EQUALITY_SEED)
    return [e, 2.0 * e, 0.5 * e] + [random_cone_point(alg, rng, (0.1, 10.0)) for _ in range(5)]


def structure_sign(alg: JordanAlgebra, gen: Structure) -> int:
    """+1 if T(E_+) = E_+, -1 if T(E_+) = -E_+, checked on interior and near-boundary points.

    Raises:
        GradingUndefined: If T maps some cone point outside both E_+ and -E_+
    """
    rng = np.random.default_rng(WORD_EQUALITY_SEED)
    points = grading_points(alg) + [random_boundary_point(alg, rng) for _ in range(4)]
    images = [apply_linear(alg, gen.t, x) for x in points]
    if all(in_cone(alg, y) for y in images):
        return 1
    if all(in_cone(alg, -y) for y in images):
        return -1
    raise GradingUndefined("structure map does not preserve E_+ up to sign")


def grading(alg: JordanAlgebra, word: ConfWord, points: Sequence[Element] | None = None) -> int:
    """ε(g) = +1 if dg(x)e ∈ E_+, -1 if dg(x)e ∈ -E_+, measured on several points.

    Structure generators must satisfy T(E_+) = ±E_+.

    Raises:
        GradingUndefined: If the sign differs between points, dg(x)e is in
            neither cone, the word is undefined at every point
            or a structure generator does not preserve ±E_+
    """
    for gen in word:
        if isinstance(gen, Structure):
            structure_sign(alg, gen)
    signs: set[int] = set()
    e_coords = coords(alg, unit(alg))
    for x in points if points is not None else grading_points(alg):
        try:
            w = from_coords(alg, conf_differential(alg, word, x) @ e_coords)
        except PointOutsideDomain:
            continue
        if in_cone(alg, w):
            signs.add(1)
        elif in_cone(alg, -w):
            signs.add(-1)
        else:
            raise GradingUndefined("dg(x)e lies in neither E_+ nor -E_+")
    if len(signs) != 1:
        raise GradingUndefined(f"inconsistent or unmeasurable grading: {sorted(signs)}")
    return signs.pop()


# --- vector fields and the Lie algebra --------------------------------------

@dataclass(frozen=True, eq=False)
class LieTriple:
    """Vector field z -> u + T z - P(z) v.

    Attributes:
        u: Constant part (grade +1)
        t: Linear part, a coordinate matrix (grade 0)
        v: Quadratic part (grade -1)
    """
    u: Element
    t: RealMatrix
    v: Element


def lie_triple(alg: JordanAlgebra, u: Element | None = None, t: RealMatrix | None = None, v: Element | None = None) -> LieTriple:
    return LieTriple(
        zero(alg) if u is None else check_element(alg, u),
        np.zeros((alg.dim, alg.dim)) if t is None else np.asarray(t, dtype=np.float64),
        zero(alg) if v is None else check_element(alg, v),
    )


def scalar_h(alg: JordanAlgebra) -> LieTriple:
    """h = γ'(0), the Euler field z -> z."""
    return lie_triple(alg, t=np.eye(alg.dim))


def theta_tilde(alg: JordanAlgebra, u: Element) -> LieTriple:
    """Image of the constant field u under the Cartan involution: z -> -P(z)u."""
    return lie_triple(alg, v=u)


def vector_field_eval(alg: JordanAlgebra, xi: LieTriple, z: Element) -> Element:
    z = check_element(alg, z)
    return xi.u + apply_linear(alg, xi.t, z) - from_coords(alg, quad_p(alg, z) @ coords(alg, xi.v))


def as_field(alg: JordanAlgebra, xi: LieTriple) -> VectorField:
    return lambda z: vector_field_eval(alg, xi, z)


def scale_triple(xi: LieTriple, r: float) -> LieTriple:
    """(ru, T, r^{-1}v), the expected Ad_{γ(r)} image."""
    return LieTriple(r * xi.u, xi.t, xi.v / r)


def pushforward(alg: JordanAlgebra, word: ConfWord, field: VectorField) -> VectorField:
    """(Ad_g X)(z) = dg(g^{-1}z) X(g^{-1}z)."""
    inv = inverse(word)

    def pushed(z: Element) -> Element:
        y = conf_act_strict(alg, inv, z)
        return from_coords(alg, conf_differential(alg, word, y) @ coords(alg, field(y)))
    return pushed


def directional_derivative(alg: JordanAlgebra, field: VectorField, z: Element, w: Element, step: float = 1e-3) -> Element:
    """dX(z)·w by central differences with one Richardson extrapolation."""
    def central(h: float) -> NDArray[np.float64]:
        return (coords(alg, field(z + h * w)) - coords(alg, field(z - h * w))) / (2 * h)

    scale = max(1.0, float(np.linalg.norm(z)))
    coarse, fine = central(step * scale), central(step * scale / 2)
    return from_coords(alg, (4 * fine - coarse) / 3)


def lie_bracket(alg: JordanAlgebra, x: VectorField, y: VectorField) -> VectorField:
    """[X, Y](z) = dX(z)·Y(z) - dY(z)·X(z)."""
    def bracket(z: Element) -> Element:
        return directional_derivative(alg, x, z, y(z)) - directional_derivative(alg, y, z, x(z))
    return bracket


def field_distance(alg: JordanAlgebra, x: VectorField, y: VectorField, points: Sequence[Element]) -> float:
    """Largest relative distance between two fields over sample points."""
    return max((element_distance(alg, x(p), y(p)) for p in points), default=0.0)


def lie_grade_check(
    alg: JordanAlgebra,
    xi: LieTriple,
    r: float,
    points: Sequence[Element],
    tol: float = 1e-10,
) -> AxiomReport:
    """Verify Ad_{γ(r)} ξ = (ru, T, r^{-1}v) by numerical pushforward on sample points."""
    pushed = pushforward(alg, gamma_scalar(alg, r), as_field(alg, xi))
    expected = as_field(alg, scale_triple(xi, r))
    failures: list[str] = []
    residual = 0.0
    try:
        residual = field_distance(alg, pushed, expected, points)
    except PointOutsideDomain as e:
        failures.append(str(e))
    return AxiomReport.build(
        law=f"lie-grade[{alg.name}, r={r:g}]",
        samples=len(points),
        residuals={"Ad_gamma": residual},
        tol=tol,
        failures=failures,
    )


# --- extensional word equality ----------------------------------------------

def cone_sample_points(alg: JordanAlgebra, count: int = WORD_EQUALITY_POINTS, seed: int = WORD_EQUALITY_SEED) -> list[Element]:
    rng = np.random.default_rng(seed)
    return [random_cone_point(alg, rng, (0.1, 10.0)) for _ in range(count)]


def word_distance(alg: JordanAlgebra, w1: ConfWord, w2: ConfWord, points: Sequence[Element]) -> float:
    """Largest relative distance of the actions; inf where exactly one is undefined."""
    worst = 0.0
    for p in points:
        a, b = conf_act(alg, w1, p), conf_act(alg, w2, p)
        if a is None and b is None:
            continue
        if a is None or b is None:
            return float("inf")
        worst = max(worst, element_distance(alg, a, b))
    return worst


def word_equal(
    alg: JordanAlgebra,
    w1: ConfWord,
    w2: ConfWord,
    points: Sequence[Element] | None = None,
    tol: float = WORD_EQUALITY_TOL,
) -> bool:
    """Extensional equality on a fixed seeded set of cone points."""
    sample = cone_sample_points(alg) if points is None else points
    return word_distance(alg, w1, w2, sample) <= tol


def fixes_field(alg: JordanAlgebra, word: ConfWord, xi: LieTriple, points: Sequence[Element], tol: float = 1e-9) -> bool:
    """Whether Ad_g ξ = ξ on the sample points."""
    field = as_field(alg, xi)
    return field_distance(alg, pushforward(alg, word, field), field, points) <= tol
