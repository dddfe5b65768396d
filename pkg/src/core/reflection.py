"""Reflection and dilation spaces - abstraction, instances and law harness.

A reflection space is a set with a product x•y = s_x(y) satisfying
    (S1) x•x = x   (S2) x•(x•y) = y   (S3) s_x(y•z) = s_x(y)•s_x(z).
A dilation space additionally carries maps r_x for nonzero reals r with
    (D1) r_x(x) = x   (D2) r_x ∘ s_x = (rs)_x   (D3) r_x(y •_s z) = r_x(y) •_s r_x(z)
and (-1)_x = s_x.

Instances own only their carrier operations and preconditions; the
verify_* harness owns the laws and reports residuals instead of raising.
"""

import logging
import math
from abc import ABC, abstractmethod
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from typing import Generic, TypeVar

import numpy as np
from numpy.typing import NDArray
from typing_extensions import override

from src.core.errors import DegeneratePoint, NoDilation, StandardSubspaceError
from src.core.linalg import expm, relative_distance
from src.core.report import AxiomReport
from src.core.sampling import near_identity, uniform


logger = logging.getLogger(__name__)

P = TypeVar("P")
Q = TypeVar("Q")
Sampler = Callable[[np.random.Generator], P]
Array = NDArray[np.float64]

POWER_RANGE = range(-4, 5)
POWER_SPREAD = 0.02


class PointSpace(ABC, Generic[P]):
    """A reflection space, optionally with a dilation structure.

    Subclasses are immutable after construction.
    """

    name: str = "space"
    has_dilation: bool = False

    @abstractmethod
    def product(self, x: P, y: P) -> P:
        """x•y = s_x(y)."""

    @abstractmethod
    def distance(self, x: P, y: P) -> float:
        """Tolerance-scale distance used for point equality."""

    def dilation(self, x: P, r: float, y: P) -> P:
        raise NoDilation(f"{self.name} carries no dilation structure")

    def power_pair(self, sampler: Sampler[P], rng: np.random.Generator) -> tuple[P, P]:
        """Base point e and point x for the power law."""
        return sampler(rng), sampler(rng)


def reflect(space: PointSpace[P], x: P, y: P) -> P:
    """s_x(y)."""
    return space.product(x, y)


def dilate(space: PointSpace[P], x: P, r: float, y: P) -> P:
    """x •_r y.

    Raises:
        NoDilation: If the space has no dilation structure
        ValueError: If r = 0
    """
    if not space.has_dilation:
        raise NoDilation(f"{space.name} carries no dilation structure")
    if r == 0:
        raise ValueError("dilation parameter must be nonzero")
    return space.dilation(x, r, y)


def power(space: PointSpace[P], e: P, x: P, n: int) -> P:
    """n-th power of x with respect to the base point e.

    x^0 = e, x^1 = x, x^{n+2} = x•(e•x^n) and x^{-n} = e•x^n, so that
    x^n • x^m = x^{2n-m} for all integers n, m.
    """
    if n < 0:
        return space.product(e, power(space, e, x, -n))
    if n == 0:
        return e
    # walk the two parity chains: x^{k+2} only depends on x^k
    chain = [e, x]
    for k in range(2, n + 1):
        chain.append(space.product(x, space.product(e, chain[k - 2])))
    return chain[n]


def _power_table(space: PointSpace[P], e: P, x: P, bound: int) -> dict[int, P]:
    chain: list[P] = [e, x]
    for k in range(2, bound + 1):
        chain.append(space.product(x, space.product(e, chain[k - 2])))
    table = {k: p for k, p in enumerate(chain)}
    for k in range(1, bound + 1):
        table[-k] = space.product(e, chain[k])
    return table


def _sample_ratio(rng: np.random.Generator) -> float:
    """Nonzero real with random sign and magnitude in [e^-1, e]."""
    return float(rng.choice([-1.0, 1.0]) * math.exp(rng.uniform(-1.0, 1.0)))


def verify_reflection_axioms(
    space: PointSpace[P],
    sampler: Sampler[P],
    n_samples: int,
    tol: float,
    rng: np.random.Generator,
    power_samples: int = 20,
) -> AxiomReport:
    """Measure (S1)-(S3) and x^n • x^m = x^{2n-m} on sampled points.

    Pure given the generator state.

    Args:
        space: The instance under test
        sampler: Draws one carrier point from the generator
        n_samples: Number of sampled triples
        tol: Pass threshold for every residual
        rng: Seeded generator
        power_samples: Number of (e, x) pairs for the power law

    Returns:
        AxiomReport; precondition errors are recorded as failures
    """
    residuals = {"S1": 0.0, "S2": 0.0, "S3": 0.0, "pow1": 0.0}
    failures: list[str] = []
    fixed_points = 0

    for i in range(n_samples):
        x, y, z = sampler(rng), sampler(rng), sampler(rng)
        try:
            xx = space.product(x, x)
            xy = space.product(x, y)
            residuals["S1"] = max(residuals["S1"], space.distance(xx, x))
            residuals["S2"] = max(residuals["S2"], space.distance(space.product(x, xy), y))
            lhs = space.product(x, space.product(y, z))
            rhs = space.product(xy, space.product(x, z))
            residuals["S3"] = max(residuals["S3"], space.distance(lhs, rhs))
            if space.distance(xy, y) <= tol and space.distance(x, y) > tol:
                fixed_points += 1
        except StandardSubspaceError as e:
            failures.append(f"sample {i}: {type(e).__name__}: {e}")

    bound = 2 * max(POWER_RANGE) - min(POWER_RANGE)
    for i in range(min(power_samples, n_samples)):
        e, x = space.power_pair(sampler, rng)
        try:
            table = _power_table(space, e, x, bound)
            for n in POWER_RANGE:
                for m in POWER_RANGE:
                    value = space.product(table[n], table[m])
                    residuals["pow1"] = max(residuals["pow1"], space.distance(value, table[2 * n - m]))
        except StandardSubspaceError as err:
            failures.append(f"power sample {i}: {type(err).__name__}: {err}")

    report = AxiomReport.build(
        law=f"reflection[{space.name}]",
        samples=n_samples,
        residuals=residuals,
        tol=tol,
        failures=failures,
        fixed_points=fixed_points,
    )
    logger.debug("%s: max residual %.3e", report.law, report.max_residual)
    return report


def verify_dilation_axioms(
    space: PointSpace[P],
    sampler: Sampler[P],
    n_samples: int,
    tol: float,
    rng: np.random.Generator,
) -> AxiomReport:
    """Measure (D1)-(D3), the action law 1_x = id and •_{-1} = • on samples."""
    residuals = {"D1": 0.0, "D2": 0.0, "D3": 0.0, "unit": 0.0, "reflection": 0.0}
    failures: list[str] = []

    if not space.has_dilation:
        return AxiomReport.build(
            law=f"dilation[{space.name}]",
            samples=0,
            residuals=residuals,
            tol=tol,
            failures=[f"NoDilation: {space.name} carries no dilation structure"],
        )

    for i in range(n_samples):
        x, y, z = sampler(rng), sampler(rng), sampler(rng)
        r, s = _sample_ratio(rng), _sample_ratio(rng)
        try:
            residuals["D1"] = max(residuals["D1"], space.distance(dilate(space, x, r, x), x))
            lhs = dilate(space, x, r, dilate(space, x, s, y))
            residuals["D2"] = max(residuals["D2"], space.distance(lhs, dilate(space, x, r * s, y)))
            lhs = dilate(space, x, r, dilate(space, y, s, z))
            rhs = dilate(space, dilate(space, x, r, y), s, dilate(space, x, r, z))
            residuals["D3"] = max(residuals["D3"], space.distance(lhs, rhs))
            residuals["unit"] = max(residuals["unit"], space.distance(dilate(space, x, 1.0, y), y))
            residuals["reflection"] = max(
                residuals["reflection"],
                space.distance(dilate(space, x, -1.0, y), space.product(x, y)),
            )
        except StandardSubspaceError as e:
            failures.append(f"sample {i}: {type(e).__name__}: {e}")

    return AxiomReport.build(
        law=f"dilation[{space.name}]",
        samples=n_samples,
        residuals=residuals,
        tol=tol,
        failures=failures,
    )


def verify_morphism(
    source: PointSpace[P],
    target: PointSpace[Q],
    f: Callable[[P], Q],
    sampler: Sampler[P],
    n_samples: int,
    tol: float,
    rng: np.random.Generator,
    power_samples: int = 20,
) -> AxiomReport:
    """Measure f(x•y) = f(x)•f(y), f(x^n) = f(x)^n and, for dilation spaces, f(x•_r y) = f(x)•_r f(y)."""
    residuals = {"morphism": 0.0, "powers": 0.0}
    check_dilation = source.has_dilation and target.has_dilation
    if check_dilation:
        residuals["dilation"] = 0.0
    failures: list[str] = []

    for i in range(n_samples):
        x, y = sampler(rng), sampler(rng)
        try:
            fx, fy = f(x), f(y)
            residuals["morphism"] = max(
                residuals["morphism"],
                target.distance(f(source.product(x, y)), target.product(fx, fy)),
            )
            if check_dilation:
                r = _sample_ratio(rng)
                residuals["dilation"] = max(
                    residuals["dilation"],
                    target.distance(f(dilate(source, x, r, y)), dilate(target, fx, r, fy)),
                )
        except StandardSubspaceError as e:
            failures.append(f"sample {i}: {type(e).__name__}: {e}")

    for i in range(min(power_samples, n_samples)):
        e, x = source.power_pair(sampler, rng)
        try:
            fe, fx = f(e), f(x)
            for n in POWER_RANGE:
                value = target.distance(f(power(source, e, x, n)), power(target, fe, fx, n))
                residuals["powers"] = max(residuals["powers"], value)
        except StandardSubspaceError as err:
            failures.append(f"power sample {i}: {type(err).__name__}: {err}")

    return AxiomReport.build(
        law=f"morphism[{source.name} -> {target.name}]",
        samples=n_samples,
        residuals=residuals,
        tol=tol,
        failures=failures,
    )


# --- geodesics ---------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Geodesic(Generic[P]):
    """A curve t -> γ(t), recorded with its one-parameter form when known.

    Attributes:
        at: Evaluation map
        generator: X with η(t) = exp(tX), if constructed from a one-parameter group
        offset: The point g in γ(t) = η(t) g, if known
    """
    at: Callable[[float], P]
    generator: Array | None = None
    offset: P | None = None

    def __call__(self, t: float) -> P:
        return self.at(t)


def one_parameter_group(x: Array) -> Callable[[float], Array]:
    """t -> exp(tX) as a real matrix."""
    return lambda t: np.asarray(expm(t * x).real, dtype=np.float64)


def geodesic_from_one_param(
    group: "GroupSpace",
    eta: Callable[[float], Array],
    g: Array,
    generator: Array | None = None,
) -> Geodesic[Array]:
    """γ(t) = η(t) g for a one-parameter group η of a matrix group."""
    return Geodesic(at=lambda t: group.multiply(eta(t), g), generator=generator, offset=g)


def is_involutive_geodesic(
    eta: Callable[[float], Array],
    g: Array,
    ts: Sequence[float],
    tol: float = 1e-9,
) -> bool:
    """Range of η(t)g lies in involutions iff g² = 1 and g η(t) g^{-1} = η(-t)."""
    eye = np.eye(g.shape[0])
    if relative_distance(g @ g, eye) > tol:
        return False
    g_inv = np.linalg.inv(g)
    return all(relative_distance(g @ eta(t) @ g_inv, eta(-t)) <= tol for t in ts)


def verify_geodesic(
    space: PointSpace[P],
    gamma: Callable[[float], P],
    ts: Sequence[float],
    tol: float,
    exponent: float | None = None,
    radii: Sequence[float] = (0.5, 2.0, 3.0),
) -> AxiomReport:
    """Check γ(2t - s) = γ(t)•γ(s) on all pairs, and optionally γ(r^λ s) = γ(0) •_r γ(s).

    Pure function.

    Args:
        space: Target reflection (or dilation) space
        gamma: The curve
        ts: Sample parameters
        tol: Pass threshold
        exponent: λ for the dilation-compatibility criterion, or None to skip it
        radii: Positive ratios r used for the criterion

    Returns:
        AxiomReport with laws "morphism" and, if requested, "dilation"
    """
    residuals = {"morphism": 0.0}
    failures: list[str] = []
    points = {t: gamma(t) for t in ts}
    try:
        for t in ts:
            for s in ts:
                value = space.product(points[t], points[s])
                residuals["morphism"] = max(residuals["morphism"], space.distance(value, gamma(2 * t - s)))
        if exponent is not None:
            residuals["dilation"] = 0.0
            base = gamma(0.0)
            for r in radii:
                for s in ts:
                    value = dilate(space, base, r, points[s])
                    target = gamma(r ** exponent * s)
                    residuals["dilation"] = max(residuals["dilation"], space.distance(value, target))
    except StandardSubspaceError as e:
        failures.append(f"{type(e).__name__}: {e}")

    return AxiomReport.build(
        law=f"geodesic[{space.name}]",
        samples=len(ts) ** 2,
        residuals=residuals,
        tol=tol,
        failures=failures,
    )


# --- instances ---------------------------------------------------------------

def _vector_distance(x: Array, y: Array) -> float:
    return relative_distance(np.asarray(x), np.asarray(y))


def _replay(*points: P) -> Sampler[P]:
    """Sampler returning the given points in order."""
    queue = iter(points)
    return lambda rng: next(queue)


class TrivialSpace(PointSpace[Array]):
    """x•y = y."""

    name = "trivial"

    def product(self, x: Array, y: Array) -> Array:
        return y

    def distance(self, x: Array, y: Array) -> float:
        return _vector_distance(x, y)


class GroupSpace(PointSpace[Array]):
    """GL_n(R) with g•h = g h^{-1} g."""

    def __init__(self, n: int) -> None:
        self.n = n
        self.name = f"group GL{n}"

    def multiply(self, g: Array, h: Array) -> Array:
        return np.asarray(g @ h, dtype=np.float64)

    def identity(self) -> Array:
        return np.eye(self.n)

    def product(self, x: Array, y: Array) -> Array:
        return np.asarray(x @ np.linalg.solve(y, x), dtype=np.float64)

    def distance(self, x: Array, y: Array) -> float:
        return relative_distance(x, y)

    def sample(self, rng: np.random.Generator) -> Array:
        return near_identity(rng, self.n)

    @override
    def power_pair(self, sampler: Sampler[Array], rng: np.random.Generator) -> tuple[Array, Array]:
        # x^k ~ e (e^{-1} x)^k up to k = 12, so x stays close to e
        e = sampler(rng)
        return e, np.asarray(e @ near_identity(rng, self.n, POWER_SPREAD), dtype=np.float64)


class TwistedGroupSpace(GroupSpace):
    """G with x•y = x τ(x)^{-1} τ(y) for an involutive automorphism τ."""

    def __init__(self, n: int, tau: Callable[[Array], Array], label: str = "tau") -> None:
        super().__init__(n)
        self.tau = tau
        self.name = f"twisted GL{n}[{label}]"

    @override
    def product(self, x: Array, y: Array) -> Array:
        return np.asarray(x @ np.linalg.solve(self.tau(x), self.tau(y)), dtype=np.float64)


def inverse_transpose(g: Array) -> Array:
    """τ(g) = (g^T)^{-1}, the Cartan involution of GL_n(R)."""
    return np.asarray(np.linalg.inv(g).T, dtype=np.float64)


class CosetSpace(TwistedGroupSpace):
    """GL_n(R)/O(n) with xH•yH = x τ(x)^{-1} τ(y) H, τ(g) = (g^T)^{-1}.

    Points are group representatives; two representatives are equal iff they
    have the same invariant g g^T.
    """

    def __init__(self, n: int) -> None:
        super().__init__(n, inverse_transpose, "O(n)")
        self.name = f"coset GL{n}/O{n}"

    @staticmethod
    def invariant(g: Array) -> Array:
        return np.asarray(g @ g.T, dtype=np.float64)

    @override
    def distance(self, x: Array, y: Array) -> float:
        return relative_distance(self.invariant(x), self.invariant(y))


class PositiveDefiniteSpace(PointSpace[Array]):
    """Sym_n^+ with p•q = p q^{-1} p."""

    def __init__(self, n: int) -> None:
        self.n = n
        self.name = f"positive Sym{n}"

    def product(self, x: Array, y: Array) -> Array:
        value = x @ np.linalg.solve(y, x)
        return np.asarray((value + value.T) / 2, dtype=np.float64)

    def distance(self, x: Array, y: Array) -> float:
        return relative_distance(x, y)

    def sample(self, rng: np.random.Generator) -> Array:
        g = near_identity(rng, self.n)
        return np.asarray(g @ g.T, dtype=np.float64)

    @override
    def power_pair(self, sampler: Sampler[Array], rng: np.random.Generator) -> tuple[Array, Array]:
        e = sampler(rng)
        h = near_identity(rng, self.n, POWER_SPREAD)
        x = h @ e @ h.T
        return e, np.asarray((x + x.T) / 2, dtype=np.float64)


class BilinearSpace(PointSpace[Array]):
    """Non-isotropic vectors of (R^d, β) with x•y = -y + 2 β(x,y)/β(x,x) x."""

    def __init__(self, beta: Array, label: str = "dot", eps: float = 1e-12) -> None:
        self.beta = np.asarray(beta, dtype=np.float64)
        self.eps = eps
        self.name = f"bilinear[{label}]"

    def form(self, x: Array, y: Array) -> float:
        return float(x @ self.beta @ y)

    def product(self, x: Array, y: Array) -> Array:
        norm = self.form(x, x)
        if abs(norm) <= self.eps * max(1.0, float(x @ x)):
            raise DegeneratePoint(f"isotropic point: β(x,x) = {norm:.3e}")
        return np.asarray(-y + 2 * self.form(x, y) / norm * x, dtype=np.float64)

    def distance(self, x: Array, y: Array) -> float:
        return _vector_distance(x, y)

    def sampler(self, min_norm: float = 0.5) -> Sampler[Array]:
        """Sampler of points with |β(x,x)| >= min_norm."""
        d = self.beta.shape[0]

        def draw(rng: np.random.Generator) -> Array:
            while True:
                x = uniform(rng, (d,))
                if abs(self.form(x, x)) >= min_norm:
                    return x
        return draw

    @override
    def power_pair(self, sampler: Sampler[Array], rng: np.random.Generator) -> tuple[Array, Array]:
        # s_x s_e is a boost for indefinite forms; x near e keeps its powers bounded
        e = sampler(rng)
        step = POWER_SPREAD * float(np.linalg.norm(e)) * uniform(rng, e.shape, 1.0)
        return e, np.asarray(e + step, dtype=np.float64)


class ProductSpace(PointSpace[tuple[P, P]]):
    """Componentwise product of two reflection spaces."""

    def __init__(self, first: PointSpace[P], second: PointSpace[P]) -> None:
        self.first = first
        self.second = second
        self.name = f"{first.name} x {second.name}"
        self.has_dilation = first.has_dilation and second.has_dilation

    def product(self, x: tuple[P, P], y: tuple[P, P]) -> tuple[P, P]:
        return (self.first.product(x[0], y[0]), self.second.product(x[1], y[1]))

    @override
    def dilation(self, x: tuple[P, P], r: float, y: tuple[P, P]) -> tuple[P, P]:
        return (self.first.dilation(x[0], r, y[0]), self.second.dilation(x[1], r, y[1]))

    def distance(self, x: tuple[P, P], y: tuple[P, P]) -> float:
        return max(self.first.distance(x[0], y[0]), self.second.distance(x[1], y[1]))

    @override
    def power_pair(
        self, sampler: Sampler[tuple[P, P]], rng: np.random.Generator,
    ) -> tuple[tuple[P, P], tuple[P, P]]:
        e, f = sampler(rng), sampler(rng)
        e1, x1 = self.first.power_pair(_replay(e[0], f[0]), rng)
        e2, x2 = self.second.power_pair(_replay(e[1], f[1]), rng)
        return (e1, e2), (x1, x2)


@dataclass(frozen=True, eq=False)
class MatrixHom:
    """Graded homomorphism γ into GL_n(R): γ(e^t) = exp(tX), γ(-1) = σ.

    Attributes:
        x: Generator X, commuting with σ
        sigma: Involution σ
    """
    x: Array
    sigma: Array

    def at(self, r: float) -> Array:
        value = np.asarray(expm(math.log(abs(r)) * self.x).real, dtype=np.float64)
        return value @ self.sigma if r < 0 else value


class HomSpace(PointSpace[MatrixHom]):
    """Hom(R^×, GL_n(R)) with (γ •_r η)(s) = γ(r) η(s) γ(r)^{-1}.

    In pair coordinates (x, σ) • (y, η) = (Ad_σ y, σ η σ), and
    (x, σ) •_{e^t} (y, η) = (e^{t ad x} y, exp(tx) η exp(-tx)).
    """

    has_dilation = True

    def __init__(self, n: int) -> None:
        self.n = n
        self.name = f"Hom(R^x, GL{n})"

    @override
    def dilation(self, x: MatrixHom, r: float, y: MatrixHom) -> MatrixHom:
        g = x.at(r)
        g_inv = np.linalg.inv(g)
        return MatrixHom(g @ y.x @ g_inv, g @ y.sigma @ g_inv)

    def product(self, x: MatrixHom, y: MatrixHom) -> MatrixHom:
        return self.dilation(x, -1.0, y)

    def distance(self, x: MatrixHom, y: MatrixHom) -> float:
        return max(relative_distance(x.x, y.x), relative_distance(x.sigma, y.sigma))

    def sample(self, rng: np.random.Generator) -> MatrixHom:
        signs = rng.choice([-1.0, 1.0], size=self.n)
        frame = near_identity(rng, self.n, 0.1)
        frame_inv = np.linalg.inv(frame)
        block = uniform(rng, (self.n, self.n), 0.3) * (np.equal.outer(signs, signs))
        return MatrixHom(frame @ block @ frame_inv, frame @ np.diag(signs) @ frame_inv)


class AffineSpace(PointSpace[Array]):
    """R^d with a •_r b = a + r(b - a)."""

    has_dilation = True

    def __init__(self, d: int) -> None:
        self.d = d
        self.name = f"affine R{d}"

    def product(self, x: Array, y: Array) -> Array:
        return np.asarray(2 * x - y, dtype=np.float64)

    @override
    def dilation(self, x: Array, r: float, y: Array) -> Array:
        return np.asarray(x + r * (y - x), dtype=np.float64)

    def distance(self, x: Array, y: Array) -> float:
        return _vector_distance(x, y)

    def sample(self, rng: np.random.Generator) -> Array:
        return uniform(rng, (self.d,))


def diagonal_character(exponents: Sequence[float], parities: Sequence[int]) -> Callable[[float], Array]:
    """Homomorphism r -> diag(sgn(r)^k_i |r|^λ_i) from R^× into GL_d."""
    lam = np.asarray(exponents, dtype=np.float64)
    par = np.asarray(parities)

    def alpha(r: float) -> Array:
        return np.diag(np.sign(r) ** par * abs(r) ** lam)
    return alpha


class VectorDilationSpace(AffineSpace):
    """R^d with a •_r b = a + α_r(b - a) for a diagonal character α."""

    def __init__(self, exponents: Sequence[float], parities: Sequence[int]) -> None:
        super().__init__(len(exponents))
        self.alpha = diagonal_character(exponents, parities)
        self.name = f"vector R{self.d}[λ={list(exponents)}]"

    @override
    def product(self, x: Array, y: Array) -> Array:
        return self.dilation(x, -1.0, y)

    @override
    def dilation(self, x: Array, r: float, y: Array) -> Array:
        return np.asarray(x + self.alpha(r) @ (y - x), dtype=np.float64)


class DilationGroupSpace(GroupSpace):
    """GL_n(R) with g •_r h = g α_r(g^{-1} h), α_r = conjugation by a diagonal character."""

    has_dilation = True

    def __init__(self, exponents: Sequence[float], parities: Sequence[int]) -> None:
        super().__init__(len(exponents))
        self.character = diagonal_character(exponents, parities)
        self.name = f"group-with-alpha GL{self.n}"

    def alpha(self, r: float, g: Array) -> Array:
        d = self.character(r)
        return np.asarray(d @ g @ np.linalg.inv(d), dtype=np.float64)

    @override
    def dilation(self, x: Array, r: float, y: Array) -> Array:
        return np.asarray(x @ self.alpha(r, np.linalg.solve(x, y)), dtype=np.float64)

    @override
    def product(self, x: Array, y: Array) -> Array:
        return self.dilation(x, -1.0, y)


class HomogeneousDilationSpace(PointSpace[Array]):
    """R^d = Aff(R^d)/GL_d with g.e •_r y = g β(r) g^{-1}.y, β(r) = sgn(r)|r|^λ.

    Points are lifted to affine matrices [[A, x], [0, 1]] with a fixed linear
    part A; the product does not depend on that choice since β is central in
    the stabilizer GL_d.
    """

    has_dilation = True

    def __init__(self, d: int, exponent: float = 1.0, linear_part: Array | None = None) -> None:
        self.d = d
        self.exponent = exponent
        self.linear_part = np.eye(d) if linear_part is None else np.asarray(linear_part, dtype=np.float64)
        self.name = f"homogeneous R{d}[λ={exponent}]"

    def lift(self, x: Array) -> Array:
        g = np.eye(self.d + 1)
        g[: self.d, : self.d] = self.linear_part
        g[: self.d, self.d] = x
        return g

    def beta(self, r: float) -> Array:
        b = np.eye(self.d + 1)
        b[: self.d, : self.d] *= math.copysign(abs(r) ** self.exponent, r)
        return b

    @override
    def dilation(self, x: Array, r: float, y: Array) -> Array:
        g = self.lift(x)
        moved = g @ self.beta(r) @ np.linalg.inv(g) @ np.append(y, 1.0)
        return np.asarray(moved[: self.d], dtype=np.float64)

    def product(self, x: Array, y: Array) -> Array:
        return self.dilation(x, -1.0, y)

    def distance(self, x: Array, y: Array) -> float:
        return _vector_distance(x, y)

    def sample(self, rng: np.random.Generator) -> Array:
        return uniform(rng, (self.d,))
