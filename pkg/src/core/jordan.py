"""Euclidean Jordan algebras Sym_n(R), Herm_n(C) and spin factors Λ_n.

Elements are numpy arrays: a real symmetric n x n matrix, a complex
hermitian n x n matrix, or a real vector (t, v) of length n with v in
R^{n-1}. Linear maps on E are real d x d matrices in the coordinates of a
Frobenius-orthonormal basis (d = n(n+1)/2, n² or n).

Matrix kinds use A·B = (AB + BA)/2; the spin factor uses
(t, v)(t', v') = (tt' + <v, v'>, tv' + t'v).

All functions are pure with no side effects.
"""

import math
from collections.abc import Callable
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

import numpy as np
from numpy.typing import NDArray

from src.core.errors import AlgebraMismatch, SingularElement
from src.core.linalg import RealMatrix
from src.core.sampling import random_unit_vector, random_unitary


Element = NDArray[np.generic]

SINGULARITY_THRESHOLD = 1e-12
SPECTRUM_RANGE = (1e-3, 1e3)


class AlgebraKind(str, Enum):
    """Supported families."""
    SYM = "sym"
    HERM = "herm"
    SPIN = "spin"


@dataclass(frozen=True)
class JordanAlgebra:
    """A euclidean Jordan algebra of one of the three shipped families.

    Attributes:
        kind: Family
        n: Matrix size, or the spin-factor dimension (E = R x R^{n-1})
    """
    kind: AlgebraKind
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"algebra size must be positive, got {self.n}")
        if self.kind == AlgebraKind.SPIN and self.n < 2:
            raise ValueError("spin factor needs n >= 2")

    @property
    def name(self) -> str:
        label = {AlgebraKind.SYM: "Sym", AlgebraKind.HERM: "Herm", AlgebraKind.SPIN: "Lambda"}[self.kind]
        return f"{label}{self.n}"

    @property
    def is_matrix(self) -> bool:
        return self.kind != AlgebraKind.SPIN

    @property
    def dim(self) -> int:
        if self.kind == AlgebraKind.SYM:
            return self.n * (self.n + 1) // 2
        if self.kind == AlgebraKind.HERM:
            return self.n * self.n
        return self.n

    @property
    def rank(self) -> int:
        return 2 if self.kind == AlgebraKind.SPIN else self.n

    @property
    def shape(self) -> tuple[int, ...]:
        return (self.n,) if self.kind == AlgebraKind.SPIN else (self.n, self.n)

    @property
    def dtype(self) -> type:
        return np.complex128 if self.kind == AlgebraKind.HERM else np.float64

    @cached_property
    def basis(self) -> list[Element]:
        """Frobenius-orthonormal basis of E."""
        if self.kind == AlgebraKind.SPIN:
            return [np.eye(self.n)[k] for k in range(self.n)]
        n = self.n
        out: list[Element] = []
        for i in range(n):
            e = np.zeros((n, n), dtype=self.dtype)
            e[i, i] = 1
            out.append(e)
        for i in range(n):
            for j in range(i + 1, n):
                e = np.zeros((n, n), dtype=self.dtype)
                e[i, j] = e[j, i] = 1 / math.sqrt(2)
                out.append(e)
                if self.kind == AlgebraKind.HERM:
                    f = np.zeros((n, n), dtype=np.complex128)
                    f[i, j] = 1j / math.sqrt(2)
                    f[j, i] = -1j / math.sqrt(2)
                    out.append(f)
        return out


def make_algebra(kind: str | AlgebraKind, n: int) -> JordanAlgebra:
    return JordanAlgebra(AlgebraKind(kind), n)


def check_element(alg: JordanAlgebra, x: Element) -> Element:
    """Coerce x to the algebra's dtype, enforcing symmetry for matrix kinds.

    Raises:
        AlgebraMismatch: If x has the wrong shape
    """
    x = np.asarray(x)
    if x.shape != alg.shape:
        raise AlgebraMismatch(f"element of shape {x.shape} does not belong to {alg.name}")
    if alg.kind == AlgebraKind.SYM:
        x = np.asarray(x.real, dtype=np.float64)
        return (x + x.T) / 2
    if alg.kind == AlgebraKind.HERM:
        x = np.asarray(x, dtype=np.complex128)
        return (x + x.conj().T) / 2
    return np.asarray(x.real, dtype=np.float64)


def unit(alg: JordanAlgebra) -> Element:
    if alg.kind == AlgebraKind.SPIN:
        e = np.zeros(alg.n)
        e[0] = 1.0
        return e
    return np.eye(alg.n, dtype=alg.dtype)


def zero(alg: JordanAlgebra) -> Element:
    return np.zeros(alg.shape, dtype=alg.dtype)


def coords(alg: JordanAlgebra, x: Element) -> NDArray[np.float64]:
    """Coordinates of x in the orthonormal basis."""
    x = np.asarray(x)
    if alg.kind == AlgebraKind.SPIN:
        return np.asarray(x.real, dtype=np.float64)
    return np.array([float(np.real(np.vdot(b, x))) for b in alg.basis])


def from_coords(alg: JordanAlgebra, c: NDArray[np.float64]) -> Element:
    if alg.kind == AlgebraKind.SPIN:
        return np.asarray(c, dtype=np.float64).copy()
    out = zero(alg)
    for ck, b in zip(c, alg.basis):
        out = out + ck * b
    return out


def linear_map_matrix(alg: JordanAlgebra, fn: Callable[[Element], Element]) -> RealMatrix:
    """Coordinate matrix of a real-linear map E -> E."""
    cols = [coords(alg, fn(b)) for b in alg.basis]
    return np.column_stack(cols)


def apply_linear(alg: JordanAlgebra, t: RealMatrix, x: Element) -> Element:
    return from_coords(alg, t @ coords(alg, x))


def _product(kind: AlgebraKind, x: Element, y: Element) -> Element:
    """Bilinear Jordan product; also valid on complexified elements."""
    if kind == AlgebraKind.SPIN:
        t, v = x[0], x[1:]
        s, w = y[0], y[1:]
        return np.concatenate([[t * s + v @ w], t * w + s * v])
    return (x @ y + y @ x) / 2


def jmul(alg: JordanAlgebra, x: Element, y: Element) -> Element:
    """Jordan product x·y.

    Raises:
        AlgebraMismatch: If an operand is not an element of alg
    """
    return _product(alg.kind, check_element(alg, x), check_element(alg, y))


def square(alg: JordanAlgebra, x: Element) -> Element:
    return jmul(alg, x, x)


def lop(alg: JordanAlgebra, x: Element) -> RealMatrix:
    """L(x) as a coordinate matrix."""
    x = check_element(alg, x)
    return linear_map_matrix(alg, lambda y: _product(alg.kind, x, y))


def trace_form(alg: JordanAlgebra, x: Element, y: Element) -> float:
    """(x, y) -> tr L(xy)."""
    return float(np.trace(lop(alg, jmul(alg, x, y))))


def gram_matrix(alg: JordanAlgebra) -> RealMatrix:
    """Trace form on the basis."""
    basis = alg.basis
    return np.array([[trace_form(alg, a, b) for b in basis] for a in basis])


def is_euclidean(alg: JordanAlgebra, tol: float = 1e-12) -> bool:
    """Decide positive definiteness of the trace form via the Gram matrix eigenvalues."""
    return bool(np.linalg.eigvalsh(gram_matrix(alg)).min() > tol)


def quad_p(alg: JordanAlgebra, x: Element, y: Element | None = None) -> RealMatrix:
    """P(x, y) = L(x)L(y) + L(y)L(x) - L(xy); P(x) = P(x, x)."""
    y = x if y is None else y
    lx, ly = lop(alg, x), lop(alg, y)
    return np.asarray(lx @ ly + ly @ lx - lop(alg, jmul(alg, x, y)), dtype=np.float64)


def spectrum(alg: JordanAlgebra, x: Element) -> NDArray[np.float64]:
    """Ascending spectrum: eigenvalues for matrix kinds, t ± |v| for the spin factor."""
    x = check_element(alg, x)
    if alg.kind == AlgebraKind.SPIN:
        r = float(np.linalg.norm(x[1:]))
        return np.array([x[0] - r, x[0] + r])
    return np.asarray(np.linalg.eigvalsh(x), dtype=np.float64)


def jordan_det(alg: JordanAlgebra, x: Element) -> float:
    """Matrix determinant, or the Lorentz form t² - |v|² for the spin factor."""
    x = check_element(alg, x)
    if alg.kind == AlgebraKind.SPIN:
        return float(x[0] ** 2 - x[1:] @ x[1:])
    return float(np.real(np.linalg.det(x)))


def in_cone(alg: JordanAlgebra, x: Element, tol: float = 0.0) -> bool:
    """Membership in the open cone E_+ (min spectrum > tol)."""
    return bool(spectrum(alg, x).min() > tol)


def in_closed_cone(alg: JordanAlgebra, x: Element, tol: float = 1e-12) -> bool:
    """Membership in C_+ up to a tolerance relative to the element scale."""
    spec = spectrum(alg, x)
    scale = max(1.0, float(np.abs(spec).max()))
    return bool(spec.min() >= -tol * scale)


def is_invertible(alg: JordanAlgebra, x: Element) -> bool:
    spec = np.abs(spectrum(alg, x))
    return bool(spec.min() > SINGULARITY_THRESHOLD * max(1.0, float(spec.max())))


def jordan_inverse(alg: JordanAlgebra, x: Element) -> Element:
    """Jordan inverse x^{-1}.

    Pure function.

    Args:
        alg: The algebra
        x: Element

    Returns:
        The unique y with x·y = e in the subalgebra generated by x

    Raises:
        SingularElement: If the Jordan determinant vanishes
    """
    x = check_element(alg, x)
    if not is_invertible(alg, x):
        raise SingularElement(f"element of {alg.name} is not invertible (spectrum {spectrum(alg, x)})")
    if alg.kind == AlgebraKind.SPIN:
        return np.concatenate([[x[0]], -x[1:]]) / jordan_det(alg, x)
    return check_element(alg, np.linalg.inv(x))


def jordan_identity_residual(alg: JordanAlgebra, x: Element, y: Element) -> float:
    """||x·(x²·y) - x²·(x·y)|| relative to the operand scale."""
    x2 = square(alg, x)
    lhs = jmul(alg, x, jmul(alg, x2, y))
    rhs = jmul(alg, x2, jmul(alg, x, y))
    scale = max(1.0, float(np.linalg.norm(x)) ** 3 * float(np.linalg.norm(y)))
    return float(np.linalg.norm(lhs - rhs)) / scale


def element_distance(alg: JordanAlgebra, x: Element, y: Element) -> float:
    """Relative Frobenius distance."""
    scale = max(1.0, float(np.linalg.norm(x)), float(np.linalg.norm(y)))
    return float(np.linalg.norm(np.asarray(x) - np.asarray(y))) / scale


# --- complexification and the Cayley transform ------------------------------

def complexify(alg: JordanAlgebra, re: Element, im: Element) -> NDArray[np.complex128]:
    """x + iy in E_C, stored as a complex array with the bilinear product."""
    return np.asarray(check_element(alg, re) + 1j * check_element(alg, im), dtype=np.complex128)


def real_imag(alg: JordanAlgebra, z: NDArray[np.complex128]) -> tuple[Element, Element]:
    """Split z in E_C into (real part, imaginary part) in E."""
    z = np.asarray(z, dtype=np.complex128)
    if alg.kind == AlgebraKind.HERM:
        return (z + z.conj().T) / 2, (z - z.conj().T) / 2j
    return np.asarray(z.real), np.asarray(z.imag)


def _complex_inverse(alg: JordanAlgebra, z: NDArray[np.complex128]) -> NDArray[np.complex128]:
    if alg.kind == AlgebraKind.SPIN:
        det = z[0] ** 2 - z[1:] @ z[1:]
        if abs(det) <= SINGULARITY_THRESHOLD * max(1.0, float(np.abs(z).max()) ** 2):
            raise SingularElement("complexified element is not invertible")
        return np.concatenate([[z[0]], -z[1:]]) / det
    sv = np.linalg.svd(z, compute_uv=False)
    if sv[-1] <= SINGULARITY_THRESHOLD * max(1.0, float(sv[0])):
        raise SingularElement("complexified element is not invertible")
    return np.asarray(np.linalg.inv(z), dtype=np.complex128)


def cayley(alg: JordanAlgebra, z: NDArray[np.complex128]) -> NDArray[np.complex128]:
    """p(z) = (z - ie)(z + ie)^{-1} on E_C.

    The two factors operator-commute, so the Jordan product of them is the
    ordinary product for matrix kinds.

    Raises:
        SingularElement: If z + ie is not invertible
    """
    z = np.asarray(z, dtype=np.complex128)
    if z.shape != alg.shape:
        raise AlgebraMismatch(f"element of shape {z.shape} does not belong to {alg.name}_C")
    ie = 1j * unit(alg)
    return np.asarray(_product(alg.kind, z - ie, _complex_inverse(alg, z + ie)), dtype=np.complex128)


# --- samplers ---------------------------------------------------------------

def random_element(alg: JordanAlgebra, rng: np.random.Generator, bound: float = 2.0) -> Element:
    return from_coords(alg, rng.uniform(-bound, bound, size=alg.dim))


def spin_frame(u: NDArray[np.float64]) -> tuple[Element, Element]:
    """Jordan frame c± = (1, ±u)/2 for a unit vector u."""
    return np.concatenate([[0.5], u / 2]), np.concatenate([[0.5], -u / 2])


def _random_frame(alg: JordanAlgebra, rng: np.random.Generator) -> NDArray[np.generic]:
    if alg.kind == AlgebraKind.HERM:
        return random_unitary(rng, alg.n)
    q, _ = np.linalg.qr(rng.normal(size=(alg.n, alg.n)))
    return q


def from_spectrum(alg: JordanAlgebra, eigenvalues: NDArray[np.float64], rng: np.random.Generator) -> Element:
    """Element with the given spectrum in a random Jordan frame."""
    eigenvalues = np.asarray(eigenvalues, dtype=np.float64)
    if eigenvalues.shape != (alg.rank,):
        raise AlgebraMismatch(f"{alg.name} has rank {alg.rank}, got {eigenvalues.size} eigenvalues")
    if alg.kind == AlgebraKind.SPIN:
        c_plus, c_minus = spin_frame(random_unit_vector(rng, alg.n - 1))
        return eigenvalues[0] * c_plus + eigenvalues[1] * c_minus
    q = _random_frame(alg, rng)
    return check_element(alg, q @ np.diag(eigenvalues) @ q.conj().T)


def random_cone_point(
    alg: JordanAlgebra,
    rng: np.random.Generator,
    spectrum_range: tuple[float, float] = SPECTRUM_RANGE,
) -> Element:
    """Point of E_+ with log-uniform spectrum in spectrum_range."""
    low, high = spectrum_range
    eigenvalues = np.exp(rng.uniform(math.log(low), math.log(high), size=alg.rank))
    return from_spectrum(alg, eigenvalues, rng)


def random_boundary_point(alg: JordanAlgebra, rng: np.random.Generator, floor: float = 1e-4) -> Element:
    """Near-boundary cone point: one eigenvalue at floor, the rest log-uniform."""
    eigenvalues = np.exp(rng.uniform(math.log(SPECTRUM_RANGE[0]), math.log(SPECTRUM_RANGE[1]), size=alg.rank))
    eigenvalues[rng.integers(alg.rank)] = floor
    return from_spectrum(alg, eigenvalues, rng)


def random_cone_automorphism(alg: JordanAlgebra, rng: np.random.Generator, spread: float = 0.5) -> RealMatrix:
    """Coordinate matrix of a random element of the identity component of Aut(E_+).

    Congruences x -> g x g^* for matrix kinds, positive multiples of
    orthochronous Lorentz transformations for the spin factor.
    """
    scale = math.exp(rng.uniform(-spread, spread))
    if alg.kind == AlgebraKind.SPIN:
        n = alg.n
        rotation = np.eye(n)
        if n > 2:
            q, _ = np.linalg.qr(rng.normal(size=(n - 1, n - 1)))
            if np.linalg.det(q) < 0:
                q[:, 0] = -q[:, 0]
            rotation[1:, 1:] = q
        phi = rng.uniform(-spread, spread)
        boost = np.eye(n)
        boost[:2, :2] = [[math.cosh(phi), math.sinh(phi)], [math.sinh(phi), math.cosh(phi)]]
        return np.asarray(scale * rotation @ boost, dtype=np.float64)
    g = np.eye(alg.n) + rng.uniform(-spread, spread, size=(alg.n, alg.n)) / alg.n
    if alg.kind == AlgebraKind.HERM:
        g = g + 1j * rng.uniform(-spread, spread, size=(alg.n, alg.n)) / alg.n
    return np.asarray(scale * linear_map_matrix(alg, lambda x: g @ x @ g.conj().T), dtype=np.float64)
