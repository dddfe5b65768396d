"""Antilinear operators on C^n - Pure functions.

An antilinear map is stored as a complex matrix M acting by z -> M conj(z).
In this convention:
- the adjoint has matrix transpose(M)
- the composition A1 o A2 is the linear map with matrix M1 conj(M2)
- a conjugation is an antilinear map with M unitary and M conj(M) = I

The polar decomposition S = J Δ^{1/2} of an involutive antilinear S produces
the modular pair (Δ, J).
"""

from dataclasses import dataclass

import numpy as np

from src.core.errors import (
    DimensionMismatch,
    ModularRelationViolated,
    NotConjugation,
    SingularOperator,
)
from src.core.linalg import (
    ComplexMatrix,
    as_complex,
    check_square,
    positive_power,
    relative_distance,
)


@dataclass(frozen=True, eq=False)
class AntilinearMap:
    """Antilinear operator z -> M conj(z).

    Attributes:
        matrix: The complex n x n matrix M
    """
    matrix: ComplexMatrix

    @property
    def dim(self) -> int:
        """Dimension n of the underlying space."""
        return int(self.matrix.shape[0])

    def __call__(self, v: ComplexMatrix) -> ComplexMatrix:
        return antilinear_apply(self, v)


@dataclass(frozen=True, eq=False)
class Conjugation(AntilinearMap):
    """Antiunitary involution; construct through make_conjugation()."""


@dataclass(frozen=True, eq=False)
class ModularPair:
    """A positive operator Δ with a conjugation J.

    The modular relation JΔJ = Δ^{-1} is checked by check_modular_relation(),
    not on construction, so that violating pairs can be represented and
    rejected by the operations that need the relation.

    Attributes:
        delta: Hermitian positive-definite matrix Δ
        j: Conjugation J
    """
    delta: ComplexMatrix
    j: Conjugation

    @property
    def dim(self) -> int:
        return int(self.delta.shape[0])


@dataclass(frozen=True, eq=False)
class PolarDecomposition:
    """Result of polar_decompose_antilinear().

    Attributes:
        delta: S*S
        sqrt_delta: Δ^{1/2}
        j: Antiunitary part S Δ^{-1/2}
        involutive: Whether S² = id within tolerance (J is then a conjugation)
        residual: Reconstruction residual of S against J Δ^{1/2}
    """
    delta: ComplexMatrix
    sqrt_delta: ComplexMatrix
    j: AntilinearMap
    involutive: bool
    residual: float

    def modular_pair(self) -> ModularPair:
        """Return (Δ, J) as a modular pair; only valid for involutive S."""
        if not self.involutive:
            raise ModularRelationViolated("S is not involutive, J is not a conjugation")
        return ModularPair(self.delta, Conjugation(self.j.matrix))


@dataclass(frozen=True, eq=False)
class GradedOperator:
    """A unitary or antiunitary operator, tagged by its grading.

    Attributes:
        matrix: Complex matrix M
        antilinear: If True the operator is z -> M conj(z), else z -> M z
    """
    matrix: ComplexMatrix
    antilinear: bool = False

    @property
    def grading(self) -> int:
        """+1 for linear, -1 for antilinear operators."""
        return -1 if self.antilinear else 1

    def __call__(self, v: ComplexMatrix) -> ComplexMatrix:
        v = as_complex(v)
        return as_complex(self.matrix @ (v.conj() if self.antilinear else v))

    def __matmul__(self, other: "GradedOperator") -> "GradedOperator":
        right = other.matrix.conj() if self.antilinear else other.matrix
        return GradedOperator(
            as_complex(self.matrix @ right),
            self.antilinear != other.antilinear,
        )

    def inverse(self) -> "GradedOperator":
        inv = np.linalg.inv(self.matrix)
        return GradedOperator(as_complex(inv.conj() if self.antilinear else inv), self.antilinear)

    def conjugate(self, x: ComplexMatrix) -> ComplexMatrix:
        """Return the linear operator g x g^{-1}."""
        inner = x.conj() if self.antilinear else x
        return as_complex(self.matrix @ inner @ np.linalg.inv(self.matrix))


def identity_operator(n: int) -> GradedOperator:
    return GradedOperator(np.eye(n, dtype=np.complex128))


def antilinear_apply(a: AntilinearMap, v: ComplexMatrix) -> ComplexMatrix:
    """Apply an antilinear map to a vector or to the columns of a matrix.

    Pure function.

    Args:
        a: The antilinear map
        v: Vector of length n or n x k matrix

    Returns:
        M conj(v)

    Raises:
        DimensionMismatch: If v does not live in C^n
    """
    v = as_complex(v)
    if v.shape[0] != a.dim:
        raise DimensionMismatch(f"vector of length {v.shape[0]} for operator on C^{a.dim}")
    return as_complex(a.matrix @ v.conj())


def antilinear_adjoint(a: AntilinearMap) -> AntilinearMap:
    """Adjoint of an antilinear map: <A*x, y> = conj(<x, Ay>), matrix transpose(M)."""
    return AntilinearMap(as_complex(a.matrix.T))


def antilinear_compose(a: AntilinearMap, b: AntilinearMap) -> ComplexMatrix:
    """Matrix of the linear map a o b."""
    if a.dim != b.dim:
        raise DimensionMismatch(f"cannot compose operators on C^{a.dim} and C^{b.dim}")
    return as_complex(a.matrix @ b.matrix.conj())


def conjugate_linear(j: AntilinearMap, x: ComplexMatrix) -> ComplexMatrix:
    """Matrix of the linear map J o X o J^{-1} for an antilinear J."""
    return as_complex(j.matrix @ x.conj() @ np.linalg.inv(j.matrix))


def is_conjugation(m: ComplexMatrix, tol: float = 1e-9) -> bool:
    """Check M unitary and M conj(M) = I."""
    n = check_square(m)
    eye = np.eye(n)
    return (
        relative_distance(m.conj().T @ m, eye) <= tol
        and relative_distance(m @ m.conj(), eye) <= tol
    )


def make_conjugation(m: ComplexMatrix, tol: float = 1e-9) -> Conjugation:
    """Validate and wrap a conjugation matrix.

    Raises:
        NotConjugation: If M is not unitary with M conj(M) = I
    """
    m = as_complex(m)
    if not is_conjugation(m, tol):
        raise NotConjugation("matrix is not a unitary involutive antilinear operator")
    return Conjugation(m)


def standard_conjugation(n: int) -> Conjugation:
    """Entrywise complex conjugation on C^n."""
    return Conjugation(np.eye(n, dtype=np.complex128))


def modular_residual(pair: ModularPair) -> float:
    """Relative residual of JΔJ = Δ^{-1}, i.e. M_J conj(Δ) conj(M_J) against Δ^{-1}."""
    lhs = conjugate_linear(pair.j, pair.delta)
    return relative_distance(lhs, np.linalg.inv(pair.delta))


def check_modular_relation(pair: ModularPair, tol: float = 1e-8) -> None:
    """Raise ModularRelationViolated unless JΔJ = Δ^{-1} within tol."""
    residual = modular_residual(pair)
    if residual > tol:
        raise ModularRelationViolated(f"JΔJ differs from Δ^(-1) by {residual:.3e}")


def modular_unitary(pair: ModularPair, t: float) -> ComplexMatrix:
    """Δ^{it}."""
    return positive_power(pair.delta, 1j * t)


def polar_decompose_antilinear(s: AntilinearMap, tol: float = 1e-9) -> PolarDecomposition:
    """Polar decomposition S = J Δ^{1/2} of an invertible antilinear operator.

    Pure function.

    Args:
        s: Antilinear operator with invertible matrix
        tol: Tolerance for the involutivity flag

    Returns:
        PolarDecomposition with Δ = S*S and J = S Δ^{-1/2}

    Raises:
        SingularOperator: If the matrix of S is not invertible
    """
    n = check_square(s.matrix, "antilinear operator")
    singular_values = np.linalg.svd(s.matrix, compute_uv=False)
    if singular_values[-1] <= 1e-13 * max(1.0, float(singular_values[0])):
        raise SingularOperator("antilinear operator is not invertible")

    delta = antilinear_compose(antilinear_adjoint(s), s)
    sqrt_delta = positive_power(delta, 0.5)
    inv_sqrt_delta = positive_power(delta, -0.5)
    j = AntilinearMap(as_complex(s.matrix @ inv_sqrt_delta.conj()))

    # J Δ^{1/2} as an antilinear map has matrix M_J conj(Δ^{1/2})
    residual = relative_distance(j.matrix @ sqrt_delta.conj(), s.matrix)

    square = antilinear_compose(s, s)
    involutive = relative_distance(square, np.eye(n)) <= tol
    return PolarDecomposition(delta, sqrt_delta, j, involutive, residual)
