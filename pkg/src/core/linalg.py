"""Shared numerical linear algebra - Pure functions.

Hermitian functional calculus, the real 2n-dimensional picture of C^n,
real-orthogonal projections and the gap metric between real subspaces.
All functions are pure with no side effects.
"""

import logging
from collections.abc import Callable

import numpy as np
from numpy.typing import NDArray
from scipy import linalg

from src.core.errors import DimensionMismatch, SingularOperator


logger = logging.getLogger(__name__)

ComplexMatrix = NDArray[np.complex128]
RealMatrix = NDArray[np.float64]

# Eigenvalues of a positive operator below this are treated as zero
EIGENVALUE_FLOOR = 1e-13


def as_complex(a: object) -> ComplexMatrix:
    """Coerce an array-like to a complex128 array."""
    return np.asarray(a, dtype=np.complex128)


def check_square(m: NDArray[np.generic], name: str = "matrix") -> int:
    """Return the size of a square matrix or raise DimensionMismatch."""
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"{name} must be square, got shape {m.shape}")
    return int(m.shape[0])


def hermitian_function(
    h: ComplexMatrix,
    fn: Callable[[NDArray[np.float64]], NDArray[np.complex128] | NDArray[np.float64]],
    positive: bool = False,
) -> ComplexMatrix:
    """Apply a scalar function to a hermitian matrix through its eigendecomposition.

    Pure function.

    Args:
        h: Hermitian matrix (symmetrized before the eigensolve)
        fn: Vectorized function applied to the eigenvalues
        positive: Require every eigenvalue above EIGENVALUE_FLOOR

    Returns:
        The matrix fn(h)

    Raises:
        SingularOperator: If positive is set and an eigenvalue had to be clamped
    """
    check_square(h, "hermitian operator")
    sym = (h + h.conj().T) / 2
    w, v = linalg.eigh(sym)
    if positive and w.min() < EIGENVALUE_FLOOR:
        logger.debug("Eigenvalue clamp triggered: min eigenvalue %.3e", w.min())
        raise SingularOperator(
            f"operator is not strictly positive (min eigenvalue {w.min():.3e})"
        )
    values = np.asarray(fn(w), dtype=np.complex128)
    return as_complex((v * values) @ v.conj().T)


def positive_power(h: ComplexMatrix, exponent: complex) -> ComplexMatrix:
    """Return h**exponent for a positive-definite hermitian h.

    Complex exponents give the modular unitaries, e.g. exponent = -it/2π.
    """
    return hermitian_function(h, lambda w: np.exp(exponent * np.log(w)), positive=True)


def positive_log(h: ComplexMatrix) -> ComplexMatrix:
    """Hermitian logarithm of a positive-definite matrix."""
    return hermitian_function(h, np.log, positive=True)


def expm(a: NDArray[np.generic]) -> ComplexMatrix:
    """Matrix exponential as a complex array."""
    return as_complex(linalg.expm(a))


def relative_distance(a: NDArray[np.generic], b: NDArray[np.generic]) -> float:
    """Frobenius distance scaled by max(1, |a|, |b|)."""
    scale = max(1.0, float(np.linalg.norm(a)), float(np.linalg.norm(b)))
    return float(np.linalg.norm(a - b)) / scale


# --- the real picture of C^n ---------------------------------------------

def to_real(b: ComplexMatrix) -> RealMatrix:
    """Stack real and imaginary parts: C^{n x k} -> R^{2n x k}."""
    b = as_complex(b)
    return np.vstack([b.real, b.imag])


def to_complex(r: RealMatrix) -> ComplexMatrix:
    """Inverse of to_real."""
    n = r.shape[0] // 2
    return as_complex(r[:n] + 1j * r[n:])


def realify_linear(m: ComplexMatrix) -> RealMatrix:
    """Real 2n x 2n matrix of z -> M z."""
    a, b = m.real, m.imag
    return np.block([[a, -b], [b, a]])


def realify_antilinear(m: ComplexMatrix) -> RealMatrix:
    """Real 2n x 2n matrix of z -> M conj(z)."""
    a, b = m.real, m.imag
    return np.block([[a, b], [b, -a]])


def real_span_basis(b: ComplexMatrix) -> ComplexMatrix:
    """Real-orthonormal basis (as complex columns) of the real span of b's columns."""
    q = linalg.orth(to_real(b))
    return to_complex(q)


def real_projection(b: ComplexMatrix) -> RealMatrix:
    """Real-orthogonal projection in R^{2n} onto the real span of b's columns."""
    q = linalg.orth(to_real(b))
    return np.asarray(q @ q.T, dtype=np.float64)


def subspace_gap(b1: ComplexMatrix, b2: ComplexMatrix) -> float:
    """Operator norm of the difference of the real-orthogonal projections.

    Pure function.

    Args:
        b1: Columns real-spanning the first subspace
        b2: Columns real-spanning the second subspace

    Returns:
        Gap in [0, 1]; zero iff the real spans agree
    """
    if b1.shape[0] != b2.shape[0]:
        raise DimensionMismatch(f"ambient dimensions differ: {b1.shape[0]} vs {b2.shape[0]}")
    return float(np.linalg.norm(real_projection(b1) - real_projection(b2), 2))


def real_fixed_space(t: RealMatrix, dim: int, tol: float = 1e-8) -> RealMatrix:
    """Fixed space of a real-linear involution, computed from the SVD of T - I.

    Pure function.

    Args:
        t: Real matrix of the involution
        dim: Expected dimension of the fixed space
        tol: Relative threshold on the singular values that must vanish

    Returns:
        Orthonormal columns spanning {x : T x = x}

    Raises:
        SingularOperator: If T - I does not have a kernel of the expected dimension
    """
    size = t.shape[0]
    _, s, vh = linalg.svd(t - np.eye(size))
    scale = max(1.0, float(s[0]))
    kernel = s[size - dim:]
    if kernel.size and kernel.max() > tol * scale:
        raise SingularOperator(
            f"fixed space has dimension < {dim} (singular value {kernel.max():.3e})"
        )
    return np.asarray(vh[size - dim:].T, dtype=np.float64)
