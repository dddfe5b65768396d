"""Standard subspaces of C^n and the three equivalent models.

A standard subspace V is a real subspace with V ∩ iV = {0} and V + iV = C^n.
It corresponds bijectively to a modular pair (Δ, J) (via the Tomita operator
S = J Δ^{1/2} with Fix(S) = V) and to a graded homomorphism γ from the
multiplicative group of nonzero reals into the unitary/antiunitary operators
(γ(e^t) = Δ^{-it/2π}, γ(-1) = J).

All functions are pure with no side effects.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy import linalg

from src.core.antilinear import (
    AntilinearMap,
    Conjugation,
    GradedOperator,
    ModularPair,
    check_modular_relation,
    conjugate_linear,
    polar_decompose_antilinear,
)
from src.core.errors import ModularRelationViolated, NotStandard
from src.core.linalg import (
    ComplexMatrix,
    as_complex,
    expm,
    positive_log,
    positive_power,
    real_fixed_space,
    real_projection,
    real_span_basis,
    realify_antilinear,
    relative_distance,
    subspace_gap as _projection_gap,
    to_complex,
    to_real,
)


STANDARDNESS_THRESHOLD = 1e-10


@dataclass(frozen=True, eq=False)
class StandardSubspace:
    """A standard subspace, stored by a real-orthonormal basis.

    Construct through make_standard(), which orthonormalizes and checks
    standardness.

    Attributes:
        basis: Complex n x n matrix whose columns real-span V
    """
    basis: ComplexMatrix

    @property
    def n(self) -> int:
        return int(self.basis.shape[0])


@dataclass(frozen=True, eq=False)
class GradedHom:
    """Graded homomorphism γ with γ(e^t) = exp(tA) and γ(-1) = J.

    Attributes:
        a: Skew-hermitian generator A
        j: Conjugation J
    """
    a: ComplexMatrix
    j: Conjugation

    @property
    def n(self) -> int:
        return int(self.a.shape[0])

    def at(self, r: float) -> GradedOperator:
        """Evaluate γ(r) as a unitary (r > 0) or antiunitary (r < 0) operator."""
        if r == 0:
            raise ValueError("γ is defined on nonzero reals only")
        flow = GradedOperator(expm(math.log(abs(r)) * self.a))
        if r > 0:
            return flow
        return GradedOperator(self.j.matrix, antilinear=True) @ flow


def standardness_measure(b: ComplexMatrix) -> float:
    """|det| of the column-normalized real matrix of (x, y) -> Bx + iBy; 0 if not square."""
    b = as_complex(b)
    n, k = b.shape
    if k != n:
        return 0.0
    real = np.hstack([to_real(b), to_real(1j * b)])
    norms = np.linalg.norm(real, axis=0)
    if np.any(norms == 0):
        return 0.0
    return float(abs(np.linalg.det(real / norms)))


def is_standard(b: ComplexMatrix, tol: float = STANDARDNESS_THRESHOLD) -> bool:
    """Decide whether the columns of b real-span a standard subspace of C^n.

    Pure function.

    Args:
        b: Complex n x k matrix
        tol: Threshold on the normalized real determinant

    Returns:
        True iff k = n, the columns are R-independent and span C^n over C
    """
    return standardness_measure(b) > tol


def make_standard(b: ComplexMatrix, tol: float = STANDARDNESS_THRESHOLD) -> StandardSubspace:
    """Validate and orthonormalize a basis matrix.

    Raises:
        NotStandard: If the columns do not span a standard subspace
    """
    b = as_complex(b)
    if not is_standard(b, tol):
        raise NotStandard(f"columns of the {b.shape[0]}x{b.shape[1]} matrix do not span a standard subspace")
    return StandardSubspace(real_span_basis(b))


def real_space(n: int) -> StandardSubspace:
    """R^n ⊂ C^n."""
    return StandardSubspace(np.eye(n, dtype=np.complex128))


def tomita_operator(v: StandardSubspace) -> AntilinearMap:
    """S(x + iy) = x - iy, with matrix B conj(B)^{-1}."""
    b = v.basis
    return AntilinearMap(as_complex(b @ np.linalg.inv(b.conj())))


def modular_objects(v: StandardSubspace, tol: float = 1e-9) -> ModularPair:
    """Modular pair (Δ_V, J_V) from the polar decomposition of the Tomita operator.

    Pure function.

    Args:
        v: Standard subspace
        tol: Involutivity tolerance for S

    Returns:
        ModularPair with S = J Δ^{1/2}

    Raises:
        NotStandard: If v is not standard
    """
    if not is_standard(v.basis):
        raise NotStandard("modular objects need a standard subspace")
    return polar_decompose_antilinear(tomita_operator(v), tol).modular_pair()


def standard_from_modular(pair: ModularPair, tol: float = 1e-8) -> StandardSubspace:
    """Φ(Δ, J) = Fix(J Δ^{1/2}).

    Pure function.

    Args:
        pair: Modular pair
        tol: Tolerance on the modular relation

    Returns:
        The standard subspace fixed by J Δ^{1/2}

    Raises:
        ModularRelationViolated: If JΔJ ≠ Δ^{-1} within tol
    """
    check_modular_relation(pair, tol)
    sqrt_delta = positive_power(pair.delta, 0.5)
    s = as_complex(pair.j.matrix @ sqrt_delta.conj())
    fixed = real_fixed_space(realify_antilinear(s), pair.dim)
    return make_standard(to_complex(fixed))


def graded_hom_of(pair: ModularPair, tol: float = 1e-8) -> GradedHom:
    """Ψ(Δ, J): A = -(i/2π) log Δ, so exp(tA) = Δ^{-it/2π} and Δ = exp(2πi A)."""
    check_modular_relation(pair, tol)
    a = -1j / (2 * math.pi) * positive_log(pair.delta)
    return GradedHom(as_complex((a - a.conj().T) / 2), pair.j)


def graded_hom_residual(gamma: GradedHom) -> float:
    """Residual of J A J = A."""
    return relative_distance(conjugate_linear(gamma.j, gamma.a), gamma.a)


def modular_of(gamma: GradedHom, tol: float = 1e-8) -> ModularPair:
    """Ψ^{-1}(γ): Δ = exp(2πi A), J = γ(-1).

    Raises:
        ModularRelationViolated: If J A J ≠ A within tol
    """
    residual = graded_hom_residual(gamma)
    if residual > tol:
        raise ModularRelationViolated(f"J A J differs from A by {residual:.3e}")
    delta = expm(2j * math.pi * gamma.a)
    return ModularPair(as_complex((delta + delta.conj().T) / 2), gamma.j)


def subspace_for_hom(gamma: GradedHom, tol: float = 1e-8) -> StandardSubspace:
    """𝒱 = Φ ∘ Ψ^{-1}."""
    return standard_from_modular(modular_of(gamma, tol), tol)


def subspace_gap(v1: StandardSubspace, v2: StandardSubspace) -> float:
    """Operator norm of the difference of real-orthogonal projections."""
    return _projection_gap(v1.basis, v2.basis)


def apply_operator(g: GradedOperator, v: StandardSubspace) -> StandardSubspace:
    """Image g V of a standard subspace under a unitary or antiunitary operator."""
    return make_standard(g(v.basis))


def symplectic_complement(v: StandardSubspace) -> StandardSubspace:
    """V' = i V^{⊥_R}, the complement for Im<.,.>.

    Raises:
        NotStandard: If v is not standard
    """
    if not is_standard(v.basis):
        raise NotStandard("symplectic complement needs a standard subspace")
    perp = linalg.null_space(to_real(v.basis).T)
    return make_standard(1j * to_complex(perp))


def is_lagrangian(v: StandardSubspace, tol: float = 1e-9) -> bool:
    """V = V' (equivalently Δ_V = 1)."""
    return subspace_gap(v, symplectic_complement(v)) <= tol


def theta_pair(pair: ModularPair) -> ModularPair:
    """Canonical involution on modular pairs: (Δ, J) -> (Δ^{-1}, J)."""
    return ModularPair(as_complex(np.linalg.inv(pair.delta)), pair.j)


def theta_hom(gamma: GradedHom) -> GradedHom:
    """Canonical involution on graded homomorphisms: γ^∨(r) = γ(r^{-1})."""
    return GradedHom(as_complex(-gamma.a), gamma.j)


def distance_to_subspace(x: ComplexMatrix, v: StandardSubspace) -> float:
    """Largest distance of the columns of x to the real span of V."""
    residual = to_real(x) - real_projection(v.basis) @ to_real(x)
    return float(np.linalg.norm(residual, axis=0).max())


def contained_in(v1: StandardSubspace, v2: StandardSubspace, tol: float = 1e-9) -> bool:
    """Sampled inclusion V1 ⊆ V2: every basis vector of V1 lies within tol of V2."""
    return distance_to_subspace(v1.basis, v2) <= tol
