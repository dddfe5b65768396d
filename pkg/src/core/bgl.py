"""Antiunitary representations of graded groups and the BGL map γ -> V.

The graded group is G = AU(C^m) (unitary and antiunitary m x m operators,
ε = -1 on antiunitaries). It acts on H through a representation U:
- the defining representation U(g) = g,
- the tensor square U(g) = g ⊗ g (antiunitary M∘C ↦ (M⊗M)∘C),
with derived representations dU(X) = X and dU(X) = X⊗1 + 1⊗X.

A graded homomorphism into G is a pair (X, σ) with γ(e^t) = exp(tX) and
γ(-1) = σ. The BGL map sends it to Φ(exp(2πi dU(X)), U(σ)).
"""

import logging
import math
from dataclasses import dataclass
from typing import Protocol

import numpy as np
from scipy import linalg

from src.core.antilinear import (
    Conjugation,
    GradedOperator,
    ModularPair,
    check_modular_relation,
)
from src.core.errors import DimensionMismatch, ModularRelationViolated, NotInG1
from src.core.linalg import ComplexMatrix, as_complex, expm, relative_distance
from src.core.report import AxiomReport
from src.core.sampling import random_modular_pair, random_unitary
from src.core.stand_geometry import stand_bullet
from src.core.standard_subspace import (
    StandardSubspace,
    apply_operator,
    graded_hom_of,
    standard_from_modular,
    subspace_gap,
    symplectic_complement,
)


logger = logging.getLogger(__name__)


class GradedGroupRep(Protocol):
    """Antiunitary representation of AU(C^m) on C^dim."""

    m: int

    @property
    def dim(self) -> int: ...

    @property
    def name(self) -> str: ...

    def __call__(self, g: GradedOperator) -> GradedOperator: ...

    def differential(self, x: ComplexMatrix) -> ComplexMatrix: ...


def epsilon(g: GradedOperator) -> int:
    """Grading of a group element: -1 exactly for antiunitaries."""
    return g.grading


@dataclass(frozen=True)
class DefiningRep:
    """U(g) = g on C^m."""

    m: int

    @property
    def dim(self) -> int:
        return self.m

    @property
    def name(self) -> str:
        return f"defining AU({self.m})"

    def __call__(self, g: GradedOperator) -> GradedOperator:
        _check_size(g, self.m)
        return g

    def differential(self, x: ComplexMatrix) -> ComplexMatrix:
        return as_complex(x)


@dataclass(frozen=True)
class TensorSquareRep:
    """U(g) = g ⊗ g on C^m ⊗ C^m."""

    m: int

    @property
    def dim(self) -> int:
        return self.m * self.m

    @property
    def name(self) -> str:
        return f"tensor-square AU({self.m})"

    def __call__(self, g: GradedOperator) -> GradedOperator:
        _check_size(g, self.m)
        return GradedOperator(as_complex(np.kron(g.matrix, g.matrix)), g.antilinear)

    def differential(self, x: ComplexMatrix) -> ComplexMatrix:
        eye = np.eye(self.m)
        return as_complex(np.kron(x, eye) + np.kron(eye, x))


def _check_size(g: GradedOperator, m: int) -> None:
    if g.matrix.shape != (m, m):
        raise DimensionMismatch(f"group element of shape {g.matrix.shape} for AU({m})")


@dataclass(frozen=True, eq=False)
class GradedHomIntoG:
    """γ(e^t) = exp(tX), γ(-1) = σ with σ² = 1 and σ X σ^{-1} = X.

    Attributes:
        x: Skew-hermitian generator
        sigma: Antiunitary involution
    """
    x: ComplexMatrix
    sigma: GradedOperator

    def at(self, r: float) -> GradedOperator:
        if r == 0:
            raise ValueError("γ is defined on nonzero reals only")
        flow = GradedOperator(expm(math.log(abs(r)) * self.x))
        return self.sigma @ flow if r < 0 else flow


def make_graded_hom_into(x: ComplexMatrix, sigma: GradedOperator, tol: float = 1e-9) -> GradedHomIntoG:
    """Validate (X, σ) as a graded homomorphism into AU(C^m).

    Raises:
        ModularRelationViolated: If σ is not an antiunitary involution commuting with exp(tX)
    """
    x = as_complex(x)
    if not sigma.antilinear:
        raise ModularRelationViolated("γ(-1) must be antiunitary")
    n = x.shape[0]
    square = sigma @ sigma
    if relative_distance(square.matrix, np.eye(n)) > tol:
        raise ModularRelationViolated("γ(-1) is not an involution")
    if relative_distance(sigma.conjugate(x), x) > tol:
        raise ModularRelationViolated("γ(-1) does not commute with the one-parameter group")
    return GradedHomIntoG(x, sigma)


def random_graded_hom_into(rng: np.random.Generator, m: int) -> GradedHomIntoG:
    """(X, σ) from a random modular pair on C^m."""
    gamma = graded_hom_of(random_modular_pair(rng, m))
    return GradedHomIntoG(gamma.a, GradedOperator(gamma.j.matrix, antilinear=True))


def random_group_element(rng: np.random.Generator, m: int, odd: bool = False) -> GradedOperator:
    return GradedOperator(random_unitary(rng, m), antilinear=odd)


def conjugate_hom(gamma: GradedHomIntoG, g: GradedOperator) -> GradedHomIntoG:
    """γ^g(r) = g γ(r) g^{-1}."""
    return GradedHomIntoG(g.conjugate(gamma.x), g @ gamma.sigma @ g.inverse())


def graded_hom_bullet(gamma: GradedHomIntoG, r: float, eta: GradedHomIntoG) -> GradedHomIntoG:
    """(γ •_r η)(s) = γ(r) η(s) γ(r)^{-1} in Hom_gr(R^×, G)."""
    return conjugate_hom(eta, gamma.at(r))


def modular_pair_of(rep: GradedGroupRep, gamma: GradedHomIntoG) -> ModularPair:
    """(Δ, J) = (exp(2πi dU(X)), U(σ))."""
    delta = expm(2j * math.pi * rep.differential(gamma.x))
    return ModularPair(as_complex((delta + delta.conj().T) / 2), Conjugation(rep(gamma.sigma).matrix))


def bgl_map(rep: GradedGroupRep, gamma: GradedHomIntoG, tol: float = 1e-8) -> StandardSubspace:
    """BGL map 𝒱_U(γ) = Φ(exp(2πi dU(X)), U(γ(-1))).

    Pure function.

    Args:
        rep: Antiunitary representation
        gamma: Graded homomorphism into the group
        tol: Tolerance on JΔJ = Δ^{-1}

    Returns:
        Standard subspace of C^dim

    Raises:
        ModularRelationViolated: If the image pair is not modular
    """
    pair = modular_pair_of(rep, gamma)
    check_modular_relation(pair, tol)
    return standard_from_modular(pair, tol)


def equivariance_target(rep: GradedGroupRep, gamma: GradedHomIntoG, g: GradedOperator) -> StandardSubspace:
    """U_g V for even g, U_g V' for odd g, the image of γ^g under 𝒱_U."""
    v = bgl_map(rep, gamma)
    return apply_operator(rep(g), v if epsilon(g) == 1 else symplectic_complement(v))


def bgl_equivariance_check(
    rep: GradedGroupRep,
    gamma: GradedHomIntoG,
    g: GradedOperator,
    tol: float = 1e-8,
) -> AxiomReport:
    """gap(𝒱_U(γ^g), U_g 𝒱_U(γ)^{(')}) ≤ tol, with the complement taken for odd g."""
    failures: list[str] = []
    gap = 0.0
    try:
        gap = subspace_gap(bgl_map(rep, conjugate_hom(gamma, g)), equivariance_target(rep, gamma, g))
    except (ModularRelationViolated, DimensionMismatch) as e:
        failures.append(f"{type(e).__name__}: {e}")
    return AxiomReport.build(
        law=f"bgl-equivariance[{rep.name}, ε={epsilon(g)}]",
        samples=1,
        residuals={"gap": gap},
        tol=tol,
        failures=failures,
    )


def semigroup_membership(rep: GradedGroupRep, g: GradedOperator, v: StandardSubspace, tol: float = 1e-8) -> bool:
    """g ∈ S_V, i.e. U_g V ⊆ V; in finite dimension inclusion means equality.

    Raises:
        NotInG1: If g is antiunitary
    """
    if epsilon(g) != 1:
        raise NotInG1("semigroup membership is defined on the even part of the group")
    return subspace_gap(apply_operator(rep(g), v), v) <= tol


def is_positive_energy(rep: GradedGroupRep, x: ComplexMatrix, tol: float = 1e-10) -> bool:
    """-i dU(X) ≥ 0 up to tol."""
    h = -1j * rep.differential(as_complex(x))
    return bool(np.linalg.eigvalsh((h + h.conj().T) / 2).min() >= -tol)


def differential_from_images(rep: GradedGroupRep, gamma: GradedHomIntoG) -> ComplexMatrix:
    """dU(X) recovered as the principal logarithm of U(γ(e))."""
    image = rep(gamma.at(math.e)).matrix
    return as_complex(linalg.logm(image))


def bgl_bullet_residual(rep: GradedGroupRep, gamma: GradedHomIntoG, r: float, eta: GradedHomIntoG) -> float:
    """gap(𝒱_U(γ •_r η), 𝒱_U(γ) •_r 𝒱_U(η))."""
    lhs = bgl_map(rep, graded_hom_bullet(gamma, r, eta))
    rhs = stand_bullet(bgl_map(rep, gamma), r, bgl_map(rep, eta))
    return subspace_gap(lhs, rhs)
