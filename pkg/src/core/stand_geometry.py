"""Dilation-space geometry of standard subspaces.

The three equivalent models carry compatible dilation structures:
    Hom:   (γ •_r η)(s) = γ(r) η(s) γ(r)^{-1}
    Mod:   (Δ1, J1) •_{-1} (Δ2, J2) = (J1 Δ2^{-1} J1, J1 J2 J1),
           (Δ1, J1) •_{e^t} (Δ2, J2) = conjugation of (Δ2, J2) by Δ1^{-it/2π}
    Stand: V1 •_{-1} V2 = J1 J2 V2,  V1 •_{e^t} V2 = Δ1^{-it/2π} V2
This module also holds the ♯ product on U(n)-translates of R^n, the Loos
normal form on a fiber Stand_J, geodesics t -> U_{t/2} V and the
representations of G_α = R ⋊ R^× built from dilation-invariant geodesics.
"""

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Protocol

import numpy as np
from scipy import optimize

from src.core.antilinear import (
    Conjugation,
    GradedOperator,
    ModularPair,
    check_modular_relation,
    conjugate_linear,
    modular_unitary,
)
from src.core.errors import (
    InvertibilityConstraintViolated,
    NotDilationInvariant,
    NotSkew,
)
from src.core.linalg import (
    ComplexMatrix,
    RealMatrix,
    as_complex,
    expm,
    positive_log,
    real_fixed_space,
    realify_antilinear,
    relative_distance,
    to_complex,
)
from src.core.reflection import PointSpace
from src.core.sampling import random_basis, random_modular_pair
from src.core.standard_subspace import (
    GradedHom,
    StandardSubspace,
    apply_operator,
    graded_hom_of,
    make_standard,
    modular_objects,
    standard_from_modular,
    subspace_gap,
    symplectic_complement,
    theta_hom,
    theta_pair,
)


logger = logging.getLogger(__name__)

DILATION_TOLERANCE = 1e-6
DEFAULT_S_GRID = (-1.0, -0.5, 0.5, 1.0)
DEFAULT_T_GRID = (-1.0, -0.3, 0.4, 1.0)


def _hom_value(pair: ModularPair, r: float) -> GradedOperator:
    """γ(r) for γ = Ψ(Δ, J)."""
    return graded_hom_of(pair).at(r)


def _conjugation_operator(j: Conjugation) -> GradedOperator:
    return GradedOperator(j.matrix, antilinear=True)


def stand_bullet(v1: StandardSubspace, r: float, v2: StandardSubspace) -> StandardSubspace:
    """V1 •_r V2 on Stand(C^n).

    Pure function.

    Args:
        v1: Center of the dilation
        r: Nonzero real; r = -1 is the point reflection
        v2: Moved subspace

    Returns:
        Δ1^{-it/2π} V2 for r = e^t, and Δ1^{-it/2π} J1 J2 V2 for r = -e^t

    Raises:
        NotStandard: If either argument is not standard
        ValueError: If r = 0
    """
    if r == 0:
        raise ValueError("dilation parameter must be nonzero")
    g = _hom_value(modular_objects(v1), r)
    # J2 V2 = V2', so the reflection part is J1 V2'
    target = symplectic_complement(v2) if r < 0 else v2
    return apply_operator(g, target)


def mod_bullet(p1: ModularPair, r: float, p2: ModularPair) -> ModularPair:
    """(Δ1, J1) •_r (Δ2, J2) on Mod(C^n).

    Conjugation by the antiunitary γ1(r), r < 0, also inverts Δ2.

    Raises:
        ModularRelationViolated: If either pair violates JΔJ = Δ^{-1}
    """
    if r == 0:
        raise ValueError("dilation parameter must be nonzero")
    g = _hom_value(p1, r)
    check_modular_relation(p2)
    delta = p2.delta if not g.antilinear else np.linalg.inv(p2.delta)
    new_delta = g.conjugate(delta)
    j = g @ _conjugation_operator(p2.j) @ g.inverse()
    return ModularPair(as_complex((new_delta + new_delta.conj().T) / 2), Conjugation(j.matrix))


def hom_bullet(gamma: GradedHom, r: float, eta: GradedHom) -> GradedHom:
    """(γ •_r η)(s) = γ(r) η(s) γ(r)^{-1}, in generator coordinates.

    Raises:
        ValueError: If r = 0
    """
    g = gamma.at(r)
    a = g.conjugate(eta.a)
    j = g @ _conjugation_operator(eta.j) @ g.inverse()
    return GradedHom(as_complex((a - a.conj().T) / 2), Conjugation(j.matrix))


def canonical_involution(v: StandardSubspace) -> StandardSubspace:
    """V -> V'; corresponds to (Δ, J) -> (Δ^{-1}, J) and γ -> γ^∨."""
    return symplectic_complement(v)


# --- the three models as dilation spaces ------------------------------------

def _pair_distance(p: ModularPair, q: ModularPair) -> float:
    return max(relative_distance(p.delta, q.delta), relative_distance(p.j.matrix, q.j.matrix))


def _hom_distance(g: GradedHom, h: GradedHom) -> float:
    return max(relative_distance(g.a, h.a), relative_distance(g.j.matrix, h.j.matrix))


class StandSpace(PointSpace[StandardSubspace]):
    """Stand(C^n) with the bullet above; distance is the projection gap."""

    has_dilation = True

    def __init__(self, n: int) -> None:
        self.n = n
        self.name = f"Stand(C{n})"

    def product(self, x: StandardSubspace, y: StandardSubspace) -> StandardSubspace:
        return stand_bullet(x, -1.0, y)

    def dilation(self, x: StandardSubspace, r: float, y: StandardSubspace) -> StandardSubspace:
        return stand_bullet(x, r, y)

    def distance(self, x: StandardSubspace, y: StandardSubspace) -> float:
        return subspace_gap(x, y)

    def sample(self, rng: np.random.Generator) -> StandardSubspace:
        return make_standard(random_basis(rng, self.n))


class ModSpace(PointSpace[ModularPair]):
    """Mod(C^n) with the case formulas of mod_bullet()."""

    has_dilation = True

    def __init__(self, n: int) -> None:
        self.n = n
        self.name = f"Mod(C{n})"

    def product(self, x: ModularPair, y: ModularPair) -> ModularPair:
        return mod_bullet(x, -1.0, y)

    def dilation(self, x: ModularPair, r: float, y: ModularPair) -> ModularPair:
        return mod_bullet(x, r, y)

    def distance(self, x: ModularPair, y: ModularPair) -> float:
        return _pair_distance(x, y)

    def sample(self, rng: np.random.Generator) -> ModularPair:
        return random_modular_pair(rng, self.n)


class GradedHomSpace(PointSpace[GradedHom]):
    """Hom_gr(R^×, AU(C^n)) with pointwise conjugation."""

    has_dilation = True

    def __init__(self, n: int) -> None:
        self.n = n
        self.name = f"Hom_gr(R^x, AU(C{n}))"

    def product(self, x: GradedHom, y: GradedHom) -> GradedHom:
        return hom_bullet(x, -1.0, y)

    def dilation(self, x: GradedHom, r: float, y: GradedHom) -> GradedHom:
        return hom_bullet(x, r, y)

    def distance(self, x: GradedHom, y: GradedHom) -> float:
        return _hom_distance(x, y)

    def sample(self, rng: np.random.Generator) -> GradedHom:
        return graded_hom_of(random_modular_pair(rng, self.n))


def intertwining_residuals(p1: ModularPair, r: float, p2: ModularPair) -> dict[str, float]:
    """Residuals of Φ and Ψ as morphisms for •_r at (p1, p2).

    Returns:
        {"phi": gap(Φ(P1 •_r P2), Φ(P1) •_r Φ(P2)),
         "psi": dist(Ψ(P1 •_r P2), Ψ(P1) •_r Ψ(P2))}
    """
    moved = mod_bullet(p1, r, p2)
    via_stand = stand_bullet(standard_from_modular(p1), r, standard_from_modular(p2))
    via_hom = hom_bullet(graded_hom_of(p1), r, graded_hom_of(p2))
    return {
        "phi": subspace_gap(standard_from_modular(moved), via_stand),
        "psi": _hom_distance(graded_hom_of(moved), via_hom),
    }


def theta_residuals(p1: ModularPair, r: float, p2: ModularPair) -> dict[str, float]:
    """Compatibility of the canonical involution with •_r in all three models."""
    v1, v2 = standard_from_modular(p1), standard_from_modular(p2)
    g1, g2 = graded_hom_of(p1), graded_hom_of(p2)
    return {
        "stand": subspace_gap(
            canonical_involution(stand_bullet(v1, r, v2)),
            stand_bullet(v1, r, canonical_involution(v2)),
        ),
        "mod": _pair_distance(theta_pair(mod_bullet(p1, r, p2)), mod_bullet(p1, r, theta_pair(p2))),
        "hom": _hom_distance(theta_hom(hom_bullet(g1, r, g2)), hom_bullet(g1, r, theta_hom(g2))),
    }


# --- the ♯ product ----------------------------------------------------------

def sharp(g: ComplexMatrix, h: ComplexMatrix) -> StandardSubspace:
    """g conj(g)^{-1} conj(h) R^n for invertible g, h.

    Pure function.

    Args:
        g: Invertible matrix (unitary in the reflection-space setting)
        h: Invertible matrix

    Returns:
        The standard subspace spanned by the columns of g conj(g)^{-1} conj(h)
    """
    g, h = as_complex(g), as_complex(h)
    return make_standard(g @ np.linalg.solve(g.conj(), h.conj()))


def sharp_subspaces(v1: StandardSubspace, v2: StandardSubspace) -> StandardSubspace:
    """♯ on subspaces, using their bases as GL_n(C) representatives."""
    return sharp(v1.basis, v2.basis)


# --- Loos normal form -------------------------------------------------------

def fixed_frame(j: Conjugation) -> ComplexMatrix:
    """Orthonormal basis of the real form Fix(J)."""
    fixed = real_fixed_space(realify_antilinear(j.matrix), j.dim)
    q, _ = np.linalg.qr(to_complex(fixed))
    return as_complex(q)


def loos_generator(v: StandardSubspace, tol: float = 1e-8) -> RealMatrix:
    """A = i log Δ_V, expressed in a J_V-fixed orthonormal frame.

    Pure function.

    Args:
        v: Standard subspace
        tol: Tolerance on the imaginary part of the frame coordinates

    Returns:
        Real skew-symmetric matrix K with A = Q K Q^H

    Raises:
        NotStandard: If v is not standard
        NotSkew: If the coordinates fail to be real skew within tol
    """
    pair = modular_objects(v)
    a = 1j * positive_log(pair.delta)
    q = fixed_frame(pair.j)
    k = q.conj().T @ a @ q
    residual = max(float(np.abs(k.imag).max()), relative_distance(k.real, -k.real.T))
    if residual > tol:
        raise NotSkew(f"frame coordinates of i log Δ are not real skew ({residual:.3e})")
    return np.asarray((k.real - k.real.T) / 2, dtype=np.float64)


def loos_standard(j: Conjugation, k: RealMatrix, tol: float = 1e-10) -> StandardSubspace:
    """Inverse of loos_generator: Δ = exp(-iA), A = Q K Q^H, then Φ(Δ, J).

    Raises:
        NotSkew: If k is not skew-symmetric
    """
    k = np.asarray(k, dtype=np.float64)
    if relative_distance(k, -k.T) > tol:
        raise NotSkew("generator on Fix(J) must be skew-symmetric")
    q = fixed_frame(j)
    a = q @ k @ q.conj().T
    delta = expm(-1j * a)
    return standard_from_modular(ModularPair(as_complex((delta + delta.conj().T) / 2), j))


def loos_product(j: Conjugation, g1: ComplexMatrix, v1: StandardSubspace, g2: ComplexMatrix, v2: StandardSubspace) -> StandardSubspace:
    """g1 τ(g1^{-1} g2) V2 with τ(g) = J g J, the normal form of g1V1 • g2V2 on Stand_J."""
    g = np.linalg.solve(g1, g2)
    tau = conjugate_linear(j, g)
    return apply_operator(GradedOperator(as_complex(g1 @ tau)), v2)


# --- geodesics --------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class StandGeodesic:
    """γ(t) = U_{t/2} V with U_t = exp(itH) and J_V U_t J_V = U_{-t}.

    Attributes:
        base: γ(0)
        h: Hermitian generator H
        j: Conjugation J_V of the base
    """
    base: StandardSubspace
    h: ComplexMatrix
    j: Conjugation

    def unitary(self, t: float) -> ComplexMatrix:
        return expm(1j * t * self.h)

    def at(self, t: float) -> StandardSubspace:
        return apply_operator(GradedOperator(self.unitary(t / 2)), self.base)

    def __call__(self, t: float) -> StandardSubspace:
        return self.at(t)

    def conjugation_residual(self, t: float) -> float:
        """Residual of J_{γ(t)} = U_t J_V."""
        j_t = modular_objects(self.at(t)).j
        return relative_distance(j_t.matrix, self.unitary(t) @ self.j.matrix)


def invertibility_residual(j: Conjugation, h: ComplexMatrix, ts: Sequence[float]) -> float:
    """max_t ||J exp(itH) J - exp(-itH)||."""
    return max(
        (relative_distance(conjugate_linear(j, expm(1j * t * h)), expm(-1j * t * h)) for t in ts),
        default=0.0,
    )


def geodesic_standard(
    v: StandardSubspace,
    h: ComplexMatrix,
    ts: Sequence[float] = DEFAULT_T_GRID,
    tol: float = 1e-9,
) -> StandGeodesic:
    """Build the geodesic t -> exp(i t/2 H) V.

    Pure function.

    Args:
        v: Base point
        h: Hermitian generator
        ts: Sample parameters for the invertibility constraint
        tol: Tolerance on the constraint

    Returns:
        StandGeodesic with base v

    Raises:
        InvertibilityConstraintViolated: If J_V U_t J_V ≠ U_{-t} on some sample
        NotStandard: If v is not standard
    """
    h = as_complex(h)
    j = modular_objects(v).j
    residual = invertibility_residual(j, h, ts)
    if residual > tol:
        raise InvertibilityConstraintViolated(f"J U_t J differs from U_(-t) by {residual:.3e}")
    return StandGeodesic(v, as_complex((h + h.conj().T) / 2), j)


# --- dilation-invariant geodesics and G_α -----------------------------------

class DilationBackend(Protocol):
    """Operators U_b, W_s, J on some vector model, plus the generator of U."""

    def translate(self, b: float, f: np.ndarray) -> np.ndarray: ...

    def dilate(self, s: float, f: np.ndarray) -> np.ndarray: ...

    def conjugate(self, f: np.ndarray) -> np.ndarray: ...

    def generator(self, f: np.ndarray) -> np.ndarray: ...

    def norm(self, f: np.ndarray) -> float: ...

    def inner(self, f: np.ndarray, g: np.ndarray) -> complex: ...

    def probes(self) -> list[np.ndarray]: ...


@dataclass(frozen=True, eq=False)
class MatrixBackend:
    """U_b = exp(ibH), W_s = Δ^{-is/2π} and J on C^n."""

    h: ComplexMatrix
    pair: ModularPair
    probe_vectors: list[ComplexMatrix] = field(default_factory=list)

    @classmethod
    def from_geodesic(cls, gamma: StandGeodesic) -> "MatrixBackend":
        pair = modular_objects(gamma.base)
        n = gamma.base.n
        probes = [as_complex(np.eye(n)[:, k]) for k in range(n)] + [as_complex(np.ones(n) / math.sqrt(n))]
        return cls(gamma.h, pair, probes)

    def translate(self, b: float, f: np.ndarray) -> np.ndarray:
        return expm(1j * b * self.h) @ f

    def dilate(self, s: float, f: np.ndarray) -> np.ndarray:
        return modular_unitary(self.pair, -s / (2 * math.pi)) @ f

    def conjugate(self, f: np.ndarray) -> np.ndarray:
        return as_complex(self.pair.j.matrix @ np.conj(f))

    def generator(self, f: np.ndarray) -> np.ndarray:
        return self.h @ f

    def norm(self, f: np.ndarray) -> float:
        return float(np.linalg.norm(f))

    def inner(self, f: np.ndarray, g: np.ndarray) -> complex:
        return complex(np.vdot(f, g))

    def probes(self) -> list[np.ndarray]:
        return list(self.probe_vectors)


def fit_dilation_exponent(backend: DilationBackend, s_grid: Sequence[float] = DEFAULT_S_GRID) -> float:
    """Least-squares α in W_s H W_{-s} = e^{αs} H over the s grid and probes.

    Uses log-ratios c_s = <Hf, W_s H W_{-s} f>/||Hf||² when they are all
    positive, and a bounded scalar minimization of the operator residual otherwise.
    """
    ratios: list[tuple[float, float]] = []
    pairs: list[tuple[float, np.ndarray, np.ndarray]] = []
    for f in backend.probes():
        hf = backend.generator(f)
        scale = backend.norm(hf) ** 2
        if scale <= 1e-24:
            continue
        for s in s_grid:
            moved = backend.dilate(s, backend.generator(backend.dilate(-s, f)))
            pairs.append((s, hf, moved))
            ratios.append((s, backend.inner(hf, moved).real / scale))

    if not ratios:
        return 0.0
    if all(c > 0 for _, c in ratios):
        num = sum(s * math.log(c) for s, c in ratios)
        den = sum(s * s for s, _ in ratios)
        return num / den

    def cost(alpha: float) -> float:
        return sum(backend.norm(moved - math.exp(alpha * s) * hf) ** 2 for s, hf, moved in pairs)

    result = optimize.minimize_scalar(cost, bounds=(-10.0, 10.0), method="bounded")
    return float(result.x)


def commutation_residual(
    backend: DilationBackend,
    alpha: float,
    s_grid: Sequence[float] = DEFAULT_S_GRID,
    t_grid: Sequence[float] = DEFAULT_T_GRID,
) -> float:
    """max ||W_s U_t W_{-s} f - U_{e^{αs} t} f|| / ||f|| over grids and probes."""
    worst = 0.0
    for f in backend.probes():
        scale = max(backend.norm(f), 1e-300)
        for s in s_grid:
            for t in t_grid:
                lhs = backend.dilate(s, backend.translate(t, backend.dilate(-s, f)))
                rhs = backend.translate(math.exp(alpha * s) * t, f)
                worst = max(worst, backend.norm(lhs - rhs) / scale)
    return worst


GroupElement = tuple[float, float, int]


@dataclass(frozen=True, eq=False)
class GAlphaRep:
    """Antiunitary representation of G_α = R ⋊ R^× by U_(b, s, o) = U_b W_s J^o.

    Elements are triples (b, s, o): translation b, dilation parameter s
    (r = ±e^s) and parity o in {0, 1} (o = 1 for r < 0).

    Attributes:
        alpha: Exponent in W_s U_t W_{-s} = U_{e^{αs} t}
        backend: Vector model carrying U, W, J
    """
    alpha: float
    backend: DilationBackend

    def multiply(self, g1: GroupElement, g2: GroupElement) -> GroupElement:
        b1, s1, o1 = g1
        b2, s2, o2 = g2
        sign = -1.0 if o1 else 1.0
        return (b1 + sign * math.exp(self.alpha * s1) * b2, s1 + s2, o1 ^ o2)

    def apply(self, g: GroupElement, f: np.ndarray) -> np.ndarray:
        b, s, o = g
        if o:
            f = self.backend.conjugate(f)
        return self.backend.translate(b, self.backend.dilate(s, f))

    def homomorphism_residual(self, g1: GroupElement, g2: GroupElement, f: np.ndarray) -> float:
        lhs = self.apply(g1, self.apply(g2, f))
        rhs = self.apply(self.multiply(g1, g2), f)
        return self.backend.norm(lhs - rhs) / max(self.backend.norm(f), 1e-300)


def dilation_rep_from_geodesic(
    source: StandGeodesic | DilationBackend,
    alpha: float | None = None,
    tol: float = DILATION_TOLERANCE,
    s_grid: Sequence[float] = DEFAULT_S_GRID,
    t_grid: Sequence[float] = DEFAULT_T_GRID,
) -> GAlphaRep:
    """Representation of G_α from a dilation-invariant geodesic.

    Pure function.

    Args:
        source: A finite-dimensional geodesic or any backend with U, W, J
        alpha: Exponent to assert; fitted from the data if None
        tol: Tolerance on the commutation relation
        s_grid: Dilation parameters sampled
        t_grid: Translation parameters sampled

    Returns:
        GAlphaRep with U_(0, 0, 1) = J_V

    Raises:
        NotDilationInvariant: If W_s U_t W_{-s} = U_{e^{αs} t} fails within tol
    """
    backend: DilationBackend = MatrixBackend.from_geodesic(source) if isinstance(source, StandGeodesic) else source
    fitted = fit_dilation_exponent(backend, s_grid)
    used = fitted if alpha is None else alpha
    residual = commutation_residual(backend, used, s_grid, t_grid)
    logger.debug("dilation exponent: fitted %.6g, used %.6g, residual %.3e", fitted, used, residual)
    if residual > tol:
        raise NotDilationInvariant(fitted, residual)
    return GAlphaRep(used, backend)
