"""Error types for the functional core.

Every precondition failure named by an operation has its own class so that
callers (and the verification harnesses) can tell them apart. Law failures
are never raised; harnesses report them as residuals.
"""


class StandardSubspaceError(Exception):
    """Root of all errors raised by the core."""


class DimensionMismatch(StandardSubspaceError, ValueError):
    """Operand shapes do not fit together."""


class DegeneratePoint(StandardSubspaceError):
    """An instance precondition fails at a point (e.g. an isotropic vector)."""


class NoDilation(StandardSubspaceError):
    """The point space carries no dilation structure."""


class SingularOperator(StandardSubspaceError):
    """A matrix that must be invertible (or strictly positive) is not."""


class NotConjugation(StandardSubspaceError):
    """An antilinear map is not a unitary involution."""


class NotStandard(StandardSubspaceError):
    """A real subspace fails the standardness test."""


class ModularRelationViolated(StandardSubspaceError):
    """A pair (Δ, J) does not satisfy JΔJ = Δ^{-1}."""


class NotSkew(StandardSubspaceError):
    """A real matrix that must be skew-symmetric is not."""


class InvertibilityConstraintViolated(StandardSubspaceError):
    """A unitary group is not inverted by the conjugation of the base point."""


class NotDilationInvariant(StandardSubspaceError):
    """No exponent α makes W_s U_t W_{-s} = U_{e^{αs} t} hold.

    Attributes:
        alpha: Best-fit exponent measured on the sample grid
        residual: Commutation residual at that exponent
    """

    def __init__(self, alpha: float, residual: float) -> None:
        super().__init__(
            f"not dilation invariant: best-fit alpha={alpha:.6g}, residual={residual:.3e}"
        )
        self.alpha = alpha
        self.residual = residual


class SingularElement(StandardSubspaceError):
    """A Jordan algebra element is not invertible."""


class AlgebraMismatch(StandardSubspaceError, ValueError):
    """Elements or maps from different Jordan algebras were combined."""


class PointOutsideDomain(StandardSubspaceError):
    """A conformal word is undefined at the requested point."""


class GradingUndefined(StandardSubspaceError):
    """The differential of a word does not map E_+ onto ±E_+ consistently."""


class NotInG1(StandardSubspaceError):
    """A word of grading -1 was passed where an even element is required."""


class ConePreconditionViolated(StandardSubspaceError):
    """An argument is outside the closed cone or the map is not cone preserving."""


class SpectralOverflow(StandardSubspaceError):
    """A Fourier multiplier exceeds the representable bound on the support.

    Attributes:
        bound: Largest multiplier value met on the support
    """

    def __init__(self, bound: float) -> None:
        super().__init__(f"spectral multiplier {bound:.3e} exceeds 1e12 on the support")
        self.bound = bound


class ShiftOutOfRange(StandardSubspaceError):
    """A dilation shift is larger than the grid budget allows."""
