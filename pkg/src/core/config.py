"""Configuration models - Pure data structures.

These are domain models for configuration. The actual loading
(I/O) is handled by the shell layer.
"""

import math
from collections.abc import Mapping
from dataclasses import dataclass, field

from src.core.jordan import AlgebraKind


SUITE_NAMES = ("axioms", "modular", "geodesic", "jordan", "semigroup", "bgl", "affine")
MAX_DIMENSION = 8
LARGE_TRIALS = 10_000
LARGE_GRID = 1 << 16
# e^{π Ω} must stay below the Tomita multiplier bound 1e12
MAX_BAND = math.log(1e12) / math.pi


@dataclass(frozen=True)
class RunConfig:
    """Settings for one verification run.

    This is a pure data structure - no I/O or side effects. Two runs with
    equal configurations produce identical reports.

    Attributes:
        seed: Root seed; each suite derives its own generator from it
        tol: Global tolerance replacing every built-in check tolerance (None keeps them)
        tol_overrides: Per check-family tolerances, e.g. {"axioms": 1e-10}
        trials: Random instances for the modular and bgl suites, order pairs for the semigroup suite
        samples: Sampled tuples for the axiom and Jordan identity checks, Koufany words for the semigroup suite
        n: Largest Hilbert-space dimension used by random instances
        grid_n: Affine-flow grid size (power of two)
        grid_l: Affine-flow half-width L of the θ-domain
        band: Fourier band Ω_max of affine-flow test vectors
        algebra: Jordan family for the semigroup suite
        budget_interior: Interior cone samples per compression decision
        budget_boundary: Near-boundary cone samples per compression decision
        json_path: Report file (None writes to stdout)
        csv_path: Affine (b, distance) curve file (None skips it)
        workers: Threads used to run suites concurrently
    """
    seed: int = 7
    tol: float | None = None
    tol_overrides: Mapping[str, float] = field(default_factory=dict)
    trials: int = 200
    samples: int = 1000
    n: int = 4
    grid_n: int = 4096
    grid_l: float = 20.0
    band: float = 8.0
    algebra: str = AlgebraKind.SPIN.value
    budget_interior: int = 512
    budget_boundary: int = 128
    json_path: str | None = None
    csv_path: str | None = None
    workers: int = 4

    def tol_for(self, family: str, builtin: float) -> float:
        """Tolerance for a check family: override, then global tol, then the built-in value."""
        if family in self.tol_overrides:
            return float(self.tol_overrides[family])
        return self.tol if self.tol is not None else builtin


@dataclass
class ValidationError:
    """A configuration validation error.

    Attributes:
        field: The field that has an error
        message: Human-readable error description
        severity: 'error' or 'warning'
    """
    field: str
    message: str
    severity: str = "error"


@dataclass
class ValidationResult:
    """Result of validating configuration.

    Attributes:
        valid: True if no errors (warnings are OK)
        errors: List of validation errors/warnings
    """
    valid: bool
    errors: list[ValidationError] = field(default_factory=list)

    @property
    def warnings(self) -> list[ValidationError]:
        """Get only warnings."""
        return [e for e in self.errors if e.severity == "warning"]

    @property
    def critical_errors(self) -> list[ValidationError]:
        """Get only critical errors."""
        return [e for e in self.errors if e.severity == "error"]


def _validate_positive(value: float, field_name: str) -> list[ValidationError]:
    if not value > 0:
        return [ValidationError(field=field_name, message=f"Must be positive, got {value}")]
    return []


def validate_tolerances(config: RunConfig) -> list[ValidationError]:
    """Validate the global tolerance and the per-family overrides.

    Pure function. Unknown families are reported as warnings.

    Args:
        config: Configuration to validate

    Returns:
        List of validation errors (empty if valid)
    """
    errors: list[ValidationError] = []
    if config.tol is not None:
        errors.extend(_validate_positive(config.tol, "tol"))
    for family, value in sorted(config.tol_overrides.items()):
        errors.extend(_validate_positive(value, f"tol_overrides.{family}"))
        if family not in SUITE_NAMES:
            errors.append(ValidationError(
                field=f"tol_overrides.{family}",
                message=f"Unknown check family '{family}', expected one of {', '.join(SUITE_NAMES)}",
                severity="warning",
            ))
    return errors


def validate_grid(config: RunConfig) -> list[ValidationError]:
    """Validate the affine-flow grid parameters.

    Pure function.

    Args:
        config: Configuration to validate

    Returns:
        List of validation errors (empty if valid)
    """
    errors: list[ValidationError] = []

    if config.grid_n < 8 or config.grid_n & (config.grid_n - 1):
        errors.append(ValidationError(
            field="grid_n",
            message=f"Grid size must be a power of two >= 8, got {config.grid_n}",
        ))
    elif config.grid_n > LARGE_GRID:
        errors.append(ValidationError(
            field="grid_n",
            message=f"Grid size {config.grid_n} will make the affine suite slow",
            severity="warning",
        ))

    errors.extend(_validate_positive(config.grid_l, "grid_l"))
    errors.extend(_validate_positive(config.band, "band"))

    if config.band > MAX_BAND:
        errors.append(ValidationError(
            field="band",
            message=f"Band {config.band} exceeds {MAX_BAND:.3f}; the Tomita multiplier would overflow",
        ))

    return errors


def validate_config(config: RunConfig) -> ValidationResult:
    """Validate configuration for errors and warnings.

    Pure function.

    Args:
        config: Configuration to validate

    Returns:
        ValidationResult with any errors/warnings found
    """
    errors: list[ValidationError] = []

    if config.seed < 0:
        errors.append(ValidationError(field="seed", message=f"Seed must be nonnegative, got {config.seed}"))

    if not 1 <= config.n <= MAX_DIMENSION:
        errors.append(ValidationError(
            field="n",
            message=f"Dimension must lie in [1, {MAX_DIMENSION}], got {config.n}",
        ))

    for name in ("trials", "samples", "budget_interior", "workers"):
        errors.extend(_validate_positive(getattr(config, name), name))

    if config.budget_boundary < 0:
        errors.append(ValidationError(
            field="budget_boundary",
            message=f"Must be nonnegative, got {config.budget_boundary}",
        ))

    if config.trials > LARGE_TRIALS or config.samples > LARGE_TRIALS:
        errors.append(ValidationError(
            field="trials",
            message="More than 10000 trials or samples; the run will be slow",
            severity="warning",
        ))

    if config.algebra not in {k.value for k in AlgebraKind}:
        errors.append(ValidationError(
            field="algebra",
            message=f"Unknown algebra '{config.algebra}', expected sym, herm or spin",
        ))

    errors.extend(validate_tolerances(config))
    errors.extend(validate_grid(config))

    has_critical = any(e.severity == "error" for e in errors)

    return ValidationResult(
        valid=not has_critical,
        errors=errors,
    )
