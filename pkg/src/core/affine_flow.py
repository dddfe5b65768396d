"""Positive-energy representation of Aff(R) on a truncated log-frequency grid.

Functions live on θ_j = -L + j dθ, dθ = 2L/N, with Fourier variable
ω = 2π fftfreq(N, dθ). The operators are
    U_b f(θ) = e^{i b e^θ} f(θ)      (translations, generator e^θ ≥ 0)
    W_s f(θ) = f(θ + s)              (FFT phase shift, multiplier e^{iωs})
    J f = conj(f)
and Δ^{it} = W_{-2πt}, so Δ^{1/2} is the Fourier multiplier e^{-πω}. The
standard subspace V = Fix(J Δ^{1/2}) is, in Fourier variables,
    F(-ω) = e^{-πω} conj F(ω)   for ω > 0.
The Borchers relation W_s U_b W_{-s} = U_{e^s b} is an exact symbol
identity here, so all residuals measure truncation only.
"""

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from numpy.typing import NDArray

from src.core.errors import DimensionMismatch, NotDilationInvariant, ShiftOutOfRange, SpectralOverflow
from src.core.stand_geometry import dilation_rep_from_geodesic


logger = logging.getLogger(__name__)

Values = NDArray[np.complex128]

# U_b V ⊆ V holds for b ≥ 0 (measured, then frozen)
INCLUSION_ORIENTATION = +1

MULTIPLIER_BOUND = 1e12
SUPPORT_THRESHOLD = 1e-11
SHIFT_BUDGET = 0.25
BAND_RAMP = 2.0
VIOLATION_FACTOR = 100.0


@dataclass(frozen=True)
class AffineGrid:
    """Grid parameters.

    Attributes:
        n: Number of points (power of two)
        half_width: L, the grid covers [-L, L)
        band: Ω_max for band-limited test vectors
    """
    n: int = 4096
    half_width: float = 20.0
    band: float = 8.0

    def __post_init__(self) -> None:
        if self.n < 8 or self.n & (self.n - 1):
            raise ValueError(f"grid size must be a power of two >= 8, got {self.n}")
        if self.half_width <= 0:
            raise ValueError("grid half-width must be positive")

    @property
    def spacing(self) -> float:
        return 2 * self.half_width / self.n

    @property
    def max_shift(self) -> float:
        return SHIFT_BUDGET * self.half_width

    @cached_property
    def theta(self) -> NDArray[np.float64]:
        return -self.half_width + self.spacing * np.arange(self.n)

    @cached_property
    def omega(self) -> NDArray[np.float64]:
        return 2 * np.pi * np.fft.fftfreq(self.n, self.spacing)

    @cached_property
    def reflected(self) -> NDArray[np.intp]:
        """Index of -ω for each ω."""
        return (-np.arange(self.n)) % self.n

    @cached_property
    def band_cutoff(self) -> NDArray[np.float64]:
        """Even C^∞ cutoff: 1 on |ω| ≤ Ω_max - ramp, 0 on |ω| ≥ Ω_max."""
        x = np.clip((self.band - np.abs(self.omega)) / BAND_RAMP, 0.0, 1.0)
        return np.asarray(_smooth_step(x), dtype=np.float64)


def _smooth_step(x: NDArray[np.float64]) -> NDArray[np.float64]:
    def bump(u: NDArray[np.float64]) -> NDArray[np.float64]:
        out = np.zeros_like(u)
        pos = u > 0
        out[pos] = np.exp(-1.0 / u[pos])
        return out
    a, b = bump(x), bump(1.0 - x)
    return a / (a + b)


@dataclass(frozen=True, eq=False)
class GridFunction:
    """Samples of a function on an AffineGrid."""
    grid: AffineGrid
    values: Values

    def __post_init__(self) -> None:
        if self.values.shape != (self.grid.n,):
            raise DimensionMismatch(f"{self.values.shape} samples on a grid of {self.grid.n} points")

    def __add__(self, other: "GridFunction") -> "GridFunction":
        return GridFunction(self.grid, self.values + other.values)

    def __sub__(self, other: "GridFunction") -> "GridFunction":
        return GridFunction(self.grid, self.values - other.values)

    def scaled(self, c: complex) -> "GridFunction":
        return GridFunction(self.grid, np.asarray(c * self.values, dtype=np.complex128))


def grid_function(grid: AffineGrid, values: NDArray[np.generic]) -> GridFunction:
    return GridFunction(grid, np.asarray(values, dtype=np.complex128))


# --- the representation -----------------------------------------------------

def translate(f: GridFunction, b: float) -> GridFunction:
    """U_b."""
    return GridFunction(f.grid, f.values * np.exp(1j * b * np.exp(f.grid.theta)))


def dilate(f: GridFunction, s: float) -> GridFunction:
    """W_s f(θ) = f(θ + s), by spectral interpolation.

    Raises:
        ShiftOutOfRange: If |s| exceeds the grid budget
    """
    if abs(s) > f.grid.max_shift:
        raise ShiftOutOfRange(f"shift {s} exceeds the budget {f.grid.max_shift}")
    spectrum = np.fft.fft(f.values) * np.exp(1j * f.grid.omega * s)
    return GridFunction(f.grid, np.fft.ifft(spectrum))


def conjugate(f: GridFunction) -> GridFunction:
    """J."""
    return GridFunction(f.grid, f.values.conj())


@dataclass(frozen=True)
class AffineElement:
    """(b, e^s) in Aff(R), with an optional odd flag for J.

    Group law (b1, s1, o1)(b2, s2, o2) = (b1 + (-1)^{o1} e^{s1} b2, s1 + s2, o1 xor o2).
    """
    b: float = 0.0
    s: float = 0.0
    odd: bool = False

    def __mul__(self, other: "AffineElement") -> "AffineElement":
        sign = -1.0 if self.odd else 1.0
        return AffineElement(self.b + sign * math.exp(self.s) * other.b, self.s + other.s, self.odd != other.odd)


def affine_apply(el: AffineElement, f: GridFunction) -> GridFunction:
    """U_(b, s, o) f = U_b W_s J^o f."""
    if el.odd:
        f = conjugate(f)
    return translate(dilate(f, el.s), el.b)


def inner(f: GridFunction, g: GridFunction) -> complex:
    """Discrete L² product, antilinear in the first argument."""
    return complex(f.grid.spacing * np.vdot(f.values, g.values))


def norm(f: GridFunction) -> float:
    return math.sqrt(f.grid.spacing * float(np.sum(np.abs(f.values) ** 2)))


def positive_energy_form(f: GridFunction) -> float:
    """<f, e^θ f>, the quadratic form of the translation generator."""
    return f.grid.spacing * float(np.sum(np.exp(f.grid.theta) * np.abs(f.values) ** 2))


# --- the standard subspace --------------------------------------------------

def tomita_apply(f: GridFunction) -> GridFunction:
    """S f = J Δ^{1/2} f, i.e. F'(ω) = e^{πω} conj F(-ω).

    The multiplier is applied where the reflected spectrum stands above the
    floating-point floor and zero is returned elsewhere.

    Raises:
        SpectralOverflow: If e^{πω} exceeds 1e12 on that support
    """
    grid = f.grid
    reflected = np.fft.fft(f.values)[grid.reflected].conj()
    magnitude = np.abs(reflected)
    support = magnitude > SUPPORT_THRESHOLD * max(float(magnitude.max()), 1e-300)
    exponent = np.pi * grid.omega
    worst = float(exponent[support].max()) if support.any() else 0.0
    if worst > math.log(MULTIPLIER_BOUND):
        raise SpectralOverflow(math.exp(min(worst, 700.0)))
    out = np.zeros(grid.n, dtype=np.complex128)
    out[support] = np.exp(exponent[support]) * reflected[support]
    return GridFunction(grid, np.fft.ifft(out))


def project_v(f: GridFunction) -> GridFunction:
    """Orthogonal projection onto V in the discrete L² metric.

    For each pair (ω, -ω), ω > 0, with q = e^{-πω} ≤ 1 the V-component is
    (a, q conj a) with a = (F(ω) + q conj F(-ω)) / (1 + q²). ω = 0 keeps the
    real part; the Nyquist mode is not in V.
    """
    grid = f.grid
    spectrum = np.fft.fft(f.values)
    out = np.zeros(grid.n, dtype=np.complex128)
    half = grid.n // 2
    k = np.arange(1, half)
    q = np.exp(-np.pi * grid.omega[k])
    f1, f2 = spectrum[k], spectrum[grid.n - k]
    a = (f1 + q * f2.conj()) / (1 + q * q)
    out[k] = a
    out[grid.n - k] = q * a.conj()
    out[0] = spectrum[0].real
    return GridFunction(grid, np.fft.ifft(out))


def dist_to_v(f: GridFunction) -> float:
    """||f - project_v(f)||."""
    return norm(f - project_v(f))


# --- test vectors -----------------------------------------------------------

def gaussian(grid: AffineGrid, center: float = 0.0, width: float = 1.0) -> GridFunction:
    """Real gaussian bump e^{-(θ-c)²/2w²}."""
    return grid_function(grid, np.exp(-((grid.theta - center) ** 2) / (2 * width * width)))


def v_vector(g: GridFunction, normalize: bool = True) -> GridFunction:
    """Δ^{-1/4} applied to the band-limited real function g; lies in V.

    In Fourier variables F = e^{πω/2} χ G with G hermitian-symmetric and
    χ the even band cutoff.
    """
    grid = g.grid
    spectrum = np.fft.fft(g.values.real) * grid.band_cutoff * np.exp(np.pi * grid.omega / 2)
    spectrum[grid.n // 2] = 0.0
    v = GridFunction(grid, np.fft.ifft(spectrum))
    return v.scaled(1 / norm(v)) if normalize else v


def default_v_vectors(grid: AffineGrid) -> list[GridFunction]:
    """V-vectors left of θ = 0, where U_b for |b| ≤ 1 stays below the Nyquist rate."""
    shapes = [(-0.5, 0.8), (-1.0, 1.0), (-1.5, 1.0), (-1.0, 0.7)]
    return [v_vector(gaussian(grid, c, w)) for c, w in shapes]


def smooth_v_vectors(grid: AffineGrid) -> list[GridFunction]:
    """Wide V-vectors whose spectra vanish before e^{πω} amplifies rounding."""
    return [v_vector(gaussian(grid, c, 2.0)) for c in (-1.0, 0.0)]


def borchers_probe(grid: AffineGrid) -> GridFunction:
    """Gaussian bump at θ = -1 with width 0.5."""
    return gaussian(grid, -1.0, 0.5)


# --- experiments ------------------------------------------------------------

def borchers_residual(f: GridFunction, b: float, s: float) -> float:
    """||W_s U_b W_{-s} f - U_{e^s b} f|| / ||f||."""
    lhs = dilate(translate(dilate(f, -s), b), s)
    return norm(lhs - translate(f, math.exp(s) * b)) / norm(f)


def group_law_residual(el1: AffineElement, el2: AffineElement, f: GridFunction) -> float:
    lhs = affine_apply(el1, affine_apply(el2, f))
    return norm(lhs - affine_apply(el1 * el2, f)) / norm(f)


def tomita_square_residual(f: GridFunction) -> float:
    """||S² f - f|| / ||f||."""
    return norm(tomita_apply(tomita_apply(f)) - f) / norm(f)


def geodesic_motion(t: float, s: float, vs: Sequence[GridFunction]) -> float:
    """max dist_to_V(U_{-t/2} W_s U_{t/2} v): nonzero iff W_s γ(t) leaves γ(t) = U_{t/2}V (s < 0 for t > 0)."""
    return max(dist_to_v(translate(dilate(translate(v, t / 2), s), -t / 2)) for v in vs)


@dataclass(frozen=True)
class AffineBackend:
    """U, W, J of the grid model in the form dilation_rep_from_geodesic expects."""

    grid: AffineGrid
    probe_functions: tuple[GridFunction, ...] = field(default_factory=tuple)

    def _wrap(self, values: NDArray[np.generic]) -> GridFunction:
        return grid_function(self.grid, values)

    def translate(self, b: float, f: np.ndarray) -> np.ndarray:
        return translate(self._wrap(f), b).values

    def dilate(self, s: float, f: np.ndarray) -> np.ndarray:
        return dilate(self._wrap(f), s).values

    def conjugate(self, f: np.ndarray) -> np.ndarray:
        return np.asarray(f).conj()

    def generator(self, f: np.ndarray) -> np.ndarray:
        return np.exp(self.grid.theta) * f

    def norm(self, f: np.ndarray) -> float:
        return norm(self._wrap(f))

    def inner(self, f: np.ndarray, g: np.ndarray) -> complex:
        return inner(self._wrap(f), self._wrap(g))

    def probes(self) -> list[np.ndarray]:
        probes = self.probe_functions or (borchers_probe(self.grid),)
        return [p.values for p in probes]


def fitted_alpha(grid: AffineGrid, tol: float = 1e-6) -> float:
    """Exponent of the dilation-invariant geodesic measured on the grid (1 for Aff(R))."""
    return dilation_rep_from_geodesic(AffineBackend(grid), tol=tol).alpha


@dataclass
class MonotonicityReport:
    """Distances of U_b V to V along b.

    Attributes:
        curve: (b, max_v dist_to_V(U_b v)) in input order
        tol: Inclusion tolerance
        orientation: +1 if b ≥ 0 includes and b < 0 violates, -1 if reversed, 0 otherwise
        alpha: Fitted dilation exponent, None if the fit failed
        failures: Precondition violations
    """
    curve: list[tuple[float, float]]
    tol: float
    orientation: int
    alpha: float | None
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and self.orientation == INCLUSION_ORIENTATION

    @property
    def max_inclusion_distance(self) -> float:
        return max((d for b, d in self.curve if b >= 0), default=0.0)

    @property
    def min_violation_distance(self) -> float:
        return min((d for b, d in self.curve if b < 0), default=math.inf)


def _side_included(curve: list[tuple[float, float]], positive: bool, tol: float) -> bool:
    return all(d <= tol for b, d in curve if (b >= 0) == positive)


def _side_violated(curve: list[tuple[float, float]], positive: bool, tol: float) -> bool:
    side = [d for b, d in curve if (b > 0 if positive else b < 0)]
    return bool(side) and all(d >= VIOLATION_FACTOR * tol for d in side)


def monotonicity_experiment(
    bs: Sequence[float],
    vs: Sequence[GridFunction],
    tol: float = 1e-6,
) -> MonotonicityReport:
    """Measure U_b V ⊆ V for b ≥ 0 and its failure for b < 0.

    Pure function.

    Args:
        bs: Translation parameters
        vs: Test vectors in V
        tol: Inclusion tolerance; violations must exceed 100 tol

    Returns:
        MonotonicityReport with the (b, distance) curve and measured orientation
    """
    failures = [f"test vector {i} is {d:.3e} away from V" for i, d in enumerate(dist_to_v(v) for v in vs) if d > tol]
    curve = [(float(b), max(dist_to_v(translate(v, b)) for v in vs)) for b in bs]

    orientation = 0
    if _side_included(curve, True, tol) and (_side_violated(curve, False, tol) or all(b >= 0 for b in bs)):
        orientation = +1
    elif _side_included(curve, False, tol) and _side_violated(curve, True, tol):
        orientation = -1

    alpha: float | None = None
    if vs:
        grid = vs[0].grid
        try:
            alpha = fitted_alpha(grid)
        except NotDilationInvariant as e:
            failures.append(str(e))
    logger.debug("monotonicity: orientation %d, alpha %s", orientation, alpha)
    return MonotonicityReport(curve, tol, orientation, alpha, failures)
