"""Seeded, bounded random samplers.

Every sampler takes a numpy Generator so that runs are reproducible from a
single seed. Matrix entries are drawn from [-2, 2] (or a smaller spread) and
invertible samples are rejected above a condition-number cap.
"""

import zlib

import numpy as np
from numpy.typing import NDArray
from scipy.stats import unitary_group

from src.core.antilinear import Conjugation, ModularPair
from src.core.linalg import ComplexMatrix, RealMatrix, as_complex, expm


ENTRY_BOUND = 2.0
MAX_CONDITION = 50.0


def child_rng(seed: int, label: str) -> np.random.Generator:
    """Independent generator for a named sub-run, stable across processes."""
    return np.random.default_rng([seed, zlib.crc32(label.encode("utf-8"))])


def uniform(rng: np.random.Generator, shape: tuple[int, ...], bound: float = ENTRY_BOUND) -> RealMatrix:
    return rng.uniform(-bound, bound, size=shape)


def complex_uniform(
    rng: np.random.Generator,
    shape: tuple[int, ...],
    bound: float = ENTRY_BOUND,
) -> ComplexMatrix:
    return as_complex(uniform(rng, shape, bound) + 1j * uniform(rng, shape, bound))


def invertible_real(rng: np.random.Generator, n: int, max_cond: float = MAX_CONDITION) -> RealMatrix:
    """Real n x n matrix with entries in [-2, 2] and bounded condition number."""
    while True:
        m = uniform(rng, (n, n))
        if np.linalg.cond(m) <= max_cond:
            return m


def invertible_complex(rng: np.random.Generator, n: int, max_cond: float = MAX_CONDITION) -> ComplexMatrix:
    """Complex n x n matrix with entries in [-2, 2] + i[-2, 2] and bounded condition number."""
    while True:
        m = complex_uniform(rng, (n, n))
        if np.linalg.cond(m) <= max_cond:
            return m


def near_identity(rng: np.random.Generator, n: int, spread: float = 0.3) -> RealMatrix:
    """exp(X) with X uniform in [-spread, spread]; well conditioned by construction."""
    return np.asarray(expm(uniform(rng, (n, n), spread)).real, dtype=np.float64)


def random_unitary(rng: np.random.Generator, n: int) -> ComplexMatrix:
    """Haar-random unitary n x n matrix."""
    if n == 1:
        return as_complex([[np.exp(2j * np.pi * rng.uniform())]])
    return as_complex(unitary_group.rvs(n, random_state=rng))


def random_skew(rng: np.random.Generator, n: int, bound: float = 0.5) -> RealMatrix:
    """Real skew-symmetric matrix with entries in [-bound, bound]."""
    x = uniform(rng, (n, n), bound)
    return np.asarray((x - x.T) / 2, dtype=np.float64)


def random_hermitian(rng: np.random.Generator, n: int, bound: float = 1.0) -> ComplexMatrix:
    x = complex_uniform(rng, (n, n), bound)
    return as_complex((x + x.conj().T) / 2)


def random_conjugation(rng: np.random.Generator, n: int) -> tuple[Conjugation, ComplexMatrix]:
    """Random conjugation J = U C U^{-1}, returned with U.

    The columns of U form a J-fixed orthonormal basis.
    """
    u = random_unitary(rng, n)
    return Conjugation(as_complex(u @ u.T)), u


def random_modular_pair(rng: np.random.Generator, n: int, spread: float = 0.5) -> ModularPair:
    """Random modular pair built from a J-fixed frame and a real skew generator.

    With J = U U^T and A = U K U^H (K real skew), JAJ = A and Δ = exp(-iA)
    satisfies JΔJ = Δ^{-1}.
    """
    j, u = random_conjugation(rng, n)
    k = random_skew(rng, n, spread)
    a = u @ k @ u.conj().T
    delta = expm(-1j * a)
    return ModularPair(as_complex((delta + delta.conj().T) / 2), j)


def random_basis(rng: np.random.Generator, n: int) -> ComplexMatrix:
    """Basis matrix of a random standard subspace of C^n."""
    return invertible_complex(rng, n)


def random_unit_vector(rng: np.random.Generator, d: int) -> NDArray[np.float64]:
    v = rng.normal(size=d)
    return np.asarray(v / np.linalg.norm(v), dtype=np.float64)
