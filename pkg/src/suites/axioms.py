"""Reflection and dilation laws on every shipped instance."""

from collections.abc import Callable
from typing import Any

import numpy as np

from src.core.config import RunConfig
from src.core.reflection import (
    AffineSpace,
    BilinearSpace,
    CosetSpace,
    DilationGroupSpace,
    GroupSpace,
    HomogeneousDilationSpace,
    HomSpace,
    PointSpace,
    PositiveDefiniteSpace,
    ProductSpace,
    TrivialSpace,
    TwistedGroupSpace,
    VectorDilationSpace,
    inverse_transpose,
    verify_dilation_axioms,
    verify_morphism,
    verify_reflection_axioms,
)
from src.core.report import SuiteResult
from src.core.sampling import near_identity, uniform
from src.suites.common import add_check


NAME = "axioms"
TOLERANCE = 1e-10

Instance = tuple[PointSpace[Any], Callable[[np.random.Generator], Any]]


def _paired(a: Instance, b: Instance) -> Instance:
    space = ProductSpace(a[0], b[0])
    return space, lambda rng: (a[1](rng), b[1](rng))


def gentle_sampler(n: int) -> Callable[[np.random.Generator], np.ndarray]:
    """Well-conditioned GL_n samples, so that powers over the checked range stay accurate."""
    return lambda rng: near_identity(rng, n, 0.1)


def positive_sampler(n: int) -> Callable[[np.random.Generator], np.ndarray]:
    gentle = gentle_sampler(n)

    def draw(rng: np.random.Generator) -> np.ndarray:
        g = gentle(rng)
        return np.asarray(g @ g.T, dtype=np.float64)
    return draw


def timelike_sampler(rng: np.random.Generator) -> np.ndarray:
    """Timelike vectors near the time axis; long products of Lorentz reflections stay bounded."""
    return np.concatenate([[rng.uniform(1.0, 2.0)], uniform(rng, (3,), 0.3)])


def instances(n: int) -> list[Instance]:
    """Every instance with its sampler; matrix instances use size min(n, 3)."""
    m = max(2, min(n, 3))
    group = GroupSpace(m)
    gentle = gentle_sampler(m)
    affine = AffineSpace(2)
    hom = HomSpace(2)
    euclidean = BilinearSpace(np.eye(3), "euclidean")
    lorentz = BilinearSpace(np.diag([1.0, -1.0, -1.0, -1.0]), "lorentz")
    vector = VectorDilationSpace((1.0, 2.0, 0.5), (0, 1, 1))
    homogeneous = HomogeneousDilationSpace(2, 1.5, np.array([[1.0, 0.3], [0.0, 2.0]]))
    return [
        (TrivialSpace(), lambda rng: uniform(rng, (3,))),
        (group, gentle),
        (TwistedGroupSpace(m, inverse_transpose, "transpose-inverse"), gentle),
        (CosetSpace(m), gentle),
        (PositiveDefiniteSpace(m), positive_sampler(m)),
        (euclidean, euclidean.sampler()),
        (lorentz, timelike_sampler),
        _paired((affine, affine.sample), (group, gentle)),
        (HomSpace(m), HomSpace(m).sample),
        (affine, affine.sample),
        (vector, vector.sample),
        (DilationGroupSpace((1.0, 0.0, -0.5), (1, 0, 1)), gentle_sampler(3)),
        (homogeneous, homogeneous.sample),
        _paired((affine, affine.sample), (hom, hom.sample)),
    ]


def run(config: RunConfig, rng: np.random.Generator) -> SuiteResult:
    """(S1)-(S3), powers, (D1)-(D3) and the quotient morphism Sym^+ <- GL/O."""
    tol = config.tol_for(NAME, TOLERANCE)
    suite = SuiteResult(NAME)

    for space, sampler in instances(config.n):
        add_check(
            suite, f"reflection:{space.name}",
            lambda: verify_reflection_axioms(space, sampler, config.samples, tol, rng),
        )
        if space.has_dilation:
            add_check(
                suite, f"dilation:{space.name}",
                lambda: verify_dilation_axioms(space, sampler, config.samples, tol, rng),
            )

    m = max(2, min(config.n, 3))
    coset = CosetSpace(m)
    add_check(
        suite, "morphism:coset-to-positive",
        lambda: verify_morphism(
            coset, PositiveDefiniteSpace(m), CosetSpace.invariant, gentle_sampler(m), config.samples, tol, rng,
        ),
    )
    return suite
