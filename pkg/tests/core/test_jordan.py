"""Tests for euclidean Jordan algebras.

Tests the pure functions in src/core/jordan.py.
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from src.core.errors import AlgebraMismatch, SingularElement
from src.core.jordan import (
    AlgebraKind,
    cayley,
    check_element,
    coords,
    from_coords,
    from_spectrum,
    gram_matrix,
    in_closed_cone,
    in_cone,
    is_euclidean,
    jmul,
    jordan_det,
    jordan_identity_residual,
    jordan_inverse,
    make_algebra,
    quad_p,
    random_cone_automorphism,
    random_cone_point,
    random_element,
    spectrum,
    unit,
)


ALGEBRAS = [make_algebra("sym", 3), make_algebra("herm", 2), make_algebra("spin", 4)]
seeds = st.integers(min_value=0, max_value=2**32 - 1)


class TestMakeAlgebra:
    """Tests for make_algebra() and JordanAlgebra."""

    def test_dimensions(self):
        """Sym3 has dimension 6, Herm2 has 4, Λ4 has 4."""
        assert [a.dim for a in ALGEBRAS] == [6, 4, 4]

    def test_ranks(self):
        """Spin factors have rank 2."""
        assert [a.rank for a in ALGEBRAS] == [3, 2, 2]

    def test_unknown_kind_raises(self):
        """Octonions are not shipped."""
        with pytest.raises(ValueError):
            make_algebra("oct", 3)

    def test_small_spin_rejected(self):
        """Λ1 is not a spin factor."""
        with pytest.raises(ValueError):
            make_algebra(AlgebraKind.SPIN, 1)


class TestProduct:
    """Tests for jmul() and the Jordan identity."""

    @pytest.mark.parametrize("alg", ALGEBRAS, ids=lambda a: a.name)
    def test_unit(self, alg):
        """e·x = x."""
        x = random_element(alg, np.random.default_rng(0))
        assert_allclose(jmul(alg, unit(alg), x), x, atol=1e-12)

    @pytest.mark.parametrize("alg", ALGEBRAS, ids=lambda a: a.name)
    @given(seed=seeds)
    @settings(max_examples=20, deadline=None)
    def test_jordan_identity(self, alg, seed):
        """(x²·y)·x = x²·(y·x)."""
        rng = np.random.default_rng(seed)
        assert jordan_identity_residual(alg, random_element(alg, rng), random_element(alg, rng)) < 1e-12

    def test_spin_product(self):
        """(t, v)(t', v') = (tt' + <v, v'>, tv' + t'v)."""
        alg = make_algebra("spin", 3)
        assert_allclose(jmul(alg, np.array([1.0, 2.0, 0.0]), np.array([3.0, 0.0, 1.0])), [3.0, 6.0, 1.0])

    def test_wrong_shape_raises(self):
        """A vector is not an element of Sym3."""
        with pytest.raises(AlgebraMismatch):
            check_element(make_algebra("sym", 3), np.zeros(3))


class TestCoordinates:
    """Tests for coords() and from_coords()."""

    @pytest.mark.parametrize("alg", ALGEBRAS, ids=lambda a: a.name)
    def test_gram_matrix_is_positive(self, alg):
        """The trace form is positive definite."""
        assert is_euclidean(alg)
        assert np.linalg.eigvalsh(gram_matrix(alg)).min() > 0

    @pytest.mark.parametrize("alg", ALGEBRAS, ids=lambda a: a.name)
    def test_coordinates_invert(self, alg):
        """from_coords(coords(x)) = x."""
        x = random_element(alg, np.random.default_rng(1))
        assert_allclose(from_coords(alg, coords(alg, x)), x, atol=1e-12)


class TestQuadraticRepresentation:
    """Tests for quad_p()."""

    def test_matrix_kind_is_xyx(self):
        """P(x)y = xyx on Sym3."""
        alg = make_algebra("sym", 3)
        rng = np.random.default_rng(2)
        x, y = random_element(alg, rng), random_element(alg, rng)
        assert_allclose(from_coords(alg, quad_p(alg, x) @ coords(alg, y)), x @ y @ x, atol=1e-10)

    @pytest.mark.parametrize("alg", ALGEBRAS, ids=lambda a: a.name)
    def test_p_of_unit_is_identity(self, alg):
        """P(e) = id."""
        assert_allclose(quad_p(alg, unit(alg)), np.eye(alg.dim), atol=1e-12)


class TestSpectrumAndCone:
    """Tests for spectrum(), in_cone() and jordan_inverse()."""

    def test_spin_spectrum(self):
        """spec(t, v) = {t - |v|, t + |v|}."""
        assert_allclose(spectrum(make_algebra("spin", 3), np.array([2.0, 0.6, 0.8])), [1.0, 3.0])

    def test_cone_membership(self):
        """e is in the open cone, -e is not, a rank-one idempotent is on the boundary."""
        alg = make_algebra("sym", 2)
        assert in_cone(alg, unit(alg))
        assert not in_cone(alg, -unit(alg))
        boundary = np.diag([1.0, 0.0])
        assert not in_cone(alg, boundary)
        assert in_closed_cone(alg, boundary)

    @pytest.mark.parametrize("alg", ALGEBRAS, ids=lambda a: a.name)
    def test_inverse(self, alg):
        """x·x^{-1} = e for cone points."""
        x = random_cone_point(alg, np.random.default_rng(3), (0.5, 2.0))
        assert_allclose(jmul(alg, x, jordan_inverse(alg, x)), unit(alg), atol=1e-10)

    def test_singular_inverse_raises(self):
        """A light-like spin element has no inverse."""
        with pytest.raises(SingularElement):
            jordan_inverse(make_algebra("spin", 2), np.array([1.0, 1.0]))

    def test_spin_determinant(self):
        """det(t, v) = t² - |v|²."""
        assert jordan_det(make_algebra("spin", 3), np.array([3.0, 1.0, 2.0])) == pytest.approx(4.0)

    @pytest.mark.parametrize("alg", ALGEBRAS, ids=lambda a: a.name)
    def test_from_spectrum(self, alg):
        """The built element has the requested spectrum."""
        eigenvalues = np.linspace(1.0, 2.0, alg.rank)
        x = from_spectrum(alg, eigenvalues, np.random.default_rng(4))
        assert_allclose(np.sort(spectrum(alg, x)), eigenvalues, atol=1e-10)

    @pytest.mark.parametrize("alg", ALGEBRAS, ids=lambda a: a.name)
    def test_cone_automorphism_preserves_cone(self, alg):
        """Sampled automorphisms map cone points into the cone."""
        rng = np.random.default_rng(5)
        t = random_cone_automorphism(alg, rng)
        for _ in range(10):
            x = random_cone_point(alg, rng)
            assert in_cone(alg, from_coords(alg, t @ coords(alg, x)))


class TestCayley:
    """Tests for cayley()."""

    @pytest.mark.parametrize("alg", ALGEBRAS, ids=lambda a: a.name)
    def test_reference_points(self, alg):
        """p(ie) = 0 and p(0) = -e."""
        e = unit(alg).astype(np.complex128)
        assert_allclose(cayley(alg, 1j * e), np.zeros(alg.shape), atol=1e-12)
        assert_allclose(cayley(alg, np.zeros(alg.shape, dtype=np.complex128)), -e, atol=1e-12)

    def test_singular_point_raises(self):
        """z = -ie makes z + ie singular."""
        alg = make_algebra("sym", 2)
        with pytest.raises(SingularElement):
            cayley(alg, -1j * np.eye(2, dtype=np.complex128))
