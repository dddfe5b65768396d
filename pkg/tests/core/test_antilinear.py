"""Tests for antilinear operators and modular pairs.

Tests the pure functions in src/core/antilinear.py.
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from src.core.antilinear import (
    AntilinearMap,
    GradedOperator,
    ModularPair,
    antilinear_adjoint,
    antilinear_apply,
    antilinear_compose,
    check_modular_relation,
    is_conjugation,
    make_conjugation,
    modular_residual,
    modular_unitary,
    polar_decompose_antilinear,
    standard_conjugation,
)
from src.core.errors import DimensionMismatch, ModularRelationViolated, NotConjugation, SingularOperator
from src.core.sampling import random_modular_pair


WORKED_S = np.array([[1, 2j], [0, 1]], dtype=np.complex128)
WORKED_DELTA = np.array([[1, -2j], [2j, 5]], dtype=np.complex128)


class TestAntilinearApply:
    """Tests for antilinear_apply()."""

    def test_conjugates_before_multiplying(self):
        """z -> M conj(z)."""
        a = AntilinearMap(np.array([[0, 1], [1, 0]], dtype=complex))
        assert_allclose(antilinear_apply(a, np.array([1j, 2])), [2, -1j])

    def test_is_antilinear(self):
        """A(iz) = -i A(z)."""
        a = AntilinearMap(WORKED_S)
        z = np.array([1 + 1j, -2j])
        assert_allclose(a(1j * z), -1j * a(z))

    def test_wrong_length_raises(self):
        """Vectors from another space are rejected."""
        with pytest.raises(DimensionMismatch):
            antilinear_apply(AntilinearMap(WORKED_S), np.ones(3))


class TestAdjointAndCompose:
    """Tests for antilinear_adjoint() and antilinear_compose()."""

    def test_adjoint_identity(self):
        """<A*x, y> = conj(<x, Ay>)."""
        a = AntilinearMap(WORKED_S)
        x, y = np.array([1, 1j]), np.array([2 - 1j, 0.5])
        lhs = np.vdot(antilinear_adjoint(a)(x), y)
        rhs = np.conj(np.vdot(x, a(y)))
        assert lhs == pytest.approx(rhs)

    def test_worked_square_is_identity(self):
        """S o S = I for S = [[1, 2i], [0, 1]]."""
        s = AntilinearMap(WORKED_S)
        assert_allclose(antilinear_compose(s, s), np.eye(2))


class TestConjugations:
    """Tests for is_conjugation() and make_conjugation()."""

    def test_standard_conjugation(self):
        """Entrywise conjugation is a conjugation."""
        assert is_conjugation(standard_conjugation(3).matrix)

    def test_flip_is_conjugation(self):
        """The coordinate flip composed with conjugation is a conjugation."""
        assert is_conjugation(np.array([[0, 1], [1, 0]], dtype=complex))

    def test_phase_multiple_is_conjugation(self):
        """iI satisfies M conj(M) = I, so z -> i conj(z) is a conjugation."""
        assert is_conjugation(1j * np.eye(2))

    def test_non_unitary_rejected(self):
        """A non-unitary matrix is not a conjugation."""
        with pytest.raises(NotConjugation):
            make_conjugation(WORKED_S)

    def test_anti_involution_rejected(self):
        """M conj(M) = -I is not a conjugation."""
        with pytest.raises(NotConjugation):
            make_conjugation(np.array([[0, 1], [-1, 0]], dtype=complex))


class TestPolarDecomposition:
    """Tests for polar_decompose_antilinear()."""

    def test_worked_delta(self):
        """S = [[1, 2i], [0, 1]] gives Δ = [[1, -2i], [2i, 5]]."""
        polar = polar_decompose_antilinear(AntilinearMap(WORKED_S))
        assert_allclose(polar.delta, WORKED_DELTA, atol=1e-12)
        assert_allclose(np.linalg.eigvalsh(polar.delta), [3 - 2 * np.sqrt(2), 3 + 2 * np.sqrt(2)], atol=1e-12)

    def test_worked_reconstruction_and_involution(self):
        """S = J Δ^{1/2} and J is a conjugation."""
        polar = polar_decompose_antilinear(AntilinearMap(WORKED_S))
        assert polar.involutive
        assert polar.residual < 1e-12
        assert is_conjugation(polar.j.matrix)

    def test_modular_relation_holds(self):
        """The pair (Δ, J) satisfies JΔJ = Δ^{-1}."""
        pair = polar_decompose_antilinear(AntilinearMap(WORKED_S)).modular_pair()
        assert modular_residual(pair) < 1e-10

    def test_non_involutive_flagged(self):
        """2 conj(z) is not involutive."""
        polar = polar_decompose_antilinear(AntilinearMap(2 * np.eye(2, dtype=complex)))
        assert not polar.involutive
        with pytest.raises(ModularRelationViolated):
            polar.modular_pair()

    def test_singular_raises(self):
        """A singular operator has no polar decomposition."""
        with pytest.raises(SingularOperator):
            polar_decompose_antilinear(AntilinearMap(np.diag([1.0, 0.0]).astype(complex)))


class TestModularRelation:
    """Tests for check_modular_relation() and modular_unitary()."""

    def test_violation_raises(self):
        """Δ = diag(2, 2) with the standard conjugation violates JΔJ = Δ^{-1}."""
        pair = ModularPair(np.diag([2.0, 2.0]).astype(complex), standard_conjugation(2))
        with pytest.raises(ModularRelationViolated):
            check_modular_relation(pair)

    @given(st.integers(min_value=0, max_value=2**32 - 1))
    @settings(max_examples=20, deadline=None)
    def test_random_pairs_commute_with_unitaries(self, seed):
        """J commutes with Δ^{it} for sampled pairs."""
        pair = random_modular_pair(np.random.default_rng(seed), 3)
        u = modular_unitary(pair, 0.4)
        lhs = pair.j.matrix @ u.conj()
        assert_allclose(lhs, u @ pair.j.matrix, atol=1e-9)


class TestGradedOperator:
    """Tests for GradedOperator."""

    def test_composition_grading(self):
        """Two antilinear operators compose to a linear one."""
        j = GradedOperator(np.eye(2, dtype=complex), antilinear=True)
        assert (j @ j).grading == 1
        assert (j @ GradedOperator(np.eye(2, dtype=complex))).grading == -1

    def test_inverse(self):
        """g g^{-1} = id on vectors."""
        g = GradedOperator(np.array([[1, 1j], [0, 2]], dtype=complex), antilinear=True)
        z = np.array([1 - 2j, 3j])
        assert_allclose(g(g.inverse()(z)), z)
