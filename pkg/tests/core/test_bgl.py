"""Tests for antiunitary representations and the BGL map.

Tests the pure functions in src/core/bgl.py.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from src.core.antilinear import GradedOperator
from src.core.bgl import (
    DefiningRep,
    TensorSquareRep,
    bgl_bullet_residual,
    bgl_equivariance_check,
    bgl_map,
    conjugate_hom,
    differential_from_images,
    is_positive_energy,
    make_graded_hom_into,
    random_graded_hom_into,
    random_group_element,
    semigroup_membership,
)
from src.core.errors import DimensionMismatch, ModularRelationViolated, NotInG1
from src.core.linalg import expm
from src.core.sampling import random_modular_pair
from src.core.standard_subspace import graded_hom_of, standard_from_modular, subspace_gap


REPS = [DefiningRep(3), TensorSquareRep(2)]
seeds = st.integers(min_value=0, max_value=2**32 - 1)


class TestRepresentations:
    """Tests for DefiningRep and TensorSquareRep."""

    def test_tensor_square_dimension(self):
        """AU(C^2) acts on C^4."""
        assert TensorSquareRep(2).dim == 4

    def test_tensor_square_is_homomorphism(self):
        """U(gh) = U(g)U(h), including antiunitaries."""
        rng = np.random.default_rng(0)
        rep = TensorSquareRep(2)
        g, h = random_group_element(rng, 2, odd=True), random_group_element(rng, 2)
        assert_allclose(rep(g @ h).matrix, (rep(g) @ rep(h)).matrix, atol=1e-12)
        assert rep(g @ h).antilinear

    def test_wrong_size_raises(self):
        """Elements of AU(C^3) do not act through AU(C^2)."""
        with pytest.raises(DimensionMismatch):
            TensorSquareRep(2)(GradedOperator(np.eye(3, dtype=complex)))

    def test_differential_of_tensor_square(self):
        """dU(X) = X⊗1 + 1⊗X."""
        x = np.array([[1j, 0], [0, -2j]])
        assert_allclose(np.diag(TensorSquareRep(2).differential(x)), [2j, -1j, -1j, -4j])


class TestMakeGradedHomInto:
    """Tests for make_graded_hom_into()."""

    def test_linear_sigma_rejected(self):
        """γ(-1) must be antiunitary."""
        with pytest.raises(ModularRelationViolated):
            make_graded_hom_into(np.zeros((2, 2)), GradedOperator(np.eye(2, dtype=complex)))

    def test_non_involution_rejected(self):
        """σ² = -1 is rejected."""
        sigma = GradedOperator(np.array([[0, 1], [-1, 0]], dtype=complex), antilinear=True)
        with pytest.raises(ModularRelationViolated):
            make_graded_hom_into(np.zeros((2, 2)), sigma)

    def test_valid_pair(self):
        """Complex conjugation with a real skew generator is valid."""
        x = np.array([[0.0, 1.0], [-1.0, 0.0]])
        gamma = make_graded_hom_into(x, GradedOperator(np.eye(2, dtype=complex), antilinear=True))
        assert gamma.at(-1.0).antilinear


class TestBglMap:
    """Tests for bgl_map() and its equivariance."""

    def test_defining_rep_recovers_modular_subspace(self):
        """For U = id, 𝒱_U(γ) = Φ(Δ, J) of the pair γ came from."""
        pair = random_modular_pair(np.random.default_rng(1), 3)
        h = graded_hom_of(pair)
        gamma = make_graded_hom_into(h.a, GradedOperator(h.j.matrix, antilinear=True))
        assert subspace_gap(bgl_map(DefiningRep(3), gamma), standard_from_modular(pair)) < 1e-9

    @pytest.mark.parametrize("rep", REPS, ids=lambda r: r.name)
    @given(seed=seeds, odd=st.booleans())
    @settings(max_examples=10, deadline=None)
    def test_equivariance(self, rep, seed, odd):
        """𝒱(γ^g) = U_g 𝒱(γ), with the complement for odd g."""
        rng = np.random.default_rng(seed)
        report = bgl_equivariance_check(rep, random_graded_hom_into(rng, rep.m), random_group_element(rng, rep.m, odd))
        assert report.passed, report.residuals

    @pytest.mark.parametrize("rep", REPS, ids=lambda r: r.name)
    @pytest.mark.parametrize("r", [-1.0, math.e, 1 / math.e])
    def test_bullet_intertwines(self, rep, r):
        """𝒱(γ •_r η) = 𝒱(γ) •_r 𝒱(η)."""
        rng = np.random.default_rng(2)
        gamma, eta = random_graded_hom_into(rng, rep.m), random_graded_hom_into(rng, rep.m)
        assert bgl_bullet_residual(rep, gamma, r, eta) < 1e-8

    def test_conjugating_by_modular_flow_fixes_hom(self):
        """exp(sX) commutes with γ."""
        gamma = random_graded_hom_into(np.random.default_rng(3), 2)
        moved = conjugate_hom(gamma, GradedOperator(expm(0.4 * gamma.x)))
        assert_allclose(moved.x, gamma.x, atol=1e-10)
        assert_allclose(moved.sigma.matrix, gamma.sigma.matrix, atol=1e-10)


class TestSemigroupMembership:
    """Tests for semigroup_membership()."""

    @pytest.mark.parametrize("rep", REPS, ids=lambda r: r.name)
    def test_modular_flow_is_member(self, rep):
        """U(exp(sX)) preserves 𝒱(γ)."""
        gamma = random_graded_hom_into(np.random.default_rng(4), rep.m)
        v = bgl_map(rep, gamma)
        assert semigroup_membership(rep, GradedOperator(expm(0.7 * gamma.x)), v)

    def test_generic_unitary_is_not_member(self):
        """A random unitary moves 𝒱(γ)."""
        rng = np.random.default_rng(5)
        rep = DefiningRep(3)
        v = bgl_map(rep, random_graded_hom_into(rng, 3))
        assert not semigroup_membership(rep, random_group_element(rng, 3), v)

    def test_odd_element_raises(self):
        """Antiunitaries are outside G_1."""
        rng = np.random.default_rng(6)
        rep = DefiningRep(2)
        v = bgl_map(rep, random_graded_hom_into(rng, 2))
        with pytest.raises(NotInG1):
            semigroup_membership(rep, random_group_element(rng, 2, odd=True), v)


class TestPositiveEnergyAndDifferential:
    """Tests for is_positive_energy() and differential_from_images()."""

    @pytest.mark.parametrize("rep", REPS, ids=lambda r: r.name)
    def test_positive_generator(self, rep):
        """X = iH with H ≥ 0 has positive energy; -i(H + 1) does not."""
        h = np.diag(np.linspace(0.0, 1.0, rep.m)).astype(complex)
        assert is_positive_energy(rep, 1j * h)
        assert not is_positive_energy(rep, -1j * (h + np.eye(rep.m)))

    @pytest.mark.parametrize("rep", REPS, ids=lambda r: r.name)
    def test_differential_from_images(self, rep):
        """log U(γ(e)) = dU(X) for small generators."""
        gamma = random_graded_hom_into(np.random.default_rng(7), rep.m)
        assert_allclose(differential_from_images(rep, gamma), rep.differential(gamma.x), atol=1e-8)
