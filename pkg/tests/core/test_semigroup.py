"""Tests for the compression semigroup and the order on G_1/H_1.

Tests the pure functions in src/core/semigroup.py. Small sampling budgets
keep the Monte Carlo decisions fast.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.conformal import (
    NegInversion,
    Structure,
    Translate,
    compose,
    conf_act,
    exp_quadratic,
    tau_conj,
    word_equal,
)
from src.core.errors import AlgebraMismatch, ConePreconditionViolated, NotInG1
from src.core.jordan import make_algebra, random_cone_automorphism, random_cone_point, unit
from src.core.semigroup import (
    cone_image_arc,
    cone_image_inclusion,
    cone_samples,
    compresses_cone,
    compression_witnesses,
    in_right_wedge,
    is_cone_automorphism,
    koufany_compose,
    order_leq,
    same_coset,
    sl2_factorization,
    word_to_sl2,
)


BUDGET = {"interior": 64, "boundary": 16}
seeds = st.integers(min_value=0, max_value=2**32 - 1)


@pytest.fixture
def spin():
    return make_algebra("spin", 4)


@pytest.fixture
def line():
    return make_algebra("sym", 1)


def random_koufany_word(alg, rng):
    return koufany_compose(
        alg,
        random_cone_point(alg, rng, (0.1, 1.0)),
        Structure(random_cone_automorphism(alg, rng, 0.3)),
        random_cone_point(alg, rng, (0.1, 1.0)),
    )


class TestCompression:
    """Tests for compression_witnesses() and compresses_cone()."""

    def test_positive_translation_compresses(self, spin):
        """E_+ + e ⊆ E_+."""
        assert compresses_cone(spin, (Translate(unit(spin)),), **BUDGET)

    def test_negative_translation_has_witnesses(self, spin):
        """E_+ - e leaves the cone and the verdict records where."""
        verdict = compression_witnesses(spin, (Translate(-unit(spin)),), **BUDGET)
        assert not verdict.compresses
        assert verdict.checked == 80
        assert verdict.witnesses

    def test_odd_word_raises(self, spin):
        """-id maps E_+ onto -E_+ and is not in G_1."""
        with pytest.raises(NotInG1):
            compression_witnesses(spin, (Structure(-np.eye(spin.dim)),), **BUDGET)

    def test_samples_are_seeded(self, spin):
        """The same seed yields the same sample points."""
        a, b = cone_samples(spin, 4, 2), cone_samples(spin, 4, 2)
        assert all(np.array_equal(x, y) for x, y in zip(a, b))

    @pytest.mark.parametrize("kind,n", [("sym", 2), ("herm", 2), ("spin", 3)])
    @given(seed=seeds)
    @settings(max_examples=10, deadline=None)
    def test_koufany_words_compress(self, kind, n, seed):
        """exp(C_+) Aut(E_+)_0 exp(θ(C_+)) lies in the semigroup."""
        alg = make_algebra(kind, n)
        word = random_koufany_word(alg, np.random.default_rng(seed))
        assert compresses_cone(alg, word, **BUDGET)

    @pytest.mark.parametrize("kind,n", [("sym", 2), ("spin", 3)])
    @given(seed=seeds)
    @settings(max_examples=10, deadline=None)
    def test_products_of_compressions_compress(self, kind, n, seed):
        """The product of two Koufany words still maps E_+ into its closure."""
        alg = make_algebra(kind, n)
        rng = np.random.default_rng(seed)
        product = compose(random_koufany_word(alg, rng), random_koufany_word(alg, rng))
        assert compresses_cone(alg, product, **BUDGET)

    def test_koufany_rejects_outside_translation(self, spin):
        """c1 = -e is outside the closed cone."""
        with pytest.raises(ConePreconditionViolated):
            koufany_compose(spin, -unit(spin), Structure(np.eye(spin.dim)), unit(spin))

    def test_koufany_rejects_non_automorphism(self, spin):
        """-id does not preserve E_+."""
        with pytest.raises(ConePreconditionViolated):
            koufany_compose(spin, unit(spin), Structure(-np.eye(spin.dim)), unit(spin))

    def test_cone_automorphisms(self, spin):
        """Positive scalings preserve the cone, -id does not."""
        assert is_cone_automorphism(spin, Structure(2 * np.eye(spin.dim)))
        assert not is_cone_automorphism(spin, Structure(-np.eye(spin.dim)))


class TestOrder:
    """Tests for order_leq(), cone_image_inclusion() and same_coset()."""

    def test_translation_below_identity(self, spin):
        """t_e ≤ 1 but not 1 ≤ t_e."""
        t = (Translate(unit(spin)),)
        assert order_leq(spin, t, (), **BUDGET)
        assert not order_leq(spin, (), t, **BUDGET)

    def test_order_matches_cone_images(self, spin):
        """g1 ≤ g2 iff g1(E_+) ⊆ g2(E_+)."""
        t = (Translate(unit(spin)),)
        assert cone_image_inclusion(spin, t, (), **BUDGET)
        assert not cone_image_inclusion(spin, (), t, **BUDGET)

    def test_reflexive(self, spin):
        """g ≤ g."""
        g = (Translate(np.array([0.3, -0.2, 0.1, 0.0])), Structure(2 * np.eye(spin.dim)))
        assert order_leq(spin, g, g, **BUDGET)

    def test_tau_reverses_order(self, spin):
        """τ(g1) ≤ τ(g2) iff g2 ≤ g1."""
        t = (Translate(unit(spin)),)
        assert order_leq(spin, tau_conj(()), tau_conj(t), **BUDGET)

    def test_scalings_share_coset(self, spin):
        """Positive scalings fix E_+, so they lie in H_1."""
        assert same_coset(spin, (Structure(3 * np.eye(spin.dim)),), (), **BUDGET)

    def test_right_wedge(self, spin):
        """(0, 1, 0, 0) is in W_R; e is not."""
        assert in_right_wedge(spin, np.array([0.0, 1.0, 0.0, 0.0]))
        assert not in_right_wedge(spin, unit(spin))

    def test_right_wedge_needs_spin(self):
        """Matrix algebras carry no wedge."""
        with pytest.raises(AlgebraMismatch):
            in_right_wedge(make_algebra("sym", 2), np.eye(2))


class TestRankOne:
    """Tests for word_to_sl2(), sl2_factorization() and cone_image_arc()."""

    def test_translation_matrix(self, line):
        """t_b is [[1, b], [0, 1]]."""
        np.testing.assert_allclose(word_to_sl2(line, (Translate(np.array([[2.0]])),)), [[1.0, 2.0], [0.0, 1.0]])

    def test_orientation_reversal_rejected(self, line):
        """Negative scalings are not in SL2(R)."""
        with pytest.raises(NotInG1):
            word_to_sl2(line, (Structure(np.array([[-1.0]])),))

    def test_spin_rejected(self, spin):
        """The SL2 model needs E = R."""
        with pytest.raises(AlgebraMismatch):
            word_to_sl2(spin, ())

    def test_factorization_round_trip(self, line):
        """Compressions factor with c1, c2 ≥ 0 and rebuild the same map."""
        word = koufany_compose(line, np.array([[0.5]]), Structure(np.array([[2.0]])), np.array([[1.5]]))
        factors = sl2_factorization(word_to_sl2(line, word))
        assert factors is not None
        assert factors.in_semigroup()
        assert factors.c1 == pytest.approx(0.5)
        assert factors.scale == pytest.approx(2.0)
        assert factors.c2 == pytest.approx(1.5)
        assert word_equal(line, factors.to_word(line), word)

    @given(
        factors=st.lists(
            st.tuples(st.sampled_from(["translate", "scale", "quadratic"]), st.floats(0.0, 2.0)),
            min_size=1,
            max_size=6,
        ),
    )
    @settings(max_examples=50, deadline=None)
    def test_compressing_words_factor(self, factors):
        """Products of t_c, positive scalings and exp(c θ(e)) with c ≥ 0 factor with c1, c2 ≥ 0."""
        line = make_algebra("sym", 1)
        pieces = {
            "translate": lambda v: (Translate(np.array([[v]])),),
            "scale": lambda v: (Structure(np.array([[math.exp(v - 1.0)]])),),
            "quadratic": lambda v: exp_quadratic(line, np.array([[v]]), 1.0),
        }
        word = compose(*(pieces[kind](value) for kind, value in factors))
        result = sl2_factorization(word_to_sl2(line, word))
        assert result is not None
        assert result.c1 >= -1e-12
        assert result.c2 >= -1e-12
        assert result.in_semigroup()
        assert word_equal(line, result.to_word(line), word)

    def test_inversion_has_no_factorization(self, line):
        """-j has m[1,1] = 0."""
        assert sl2_factorization(word_to_sl2(line, (NegInversion(),))) is None

    def test_translation_arc(self, line):
        """t_2 maps (0, ∞) to (2, ∞)."""
        arc = cone_image_arc(line, (Translate(np.array([[2.0]])),))
        assert arc.kind == "half-line"
        assert arc.start == pytest.approx(2.0)
        assert arc.end == math.inf
        assert arc.contains(5.0)
        assert not arc.contains(1.0)

    def test_inversion_arc(self, line):
        """-j maps (0, ∞) to (-∞, 0)."""
        arc = cone_image_arc(line, (NegInversion(),))
        assert arc.kind == "half-line"
        assert arc.end < 0
        assert arc.contains(float(conf_act(line, (NegInversion(),), np.array([[3.0]]))[0, 0]))
