"""Tests for JSON encoding.

Tests the pure functions in src/core/codec.py.
"""

import json
import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.core.codec import (
    decode_array,
    decode_pair,
    decode_word,
    encode_array,
    encode_float,
    encode_pair,
    encode_word,
    to_jsonable,
)
from src.core.conformal import NegInversion, Structure, Translate
from src.core.jordan import make_algebra
from src.core.sampling import random_modular_pair


class TestEncodeFloat:
    """Tests for encode_float()."""

    @pytest.mark.parametrize("x", [math.inf, -math.inf, math.nan])
    def test_non_finite_becomes_none(self, x):
        """nan and ±inf are not valid JSON."""
        assert encode_float(x) is None

    def test_finite_passes_through(self):
        """Finite floats are unchanged."""
        assert encode_float(np.float32(0.5)) == 0.5


class TestToJsonable:
    """Tests for to_jsonable()."""

    def test_numpy_values_become_builtins(self):
        """Scalars, arrays and tuples become plain JSON values."""
        value = to_jsonable({"a": np.int64(3), "b": np.bool_(True), "c": (1.0, np.inf), "d": np.array([1.0, 2.0])})
        assert value == {"a": 3, "b": True, "c": [1.0, None], "d": [1.0, 2.0]}
        assert type(value["a"]) is int and type(value["b"]) is bool

    def test_complex_becomes_pair(self):
        """Complex numbers are [re, im]."""
        assert to_jsonable(1 - 2j) == [1.0, -2.0]

    def test_output_is_strict_json(self):
        """json.dumps with allow_nan=False accepts the result."""
        json.dumps(to_jsonable({"r": [math.nan, np.complex128(math.inf)]}), allow_nan=False)


class TestArrays:
    """Tests for encode_array() and decode_array()."""

    def test_complex_layout(self):
        """Complex entries are stored as trailing [re, im] pairs."""
        assert encode_array(np.array([[1 + 2j]])) == [[[1.0, 2.0]]]

    def test_complex_decode_rejects_flat(self):
        """A complex array must end in pairs."""
        with pytest.raises(ValueError):
            decode_array([1.0, 2.0, 3.0], complex_valued=True)

    def test_none_decodes_to_nan(self):
        """Encoded non-finite entries come back as nan."""
        assert math.isnan(decode_array(encode_array(np.array([np.inf])), complex_valued=False)[0])


class TestStructures:
    """Tests for pair and word encoding."""

    def test_pair_survives_json(self):
        """A modular pair decodes to the same Δ and J after a JSON trip."""
        pair = random_modular_pair(np.random.default_rng(0), 3)
        back = decode_pair(json.loads(json.dumps(encode_pair(pair))))
        assert_allclose(back.delta, pair.delta, atol=1e-15)
        assert_allclose(back.j.matrix, pair.j.matrix, atol=1e-15)

    def test_word_keeps_generators(self):
        """Every generator kind is tagged and restored in order."""
        alg = make_algebra("herm", 2)
        word = (Translate(np.array([[1.0, 1j], [-1j, 2.0]])), NegInversion(), Structure(2.0 * np.eye(alg.dim)))
        data = encode_word(alg, word)
        assert [g["op"] for g in data["word"]] == ["translate", "neg_inversion", "structure"]
        alg2, back = decode_word(json.loads(json.dumps(data)))
        assert alg2 == alg
        assert_allclose(back[0].b, word[0].b)
        assert isinstance(back[1], NegInversion)
        assert_allclose(back[2].t, word[2].t)

    def test_unknown_generator_rejected(self):
        """Unknown ops raise ValueError."""
        with pytest.raises(ValueError, match="unknown generator"):
            decode_word({"algebra": "spin", "n": 3, "word": [{"op": "rotate"}]})
