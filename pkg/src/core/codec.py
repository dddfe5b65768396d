"""JSON-compatible encoding of matrices, subspaces, pairs and words - Pure functions.

Complex arrays are stored as nested lists of [re, im] pairs; real arrays as
nested lists of floats. Non-finite floats become None so that the encoded
value is valid strict JSON.
"""

import math
from typing import Any

import numpy as np
from numpy.typing import NDArray

from src.core.antilinear import Conjugation, ModularPair
from src.core.conformal import ConfWord, Generator, NegInversion, Structure, Translate
from src.core.jordan import Element, JordanAlgebra, check_element, make_algebra
from src.core.linalg import ComplexMatrix, as_complex
from src.core.standard_subspace import GradedHom, StandardSubspace


def encode_float(x: float) -> float | None:
    """Float for JSON; None for nan and ±inf."""
    x = float(x)
    return x if math.isfinite(x) else None


def to_jsonable(value: Any) -> Any:
    """Recursively convert numpy scalars, arrays and tuples into JSON values.

    Pure function.

    Args:
        value: Any nesting of dicts, lists, tuples, numbers and arrays

    Returns:
        Value built from dict, list, str, int, float, bool and None only
    """
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return encode_array(value)
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return encode_float(float(value))
    if isinstance(value, (complex, np.complexfloating)):
        return [encode_float(value.real), encode_float(value.imag)]
    return value


def encode_array(a: NDArray[np.generic]) -> Any:
    """Nested lists; complex entries become [re, im]."""
    a = np.asarray(a)
    if np.iscomplexobj(a):
        pairs = np.stack([a.real, a.imag], axis=-1)
        return _float_lists(pairs.tolist())
    return _float_lists(a.astype(np.float64).tolist())


def _float_lists(value: Any) -> Any:
    if isinstance(value, list):
        return [_float_lists(v) for v in value]
    return encode_float(value)


def decode_array(data: Any, complex_valued: bool) -> NDArray[np.generic]:
    """Inverse of encode_array; None entries decode to nan.

    Raises:
        ValueError: If a complex array does not end in [re, im] pairs
    """
    raw = np.array(data, dtype=np.float64)
    if not complex_valued:
        return raw
    if raw.ndim == 0 or raw.shape[-1] != 2:
        raise ValueError("complex arrays are encoded as [re, im] pairs")
    return raw[..., 0] + 1j * raw[..., 1]


def decode_matrix(data: Any) -> ComplexMatrix:
    return as_complex(decode_array(data, complex_valued=True))


def encode_subspace(v: StandardSubspace) -> dict[str, Any]:
    return {"type": "standard_subspace", "basis": encode_array(v.basis)}


def decode_subspace(data: dict[str, Any]) -> StandardSubspace:
    """Basis is taken as stored; re-validate with make_standard() if needed."""
    return StandardSubspace(decode_matrix(data["basis"]))


def encode_pair(pair: ModularPair) -> dict[str, Any]:
    return {"type": "modular_pair", "delta": encode_array(pair.delta), "j": encode_array(pair.j.matrix)}


def decode_pair(data: dict[str, Any]) -> ModularPair:
    return ModularPair(decode_matrix(data["delta"]), Conjugation(decode_matrix(data["j"])))


def encode_hom(gamma: GradedHom) -> dict[str, Any]:
    return {"type": "graded_hom", "a": encode_array(gamma.a), "j": encode_array(gamma.j.matrix)}


def decode_hom(data: dict[str, Any]) -> GradedHom:
    return GradedHom(decode_matrix(data["a"]), Conjugation(decode_matrix(data["j"])))


def encode_element(alg: JordanAlgebra, x: Element) -> dict[str, Any]:
    return {"algebra": alg.kind.value, "n": alg.n, "value": encode_array(check_element(alg, x))}


def decode_element(data: dict[str, Any]) -> tuple[JordanAlgebra, Element]:
    alg = make_algebra(data["algebra"], int(data["n"]))
    value = decode_array(data["value"], complex_valued=np.dtype(alg.dtype).kind == "c")
    return alg, check_element(alg, value)


def _encode_generator(gen: Generator) -> dict[str, Any]:
    if isinstance(gen, Translate):
        return {"op": "translate", "b": encode_array(np.asarray(gen.b))}
    if isinstance(gen, Structure):
        return {"op": "structure", "t": encode_array(gen.t)}
    return {"op": "neg_inversion"}


def encode_word(alg: JordanAlgebra, word: ConfWord) -> dict[str, Any]:
    """Word in outermost-first order, tagged with its algebra."""
    return {"algebra": alg.kind.value, "n": alg.n, "word": [_encode_generator(g) for g in word]}


def decode_word(data: dict[str, Any]) -> tuple[JordanAlgebra, ConfWord]:
    """Inverse of encode_word.

    Raises:
        ValueError: On an unknown generator tag
    """
    alg = make_algebra(data["algebra"], int(data["n"]))
    complex_valued = np.dtype(alg.dtype).kind == "c"
    word: list[Generator] = []
    for item in data["word"]:
        op = item.get("op")
        if op == "translate":
            word.append(Translate(check_element(alg, decode_array(item["b"], complex_valued))))
        elif op == "structure":
            word.append(Structure(decode_array(item["t"], complex_valued=False)))
        elif op == "neg_inversion":
            word.append(NegInversion())
        else:
            raise ValueError(f"unknown generator {op!r}")
    return alg, tuple(word)
