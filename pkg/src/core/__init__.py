"""Functional Core - Pure functions with no side effects.

This module contains all numerical logic as pure functions:
- Reflection and dilation spaces and their axiom harnesses
- Antilinear operators, modular pairs and standard subspaces
- The reflection space of standard subspaces and its geodesics
- Euclidean Jordan algebras, conformal words and the compression order
- The BGL map and the affine log-frequency model

All functions here are deterministic given their seeded generators and have no I/O.
"""

from src.core.antilinear import Conjugation, ModularPair, standard_conjugation
from src.core.config import RunConfig, validate_config
from src.core.errors import StandardSubspaceError
from src.core.jordan import JordanAlgebra, make_algebra
from src.core.reflection import verify_dilation_axioms, verify_reflection_axioms
from src.core.report import AxiomReport, CheckResult, SuiteResult
from src.core.stand_geometry import mod_bullet, stand_bullet
from src.core.standard_subspace import StandardSubspace, modular_objects, standard_from_modular

__all__ = [
    # Antilinear
    "Conjugation",
    "ModularPair",
    "standard_conjugation",
    # Config
    "RunConfig",
    "validate_config",
    # Errors
    "StandardSubspaceError",
    # Jordan
    "JordanAlgebra",
    "make_algebra",
    # Reflection
    "verify_reflection_axioms",
    "verify_dilation_axioms",
    # Reports
    "AxiomReport",
    "CheckResult",
    "SuiteResult",
    # Standard subspaces
    "StandardSubspace",
    "modular_objects",
    "standard_from_modular",
    "stand_bullet",
    "mod_bullet",
]
