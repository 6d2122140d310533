"""Exact polymology of Grassmannians with deformed tangent bundles."""
from .bwb import BwbResult, StandingAssumptionWarning, bundle_cohomology
from .coeffs import I, Poly
from .deform import BMatrix, char_invariants, et_transform, is_degenerate
from .quantum import QuantumClass, q_mult
from .ring import RingSpec, graded_dim, kappa_tilde, mult_mod, normal_form, vlocus_test
from .schur import BACKEND, SchurClass, giambelli, lr_coeff, lr_product, mult

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "BMatrix", "BwbResult", "I", "Poly", "QuantumClass", "RingSpec", "SchurClass",
    "StandingAssumptionWarning", "bundle_cohomology", "char_invariants", "et_transform",
    "giambelli", "graded_dim", "is_degenerate", "kappa_tilde", "lr_coeff", "lr_product",
    "mult", "mult_mod", "normal_form", "q_mult", "vlocus_test",
]
