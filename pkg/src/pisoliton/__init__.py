"""Exact computations for left-invariant almost paracontact almost paracomplex
Riemannian structures on Lie groups: curvature, Einstein-like fits and
para-Ricci-like solitons with arbitrary potential."""

__version__ = "0.1.0"

from .ring import HypExpr, parse, partial_derivative, evaluate
from .lie import StructureConstants, ChartFrame, validate_lie_algebra, frame_commutators, directional_derivative
from .structure import PiStructure, verify_axioms, associated_metric
from .curvature import levi_civita, riemann, ricci_and_scalars, sectional, nabla_tensor
from .classification import (
    is_para_sasaki_like,
    fit_einstein_like,
    check_ricci_operator_identities,
    check_eta_einstein_constants,
)
from .soliton import (
    VectorField,
    nabla_vector_field,
    lie_derivative_metric,
    solve_soliton_constants,
    verify_soliton_potential,
    verify_ricci_lie_derivative,
    verify_ricci_form_and_sections,
)
from .manifest import load_manifest, golden_manifest
from .analysis import build_instance, validate, analyze, paper_check

__all__ = [
    "HypExpr",
    "parse",
    "partial_derivative",
    "evaluate",
    "StructureConstants",
    "ChartFrame",
    "validate_lie_algebra",
    "frame_commutators",
    "directional_derivative",
    "PiStructure",
    "verify_axioms",
    "associated_metric",
    "levi_civita",
    "riemann",
    "ricci_and_scalars",
    "sectional",
    "nabla_tensor",
    "is_para_sasaki_like",
    "fit_einstein_like",
    "check_ricci_operator_identities",
    "check_eta_einstein_constants",
    "VectorField",
    "nabla_vector_field",
    "lie_derivative_metric",
    "solve_soliton_constants",
    "verify_soliton_potential",
    "verify_ricci_lie_derivative",
    "verify_ricci_form_and_sections",
    "load_manifest",
    "golden_manifest",
    "build_instance",
    "validate",
    "analyze",
    "paper_check",
]
