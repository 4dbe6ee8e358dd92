"""Exact root systems, Chevalley bases and compact real forms of simple Lie algebras."""

from .arith import GaussianRational, SymMatrix, conj, is_negative_definite
from .chevalley import (
    AlgebraElement,
    StructureConstants,
    bracket,
    build_constants,
    chevalley_involution,
    constants,
    diagram_action,
    weyl_involution,
)
from .classifier import ClassificationRecord, classify, condition_v, full_table
from .compact_form import certify_compact, compact_basis, killing_gram
from .root_system import DynkinType, RootSystem, cartan_matrix, generate_roots, parse_type, root_string, root_system
from .weyl import DiagramAutomorphism, WeylElement, longest_element, minus_w0, reflect

__all__ = [
    "AlgebraElement", "ClassificationRecord", "DiagramAutomorphism", "DynkinType",
    "GaussianRational", "RootSystem", "StructureConstants", "SymMatrix", "WeylElement",
    "bracket", "build_constants", "cartan_matrix", "certify_compact", "chevalley_involution",
    "classify", "compact_basis", "condition_v", "conj", "constants", "diagram_action",
    "full_table", "generate_roots", "is_negative_definite", "killing_gram", "longest_element",
    "minus_w0", "parse_type", "reflect", "root_string", "root_system", "weyl_involution",
]
__version__ = "0.1.0"
