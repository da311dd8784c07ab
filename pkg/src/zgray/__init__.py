"""Linearity of Gray images of Z_{2^L}-additive codes."""

from .additive import AdditiveCode, DecompositionView, decomposition_view, schur_closed_chain
from .binary import BinaryLinearCode, BudgetExceeded
from .cyclic import (CyclicCodeSpec, CyclicContext, GF2mField, build_field_for, code_from_I,
                     cyclotomic_cosets, minimal_polynomial, square_cyclic, square_defining,
                     stabilization_level)
from .families import hadamard, macdonald, simplex_alpha, simplex_beta, verify_family_theorems
from .gray import (GrayTable, build_gray_table, gray, gray_image, lee_weight, min_hamming_distance,
                   min_lee_distance, weight_formulas)
from .linearity import (LinearityVerdict, brute_force_linear, decide, linear_by_decomposition,
                        linear_by_schur_sum, nonlinear_by_schur_witness)
from .nested import NestedSpec, nested_code, reed_muller, rm_chain
from .ring import BitPlanes, BitVector, RingVector, compose, decompose

__all__ = [
    "AdditiveCode", "BinaryLinearCode", "BitPlanes", "BitVector", "BudgetExceeded",
    "CyclicCodeSpec", "CyclicContext", "DecompositionView", "GF2mField", "GrayTable",
    "LinearityVerdict", "NestedSpec", "RingVector", "brute_force_linear", "build_field_for",
    "build_gray_table", "code_from_I", "compose", "cyclotomic_cosets", "decide", "decompose",
    "decomposition_view", "gray", "gray_image", "hadamard", "lee_weight", "linear_by_decomposition",
    "linear_by_schur_sum", "macdonald", "min_hamming_distance", "min_lee_distance",
    "minimal_polynomial", "nested_code", "nonlinear_by_schur_witness", "reed_muller", "rm_chain",
    "schur_closed_chain", "simplex_alpha", "simplex_beta", "square_cyclic", "square_defining",
    "stabilization_level", "verify_family_theorems", "weight_formulas",
]
