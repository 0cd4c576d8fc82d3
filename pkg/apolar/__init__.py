"""apolar/__init__.py"""
"""
Apolar: exact apolar inner products <det X, g> for skew circuits g, the detection problems
that reduce to them, and an apolar-algebra lab.

Public API re-exports:
- Core: ScalarMode, EXACT, EngineOptions, Monomial, SparsePoly, apolar_inner_product, diff_span_dim
- Circuits: LinearForm, Circuit, SkewCircuit, CircuitBuilder, parse_circuit, serialize_circuit, expand_circuit
- Engines: SymbolicMatrix, gendiff_evaluate, HankelArrangement, hankeldiff_evaluate, straighten_row_omitted
- Detection: detect_cycle, detect_path, detect_squarefree, sing_decide, matroid_parity_decide,
  matroid_intersection_decide
- Lab: apolar_monomial_basis, structure_tensor, algebra_evaluate, subset_convolution_fast,
  clifford_det_decomposition, waring_to_tensor
"""

# Core
from .shared.config import EngineOptions
from .shared.errors import ApolarError
from .shared.scalars import EXACT, ScalarMode
from .algebra.models import Monomial, SparsePoly
from .algebra.engine import (apolar_inner_product, apply_diff_operator, diff_span_dim, generic_determinant,
                             generic_hankel_determinant, permanent, permanent_polynomial)

# Circuits
from .circuits.models import Circuit, CircuitBuilder, LinearForm, SkewCircuit
from .circuits.parser import parse_circuit, serialize_circuit
from .circuits.engine import expand_circuit

# Engines
from .minors.models import MinorVector, SymbolicMatrix, minor_basis_size
from .minors.engine import gendiff_evaluate
from .hankel.models import HankelArrangement, MaxMinorVector, maximal_minor_count
from .hankel.straighten import straighten_row_omitted
from .hankel.engine import fibonacci_bound_holds, hankeldiff_evaluate, vandermonde_hankel

# Detection
from .detection.models import DetectionRun, DirectedGraph
from .detection.engine import (detect_cycle, detect_path, detect_squarefree, matroid_intersection_decide,
                               matroid_parity_decide, sing_decide)

# Lab
from .lab.models import ApolarAlgebra, StructureTensor
from .lab.engine import algebra_evaluate, apolar_monomial_basis, det_basis_product, structure_tensor
from .lab.convolution import subset_convolution_fast, subset_convolution_naive
from .lab.clifford import clifford_det_decomposition, clifford_matrix_iso, clifford_structure_tensor
from .lab.waring import waring_to_tensor
