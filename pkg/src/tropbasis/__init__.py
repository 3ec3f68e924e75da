"""Tropical bases of simple matroids.

Matroids are given by their circuits on the ground set ``{1..n}``; subsets
are int bit masks (element ``i`` is bit ``i - 1``) and most functions also
accept lists of elements.
"""

from ._bits import as_mask, elements, fmt, fmt_family, from_elements
from .catalog import (doubled_line_dual, fano, from_spec, graphic, nonfano, p7,
                      uniform)
from .errors import (CircuitAxiomError, CircuitIsClosed, CircuitNotInBasis,
                     ComparablePair, EliminationFailure, EmptyCircuit,
                     InvalidInput, InvalidParams, NonPrimeModulus,
                     NotACircuit, NotADoubleCircuit, NotSimple,
                     ResourceCapExceeded, TropBasisError, UnknownName)
from .matroid import Matroid, from_gf_matrix, validate_circuit_family
from .report import AnalysisReport, analyze
from .tropical import (BasisVerdict, DoubleCircuitDecomposition,
                       WitnessHypergraph, build_witness_hypergraph,
                       closed_circuits, double_circuit_decompose,
                       enumerate_minimal_tropical_bases,
                       has_unique_minimal_basis, is_orthogonal,
                       is_tropical_basis, min_orthogonal_sets, theorem2_check,
                       theorem3_swap, witnesses)

__version__ = "0.1.0"
