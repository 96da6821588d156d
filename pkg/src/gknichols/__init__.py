"""Exact symbolic tools for Nichols algebras of blocks-and-points braidings.

The package computes graded truncations of Nichols algebras over abelian
groups, classifies braided vector spaces by finite or infinite
Gelfand-Kirillov dimension, and verifies the catalogued presentations
degree by degree with skew derivations.
"""

from .scalars import Scalar, ScalarRing, parse_scalar, print_scalar
from .braidings import (BraidedSpaceSpec, DiagonalBraiding,
                        PaleBlockPointSpec, braid_letters, diagonalize,
                        ghost, interaction, spec_from_json, spec_to_json)
from .freealgebra import (TensorElement, braided_commutator,
                          expression_degree, parse_element, print_element,
                          skew_derivation)
from .nichols import (Presentation, compute_truncation, infinite_probe,
                      is_zero_in_nichols, mu_sequence, pbw_hilbert_coeffs,
                      quantum_symmetrizer_kernel, verify_presentation,
                      z_element)
from .weyl import (DynkinDiagram, cartan_coeff, cartan_data, classify_cartan,
                   dynkin, match_table_pattern, reflect)
from .flourished import (FiniteGK, FlourishedGraph, InfiniteGK, Unknown,
                         build_flourished, classify, classify_pale,
                         is_admissible, is_domain)
from . import catalog

__version__ = "0.1.0"

__all__ = [
    "Scalar", "ScalarRing", "parse_scalar", "print_scalar",
    "BraidedSpaceSpec", "DiagonalBraiding", "PaleBlockPointSpec",
    "braid_letters", "diagonalize", "ghost", "interaction",
    "spec_from_json", "spec_to_json",
    "TensorElement", "braided_commutator", "expression_degree",
    "parse_element", "print_element", "skew_derivation",
    "Presentation", "compute_truncation", "infinite_probe",
    "is_zero_in_nichols", "mu_sequence", "pbw_hilbert_coeffs",
    "quantum_symmetrizer_kernel", "verify_presentation", "z_element",
    "DynkinDiagram", "cartan_coeff", "cartan_data", "classify_cartan",
    "dynkin", "match_table_pattern", "reflect",
    "FiniteGK", "FlourishedGraph", "InfiniteGK", "Unknown",
    "build_flourished", "classify", "classify_pale", "is_admissible",
    "is_domain",
    "catalog",
]
