"""Exact realization of bijections as abelian group automorphisms.

Three decision problems, each with an explicit witness on success:

* can a permutation of n points be relabeled into x -> k*x on Z_n?
* can a permutation of p*p points be relabeled into an invertible 2x2
  matrix action on Z_p x Z_p?
* which orbit-length sets are achievable by a single unimodular integer
  matrix acting on the integer lattice, and what does such a matrix look
  like?
"""

from .errors import BudgetExceededError, NotRealizableError
from .structures import (
    CycleStructure,
    ParseError,
    Permutation,
    ZStructureDescriptor,
    canonicalize,
    format_descriptor,
    format_permutation,
    format_structure,
    parse_descriptor,
    parse_permutation,
    parse_structure,
    structure_of,
)
from .finite_realizer import (
    CyclicWitness,
    FpMatrix2,
    P2Witness,
    check_auto_p2,
    check_cyclic,
    cyclic_structures,
    gl2_oracle,
    gln_oracle,
    p2_matrix_for_structure,
    p2_structures,
    realize_cyclic,
    realize_p2,
)
from .zn_realizer import (
    CHAIN,
    Block,
    Violation,
    ZnRealization,
    build_automorphism,
    classify_vector,
    lcm_closure,
    validate_descriptor,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "NotRealizableError",
    "CycleStructure",
    "ParseError",
    "Permutation",
    "ZStructureDescriptor",
    "canonicalize",
    "format_descriptor",
    "format_permutation",
    "format_structure",
    "parse_descriptor",
    "parse_permutation",
    "parse_structure",
    "structure_of",
    "CyclicWitness",
    "FpMatrix2",
    "P2Witness",
    "check_auto_p2",
    "check_cyclic",
    "cyclic_structures",
    "gl2_oracle",
    "gln_oracle",
    "p2_matrix_for_structure",
    "p2_structures",
    "realize_cyclic",
    "realize_p2",
    "CHAIN",
    "Block",
    "Violation",
    "ZnRealization",
    "build_automorphism",
    "classify_vector",
    "lcm_closure",
    "validate_descriptor",
    "__version__",
]
