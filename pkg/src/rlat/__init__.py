"""Finite commutative idempotent involutive residuated lattices.

Validation, Boolean-block partitions, congruence lattices, gluing and its
inverse decomposition, stock generator families, property decision
procedures, exhaustive enumeration up to isomorphism, and text file formats.
"""

from .congruence import (Congruence, ConLattice, NegConeFilter,
                         congruence_from_filter, congruence_lattice,
                         filters_of_negative_cone, quotient)
from .core import (AXIOM_NAMES, AxiomReport, DerivedOps, FiniteInRL,
                   OrderPair, Report, derived_operations,
                   elementary_properties, find_isomorphism,
                   subalgebra_generated, validate)
from .decompose import (DecompositionTree, Leaf, Node, SplitResult,
                        decompose, find_atoms, reassemble, split)
from .fileformat import (GluingSpecFile, ParseError, build_spec, dot_export,
                         emit, emit_gluing, load_algebra, parse,
                         parse_gluing, write_tree)
from .generate import boolean_algebra, build_an
from .gluing import GluedAlgebra, GluingSpec, glue, validate_gluing
from .partition import (BooleanBlock, Partition, block,
                        join_incompatibility_witness, partition,
                        verify_partition)
from .props import (PropertyVerdict, distributive_semilattice_table,
                    is_distributive_semilattice, is_lattice_distributive,
                    is_semilinear)
from .search import Corpus, enumerate_up_to_iso

__all__ = [
    "AXIOM_NAMES", "AxiomReport", "BooleanBlock", "ConLattice", "Congruence",
    "Corpus", "DecompositionTree", "DerivedOps", "FiniteInRL",
    "GluedAlgebra", "GluingSpec", "GluingSpecFile", "Leaf", "NegConeFilter",
    "Node", "OrderPair", "ParseError", "Partition", "PropertyVerdict",
    "Report", "SplitResult", "block", "boolean_algebra", "build_an",
    "build_spec", "congruence_from_filter", "congruence_lattice",
    "decompose", "derived_operations", "distributive_semilattice_table",
    "dot_export", "elementary_properties", "emit", "emit_gluing",
    "enumerate_up_to_iso", "filters_of_negative_cone", "find_atoms",
    "find_isomorphism", "glue", "is_distributive_semilattice",
    "is_lattice_distributive", "is_semilinear",
    "join_incompatibility_witness", "load_algebra", "parse", "parse_gluing",
    "partition", "quotient", "reassemble", "split", "subalgebra_generated",
    "validate", "validate_gluing", "verify_partition", "write_tree",
]
