"""De Groot duals of finite topologies, their dual sequences and classes."""

from .classification import Classification, classify, classify_topology
from .dualization import DualSequence, compact_saturated_family, dual, dual_power, dual_sequence
from .finite import FiniteTopology, PointSet, Preorder, SetFamily, validate_topology
from .symbolic import SymbolicTopology, parse_symbolic, symbolic_dual, symbolic_dual_sequence

__all__ = [
    "Classification",
    "DualSequence",
    "FiniteTopology",
    "PointSet",
    "Preorder",
    "SetFamily",
    "SymbolicTopology",
    "classify",
    "classify_topology",
    "compact_saturated_family",
    "dual",
    "dual_power",
    "dual_sequence",
    "parse_symbolic",
    "symbolic_dual",
    "symbolic_dual_sequence",
    "validate_topology",
]
__version__ = "0.1.0"
