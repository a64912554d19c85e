"""Bijections between functions and doubly/triply rooted labeled trees, with
exact checks of the counting identities they explain."""
from .bijections import (
    OrbitReport,
    RootedTriple,
    joyal_forward,
    joyal_inverse,
    merge,
    orbit_report,
    phi_forward,
    phi_inverse,
    split,
)
from .errors import TreeBijError
from .trees import (
    DoublyRootedTree,
    FiniteFunction,
    LabeledTree,
    RootedTree,
    TriplyRootedTree,
    validate_tree,
)

__version__ = "0.1.0"

__all__ = [
    "DoublyRootedTree",
    "FiniteFunction",
    "LabeledTree",
    "OrbitReport",
    "RootedTree",
    "RootedTriple",
    "TreeBijError",
    "TriplyRootedTree",
    "joyal_forward",
    "joyal_inverse",
    "merge",
    "orbit_report",
    "phi_forward",
    "phi_inverse",
    "split",
    "validate_tree",
]
