"""Borsuk numbers of matroids and chromatic numbers of matroid Kneser graphs."""

from ._jit import USE_NUMBA
from .coloring import (
    INFINITE,
    BorsukResult,
    ChromaticResult,
    Coloring,
    PartitionCertificate,
    borsuk_number,
    chromatic_number,
    has_borsuk_property,
    validate_certificate,
)
from .graphs import ConflictGraph, diameter_graph, kneser_graph, schrijver_graph
from .matroid import Matroid, dual, from_bases, from_masks
from .verify import VerificationReport, check_claim, has_bip, has_strong_bip, has_two_disjoint_bases

__version__ = "0.1.0"

__all__ = [
    "USE_NUMBA",
    "INFINITE",
    "BorsukResult",
    "ChromaticResult",
    "Coloring",
    "ConflictGraph",
    "Matroid",
    "PartitionCertificate",
    "VerificationReport",
    "borsuk_number",
    "check_claim",
    "chromatic_number",
    "diameter_graph",
    "dual",
    "from_bases",
    "from_masks",
    "has_bip",
    "has_borsuk_property",
    "has_strong_bip",
    "has_two_disjoint_bases",
    "kneser_graph",
    "schrijver_graph",
    "validate_certificate",
]
