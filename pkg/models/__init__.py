from .signed_graph import (
    SignedGraph, Switching, POSITIVE, NEGATIVE, SIGNS, edge_key, flip, iter_bits
)
from .girth import GirthProfile, INF, Length, format_length, parse_length
from .minor_ops import (
    DeleteVertex, DeleteEdge, Switch, ContractPositiveEdge, SignedMinorOp, minor_op_from_dict
)
from .cayley import CayleySpec, PcDistance, PosetVertex, SpcMethod, SPC_METHODS, unit, all_ones
from .homomorphism import Homomorphism, NoHomCertificate, HomSearchResult, InducedEmbedding
from .coloring import (
    CircularColoring, CircularChromaticResult, DescentResult, circular_distance, format_fraction
)
from .packing import SignaturePacking, cut_edges
from .lift import ContractedGraph, LiftInstance
from .report import CheckResult, VerificationRun, Report
from .classification import Classification

__all__ = [
    'SignedGraph', 'Switching', 'POSITIVE', 'NEGATIVE', 'SIGNS', 'edge_key', 'flip', 'iter_bits',
    'GirthProfile', 'INF', 'Length', 'format_length', 'parse_length',
    'DeleteVertex', 'DeleteEdge', 'Switch', 'ContractPositiveEdge', 'SignedMinorOp',
    'minor_op_from_dict',
    'CayleySpec', 'PcDistance', 'PosetVertex', 'SpcMethod', 'SPC_METHODS', 'unit', 'all_ones',
    'Homomorphism', 'NoHomCertificate', 'HomSearchResult', 'InducedEmbedding',
    'CircularColoring', 'CircularChromaticResult', 'DescentResult', 'circular_distance',
    'format_fraction',
    'SignaturePacking', 'cut_edges',
    'ContractedGraph', 'LiftInstance',
    'CheckResult', 'VerificationRun', 'Report',
    'Classification'
]
