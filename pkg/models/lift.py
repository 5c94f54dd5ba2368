from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Tuple

from .homomorphism import Homomorphism
from .packing import SignaturePacking
from .signed_graph import NEGATIVE, POSITIVE, SignedGraph


@dataclass(frozen=True)
class ContractedGraph:
    """Multigraph left after contracting one packing class.

    edges keep the index of the original edge they came from, so the
    signatures of the packing act on them unchanged; parallel edges remain.
    """

    n: int
    edges: Tuple[Tuple[int, int, int], ...]
    projection: Tuple[int, ...]

    @property
    def pairs(self) -> List[Tuple[int, int]]:
        return [(u, v) for u, v, _ in self.edges]

    def local_negative_set(self, original: Iterable[int]) -> FrozenSet[int]:
        """Translate original edge indices into positions in self.edges."""
        original = set(original)
        return frozenset(i for i, (_, _, source) in enumerate(self.edges) if source in original)

    def reduce(self, negative: Iterable[int]) -> SignedGraph:
        """Simple signed graph: same-sign parallel edges collapse, digons stay."""
        negative = set(negative)
        return SignedGraph.simplified(self.n, (
            (u, v, NEGATIVE if source in negative else POSITIVE) for u, v, source in self.edges))

    def to_dict(self) -> dict:
        return {
            'n': self.n,
            'edges': [list(e) for e in self.edges],
            'projection': list(self.projection)
        }


@dataclass(frozen=True)
class LiftInstance:
    """Everything the EDC lift consumes.

    graph carries sigma; packing has l+1 classes; index picks the class that is
    contracted; hom_to_bhat maps the contracted graph, signed by the first
    remaining class (reference_index), to bhat.
    """

    graph: SignedGraph
    packing: SignaturePacking
    index: int
    bhat: SignedGraph
    contraction: ContractedGraph
    reference_index: int
    hom_to_bhat: Homomorphism

    def to_dict(self) -> dict:
        return {
            'graph': self.graph.to_dict(),
            'packing': self.packing.to_dict(),
            'index': self.index,
            'bhat': self.bhat.to_dict(),
            'contraction': self.contraction.to_dict(),
            'reference_index': self.reference_index,
            'hom_to_bhat': self.hom_to_bhat.to_dict()
        }
