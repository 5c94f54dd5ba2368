from models import NEGATIVE, POSITIVE, PosetVertex, SignedGraph
from .base_generator import BaseGenerator


class PosetGenerator(BaseGenerator):
    """Pairs {A, complement} over {0..k}, adjacent when A and B differ in one element s.

    Element k is the single negative element; a pair is labelled by the
    characteristic vector of its member that avoids k.
    """

    @property
    def name(self) -> str:
        return "poset"

    def _build(self, k: int) -> SignedGraph:
        edges = []
        for rep in range(1 << k):
            vertex = PosetVertex.from_label(rep, k)
            for s in range(k + 1):
                neighbour = PosetVertex.from_subset(vertex.subset ^ {s}, k)
                sign = NEGATIVE if s == k else POSITIVE
                edges.append((vertex.label, neighbour.label, sign))
        return SignedGraph.simplified(1 << k, edges)
