import networkx as nx

from models import NEGATIVE, POSITIVE, SignedGraph, all_ones
from .base_generator import BaseGenerator


class AugmentedGenerator(BaseGenerator):
    """The all-positive hypercube H(k) plus a negative edge between antipodal vertices."""

    @property
    def name(self) -> str:
        return "augmented"

    def _build(self, k: int) -> SignedGraph:
        cube = nx.hypercube_graph(k)
        label = lambda coords: sum(bit << i for i, bit in enumerate(coords))
        edges = [(label(a), label(b), POSITIVE) for a, b in cube.edges()]
        antipode = all_ones(k)
        edges.extend((x, x ^ antipode, NEGATIVE) for x in range(1 << k) if x < x ^ antipode)
        return SignedGraph.simplified(1 << k, edges)
