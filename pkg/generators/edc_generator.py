from models import NEGATIVE, POSITIVE, SignedGraph, Switching, flip
from .base_generator import BaseGenerator
from .operations import extended_double_cover


class EdcGenerator(BaseGenerator):
    """SPC(k) = EDC(SPC(k-1)) starting from the digon.

    EDC puts the new coordinate on the rungs, so the rungs come out as the
    negative e_k edges and the crossed strips as positive J edges; switching
    the half with bit k-1 set restores the canonical signature.
    """

    min_dim = 2

    @property
    def name(self) -> str:
        return "edc"

    def _build(self, k: int) -> SignedGraph:
        graph = SignedGraph(2, ((0, 1, POSITIVE), (0, 1, NEGATIVE)))
        for dim in range(2, k + 1):
            doubled = extended_double_cover(graph)
            half = 1 << (dim - 1)
            switching = Switching(frozenset(range(half, 2 * half)))
            graph = SignedGraph(doubled.n, tuple(
                (u, v, flip(s) if switching.crosses(u, v) else s)
                for u, v, s in doubled.edges))
        return graph
