from models import NEGATIVE, POSITIVE, SignedGraph, all_ones
from .base_generator import BaseGenerator


class ProjectionGenerator(BaseGenerator):
    """Identify antipodal vertices of H(k+1); edges in the direction e_{k+1} become negative.

    Each antipodal pair is represented by its member with coordinate k+1
    equal to 0, which is the Z_2^k label.
    """

    @property
    def name(self) -> str:
        return "projection"

    def _build(self, k: int) -> SignedGraph:
        top = 1 << k
        antipode = all_ones(k + 1)

        def representative(x: int) -> int:
            return x ^ antipode if x & top else x

        edges = []
        for x in range(1 << (k + 1)):
            for i in range(k + 1):
                y = x ^ (1 << i)
                if x < y:
                    sign = NEGATIVE if i == k else POSITIVE
                    edges.append((representative(x), representative(y), sign))
        return SignedGraph.simplified(top, edges)
