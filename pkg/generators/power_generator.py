from models import NEGATIVE, POSITIVE, SignedGraph
from .base_generator import BaseGenerator
from .operations import power_graph


def parity_prefix_label(subset: int, k: int) -> int:
    """Bit i is the parity of |A ∩ {0..i}|, for i < k."""
    label, parity = 0, 0
    for i in range(k):
        parity ^= subset >> i & 1
        label |= parity << i
    return label


class PowerGenerator(BaseGenerator):
    """Even-order component of pow(C_{-(k+1)}).

    The cycle has edges b_i = {i, i+1 mod k+1} with b_k negative; the
    prefix-parity labelling sends b_i (i < k) to e_{i+1} and b_k to J.
    """

    @property
    def name(self) -> str:
        return "power"

    def _build(self, k: int) -> SignedGraph:
        cycle = self._cycle(k + 1)
        power = power_graph(cycle)
        labels = {A: parity_prefix_label(A, k) for A in range(power.n) if bin(A).count('1') % 2 == 0}
        return SignedGraph.simplified(1 << k, (
            (labels[u], labels[v], s) for u, v, s in power.edges if u in labels and v in labels))

    @staticmethod
    def _cycle(length: int) -> SignedGraph:
        """Path 0..length-1 closed by the negative edge b_k = {length-1, 0}."""
        edges = [(i, i + 1, POSITIVE) for i in range(length - 1)]
        edges.append((length - 1, 0, NEGATIVE))
        return SignedGraph(length, tuple(edges))
