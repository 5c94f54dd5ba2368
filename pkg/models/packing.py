from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Tuple

from .signed_graph import SignedGraph, Switching


def cut_edges(graph: SignedGraph, switching: Switching) -> FrozenSet[int]:
    """Indices of the edges of graph crossing the cut (X, V - X)."""
    return frozenset(i for i, (u, v, _) in enumerate(graph.edges) if switching.crosses(u, v))


@dataclass(frozen=True)
class SignaturePacking:
    """Signatures sigma_i = sigma switched at cuts[i], negative on E_i = E-(sigma) xor delta(X_i)."""

    graph: SignedGraph
    cuts: Tuple[Switching, ...]

    @property
    def size(self) -> int:
        return len(self.cuts)

    @cached_property
    def negative_sets(self) -> Tuple[FrozenSet[int], ...]:
        base = self.graph.negative_edge_indices
        return tuple(base ^ cut_edges(self.graph, cut) for cut in self.cuts)

    def is_disjoint(self) -> bool:
        seen = set()
        for negative in self.negative_sets:
            if seen & negative:
                return False
            seen |= negative
        return True

    def is_partition(self) -> bool:
        """Every edge is negative in exactly one signature."""
        covered = [0] * self.graph.edge_count
        for negative in self.negative_sets:
            for i in negative:
                covered[i] += 1
        return all(c == 1 for c in covered)

    def to_dict(self) -> dict:
        return {
            'size': self.size,
            'cuts': [cut.to_dict() for cut in self.cuts],
            'negative_sets': [[list(self.graph.edges[i]) for i in sorted(negative)]
                              for negative in self.negative_sets]
        }

    @classmethod
    def from_dict(cls, graph: SignedGraph, data: dict) -> 'SignaturePacking':
        return cls(graph, tuple(Switching.from_dict(c) for c in data.get('cuts', [])))
