from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

import networkx as nx

from utils.errors import InvalidEdge, InvalidVertex, NegativeLoopForbidden

POSITIVE = '+'
NEGATIVE = '-'
SIGNS = (POSITIVE, NEGATIVE)

Edge = Tuple[int, int, str]


def edge_key(edge: Edge) -> Tuple[int, int, int]:
    """Sort key: (u, v) then + before -."""
    u, v, sign = edge
    return u, v, 0 if sign == POSITIVE else 1


def flip(sign: str) -> str:
    return NEGATIVE if sign == POSITIVE else POSITIVE


def iter_bits(mask: int):
    """Yield the indices of the set bits of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Switching:
    """One side X of the cut (X, V - X) whose edges change sign."""

    vertices: FrozenSet[int] = frozenset()

    @classmethod
    def of(cls, vertices: Iterable[int]) -> 'Switching':
        return cls(frozenset(vertices))

    def __contains__(self, vertex: int) -> bool:
        return vertex in self.vertices

    def __len__(self) -> int:
        return len(self.vertices)

    def crosses(self, u: int, v: int) -> bool:
        return (u in self.vertices) != (v in self.vertices)

    def complement(self, n: int) -> 'Switching':
        return Switching(frozenset(range(n)) - self.vertices)

    def canonical(self, n: int) -> 'Switching':
        """The side not containing vertex 0; X and its complement switch alike."""
        if 0 in self.vertices:
            return self.complement(n)
        return self

    def symmetric_difference(self, other: 'Switching') -> 'Switching':
        return Switching(self.vertices ^ other.vertices)

    def to_dict(self) -> dict:
        return {'vertices': sorted(self.vertices)}

    @classmethod
    def from_dict(cls, data: dict) -> 'Switching':
        return cls(frozenset(data.get('vertices', [])))


@dataclass(frozen=True)
class SignedGraph:
    """Simple signed graph on vertices 0..n-1.

    Digons (one edge of each sign on a pair) and positive loops are allowed,
    negative loops are not. Edges are kept sorted by (u, v, sign) with u <= v,
    so equality of two graphs is equality of n and the edge tuple.
    """

    n: int
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise InvalidVertex(f"Vertex count must be non-negative, got {self.n}")
        seen = set()
        for edge in self.edges:
            u, v, sign = self._normalize(edge)
            if (u, v, sign) in seen:
                raise InvalidEdge(f"Duplicate edge ({u}, {v}, {sign})")
            seen.add((u, v, sign))
        object.__setattr__(self, 'edges', tuple(sorted(seen, key=edge_key)))

    def _normalize(self, edge: Sequence) -> Edge:
        if len(edge) != 3:
            raise InvalidEdge(f"Edge must be (u, v, sign), got {edge!r}")
        u, v, sign = edge
        if sign not in SIGNS:
            raise InvalidEdge(f"Unknown sign {sign!r} on edge ({u}, {v})")
        for vertex in (u, v):
            if not isinstance(vertex, int) or not 0 <= vertex < self.n:
                raise InvalidVertex(f"Vertex {vertex!r} out of range 0..{self.n - 1}")
        if u > v:
            u, v = v, u
        if u == v and sign == NEGATIVE:
            raise NegativeLoopForbidden(f"Negative loop at vertex {u}")
        return u, v, sign

    @classmethod
    def simplified(cls, n: int, edges: Iterable[Sequence]) -> 'SignedGraph':
        """Build a graph, collapsing repeated same-sign edges into one."""
        unique = set()
        for u, v, sign in edges:
            if u > v:
                u, v = v, u
            unique.add((u, v, sign))
        return cls(n, tuple(unique))

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Tuple[int, int]], sign: str = POSITIVE) -> 'SignedGraph':
        return cls.simplified(n, ((u, v, sign) for u, v in pairs))

    @classmethod
    def from_networkx(cls, graph: nx.Graph, sign: str = POSITIVE) -> 'SignedGraph':
        """Convert an unsigned networkx graph, relabelling nodes in sorted order."""
        nodes = sorted(graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls.from_pairs(len(nodes), ((index[a], index[b]) for a, b in graph.edges()), sign)

    # Adjacency

    @cached_property
    def positive_adjacency(self) -> Tuple[int, ...]:
        """Per-vertex bitset of positive neighbours; a positive loop sets the vertex's own bit."""
        adjacency = [0] * self.n
        for u, v, sign in self.edges:
            if sign == POSITIVE:
                adjacency[u] |= 1 << v
                adjacency[v] |= 1 << u
        return tuple(adjacency)

    @cached_property
    def negative_adjacency(self) -> Tuple[int, ...]:
        adjacency = [0] * self.n
        for u, v, sign in self.edges:
            if sign == NEGATIVE:
                adjacency[u] |= 1 << v
                adjacency[v] |= 1 << u
        return tuple(adjacency)

    @cached_property
    def incidence(self) -> Tuple[Tuple[Tuple[int, str], ...], ...]:
        """Per-vertex (neighbour, sign) pairs for non-loop edges."""
        lists: List[List[Tuple[int, str]]] = [[] for _ in range(self.n)]
        for u, v, sign in self.edges:
            if u != v:
                lists[u].append((v, sign))
                lists[v].append((u, sign))
        return tuple(tuple(items) for items in lists)

    @cached_property
    def edge_index(self) -> Dict[Edge, int]:
        return {edge: i for i, edge in enumerate(self.edges)}

    def adjacency(self, sign: str) -> Tuple[int, ...]:
        return self.positive_adjacency if sign == POSITIVE else self.negative_adjacency

    def has_edge(self, u: int, v: int, sign: str) -> bool:
        return bool(self.adjacency(sign)[u] >> v & 1)

    def has_positive_loop(self, v: int) -> bool:
        return bool(self.positive_adjacency[v] >> v & 1)

    def degree(self, v: int) -> int:
        """Number of distinct non-loop neighbours in the underlying graph."""
        mask = (self.positive_adjacency[v] | self.negative_adjacency[v]) & ~(1 << v)
        return mask.bit_count()

    # Edge views

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def positive_edges(self) -> List[Edge]:
        return [e for e in self.edges if e[2] == POSITIVE]

    @property
    def negative_edges(self) -> List[Edge]:
        return [e for e in self.edges if e[2] == NEGATIVE]

    @property
    def loops(self) -> List[int]:
        return [u for u, v, _ in self.edges if u == v]

    @property
    def pairs(self) -> List[Tuple[int, int]]:
        """Underlying multigraph: one (u, v) per edge, indexed like self.edges."""
        return [(u, v) for u, v, _ in self.edges]

    @property
    def negative_edge_indices(self) -> FrozenSet[int]:
        return frozenset(i for i, e in enumerate(self.edges) if e[2] == NEGATIVE)

    def signs_from_negative_set(self, negative: Iterable[int]) -> List[str]:
        negative = set(negative)
        return [NEGATIVE if i in negative else POSITIVE for i in range(self.edge_count)]

    def resigned(self, negative: Iterable[int]) -> 'SignedGraph':
        """Same underlying edges, negative exactly on the given edge indices."""
        signs = self.signs_from_negative_set(negative)
        return SignedGraph.simplified(self.n, ((u, v, s) for (u, v), s in zip(self.pairs, signs)))

    def with_all_signs(self, sign: str) -> 'SignedGraph':
        """Give every non-loop edge the same sign; loops stay positive."""
        return SignedGraph.simplified(
            self.n, ((u, v, POSITIVE if u == v else sign) for u, v, _ in self.edges))

    # Structure

    def relabel(self, mapping: Sequence[int], n: int = None) -> 'SignedGraph':
        """Image under a vertex map given as a sequence old -> new."""
        size = self.n if n is None else n
        return SignedGraph.simplified(size, ((mapping[u], mapping[v], s) for u, v, s in self.edges))

    def induced_subgraph(self, vertices: Sequence[int]) -> 'SignedGraph':
        """Subgraph induced on vertices, relabelled by their position in the sequence."""
        position = {v: i for i, v in enumerate(vertices)}
        return SignedGraph(len(vertices), tuple(
            (position[u], position[v], s) for u, v, s in self.edges
            if u in position and v in position))

    def to_networkx(self, loops: bool = False) -> nx.Graph:
        """Underlying simple graph; digons become a single edge."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from((u, v) for u, v, _ in self.edges if loops or u != v)
        return graph

    def to_dict(self) -> dict:
        return {
            'n': self.n,
            'edges': [[u, v, s] for u, v, s in self.edges]
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'SignedGraph':
        return cls(
            n=int(data.get('n', 0)),
            edges=tuple((int(u), int(v), s) for u, v, s in data.get('edges', []))
        )
