import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from models import (
    INF, NEGATIVE, POSITIVE, Classification, ContractPositiveEdge, DeleteEdge, DeleteVertex,
    GirthProfile, Length, SignedGraph, SignedMinorOp, Switch, Switching, flip, iter_bits
)
from utils.errors import (
    IllegalContraction, InvalidEdge, InvalidSignature, InvalidVertex, NegativeLoopForbidden,
    PreconditionFailed
)

logger = logging.getLogger(__name__)


def walk_profile(n: int, signed_edges: Iterable[Tuple[int, int, str]]) -> GirthProfile:
    """Girth profile of a signed multigraph given as (u, v, sign) triples.

    Layered search on the cover V x Z_2 (sign), run for all base vertices at
    once: reach[v][s] is the bitset of bases b with a walk of the current
    length from b to v whose sign parity is s. The length parity is the layer
    parity. Appending a back-and-forth step shows layer L+2 contains layer L,
    so once two layers of equal parity coincide nothing new can appear.
    """
    arcs: List[Tuple[int, int, int]] = []
    for u, v, sign in signed_edges:
        bit = 1 if sign == NEGATIVE else 0
        arcs.append((u, v, bit))
        if u != v:
            arcs.append((v, u, bit))
    if not arcs:
        return GirthProfile()

    found: Dict[Tuple[int, int], int] = {}
    layers = [[[1 << v, 0] for v in range(n)]]
    length = 0
    limit = 4 * n + 4
    while len(found) < 3 and length < limit:
        length += 1
        current = layers[-1]
        nxt = [[0, 0] for _ in range(n)]
        for v, w, bit in arcs:
            source, target = current[v], nxt[w]
            target[0] |= source[bit]
            target[1] |= source[bit ^ 1]
        parity = length & 1
        for i in (0, 1):
            if (i, parity) == (0, 0) or (i, parity) in found:
                continue
            if any(nxt[b][i] >> b & 1 for b in range(n)):
                found[(i, parity)] = length
        layers.append(nxt)
        if len(layers) > 3:
            layers.pop(0)
        if length >= 2 and layers[-1] == layers[-3]:
            break

    return GirthProfile(
        g00=2,
        g01=found.get((0, 1), INF),
        g10=found.get((1, 0), INF),
        g11=found.get((1, 1), INF),
    )


def find_switching(n: int, pairs: Sequence[Tuple[int, int]],
                   negative_a: Iterable[int], negative_b: Iterable[int]) -> Optional[Switching]:
    """Cut X turning signature a into signature b on the multigraph `pairs`, or None.

    The edges whose sign differs must form exactly the cut of X; that is a
    two-colouring problem solved component by component, each component's
    least vertex staying outside X.
    """
    negative_a, negative_b = set(negative_a), set(negative_b)
    for index in negative_a | negative_b:
        if not 0 <= index < len(pairs):
            raise InvalidSignature(f"Signature references edge {index}, graph has {len(pairs)} edges")
    differ = negative_a ^ negative_b

    neighbours: List[List[Tuple[int, int]]] = [[] for _ in range(n)]
    for index, (u, v) in enumerate(pairs):
        crossing = 1 if index in differ else 0
        if u == v:
            if crossing:
                return None
            continue
        neighbours[u].append((v, crossing))
        neighbours[v].append((u, crossing))

    side = [-1] * n
    for root in range(n):
        if side[root] != -1:
            continue
        side[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for w, crossing in neighbours[v]:
                want = side[v] ^ crossing
                if side[w] == -1:
                    side[w] = want
                    stack.append(w)
                elif side[w] != want:
                    return None
    return Switching(frozenset(v for v in range(n) if side[v] == 1))


class SignedGraphService:
    """Switching algebra, girth profiles, signed minors and class membership."""

    def switch(self, graph: SignedGraph, switching: Switching) -> SignedGraph:
        """Flip the sign of every edge with exactly one endpoint in the switching set."""
        for v in switching.vertices:
            if not 0 <= v < graph.n:
                raise InvalidVertex(f"Switching references vertex {v}, graph has {graph.n}")
        if not switching.vertices:
            return graph
        return SignedGraph(graph.n, tuple(
            (u, v, flip(s) if switching.crosses(u, v) else s) for u, v, s in graph.edges))

    def girth_profile(self, graph: SignedGraph) -> GirthProfile:
        return walk_profile(graph.n, graph.edges)

    def negative_girth(self, graph: SignedGraph) -> Length:
        """Shortest negative cycle; equals min(g10, g11) since negative loops never occur."""
        return self.girth_profile(graph).negative_girth

    def is_switching_equivalent(self, graph: SignedGraph, negative_a: Iterable[int],
                                negative_b: Iterable[int]) -> Optional[Switching]:
        """
        Decide whether two signatures of graph's underlying edges are equivalent.

        Args:
            graph: Supplies the underlying edge multiset; its own signs are ignored
            negative_a: Indices (into graph.edges) of the negative edges of the first signature
            negative_b: Same for the second signature

        Returns:
            Switching X with switch((G, a), X) = (G, b), or None
        """
        return find_switching(graph.n, graph.pairs, negative_a, negative_b)

    def switching_between(self, first: SignedGraph, second: SignedGraph) -> Optional[Switching]:
        """Switching taking first onto second when both share one underlying graph.

        Digon pairs impose nothing: switching keeps a digon a digon.
        """
        if first.n != second.n:
            return None
        if {(u, v) for u, v, _ in first.edges} != {(u, v) for u, v, _ in second.edges}:
            return None
        if set(first.loops) != set(second.loops):
            return None

        def sign_map(graph):
            signs: Dict[Tuple[int, int], set] = {}
            for u, v, s in graph.edges:
                signs.setdefault((u, v), set()).add(s)
            return signs

        signs_a, signs_b = sign_map(first), sign_map(second)
        pairs, negative_a, negative_b = [], [], []
        for pair, signs in signs_a.items():
            if len(signs) == 2 or len(signs_b[pair]) == 2:
                if signs != signs_b[pair]:
                    return None
                continue
            if pair[0] == pair[1]:
                continue
            if NEGATIVE in signs:
                negative_a.append(len(pairs))
            if NEGATIVE in signs_b[pair]:
                negative_b.append(len(pairs))
            pairs.append(pair)
        return find_switching(first.n, pairs, negative_a, negative_b)

    def connected_components(self, graph: SignedGraph) -> List[List[int]]:
        """Vertex lists of the components, each sorted, ordered by least vertex."""
        adjacency = [p | m for p, m in zip(graph.positive_adjacency, graph.negative_adjacency)]
        unseen = (1 << graph.n) - 1
        components = []
        while unseen:
            root = (unseen & -unseen).bit_length() - 1
            reached = frontier = 1 << root
            while frontier:
                grown = 0
                for v in iter_bits(frontier):
                    grown |= adjacency[v]
                frontier = grown & ~reached
                reached |= frontier
            unseen &= ~reached
            components.append(list(iter_bits(reached)))
        return components

    def distances(self, graph: SignedGraph, source: int) -> List[Length]:
        """Hop distances in the underlying graph."""
        adjacency = [p | m for p, m in zip(graph.positive_adjacency, graph.negative_adjacency)]
        result: List[Length] = [INF] * graph.n
        result[source] = 0
        frontier, reached, depth = 1 << source, 1 << source, 0
        while frontier:
            depth += 1
            grown = 0
            for v in iter_bits(frontier):
                grown |= adjacency[v]
            frontier = grown & ~reached
            reached |= frontier
            for v in iter_bits(frontier):
                result[v] = depth
        return result

    def signed_distances(self, graph: SignedGraph, source: int) -> Dict[str, List[Length]]:
        """Shortest positive and negative walk lengths from source, on the signed double cover."""
        reach = {POSITIVE: [INF] * graph.n, NEGATIVE: [INF] * graph.n}
        reach[POSITIVE][source] = 0
        frontier = [(source, POSITIVE)]
        depth = 0
        while frontier:
            depth += 1
            grown = []
            for v, parity in frontier:
                for sign in (POSITIVE, NEGATIVE):
                    target_parity = parity if sign == POSITIVE else flip(parity)
                    for w in iter_bits(graph.adjacency(sign)[v]):
                        if reach[target_parity][w] == INF:
                            reach[target_parity][w] = depth
                            grown.append((w, target_parity))
            frontier = grown
        return reach

    def apply_minor_op(self, graph: SignedGraph, op: SignedMinorOp) -> SignedGraph:
        if isinstance(op, Switch):
            return self.switch(graph, op.switching)
        if isinstance(op, DeleteVertex):
            return self._delete_vertex(graph, op.vertex)
        if isinstance(op, DeleteEdge):
            u, v = sorted((op.u, op.v))
            if (u, v, op.sign) not in graph.edge_index:
                raise InvalidEdge(f"No edge ({u}, {v}, {op.sign}) to delete")
            return SignedGraph(graph.n, tuple(e for e in graph.edges if e != (u, v, op.sign)))
        if isinstance(op, ContractPositiveEdge):
            return self._contract(graph, op.u, op.v)
        raise TypeError(f"Unknown minor operation: {op!r}")

    def _delete_vertex(self, graph: SignedGraph, vertex: int) -> SignedGraph:
        if not 0 <= vertex < graph.n:
            raise InvalidVertex(f"Vertex {vertex} out of range 0..{graph.n - 1}")
        shift = lambda w: w - 1 if w > vertex else w
        return SignedGraph(graph.n - 1, tuple(
            (shift(u), shift(v), s) for u, v, s in graph.edges if vertex not in (u, v)))

    def _contract(self, graph: SignedGraph, u: int, v: int) -> SignedGraph:
        for w in (u, v):
            if not 0 <= w < graph.n:
                raise InvalidVertex(f"Vertex {w} out of range 0..{graph.n - 1}")
        if u == v:
            raise IllegalContraction(f"Cannot contract the loop at {u}")
        if not graph.has_edge(u, v, POSITIVE):
            raise IllegalContraction(f"({u}, {v}) is not a positive edge")

        keep, drop = min(u, v), max(u, v)

        def image(w: int) -> int:
            if w == drop:
                w = keep
            return w - 1 if w > drop else w

        merged = []
        for a, b, s in graph.edges:
            if (a, b, s) == (keep, drop, POSITIVE):
                continue
            a, b = image(a), image(b)
            if a == b and s == NEGATIVE:
                raise NegativeLoopForbidden(
                    f"Contracting ({u}, {v}) turns its negative parallel edge into a negative loop")
            merged.append((a, b, s))
        return SignedGraph.simplified(graph.n - 1, merged)

    def is_planar(self, graph: SignedGraph) -> bool:
        planar, _ = nx.check_planarity(graph.to_networkx())
        return planar

    def classify(self, graph: SignedGraph) -> Classification:
        profile = self.girth_profile(graph)
        return Classification(
            balanced=profile.g10 == INF and profile.g11 == INF,
            antibalanced=profile.g01 == INF and profile.g10 == INF,
            signed_bipartite=profile.g01 == INF and profile.g11 == INF,
            planar=self.is_planar(graph)
        )

    def in_sp_k(self, graph: SignedGraph, k: int) -> bool:
        """Planar and girth profile at least that of C_{-k}, componentwise."""
        if k < 2:
            raise PreconditionFailed(f"SP_k needs k >= 2, got {k}")
        if not self.is_planar(graph):
            return False
        return self.girth_profile(graph).dominates(GirthProfile.of_negative_cycle(k))
