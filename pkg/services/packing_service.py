import logging
from collections import deque
from typing import Any, Dict, Iterator, List, Optional, Tuple

import networkx as nx

from models import (
    INF, NEGATIVE, Homomorphism, Length, SignaturePacking, SignedGraph, Switching, cut_edges,
    flip, iter_bits
)
from services.construction_service import ConstructionService
from services.homomorphism_service import HomomorphismService
from services.signed_graph_service import SignedGraphService, find_switching
from utils.config_manager import get_config
from utils.errors import (
    InvalidHomomorphism, InvariantViolation, PreconditionFailed, SizeLimitExceeded
)

logger = logging.getLogger(__name__)


class PackingService:
    """Signature packing numbers, by exhaustive search and through homomorphisms to SPC°(k-1)."""

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        self.config = config if config is not None else get_config().get_all()
        self.graph_service = SignedGraphService()
        self.construction_service = ConstructionService(self.config)
        self.hom_service = HomomorphismService(self.config)

    def odd_edges_of_negative_cycle(self, graph: SignedGraph) -> List[int]:
        """Edges used an odd number of times by a shortest negative closed walk.

        Every signature equivalent to the given one is negative on at least one of them.
        """
        arcs: List[List[Tuple[int, int, int]]] = [[] for _ in range(graph.n)]
        for index, (u, v, sign) in enumerate(graph.edges):
            bit = 1 if sign == NEGATIVE else 0
            arcs[u].append((v, index, bit))
            if u != v:
                arcs[v].append((u, index, bit))

        best: Optional[List[int]] = None
        for source in range(graph.n):
            parent = {(source, 0): None}
            depth = {(source, 0): 0}
            queue = deque([(source, 0)])
            goal = (source, 1)
            while queue and goal not in parent:
                state = queue.popleft()
                if best is not None and depth[state] + 1 >= len(best):
                    break
                v, parity = state
                for w, index, bit in arcs[v]:
                    nxt = (w, parity ^ bit)
                    if nxt not in parent:
                        parent[nxt] = (state, index)
                        depth[nxt] = depth[state] + 1
                        queue.append(nxt)
            if goal in parent:
                walk = self._walk(parent, goal)
                if best is None or len(walk) < len(best):
                    best = walk
        if best is None:
            return []
        counts: Dict[int, int] = {}
        for index in best:
            counts[index] = counts.get(index, 0) + 1
        return sorted(i for i, c in counts.items() if c % 2)

    @staticmethod
    def _walk(parent, state) -> List[int]:
        edges = []
        while parent[state] is not None:
            state, index = parent[state]
            edges.append(index)
        return edges

    def packing_number_oracle(self, graph: SignedGraph) -> Tuple[Length, Optional[SignaturePacking]]:
        """
        Exact packing number by branch and bound over all equivalent signatures.

        Returns:
            (value, witness); value is infinity exactly for balanced graphs, whose
            witness is the single all-positive switch
        """
        limit = self.config.get('oracle_max_vertices', 12)
        if graph.n > limit:
            raise SizeLimitExceeded(f"Packing oracle is limited to {limit} vertices, got {graph.n}")

        cycle = self.odd_edges_of_negative_cycle(graph)
        if not cycle:
            balancing = self.graph_service.is_switching_equivalent(graph, graph.negative_edge_indices, ())
            return INF, SignaturePacking(graph, (balancing,))

        base = sum(1 << i for i in graph.negative_edge_indices)
        by_mask: Dict[int, Switching] = {}
        for subset in range(1 << max(graph.n - 1, 0)):
            cut = Switching(frozenset(v + 1 for v in iter_bits(subset)))
            mask = base ^ sum(1 << i for i in cut_edges(graph, cut))
            by_mask.setdefault(mask, cut)

        masks = sorted(by_mask, key=lambda m: (m.bit_count(), m))
        minimal = []
        for mask in masks:
            if not any(kept & mask == kept for kept in minimal):
                minimal.append(mask)

        cycle_mask = sum(1 << i for i in cycle)
        best: List[int] = []

        def extend(start: int, used: int, chosen: List[int]):
            nonlocal best
            if len(chosen) > len(best):
                best = list(chosen)
            if len(best) == len(cycle):
                return
            if len(chosen) + (cycle_mask & ~used).bit_count() <= len(best):
                return
            for i in range(start, len(minimal)):
                if len(chosen) + len(minimal) - i <= len(best):
                    return
                mask = minimal[i]
                if mask & used:
                    continue
                chosen.append(mask)
                extend(i + 1, used | mask, chosen)
                chosen.pop()
                if len(best) == len(cycle):
                    return

        extend(0, 0, [])
        logger.debug("packing oracle: %d minimal signatures, packing %d, bound %d",
                     len(minimal), len(best), len(cycle))
        return len(best), SignaturePacking(graph, tuple(by_mask[m] for m in best))

    def packing_number(self, graph: SignedGraph, **search_options) -> Length:
        """Largest k such that graph maps to SPC°(k-1), searched down from the negative girth.

        search_options (budget, threads, seed) go to every homomorphism search.
        """
        girth = self.graph_service.negative_girth(graph)
        if girth == INF:
            return INF
        for k in range(int(girth), 1, -1):
            target = self.construction_service.spc_loop(k - 1)
            if self.hom_service.search(graph, target, **search_options).exists:
                return k
        return 1

    def hom_to_signatures(self, graph: SignedGraph, hom: Homomorphism, k: int) -> SignaturePacking:
        """
        Pull the edge labels e_1..e_k, J of SPC(k) back through hom.

        Signature i is negative exactly on the edges mapped to label class i,
        with the J class last; each is switching equivalent to the input.
        """
        target = self.construction_service.spc(k)
        valid, diagnostic = self.hom_service.verify_homomorphism(graph, target, hom)
        if not valid:
            raise InvalidHomomorphism(diagnostic)

        classes: List[set] = [set() for _ in range(k + 1)]
        for index, (u, v, sign) in enumerate(graph.edges):
            if hom.switching.crosses(u, v):
                sign = flip(sign)
            if sign == NEGATIVE:
                classes[k].add(index)
            else:
                label = hom.vmap[u] ^ hom.vmap[v]
                classes[label.bit_length() - 1].add(index)

        cuts = []
        for i, negative in enumerate(classes):
            cut = find_switching(graph.n, graph.pairs, graph.negative_edge_indices, negative)
            if cut is None:
                raise InvariantViolation(f"Label class {i} is not a signature equivalent to the input")
            cuts.append(cut)
        packing = SignaturePacking(graph, tuple(cuts))
        if not packing.is_partition():
            raise InvariantViolation("Pulled-back signatures do not partition the edges")
        return packing

    def packing_to_homomorphism(self, graph: SignedGraph, packing: SignaturePacking) -> Homomorphism:
        """
        Homomorphism to SPC°(l-1) from a packing of size l.

        Switch at the last cut X_l and send v to the sum of e_i over the cuts
        with v in X_i xor X_l. An edge negative in sigma_i (i < l) lands on an
        e_i edge, one negative in sigma_l on a J edge and any other edge on a
        loop, so a packing covering every edge maps into SPC(l-1).
        """
        if packing.size < 2:
            raise PreconditionFailed(f"A packing of size {packing.size} gives no map into SPC°(l-1) with l-1 >= 1")
        if not packing.is_disjoint():
            raise PreconditionFailed("Packing signatures share a negative edge")
        last = packing.cuts[-1]
        vmap = []
        for v in range(graph.n):
            label = 0
            for i, cut in enumerate(packing.cuts[:-1]):
                if (v in cut) != (v in last):
                    label |= 1 << i
            vmap.append(label)
        return Homomorphism(last, tuple(vmap))

    def packs(self, graph: SignedGraph) -> bool:
        """Packing number equals negative girth."""
        girth = self.graph_service.negative_girth(graph)
        if graph.n <= self.config.get('oracle_max_vertices', 12):
            value, _ = self.packing_number_oracle(graph)
        elif girth <= self.config.get('packs_max_negative_girth', 8):
            value = self.packing_number(graph)
        else:
            raise SizeLimitExceeded(
                f"Neither the oracle ({graph.n} vertices) nor the homomorphism route (negative girth {girth}) applies")
        return value == girth

    # Instance families

    @staticmethod
    def signature_classes(underlying: nx.Graph) -> Iterator[SignedGraph]:
        """One signature per switching class: negative sets are subsets of the cotree of a BFS forest."""
        base = SignedGraph.from_networkx(underlying)
        simple = base.to_networkx()
        tree = set()
        for component in nx.connected_components(simple):
            tree |= {tuple(sorted(e)) for e in nx.bfs_edges(simple, min(component))}
        cotree = [i for i, (u, v, _) in enumerate(base.edges) if (u, v) not in tree]
        for subset in range(1 << len(cotree)):
            yield base.resigned(cotree[j] for j in iter_bits(subset))

    def atlas_instances(self, max_n: int = 5) -> Iterator[SignedGraph]:
        """All connected signed graphs with 1..max_n vertices up to isomorphism of the
        underlying graph and switching."""
        for underlying in nx.graph_atlas_g():
            n = underlying.number_of_nodes()
            if n == 0 or n > max_n or not nx.is_connected(underlying):
                continue
            yield from self.signature_classes(underlying)

    def packing_from_negative_sets(self, graph: SignedGraph, negative_sets) -> SignaturePacking:
        """Packing whose i-th signature is negative exactly on negative_sets[i]."""
        cuts = []
        for i, negative in enumerate(negative_sets):
            cut = find_switching(graph.n, graph.pairs, graph.negative_edge_indices, negative)
            if cut is None:
                raise PreconditionFailed(f"Negative set {i} is not a signature equivalent to the input")
            cuts.append(cut)
        return SignaturePacking(graph, tuple(cuts))
