import logging
from collections import Counter
from typing import Dict, Optional, Tuple

import networkx as nx
from networkx.algorithms import isomorphism

from models import NEGATIVE, POSITIVE, SignedGraph, Switching
from services.signed_graph_service import SignedGraphService
from utils.config_manager import get_config
from utils.errors import SizeLimitExceeded

logger = logging.getLogger(__name__)

SwitchingIsomorphism = Tuple[Tuple[int, ...], Switching]


def fibered_double_cover(graph: SignedGraph) -> nx.Graph:
    """Signed double cover with each fibre {(v,0),(v,1)} joined by a 'fiber' edge.

    A positive edge uv lifts to (u,0)(v,0), (u,1)(v,1); a negative one to
    (u,0)(v,1), (u,1)(v,0). Cover isomorphisms that respect edge kinds are
    exactly switching isomorphisms.
    """
    cover = nx.Graph()
    for v in range(graph.n):
        cover.add_edge((v, 0), (v, 1), kind='fiber')
    for u, v, sign in graph.edges:
        if u == v:
            cover.add_edge((v, 0), (v, 0), kind='loop')
            cover.add_edge((v, 1), (v, 1), kind='loop')
        elif sign == POSITIVE:
            cover.add_edge((u, 0), (v, 0), kind='cover')
            cover.add_edge((u, 1), (v, 1), kind='cover')
        else:
            cover.add_edge((u, 0), (v, 1), kind='cover')
            cover.add_edge((u, 1), (v, 0), kind='cover')
    return cover


class IsomorphismService:
    """Isomorphism and switching isomorphism at desk scale, via networkx VF2."""

    def __init__(self, max_vertices: Optional[int] = None):
        self.max_vertices = max_vertices or get_config().get('iso_max_vertices', 64)
        self.graph_service = SignedGraphService()

    def _invariant(self, graph: SignedGraph) -> tuple:
        degrees = Counter(graph.degree(v) for v in range(graph.n))
        return (
            graph.n,
            graph.edge_count,
            len(graph.loops),
            tuple(sorted(degrees.items())),
            self.graph_service.girth_profile(graph).as_tuple(),
        )

    def switching_isomorphic(self, first: SignedGraph, second: SignedGraph) -> Optional[SwitchingIsomorphism]:
        """
        Find f and X with switch(first, X) mapped edge-sign-exactly onto second by f.

        Returns:
            (vmap, switching) with vmap[v] = f(v), or None
        """
        for graph in (first, second):
            if graph.n > self.max_vertices:
                raise SizeLimitExceeded(
                    f"Switching isomorphism is supported up to {self.max_vertices} vertices, got {graph.n}")
        if self._invariant(first) != self._invariant(second):
            return None

        matcher = isomorphism.GraphMatcher(
            fibered_double_cover(first), fibered_double_cover(second),
            edge_match=isomorphism.categorical_edge_match('kind', None))
        if not matcher.is_isomorphic():
            return None

        vmap = [0] * first.n
        switched = set()
        for (v, level), (w, image_level) in matcher.mapping.items():
            if level == 0:
                vmap[v] = w
                if image_level == 1:
                    switched.add(v)
        switching = Switching(frozenset(switched))
        logger.debug("switching isomorphism found on %d vertices, |X| = %d", first.n, len(switched))
        return tuple(vmap), switching

    def verify_switching_isomorphism(self, first: SignedGraph, second: SignedGraph,
                                     witness: SwitchingIsomorphism) -> bool:
        vmap, switching = witness
        if sorted(vmap) != list(range(second.n)) or first.n != second.n:
            return False
        switched = self.graph_service.switch(first, switching)
        return switched.relabel(vmap) == second

    def isomorphic(self, first: SignedGraph, second: SignedGraph) -> bool:
        """Isomorphism of the underlying simple graphs."""
        return nx.is_isomorphic(first.to_networkx(), second.to_networkx())

    def is_vertex_transitive(self, graph: SignedGraph) -> bool:
        """Automorphism orbit check on the underlying graph: vertex 0 maps to every vertex."""
        base = graph.to_networkx()
        if graph.n <= 1:
            return True
        rooted: Dict[int, nx.Graph] = {}
        for v in range(graph.n):
            marked = base.copy()
            nx.set_node_attributes(marked, {w: w == v for w in marked.nodes()}, 'root')
            rooted[v] = marked
        node_match = isomorphism.categorical_node_match('root', False)
        return all(nx.is_isomorphic(rooted[0], rooted[v], node_match=node_match)
                   for v in range(1, graph.n))
