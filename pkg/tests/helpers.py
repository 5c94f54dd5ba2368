"""Brute-force oracles for small graphs; exponential, used only to cross-check the services."""
from itertools import product
from typing import Iterable, Optional

import networkx as nx

from models import INF, NEGATIVE, POSITIVE, GirthProfile, SignedGraph, Switching, circular_distance, flip


def switched(graph: SignedGraph, vertices: Iterable[int]) -> SignedGraph:
    cut = Switching.of(vertices)
    return SignedGraph(graph.n, tuple(
        (u, v, flip(s) if cut.crosses(u, v) else s) for u, v, s in graph.edges))


def all_switchings(n: int):
    """Every X containing no vertex 0 when n > 0; X and its complement switch alike."""
    for mask in range(1 << max(n - 1, 0)):
        yield Switching(frozenset(v + 1 for v in range(n - 1) if mask >> v & 1))


def brute_force_hom(source: SignedGraph, target: SignedGraph) -> bool:
    """Try every switching of the source and every vertex map."""
    for cut in all_switchings(source.n):
        edges = switched(source, cut.vertices).edges
        for vmap in product(range(target.n), repeat=source.n):
            if all(target.has_edge(vmap[u], vmap[v], s) for u, v, s in edges):
                return True
    return False


def brute_force_switching(first: SignedGraph, second: SignedGraph) -> Optional[Switching]:
    for cut in all_switchings(first.n):
        if switched(first, cut.vertices) == second:
            return cut
    return None


def brute_force_circular(graph: SignedGraph, p: int, q: int) -> bool:
    """Circular p/q-colouring for even p: moving a vertex to its antipode is a switching,
    so trying every point of Z_p already covers every switching."""
    assert p % 2 == 0
    for points in product(range(p), repeat=graph.n):
        if all(_edge_fits(points[u], points[v], s, p, q) for u, v, s in graph.edges):
            return True
    return False


def _edge_fits(a: int, b: int, sign: str, p: int, q: int) -> bool:
    d = circular_distance(a, b, p)
    if sign == NEGATIVE:
        return d >= q
    return sign == POSITIVE and 2 * d <= p - 2 * q


def cover_walk_profile(graph: SignedGraph) -> GirthProfile:
    """Girth profile by BFS on the cover V x Z_2 (sign) x Z_2 (length) from every vertex."""
    cover = nx.DiGraph()
    for u, v, sign in graph.edges:
        bit = 1 if sign == NEGATIVE else 0
        for a, b in product((0, 1), repeat=2):
            cover.add_edge((u, a, b), (v, a ^ bit, b ^ 1))
            cover.add_edge((v, a, b), (u, a ^ bit, b ^ 1))
    if not graph.edges:
        return GirthProfile()
    best = {'01': INF, '10': INF, '11': INF}
    for s in {u for u, _, _ in graph.edges} | {v for _, v, _ in graph.edges}:
        reach = nx.single_source_shortest_path_length(cover, (s, 0, 0))
        for index in best:
            target = (s, int(index[0]), int(index[1]))
            if target in reach:
                best[index] = min(best[index], reach[target])
    return GirthProfile(g00=2, g01=best['01'], g10=best['10'], g11=best['11'])


def random_signed_graph(rng, n: int, density: float = 0.5, loops: bool = False) -> SignedGraph:
    """Random signed multigraph; each pair independently gets a positive and a negative edge."""
    edges = [(v, v, POSITIVE) for v in range(n) if loops and rng.random() < 0.2]
    for u in range(n):
        for v in range(u + 1, n):
            edges += [(u, v, sign) for sign in (POSITIVE, NEGATIVE) if rng.random() < density]
    return SignedGraph(n, tuple(edges))
