"""Graph operations shared by the construction methods and the construction service."""
from typing import List, Tuple

from models import NEGATIVE, POSITIVE, CayleySpec, SignedGraph
from utils.errors import SizeLimitExceeded, UnsupportedInput

POWER_MAX_VERTICES = 20


def cayley_graph(spec: CayleySpec) -> SignedGraph:
    """Signed Cayley graph on Z_2^dim; vertex x is the integer whose bits are its coordinates."""
    edges: List[Tuple[int, int, str]] = []
    for x in range(spec.order):
        for s in spec.splus:
            if s == 0:
                edges.append((x, x, POSITIVE))
            elif x < x ^ s:
                edges.append((x, x ^ s, POSITIVE))
        for s in spec.sminus:
            if x < x ^ s:
                edges.append((x, x ^ s, NEGATIVE))
    return SignedGraph(spec.order, tuple(edges))


def extended_double_cover(graph: SignedGraph) -> SignedGraph:
    """EDC on labels (x, j) -> x + j*n.

    Every vertex gets a negative rung x_0 x_1; a positive edge becomes the two
    straight positive edges, a negative edge the two crossed positive edges.
    """
    if graph.loops:
        raise UnsupportedInput(f"EDC is undefined on positive loops (vertex {graph.loops[0]})")
    n = graph.n
    edges = [(x, x + n, NEGATIVE) for x in range(n)]
    for u, v, sign in graph.edges:
        if sign == POSITIVE:
            edges.extend([(u, v, POSITIVE), (u + n, v + n, POSITIVE)])
        else:
            edges.extend([(u, v + n, POSITIVE), (u + n, v, POSITIVE)])
    return SignedGraph(2 * n, tuple(edges))


def common_product(first: SignedGraph, second: SignedGraph) -> SignedGraph:
    """Cartesian product of the positive parts plus categorical product of the negative parts.

    Vertex (x, u) is labelled x + u * first.n.
    """
    size = first.n
    label = lambda x, u: x + u * size
    edges = []
    for x, y, sign in first.edges:
        if sign == POSITIVE:
            edges.extend((label(x, u), label(y, u), POSITIVE) for u in range(second.n))
    for u, v, sign in second.edges:
        if sign == POSITIVE:
            edges.extend((label(x, u), label(x, v), POSITIVE) for x in range(first.n))
    for x, y, _ in first.negative_edges:
        for u, v, _ in second.negative_edges:
            edges.append((label(x, u), label(y, v), NEGATIVE))
            edges.append((label(x, v), label(y, u), NEGATIVE))
    return SignedGraph.simplified(first.n * second.n, edges)


def power_graph(graph: SignedGraph) -> SignedGraph:
    """pow(G, sigma) = (2^V, E+, E-): subsets of V as bitvectors, edges as two-element subsets."""
    if graph.n > POWER_MAX_VERTICES:
        raise SizeLimitExceeded(
            f"Power graph needs 2^{graph.n} vertices; limit is {POWER_MAX_VERTICES} source vertices")
    if graph.loops:
        raise UnsupportedInput("A loop is not a two-element subset; power graph needs a loopless input")
    splus = {1 << u | 1 << v for u, v, _ in graph.positive_edges}
    sminus = {1 << u | 1 << v for u, v, _ in graph.negative_edges}
    return cayley_graph(CayleySpec(graph.n, frozenset(splus), frozenset(sminus)))


def negative_cycle(length: int) -> SignedGraph:
    """C_{-length}: the cycle 0, 1, ..., length-1 with edge (0, 1) negative."""
    if length == 2:
        return SignedGraph(2, ((0, 1, POSITIVE), (0, 1, NEGATIVE)))
    edges = [(i, (i + 1) % length, POSITIVE) for i in range(1, length)]
    edges.append((0, 1, NEGATIVE))
    return SignedGraph(length, tuple(edges))
