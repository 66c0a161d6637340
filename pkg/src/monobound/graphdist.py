"""Directed sparsity graph of a matrix: adjacency, BFS distances, and the
maximum graph distance across a perturbation's support (the quantity the
graph-distance norm bound raises to a power)."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .errors import DimensionMismatch, EmptyPerturbation, IndexOutOfRange, UnreachablePair
from .linalg import as_square_matrix


@dataclass(frozen=True)
class MatrixDigraph:
    """Edge i -> j for every off-diagonal entry with |a_ij| > zero_tol.

    ``adjacency[i]`` lists out-neighbors of i in ascending order, never
    including i itself.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]


def build_digraph(a, zero_tol: float = 0.0) -> MatrixDigraph:
    """Sparsity digraph of a square matrix; self-loops are dropped."""
    m = as_square_matrix(a)
    n = m.shape[0]
    adjacency = tuple(
        tuple(j for j in range(n) if j != i and abs(m[i, j]) > zero_tol)
        for i in range(n)
    )
    return MatrixDigraph(n=n, adjacency=adjacency)


def _check_node(g: MatrixDigraph, node: int) -> None:
    if not 0 <= node < g.n:
        raise IndexOutOfRange(f"node {node} outside 0..{g.n - 1}")


def distances_from(g: MatrixDigraph, source: int) -> list[int | float]:
    """BFS distances from ``source`` to every node; math.inf if unreachable."""
    _check_node(g, source)
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        i = queue.popleft()
        for j in g.adjacency[i]:
            if dist[j] < 0:
                dist[j] = dist[i] + 1
                queue.append(j)
    return [d if d >= 0 else math.inf for d in dist]


def distance(g: MatrixDigraph, i: int, j: int) -> int | float:
    """Shortest directed path length from i to j (0 on the diagonal,
    math.inf when j is unreachable)."""
    _check_node(g, i)
    _check_node(g, j)
    return distances_from(g, i)[j]


def is_strongly_connected(g: MatrixDigraph) -> bool:
    """True when every node reaches every other along directed edges."""
    if g.n == 1:
        return True
    if any(math.isinf(d) for d in distances_from(g, 0)):
        return False
    reversed_adj: list[list[int]] = [[] for _ in range(g.n)]
    for i, neighbors in enumerate(g.adjacency):
        for j in neighbors:
            reversed_adj[j].append(i)
    reverse = MatrixDigraph(n=g.n, adjacency=tuple(tuple(r) for r in reversed_adj))
    return not any(math.isinf(d) for d in distances_from(reverse, 0))


def bouchon_M(a, e_pattern, zero_tol: float = 0.0) -> int:
    """Largest sparsity-graph distance d(i, j) of ``a`` over the off-diagonal
    support of ``e_pattern``.

    Raises :class:`EmptyPerturbation` when the pattern has no off-diagonal
    nonzero (the statistic would sit in a denominator as zero) and
    :class:`UnreachablePair` when some supported pair has no directed path.
    """
    m = as_square_matrix(a)
    e = as_square_matrix(e_pattern)
    if e.shape != m.shape:
        raise DimensionMismatch(
            f"pattern shape {e.shape} does not match matrix shape {m.shape}"
        )
    support: dict[int, list[int]] = {}
    for i in range(m.shape[0]):
        cols = [j for j in range(m.shape[0]) if j != i and abs(e[i, j]) > zero_tol]
        if cols:
            support[i] = cols
    if not support:
        raise EmptyPerturbation("perturbation pattern has no off-diagonal nonzero entry")
    g = build_digraph(m, zero_tol)
    worst = 0
    for i, cols in support.items():
        dist = distances_from(g, i)
        for j in cols:
            if math.isinf(dist[j]):
                raise UnreachablePair(
                    f"no directed path from node {i} to node {j} in the sparsity graph"
                )
            worst = max(worst, int(dist[j]))
    return worst
