"""Degree parameters: minimum/maximum degree, minimum edge-degree and the
minimum boundary over connected vertex triples.

Undefined parameters are returned as ``None`` rather than a sentinel number.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from itertools import combinations

from rek_lab.graph import Graph, GraphError


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphError("minimum degree of the empty graph")
    return min(g.degrees())


def max_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphError("maximum degree of the empty graph")
    return max(g.degrees())


def edge_degree(g: Graph, u: int, v: int) -> int:
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    return len(g.adjacency[u]) + len(g.adjacency[v]) - 2


def xi(g: Graph) -> int | None:
    """Minimum edge-degree; ``None`` for an edgeless graph."""
    deg = g.degrees()
    return min((deg[u] + deg[v] - 2 for u, v in g.edges()), default=None)


def connected_triples(g: Graph) -> list[tuple[int, int, int]]:
    """All 3-sets inducing a connected subgraph (paths and triangles), sorted.

    Walks each edge ``uv`` and each vertex adjacent to either end, so the cost
    is proportional to ``e(G) * Delta`` rather than ``n**3``.
    """
    masks = g.masks
    seen = set()
    for u, v in g.edges():
        around = (masks[u] | masks[v]) & ~((1 << u) | (1 << v))
        while around:
            low = around & -around
            w = low.bit_length() - 1
            around ^= low
            seen.add(tuple(sorted((u, v, w))))
    return sorted(seen)


def triple_boundary(g: Graph, t: tuple[int, int, int]) -> int:
    a, b, c = t
    inner = g.has_edge(a, b) + g.has_edge(a, c) + g.has_edge(b, c)
    deg = g.adjacency
    return len(deg[a]) + len(deg[b]) + len(deg[c]) - 2 * inner


def xi3_with_witness(g: Graph) -> tuple[int | None, tuple[int, int, int] | None]:
    """``(xi3, lexicographically smallest minimizing triple)``."""
    best, arg = None, None
    for t in connected_triples(g):
        val = triple_boundary(g, t)
        if best is None or val < best:
            best, arg = val, t
    return best, arg


def xi3(g: Graph) -> int | None:
    return xi3_with_witness(g)[0]


def xi3_bruteforce(g: Graph) -> int | None:
    """Same quantity over all ``C(n, 3)`` subsets; an independent check of :func:`xi3`."""
    best = None
    for t in combinations(range(g.n), 3):
        a, b, c = t
        inner = g.has_edge(a, b) + g.has_edge(a, c) + g.has_edge(b, c)
        if inner < 2:
            continue
        val = triple_boundary(g, t)
        best = val if best is None else min(best, val)
    return best


def xi3_strong_cycle_formula(delta: int, xi_value: int) -> int:
    """Closed form for the triple boundary minimum of ``G x C_n`` (strong product).

    ``9*delta`` when the minimum edge-degree is as small as possible
    (``2*delta - 2``), else ``9*delta + 2``.
    """
    if delta < 2:
        raise GraphError(f"formula needs delta >= 2, got {delta}")
    if xi_value < 2 * delta - 2:
        raise GraphError(f"impossible profile: xi={xi_value} < 2*delta-2={2 * delta - 2}")
    return 9 * delta if xi_value == 2 * delta - 2 else 9 * delta + 2


def xi3_strong_complete_formula(delta: int, n: int) -> int:
    """Triple boundary minimum of ``G x K_n`` (strong product): ``3n*delta + 3n - 9``."""
    return 3 * n * delta + 3 * n - 9


@dataclass(frozen=True)
class DegreeProfile:
    min_degree: int
    max_degree: int
    xi: int | None
    xi3: int | None

    def to_json(self) -> dict:
        return {k: ("undefined" if v is None else v) for k, v in asdict(self).items()}


def degree_profile(g: Graph) -> DegreeProfile:
    return DegreeProfile(min_degree(g), max_degree(g), xi(g), xi3(g))
