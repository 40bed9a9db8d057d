"""Deterministic factor-graph families.

Nothing here promises maximal edge-connectivity; callers that need it
re-check with :func:`rek_lab.connectivity.edge_connectivity`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Any

from rek_lab.graph import Graph, GraphError, from_edge_list
from rek_lab.rng import ALGORITHM, SplitMix64

FAMILIES = (
    "cycle",
    "complete",
    "path",
    "star",
    "harary",
    "circulant",
    "random-regular",
    "subdivided-complete",
)


class GeneratorError(GraphError):
    pass


def cycle(n: int) -> Graph:
    if n < 3:
        raise GeneratorError(f"cycle needs n >= 3, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GeneratorError(f"complete graph needs n >= 1, got {n}")
    return from_edge_list(n, combinations(range(n), 2))


def path(n: int) -> Graph:
    if n < 1:
        raise GeneratorError(f"path needs n >= 1, got {n}")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    """``K_{1,n-1}`` with centre 0."""
    if n < 1:
        raise GeneratorError(f"star needs n >= 1, got {n}")
    return from_edge_list(n, [(0, i) for i in range(1, n)])


def circulant(n: int, connection_set) -> Graph:
    offsets = sorted(set(connection_set))
    if n < 1:
        raise GeneratorError("circulant needs n >= 1")
    for s in offsets:
        if not 1 <= s <= n // 2:
            raise GeneratorError(f"offset {s} outside 1..{n // 2}")
    return from_edge_list(n, [(i, (i + s) % n) for i in range(n) for s in offsets])


def harary(k: int, n: int) -> Graph:
    """Harary graph ``H_{k,n}``: k-regular, fewest edges with connectivity k.

    Even k: circulant with offsets ``1..k/2``. Odd k (n even): offsets
    ``1..(k-1)/2`` plus the diameters ``i ~ i + n/2``.
    """
    if not n > k >= 2:
        raise GeneratorError(f"harary needs n > k >= 2, got k={k}, n={n}")
    if k * n % 2:
        raise GeneratorError(f"harary needs k*n even, got k={k}, n={n}")
    offsets = list(range(1, k // 2 + 1))
    edges = [(i, (i + s) % n) for i in range(n) for s in offsets]
    if k % 2:
        edges += [(i, i + n // 2) for i in range(n // 2)]
    return from_edge_list(n, edges)


def subdivided_complete(n: int, edge_index: int = 0) -> Graph:
    """``K_n`` with its ``edge_index``-th edge (lexicographic order) subdivided.

    The new vertex gets id ``n``.
    """
    if n < 4:
        raise GeneratorError(f"subdivided_complete needs n >= 4, got {n}")
    edges = list(combinations(range(n), 2))
    if not 0 <= edge_index < len(edges):
        raise GeneratorError(f"edge index {edge_index} outside 0..{len(edges) - 1}")
    u, v = edges.pop(edge_index)
    edges += [(u, n), (n, v)]
    return from_edge_list(n + 1, edges)


def random_regular(n: int, d: int, seed: int, max_restarts: int = 1000) -> Graph:
    """Uniform-ish random d-regular graph by stub pairing.

    Stubs are paired one pair at a time; a pair that would create a loop or a
    repeated edge is rejected and redrawn. When no admissible pair is left the
    attempt restarts. Raises after ``max_restarts`` failed attempts.
    """
    if not 0 <= d < n:
        raise GeneratorError(f"random_regular needs 0 <= d < n, got d={d}, n={n}")
    if n * d % 2:
        raise GeneratorError(f"n*d must be even, got n={n}, d={d}")
    rng = SplitMix64(seed)
    for _ in range(max_restarts):
        edges = _pair_stubs(n, d, rng)
        if edges is not None:
            return from_edge_list(n, edges)
    raise GeneratorError(f"random_regular({n}, {d}) exhausted {max_restarts} restarts")


def _pair_stubs(n: int, d: int, rng: SplitMix64):
    stubs = [v for v in range(n) for _ in range(d)]
    adj = [set() for _ in range(n)]
    edges = []
    while stubs:
        for _ in range(64):
            i = rng.below(len(stubs))
            j = rng.below(len(stubs))
            u, v = stubs[i], stubs[j]
            if i != j and u != v and v not in adj[u]:
                break
        else:
            ok = [(i, j) for i in range(len(stubs)) for j in range(i + 1, len(stubs))
                  if stubs[i] != stubs[j] and stubs[j] not in adj[stubs[i]]]
            if not ok:
                return None
            i, j = ok[rng.below(len(ok))]
            u, v = stubs[i], stubs[j]
        adj[u].add(v)
        adj[v].add(u)
        edges.append((u, v))
        for idx in sorted((i, j), reverse=True):
            stubs[idx] = stubs[-1]
            stubs.pop()
    return edges


@dataclass(frozen=True)
class GeneratorSpec:
    """Family name, its parameters, and the seed (used only by random families)."""

    family: str
    params: dict[str, Any] = field(default_factory=dict)
    seed: int = 0

    def build(self) -> Graph:
        p = self.params
        f = self.family
        if f == "cycle":
            return cycle(p["n"])
        if f == "complete":
            return complete(p["n"])
        if f == "path":
            return path(p["n"])
        if f == "star":
            return star(p["n"])
        if f == "harary":
            return harary(p["k"], p["n"])
        if f == "circulant":
            return circulant(p["n"], p["connection_set"])
        if f == "random-regular":
            return random_regular(p["n"], p["d"], self.seed)
        if f == "subdivided-complete":
            return subdivided_complete(p["n"], p.get("edge_index", 0))
        raise GeneratorError(f"unknown family {f!r}; known: {', '.join(FAMILIES)}")

    def to_json(self) -> dict:
        params = {k: (sorted(v) if isinstance(v, (set, frozenset, tuple, list)) else v)
                  for k, v in sorted(self.params.items())}
        return {"family": self.family, "params": params, "seed": self.seed, "rng": ALGORITHM}

    @classmethod
    def from_json(cls, data: dict) -> "GeneratorSpec":
        params = dict(data.get("params", {}))
        if "connection_set" in params:
            params["connection_set"] = tuple(params["connection_set"])
        return cls(data["family"], params, int(data.get("seed", 0)))
