"""Immutable simple graphs, vertex subsets and edge boundaries.

Vertices are the dense integers ``0..n-1``. A :class:`VertexSet` is a bitset
over those ids (a Python ``int`` mask), which keeps subset enumeration and
membership tests cheap for the exhaustive routines in :mod:`rek_lab.oracle`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised for malformed graphs or subsets that violate an operation's domain."""


@dataclass(frozen=True)
class VertexSet:
    """Subset of ``range(n)`` stored as a bitmask."""

    n: int
    mask: int = 0

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask >> self.n:
            raise GraphError(f"mask {self.mask:#x} has bits outside 0..{self.n - 1}")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in vertices:
            if not 0 <= v < n:
                raise GraphError(f"vertex {v} out of range for order {n}")
            mask |= 1 << v
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.mask >> v & 1)

    def __iter__(self) -> Iterator[int]:
        m = self.mask
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __repr__(self) -> str:
        return f"VertexSet(n={self.n}, {sorted(self)})"

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, ((1 << self.n) - 1) & ~self.mask)

    def to_list(self) -> list[int]:
        return list(self)

    @property
    def is_empty(self) -> bool:
        return self.mask == 0

    @property
    def is_full(self) -> bool:
        return self.mask == (1 << self.n) - 1


def _as_vertex_set(n: int, x: VertexSet | Iterable[int]) -> VertexSet:
    if isinstance(x, VertexSet):
        if x.n != n:
            raise GraphError(f"vertex set is over order {x.n}, graph has order {n}")
        return x
    return VertexSet.of(n, x)


class Graph:
    """Simple undirected graph on ``0..n-1``.

    Instances are immutable; build them with :func:`from_edge_list`.
    """

    __slots__ = ("_n", "_adj", "_masks", "_m")

    def __init__(self, n: int, adjacency: Sequence[Iterable[int]]):
        if n < 0 or len(adjacency) != n:
            raise GraphError("adjacency must have one entry per vertex")
        adj = tuple(tuple(sorted(set(nb))) for nb in adjacency)
        masks = []
        total = 0
        for u, nb in enumerate(adj):
            mask = 0
            for v in nb:
                if not 0 <= v < n:
                    raise GraphError(f"neighbor {v} of {u} out of range")
                if v == u:
                    raise GraphError(f"self-loop at {u}")
                mask |= 1 << v
            masks.append(mask)
            total += len(nb)
        for u, nb in enumerate(adj):
            for v in nb:
                if not masks[v] >> u & 1:
                    raise GraphError(f"adjacency not symmetric at ({u}, {v})")
        self._n = n
        self._adj = adj
        self._masks = tuple(masks)
        self._m = total // 2

    def __setattr__(self, name, value):
        if hasattr(self, name):
            raise AttributeError("Graph is immutable")
        object.__setattr__(self, name, value)

    @property
    def n(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return self._m

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    @property
    def masks(self) -> tuple[int, ...]:
        """Neighbor bitmask of every vertex."""
        return self._masks

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check(v)
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self._masks[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, nb in enumerate(self._adj):
            for v in nb:
                if u < v:
                    yield (u, v)

    def to_edge_list(self) -> list[tuple[int, int]]:
        return list(self.edges())

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self._adj]

    def vertices(self) -> range:
        return range(self._n)

    def _check(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise GraphError(f"vertex {v} out of range for order {self._n}")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, e={self._m})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph, collapsing duplicate edges; rejects loops and bad ids."""
    if n < 0:
        raise GraphError("order must be non-negative")
    adj: list[set[int]] = [set() for _ in range(n)]
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"endpoint out of range in edge {(u, v)} for order {n}")
        if u == v:
            raise GraphError(f"self-loop {(u, v)}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, adj)


def degree(g: Graph, v: int) -> int:
    return len(g.neighbors(v))


@dataclass(frozen=True)
class CutResult:
    """Edge boundary of ``side_x``; ``edges`` are sorted ``(u, v)`` with ``u < v``."""

    value: int
    side_x: VertexSet
    edges: tuple[tuple[int, int], ...] = field(default=())

    @property
    def side_y(self) -> VertexSet:
        return self.side_x.complement()


def boundary(g: Graph, x: VertexSet | Iterable[int]) -> CutResult:
    xs = _as_vertex_set(g.n, x)
    if xs.is_empty or xs.is_full:
        raise GraphError("boundary needs a proper non-empty vertex subset")
    inside = xs.mask
    cut = []
    for u in xs:
        outside = g.masks[u] & ~inside
        while outside:
            low = outside & -outside
            v = low.bit_length() - 1
            cut.append((u, v) if u < v else (v, u))
            outside ^= low
    cut.sort()
    return CutResult(len(cut), xs, tuple(cut))


def boundary_size(g: Graph, mask: int) -> int:
    """``|boundary(X)|`` for a raw bitmask, without building the edge list."""
    total = 0
    m = mask
    while m:
        low = m & -m
        total += bin(g.masks[low.bit_length() - 1] & ~mask).count("1")
        m ^= low
    return total


def component_masks(masks: Sequence[int], within: int) -> list[int]:
    """Connected components of the subgraph induced by the bitmask ``within``."""
    out = []
    rest = within
    while rest:
        comp = rest & -rest
        frontier = comp
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = masks[low.bit_length() - 1] & within & ~comp
            comp |= new
            frontier |= new
        out.append(comp)
        rest &= ~comp
    return out


def components(g: Graph) -> list[VertexSet]:
    return [VertexSet(g.n, c) for c in component_masks(g.masks, (1 << g.n) - 1)]


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def induced_subgraph(g: Graph, x: VertexSet | Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``(G[X], old_ids)`` where ``old_ids[new_id]`` is the original vertex."""
    xs = _as_vertex_set(g.n, x)
    if xs.is_empty:
        raise GraphError("induced subgraph of an empty set")
    old_ids = xs.to_list()
    new_id = {v: i for i, v in enumerate(old_ids)}
    adj = [[new_id[w] for w in g.adjacency[v] if w in new_id] for v in old_ids]
    return Graph(len(old_ids), adj), old_ids


@dataclass(frozen=True)
class MultiGraph:
    """Undirected multigraph: ``mult[(u, v)]`` (``u < v``) is the number of parallel edges.

    Only produced by contraction; the rest of the library works on :class:`Graph`.
    ``labels[i]`` lists the original vertices merged into vertex ``i``.
    """

    n: int
    mult: dict[tuple[int, int], int]
    labels: tuple[tuple[int, ...], ...] = ()

    @classmethod
    def from_graph(cls, g: Graph) -> "MultiGraph":
        return cls(g.n, {e: 1 for e in g.edges()}, tuple((v,) for v in range(g.n)))

    def degree(self, v: int) -> int:
        return sum(c for (a, b), c in self.mult.items() if v in (a, b))

    def multiplicity(self, u: int, v: int) -> int:
        return self.mult.get((min(u, v), max(u, v)), 0)


def contract_set(g: Graph, x: VertexSet | Iterable[int]) -> MultiGraph:
    """Merge the connected set ``X`` into one vertex, keeping parallel edges.

    The merged vertex takes the position of ``min(X)``; other vertices keep
    their relative order.
    """
    xs = _as_vertex_set(g.n, x)
    if xs.is_empty:
        raise GraphError("cannot contract an empty set")
    if len(component_masks(g.masks, xs.mask)) != 1:
        raise GraphError(f"G[X] is disconnected for X={xs.to_list()}")
    anchor = min(xs)
    new_id = {}
    labels: list[tuple[int, ...]] = []
    for v in range(g.n):
        if v in xs and v != anchor:
            continue
        new_id[v] = len(labels)
        labels.append(tuple(xs) if v == anchor else (v,))
    for v in xs:
        new_id[v] = new_id[anchor]
    mult: dict[tuple[int, int], int] = {}
    for u, v in g.edges():
        a, b = new_id[u], new_id[v]
        if a == b:
            continue
        key = (a, b) if a < b else (b, a)
        mult[key] = mult.get(key, 0) + 1
    return MultiGraph(len(labels), mult, tuple(labels))

