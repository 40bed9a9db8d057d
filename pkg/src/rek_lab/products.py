"""Strong, Cartesian and direct products, and the two-fibre ``K2 (.) H`` graph.

Product vertex ``(x, y)`` has flat id ``x * n + y`` where ``n`` is the order
of the right factor, so the H-layer of ``x`` is the contiguous id range
``x*n .. x*n + n - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from rek_lab.graph import Graph, GraphError, VertexSet, from_edge_list


class ProductKind(str, Enum):
    STRONG = "strong"
    CARTESIAN = "cartesian"
    DIRECT = "direct"
    K2ODOT = "k2odot"


@dataclass(frozen=True)
class ProductGraph:
    graph: Graph
    kind: ProductKind
    m: int
    n: int

    def index(self, x: int, y: int) -> int:
        if not (0 <= x < self.m and 0 <= y < self.n):
            raise GraphError(f"pair {(x, y)} outside {self.m} x {self.n}")
        return x * self.n + y

    def index_map(self) -> list[list[int]]:
        """``[[flat_id, x, y], ...]`` for the JSON side table."""
        return [[v, *self.project_pair(v)] for v in range(self.graph.n)]

    def project_pair(self, v: int) -> tuple[int, int]:
        if not 0 <= v < self.m * self.n:
            raise GraphError(f"vertex {v} outside product of order {self.m * self.n}")
        return divmod(v, self.n)


@dataclass(frozen=True)
class Layer:
    kind: str  # "H" (fibre {x} x V(H)) or "G" (fibre V(G) x {y})
    anchor: int
    members: VertexSet


def _product(g: Graph, h: Graph, kind: ProductKind) -> ProductGraph:
    if g.n == 0 or h.n == 0:
        raise GraphError("product factors must be non-empty")
    m, n = g.n, h.n
    edges = []
    if kind in (ProductKind.STRONG, ProductKind.CARTESIAN):
        for x in range(m):
            edges += [(x * n + a, x * n + b) for a, b in h.edges()]
        for y in range(n):
            edges += [(a * n + y, b * n + y) for a, b in g.edges()]
    if kind in (ProductKind.STRONG, ProductKind.DIRECT):
        for x1, x2 in g.edges():
            for y1, y2 in h.edges():
                edges.append((x1 * n + y1, x2 * n + y2))
                edges.append((x1 * n + y2, x2 * n + y1))
    return ProductGraph(from_edge_list(m * n, edges), kind, m, n)


def strong_product(g: Graph, h: Graph) -> ProductGraph:
    return _product(g, h, ProductKind.STRONG)


def cartesian_product(g: Graph, h: Graph) -> ProductGraph:
    return _product(g, h, ProductKind.CARTESIAN)


def direct_product(g: Graph, h: Graph) -> ProductGraph:
    return _product(g, h, ProductKind.DIRECT)


def k2_odot(h: Graph) -> ProductGraph:
    """Fibres ``a = 0`` and ``b = 1`` over V(H); only cross-fibre edges.

    ``(a, y1) ~ (b, y2)`` iff ``y1 == y2`` or ``y1 y2`` is an edge of H.
    """
    n = h.n
    edges = [(y, n + y) for y in range(n)]
    for y1, y2 in h.edges():
        edges += [(y1, n + y2), (y2, n + y1)]
    return ProductGraph(from_edge_list(2 * n, edges), ProductKind.K2ODOT, 2, n)


def layers(pg: ProductGraph) -> list[Layer]:
    """All H-layers (one per left vertex) followed by all G-layers."""
    _require_product(pg)
    total = pg.m * pg.n
    out = []
    row = (1 << pg.n) - 1
    for x in range(pg.m):
        out.append(Layer("H", x, VertexSet(total, row << (x * pg.n))))
    col = sum(1 << (x * pg.n) for x in range(pg.m))
    for y in range(pg.n):
        out.append(Layer("G", y, VertexSet(total, col << y)))
    return out


def project(pg: ProductGraph, v: int) -> tuple[int, int]:
    _require_product(pg)
    return pg.project_pair(v)


def _require_product(pg) -> None:
    if not isinstance(pg, ProductGraph):
        raise GraphError("expected a ProductGraph built by rek_lab.products")


@dataclass(frozen=True)
class FiberReport:
    """How a bipartition ``(X, V - X)`` meets each layer.

    ``h_layers[x]`` / ``g_layers[y]`` is ``"split"``, ``"inside"`` (entirely
    in X) or ``"outside"`` (entirely in the complement).
    """

    h_layers: tuple[str, ...]
    g_layers: tuple[str, ...]

    @property
    def all_h_split(self) -> bool:
        return all(s == "split" for s in self.h_layers)

    @property
    def all_g_split(self) -> bool:
        return all(s == "split" for s in self.g_layers)

    @property
    def splitting(self) -> str:
        """Which family of layers is split everywhere: rows, columns, both or neither."""
        if self.all_h_split and self.all_g_split:
            return "both"
        if self.all_h_split:
            return "h-layers"
        if self.all_g_split:
            return "g-layers"
        return "neither"


def classify_cut_by_layers(pg: ProductGraph, side_x: VertexSet) -> FiberReport:
    _require_product(pg)
    if side_x.n != pg.m * pg.n or side_x.is_empty or side_x.is_full:
        raise GraphError("side_x must be a proper non-empty subset of the product")

    def status(layer: Layer) -> str:
        inter = layer.members.mask & side_x.mask
        if inter == 0:
            return "outside"
        if inter == layer.members.mask:
            return "inside"
        return "split"

    ls = layers(pg)
    return FiberReport(
        tuple(status(layer) for layer in ls[: pg.m]),
        tuple(status(layer) for layer in ls[pg.m:]),
    )

