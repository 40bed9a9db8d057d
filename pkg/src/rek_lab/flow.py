"""Exact integer max-flow / min-cut (Dinic) on small undirected graphs.

Every undirected edge becomes a pair of opposite arcs, each with the edge's
multiplicity as capacity. Seed sets are contracted by mapping all their
vertices onto the super-source or super-sink node.
"""

from __future__ import annotations

from collections import deque

from rek_lab.graph import CutResult, Graph, GraphError, MultiGraph, VertexSet


class _Network:
    __slots__ = ("size", "head", "cap", "out")

    def __init__(self, size: int):
        self.size = size
        self.head: list[int] = []
        self.cap: list[int] = []
        self.out: list[list[int]] = [[] for _ in range(size)]

    def add_edge(self, a: int, b: int, c: int) -> None:
        """Undirected edge of capacity ``c`` (two arcs, each other's residual)."""
        self.out[a].append(len(self.head))
        self.head.append(b)
        self.cap.append(c)
        self.out[b].append(len(self.head))
        self.head.append(a)
        self.cap.append(c)

    def max_flow(self, s: int, t: int, limit: int | None = None) -> int:
        head, cap, out = self.head, self.cap, self.out
        size = self.size
        flow = 0
        while limit is None or flow < limit:
            level = [-1] * size
            level[s] = 0
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for e in out[x]:
                    y = head[e]
                    if cap[e] and level[y] < 0:
                        level[y] = level[x] + 1
                        queue.append(y)
            if level[t] < 0:
                break
            it = [0] * size
            while limit is None or flow < limit:
                pushed = self._augment(s, t, level, it)
                if not pushed:
                    break
                flow += pushed
        return flow

    def _augment(self, s: int, t: int, level: list[int], it: list[int]) -> int:
        # iterative DFS along the level graph; returns the bottleneck pushed
        head, cap, out = self.head, self.cap, self.out
        stack = [s]
        arcs: list[int] = []
        while stack:
            x = stack[-1]
            if x == t:
                push = min(cap[e] for e in arcs)
                for e in arcs:
                    cap[e] -= push
                    cap[e ^ 1] += push
                return push
            ox = out[x]
            advanced = False
            while it[x] < len(ox):
                e = ox[it[x]]
                y = head[e]
                if cap[e] and level[y] == level[x] + 1:
                    stack.append(y)
                    arcs.append(e)
                    advanced = True
                    break
                it[x] += 1
            if not advanced:
                stack.pop()
                level[x] = -1
                if arcs:
                    arcs.pop()
                    it[stack[-1]] += 1
        return 0

    def reachable(self, s: int) -> list[bool]:
        seen = [False] * self.size
        seen[s] = True
        queue = deque([s])
        head, cap, out = self.head, self.cap, self.out
        while queue:
            x = queue.popleft()
            for e in out[x]:
                y = head[e]
                if cap[e] and not seen[y]:
                    seen[y] = True
                    queue.append(y)
        return seen


class SeededCutter:
    """Reusable min cuts between seed sets on one graph.

    Each query contracts the source seeds onto a super-source and the sink
    seeds onto a super-sink; only the arc arrays are rebuilt per query.
    """

    def __init__(self, g: Graph):
        self.n = g.n
        self.edges = list(g.edges())

    def cut(self, source_mask: int, sink_mask: int, limit: int | None = None) -> tuple[int, int]:
        if source_mask & sink_mask:
            raise GraphError("source and sink seeds overlap")
        if not source_mask or not sink_mask:
            raise GraphError("seeds must be non-empty")
        n = self.n
        s, t = n, n + 1
        node = list(range(n))
        for v in _bits(source_mask):
            node[v] = s
        for v in _bits(sink_mask):
            node[v] = t
        net = _Network(n + 2)
        head = net.head
        out = net.out
        for u, v in self.edges:
            a, b = node[u], node[v]
            if a != b:
                e = len(head)
                out[a].append(e)
                out[b].append(e + 1)
                head.append(b)
                head.append(a)
        net.cap = [1] * len(head)
        value = net.max_flow(s, t, limit)
        if limit is not None and value >= limit:
            return value, 0
        seen = net.reachable(s)
        side = 0
        for v in range(n):
            if seen[node[v]]:
                side |= 1 << v
        return value, side


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def seeded_min_cut(g: Graph, source_mask: int, sink_mask: int,
                   limit: int | None = None) -> tuple[int, int]:
    """Min cut of ``g`` separating two disjoint vertex sets.

    Returns ``(value, side_mask)`` where ``side_mask`` is the smallest source
    side (vertices reachable from the sources in the residual network). With
    ``limit`` the search stops once the flow reaches it; the value is then
    ``limit`` and the side mask is meaningless.
    """
    return SeededCutter(g).cut(source_mask, sink_mask, limit)


def min_st_cut(mg: MultiGraph | Graph, s: int, t: int) -> CutResult:
    """Minimum s-t edge cut; parallel edges count with their multiplicity.

    The returned side is the set reachable from ``s`` in the final residual
    network, i.e. the inclusion-minimal source side.
    """
    if isinstance(mg, Graph):
        mg = MultiGraph.from_graph(mg)
    if s == t:
        raise GraphError("s and t must differ")
    for v in (s, t):
        if not 0 <= v < mg.n:
            raise GraphError(f"vertex {v} out of range for order {mg.n}")
    net = _Network(mg.n)
    for (a, b), c in mg.mult.items():
        net.add_edge(a, b, c)
    value = net.max_flow(s, t)
    seen = net.reachable(s)
    side = VertexSet.of(mg.n, (v for v in range(mg.n) if seen[v]))
    edges = []
    for (a, b), c in sorted(mg.mult.items()):
        if seen[a] != seen[b]:
            edges.extend([(a, b)] * c)
    return CutResult(value, side, tuple(edges))
