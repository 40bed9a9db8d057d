"""Edge-connectivity and k-restricted edge-connectivity (k = 1, 2, 3).

Two independent routes are provided:

``flow``
    A minimum k-restricted cut of a connected graph leaves exactly two
    connected sides, each with at least k vertices. Contracting a connected
    k-set on each side and taking a minimum cut between them therefore gives
    a valid k-restricted cut (both sides of a minimum cut between connected
    seeds are connected) of value at most the optimum. :func:`_seed_pairs`
    enumerates seed pairs by branching on which side each frontier vertex
    lies; the optimum's own bipartition follows one branch, so the minimum
    over the leaves is exact.
``oracle``
    Exhaustive bipartition enumeration (:mod:`rek_lab.oracle`).

``+inf`` (no restricted cut) is ``math.inf``; JSON renders it as ``"infinity"``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Iterator

from rek_lab import oracle
from rek_lab.flow import SeededCutter
from rek_lab.graph import CutResult, Graph, GraphError, VertexSet, boundary, component_masks
from rek_lab.invariants import connected_triples, min_degree, xi, xi3

INF = math.inf
METHODS = ("flow", "oracle", "pairs")


def render_value(value: float | int) -> int | str:
    return "infinity" if value == INF else int(value)


@dataclass(frozen=True)
class RestrictedCut:
    """Value of ``lambda_k`` and, when finite, a witnessing boundary."""

    k: int
    value: int | float
    witness: CutResult | None
    method: str = "flow"

    @property
    def is_finite(self) -> bool:
        return self.value != INF

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"k": self.k, "value": render_value(self.value), "method": self.method}
        if self.witness is not None:
            out["witness"] = {
                "side_x": self.witness.side_x.to_list(),
                "edges": [list(e) for e in self.witness.edges],
            }
        else:
            out["witness"] = None
        return out


def _cut_from_mask(g: Graph, mask: int) -> CutResult:
    return boundary(g, VertexSet(g.n, mask))


def _lex_key(mask: int) -> list[int]:
    return oracle.sorted_vertices(mask)


def validate_witness(g: Graph, cut: CutResult, k: int) -> bool:
    """Deleting ``cut.edges`` leaves components of order >= k, and the edges are ``boundary(side_x)``."""
    if cut.side_x.is_empty or cut.side_x.is_full:
        return False
    if boundary(g, cut.side_x).edges != tuple(sorted(cut.edges)) or cut.value != len(cut.edges):
        return False
    removed = set(cut.edges)
    masks = list(g.masks)
    for u, v in removed:
        masks[u] &= ~(1 << v)
        masks[v] &= ~(1 << u)
    comps = component_masks(masks, (1 << g.n) - 1)
    return len(comps) >= 2 and all(bin(c).count("1") >= k for c in comps)


# -- global edge-connectivity ------------------------------------------------

def min_edge_cut(g: Graph) -> CutResult:
    """Global minimum edge cut via ``n - 1`` flows from vertex 0.

    Among minimum cuts found, the side containing vertex 0 with the
    lexicographically smallest vertex list is returned.
    """
    if g.n < 2:
        raise GraphError("edge-connectivity needs at least 2 vertices")
    best, best_side = None, None
    cutter = SeededCutter(g)
    for t in range(1, g.n):
        limit = None if best is None else best + 1
        val, side = cutter.cut(1, 1 << t, limit)
        if best is not None and val > best:
            continue
        if best is None or val < best or _lex_key(side) < _lex_key(best_side):
            best, best_side = val, side
    return _cut_from_mask(g, best_side)


def edge_connectivity(g: Graph) -> int:
    return min_edge_cut(g).value


# -- restricted connectivity --------------------------------------------------

def _neighborhood(masks, s: int) -> int:
    out = 0
    m = s
    while m:
        low = m & -m
        out |= masks[low.bit_length() - 1]
        m ^= low
    return out & ~s


def _absorb(masks, core: int, known: int) -> tuple[int, int]:
    """Move vertices of ``known`` adjacent to ``core`` into ``core`` until stable."""
    while known:
        touch = _neighborhood(masks, core) & known
        if not touch:
            break
        core |= touch
        known &= ~touch
    return core, known


def _lowest(mask: int) -> int:
    return mask & -mask


def _seed_pairs(g: Graph, k: int, root: int = 0) -> Iterator[tuple[int, int]]:
    """Disjoint connected seed sets ``(S, T)``, ``|S|, |T| >= k``, ``root`` in S.

    Each step picks the smallest undecided vertex adjacent to the set being
    grown and branches on its side. ``xp``/``xq`` hold vertices already placed
    on the source/sink side that are not yet adjacent to S/T. For every
    bipartition (P, Q) with both sides connected, ``|P|, |Q| >= k`` and
    ``root`` in P, one leaf satisfies ``S <= P`` and ``T <= Q``.
    """
    masks = g.masks
    stack = [(1 << root, 0, 0, 0)]
    while stack:
        s, t, xp, xq = stack.pop()
        s, xp = _absorb(masks, s, xp)
        if t:
            t, xq = _absorb(masks, t, xq)
        ns, nt = bin(s).count("1"), bin(t).count("1")
        if ns < k:
            cand = _neighborhood(masks, s) & ~t & ~xq
            if not cand:
                continue
            c = _lowest(cand)
            stack.append((s, t, xp, xq | c) if t else (s, c, xp, xq))
            stack.append((s | c, t, xp, xq))
        elif not t:
            cand = _neighborhood(masks, s)
            if not cand:
                continue
            c = _lowest(cand)
            stack.append((s, c, xp, xq))
            stack.append((s | c, t, xp, xq))
        elif nt < k:
            cand = _neighborhood(masks, t) & ~s & ~xp
            if not cand:
                continue
            d = _lowest(cand)
            stack.append((s, t, xp | d, xq))
            stack.append((s, t | d, xp, xq))
        else:
            yield s, t


def _connected_k_sets(g: Graph, k: int) -> list[int]:
    if k == 1:
        return [1 << v for v in range(g.n)]
    if k == 2:
        return [(1 << u) | (1 << v) for u, v in g.edges()]
    if k == 3:
        return [(1 << a) | (1 << b) | (1 << c) for a, b, c in connected_triples(g)]
    raise GraphError("flow route supports k <= 3 only")


def _all_pairs(g: Graph, k: int) -> Iterator[tuple[int, int]]:
    """Every unordered pair of disjoint connected k-sets (the unpruned reduction)."""
    sets = _connected_k_sets(g, k)
    for a, b in combinations(sets, 2):
        if not a & b:
            yield (a, b) if _lex_key(a) < _lex_key(b) else (b, a)


def _flow_restricted(g: Graph, k: int, exhaustive: bool) -> tuple[int | float, int | None]:
    full = (1 << g.n) - 1
    comps = component_masks(g.masks, full)
    if len(comps) > 1:
        # removing nothing already disconnects; restricted iff every part is big enough
        if all(bin(c).count("1") >= k for c in comps):
            return 0, comps[0]
        return INF, None
    best, best_side = INF, None
    pairs = _all_pairs(g, k) if exhaustive else _seed_pairs(g, k)
    cutter = SeededCutter(g)
    for src, snk in pairs:
        limit = None if best == INF else best + 1
        val, side = cutter.cut(src, snk, limit)
        if val > best:
            continue
        if not side & 1:
            side = full & ~side
        if val < best or _lex_key(side) < _lex_key(best_side):
            best, best_side = val, side
    return best, best_side


def restricted_edge_connectivity(g: Graph, k: int, method: str = "flow",
                                 oracle_limit: int = oracle.DEFAULT_LIMIT) -> RestrictedCut:
    """``lambda_k(g)`` for k in {1, 2, 3} by flow, or any k by the oracle."""
    if method not in METHODS:
        raise GraphError(f"unknown method {method!r}; expected one of {METHODS}")
    if method == "oracle":
        return lambda_k_oracle(g, k, oracle_limit)
    if k == 1:
        cut = min_edge_cut(g)
        return RestrictedCut(1, cut.value, cut, method)
    value, side = _flow_restricted(g, k, exhaustive=(method == "pairs"))
    witness = None if side is None else _cut_from_mask(g, side)
    return RestrictedCut(k, value, witness, method)


def lambda2(g: Graph, method: str = "flow", oracle_limit: int = oracle.DEFAULT_LIMIT) -> RestrictedCut:
    if g.n < 4:
        raise GraphError("restricted edge-connectivity needs at least 4 vertices")
    return restricted_edge_connectivity(g, 2, method, oracle_limit)


def lambda3(g: Graph, method: str = "flow", oracle_limit: int = oracle.DEFAULT_LIMIT) -> RestrictedCut:
    """3-restricted edge-connectivity; ``inf`` for fewer than 6 vertices."""
    if g.n < 6:
        return RestrictedCut(3, INF, None, method)
    return restricted_edge_connectivity(g, 3, method, oracle_limit)


def lambda_k_oracle(g: Graph, k: int, limit: int = oracle.DEFAULT_LIMIT) -> RestrictedCut:
    value, found = oracle.scan(g, k, limit)
    if value is None:
        return RestrictedCut(k, INF, None, "oracle")
    return RestrictedCut(k, value, _cut_from_mask(g, oracle.lex_smallest(found)), "oracle")


def has_3_restricted_cut(g: Graph) -> tuple[bool, tuple[tuple[int, int, int], tuple[int, int, int]] | None]:
    """Two vertex-disjoint paths on three vertices, with the first such pair found.

    Each path is reported as ``(end, middle, end)``.
    """
    paths = []
    for mid in range(g.n):
        for a, b in combinations(g.adjacency[mid], 2):
            paths.append(((a, mid, b), (1 << a) | (1 << mid) | (1 << b)))
    for (p, pm), (q, qm) in combinations(paths, 2):
        if not pm & qm:
            return True, (p, q)
    return False, None


# -- classifiers ---------------------------------------------------------------

PROPERTIES = (
    "maximally-edge-connected",
    "super-edge-connected",
    "maximally-restricted",
    "super-restricted",
    "maximally-3-restricted",
    "super-3-restricted",
)


@dataclass(frozen=True)
class ClassifierVerdict:
    """``holds`` is ``None`` when the property is not applicable (parameter undefined)."""

    property: str
    holds: bool | None
    certificate: dict[str, Any] = field(default_factory=dict)

    @property
    def outcome(self) -> str:
        return "not-applicable" if self.holds is None else "holds" if self.holds else "fails"


def classify(g: Graph, prop: str, oracle_limit: int = oracle.DEFAULT_LIMIT) -> ClassifierVerdict:
    if prop not in PROPERTIES:
        raise GraphError(f"unknown property {prop!r}; expected one of {PROPERTIES}")
    connected = g.n >= 2 and len(component_masks(g.masks, (1 << g.n) - 1)) == 1
    if prop.startswith("maximally"):
        if prop == "maximally-edge-connected":
            if g.n < 2:
                return ClassifierVerdict(prop, None, {"reason": "fewer than 2 vertices"})
            lam, ref, name = edge_connectivity(g), min_degree(g), "min_degree"
        elif prop == "maximally-restricted":
            ref, name = xi(g), "xi"
            lam = lambda2(g).value if g.n >= 4 else INF
        else:
            ref, name = xi3(g), "xi3"
            lam = lambda3(g).value
        if lam == INF or ref is None:
            return ClassifierVerdict(prop, None, {"lambda": render_value(lam), name: ref,
                                                  "reason": "parameter undefined"})
        return ClassifierVerdict(prop, lam == ref, {"lambda": int(lam), name: ref})

    k = {"super-edge-connected": 1, "super-restricted": 2, "super-3-restricted": 3}[prop]
    if not connected:
        return ClassifierVerdict(prop, None, {"reason": "graph is not connected"})
    value, found = oracle.scan(g, k, oracle_limit)
    if value is None:
        return ClassifierVerdict(prop, None, {"lambda": "infinity", "reason": "no restricted cut"})
    full = (1 << g.n) - 1
    bad = [m for m in found
           if min(bin(m).count("1"), bin(full & ~m).count("1")) != k]
    if bad:
        cut = _cut_from_mask(g, oracle.lex_smallest(bad))
        return ClassifierVerdict(prop, False, {
            "lambda": value,
            "minimum_cuts": len(found),
            "counterexample_side": cut.side_x.to_list(),
            "counterexample_edges": [list(e) for e in cut.edges],
        })
    return ClassifierVerdict(prop, True, {"lambda": value, "minimum_cuts": len(found)})
