"""Exhaustive bipartition enumeration for exact lambda_k on small graphs.

Only subsets containing vertex 0 are enumerated; the complement covers the
rest. Boundary sizes for all ``2**(n-1)`` subsets are computed with numpy in
chunks, then candidates are examined in increasing boundary order and the
first value with a valid bipartition (every component on both sides has at
least ``k`` vertices) is the answer.
"""

from __future__ import annotations

import numpy as np

from rek_lab.graph import Graph, GraphError, component_masks

DEFAULT_LIMIT = 24
_CHUNK_BITS = 20


class OracleLimitError(GraphError):
    def __init__(self, n: int, limit: int):
        self.n = n
        self.limit = limit
        super().__init__(f"exhaustive oracle refuses order {n}: limit is {limit} vertices")


def is_k_restricted_side(masks, side: int, full: int, k: int) -> bool:
    """True iff every component of G[side] and of G[full - side] has >= k vertices."""
    if k <= 1:
        return True
    for part in (side, full & ~side):
        for comp in component_masks(masks, part):
            if bin(comp).count("1") < k:
                return False
    return True


def _boundary_values(g: Graph) -> np.ndarray:
    """``out[i]`` = boundary size of the subset with mask ``2*i + 1``."""
    n = g.n
    total = 1 << (n - 1)
    edges = np.array(g.to_edge_list(), dtype=np.int64).reshape(-1, 2)
    dtype = np.uint8 if g.edge_count < 256 else np.uint16 if g.edge_count < 65536 else np.uint32
    out = np.empty(total, dtype=dtype)
    step = 1 << min(_CHUNK_BITS, n - 1)
    for start in range(0, total, step):
        masks = (np.arange(start, min(start + step, total), dtype=np.int64) << 1) | 1
        bits = [((masks >> v) & 1).astype(np.uint8) for v in range(n)]
        acc = np.zeros(len(masks), dtype=dtype)
        for u, v in edges:
            acc += bits[u] ^ bits[v]
        out[start:start + len(masks)] = acc
    return out


def scan(g: Graph, k: int, limit: int = DEFAULT_LIMIT) -> tuple[int | None, list[int]]:
    """Return ``(lambda_k, minimizing masks)`` or ``(None, [])`` when no valid cut exists.

    The masks are every anchored side (containing vertex 0) achieving the
    minimum, in increasing mask order.
    """
    n = g.n
    if n > limit:
        raise OracleLimitError(n, limit)
    if k < 1:
        raise GraphError("k must be >= 1")
    if n < 2 or 2 * k > n:
        return None, []
    values = _boundary_values(g)
    values[-1] = np.iinfo(values.dtype).max  # the full vertex set is not a cut
    full = (1 << n) - 1
    masks = g.masks
    for val in np.unique(values):
        idx = np.flatnonzero(values == val)
        valid = [int(i) << 1 | 1 for i in idx
                 if int(i) << 1 | 1 != full and is_k_restricted_side(masks, int(i) << 1 | 1, full, k)]
        if valid:
            return int(val), valid
    return None, []


def lex_smallest(masks: list[int]) -> int:
    """Mask whose sorted vertex list is lexicographically smallest."""
    return min(masks, key=sorted_vertices)


def sorted_vertices(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out
