from __future__ import annotations

import itertools

import networkx as nx
import pytest
from hypothesis import settings
from hypothesis import strategies as st

from rek_lab.generators import (
    GeneratorError,
    circulant,
    complete,
    cycle,
    harary,
    path,
    random_regular,
    star,
    subdivided_complete,
)
from rek_lab.graph import Graph, from_edge_list, is_connected

# flow timings vary with machine load; correctness is what is checked
settings.register_profile("repo", deadline=None)
settings.load_profile("repo")


def to_nx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges())
    return out


def brute_lambda_k(g: Graph, k: int) -> float:
    """Plain itertools enumeration, independent of the numpy oracle."""
    best = float("inf")
    verts = range(1, g.n)
    nxg = to_nx(g)
    for r in range(0, g.n - 1):
        for rest in itertools.combinations(verts, r):
            x = {0, *rest}
            y = set(range(g.n)) - x
            if len(x) < k or len(y) < k:
                continue
            if any(len(c) < k for part in (x, y) for c in nx.connected_components(nxg.subgraph(part))):
                continue
            best = min(best, sum(1 for u, v in g.edges() if (u in x) != (v in x)))
    return best


def double_star() -> Graph:
    return from_edge_list(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])


def two_triangles() -> Graph:
    return from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


def _try(fn, *args):
    try:
        return fn(*args)
    except GeneratorError:
        return None


def build_corpus() -> list[tuple[str, Graph]]:
    """Connected graphs of order 6..12 from every generator family, deduplicated."""
    out: list[tuple[str, Graph]] = []
    for n in range(6, 13):
        out.append((f"cycle({n})", cycle(n)))
        out.append((f"path({n})", path(n)))
        out.append((f"star({n})", star(n)))
        out.append((f"complete({n})", complete(n)))
        out.append((f"subdivided_complete({n - 1},0)", subdivided_complete(n - 1, 0)))
        for k in range(2, min(n, 7)):
            g = _try(harary, k, n)
            if g is not None:
                out.append((f"harary({k},{n})", g))
        for size in (1, 2):
            for offs in itertools.combinations(range(1, n // 2 + 1), size):
                out.append((f"circulant({n},{offs})", circulant(n, offs)))
        for d in (2, 3, 4, 5):
            for seed in range(8):
                g = _try(random_regular, n, d, seed)
                if g is not None:
                    out.append((f"random_regular({n},{d},{seed})", g))
    seen, corpus = set(), []
    for name, g in out:
        if not is_connected(g) or g in seen:
            continue
        seen.add(g)
        corpus.append((name, g))
    return corpus


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


@st.composite
def graphs(draw, min_n=1, max_n=9, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    if connected:
        chosen = list(set(chosen) | {(i, i + 1) for i in range(n - 1)})
    return from_edge_list(n, chosen)
