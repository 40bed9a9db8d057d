"""Restricted edge-connectivity of graphs and strong products.

Computes lambda, lambda_2 and lambda_3 by max-flow and by exhaustive
enumeration, builds graph products, and checks closed-form predictions
for ``G x C_n`` and ``G x K_n`` (strong products) against computed values.
"""

from rek_lab.graph import (
    CutResult,
    Graph,
    GraphError,
    MultiGraph,
    VertexSet,
    boundary,
    components,
    contract_set,
    degree,
    from_edge_list,
    induced_subgraph,
    is_connected,
)

__all__ = [
    "CutResult",
    "Graph",
    "GraphError",
    "MultiGraph",
    "VertexSet",
    "boundary",
    "components",
    "contract_set",
    "degree",
    "from_edge_list",
    "induced_subgraph",
    "is_connected",
]

__version__ = "0.1.0"


def load_schema(name: str) -> dict:
    """JSON schema shipped with the package, e.g. ``load_schema("theorem_report")``."""
    import json
    from importlib.resources import files

    return json.loads(files("rek_lab").joinpath("schemas", f"{name}.schema.json").read_text())
