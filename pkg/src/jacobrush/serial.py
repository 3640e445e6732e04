"""Loading graphs from JSON files of either kind."""

from __future__ import annotations

import json

from .digraph import DiGraph, digraph_from_json
from .jaco import jaco_from_json


def load_graph_json(text: str) -> DiGraph:
    """Accept a jaco or digraph file and return it as a DiGraph.

    Jaco files are validated against the arc rule before conversion.
    """
    data = json.loads(text)
    if not isinstance(data, dict):
        raise ValueError("graph JSON must be an object")
    kind = data.get("kind")
    if kind is None:
        kind = "digraph" if "nu" in data else "jaco"
    if kind == "jaco":
        return jaco_from_json(text).to_digraph()
    if kind == "digraph":
        return digraph_from_json(text)
    raise ValueError(f"unknown graph kind {kind!r}")
