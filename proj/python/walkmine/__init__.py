"""Mine deterministic graph-walking programs between two vertex sets."""

import json

from ._walkmine import Graph, InputError, generate, run_cli

__all__ = ["Graph", "InputError", "generate", "load", "mine", "run_cli"]


def load(path, color_dim=None):
    with open(path, encoding="utf-8") as fh:
        return Graph.from_json(fh.read(), color_dim)


def mine(graph, source=(), target=(), engine="scp", mode="exact", max_len=4, fidelity="repaired"):
    """One report dict per length 0..max_len; source/target default to the graph file's lists."""
    return json.loads(graph._mine(list(source), list(target), engine, mode, max_len, fidelity))
