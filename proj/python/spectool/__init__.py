"""Spectral extremal graph toolkit."""

import json

from ._core import (
    Graph,
    SpectoolError,
    complete,
    complete_bipartite,
    count_triangles,
    cycle,
    eigenvalues,
    degree_peel,
    from_graph6,
    gnp,
    has_cycle_of_length,
    path,
    petersen,
    spectral_radius,
    star,
    to_graph6,
)
from . import _core


def _graph(g):
    return from_graph6(g) if isinstance(g, str) else g


def analyze(graph, walks=None, cycles=None):
    """Per-graph report as a dict (same schema as `spectool analyze --json`)."""
    return json.loads(_core.analyze_json(_graph(graph), walks, cycles))


def walk_counts(graph, k):
    """Exact walk totals w_0..w_k as Python ints."""
    return [int(w) for w in json.loads(_core.walk_totals_json(_graph(graph), k))["totals"]]


def check_theorem(graph, theorem):
    return json.loads(_core.check_theorem_json(_graph(graph), theorem))


def verify(max_n, min_n=1, connected=False, dedup="labeled", theorems=(), jobs=1, timing=False):
    """Exhaustive sweep; returns the report dict."""
    return json.loads(_core.verify_json(min_n, max_n, connected, dedup, list(theorems), jobs, timing))


def fuzz(dist, count=1000, seed=0, theorems=(), jobs=1, timing=False):
    return json.loads(_core.fuzz_json(dist, count, seed, list(theorems), jobs, timing))


__all__ = [
    "Graph", "SpectoolError", "analyze", "check_theorem", "complete", "complete_bipartite",
    "count_triangles", "cycle", "eigenvalues", "degree_peel", "from_graph6", "fuzz", "gnp",
    "has_cycle_of_length", "path", "petersen", "spectral_radius", "star", "to_graph6",
    "verify", "walk_counts",
]
