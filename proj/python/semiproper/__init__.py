"""Semi-proper orientations of cacti and outerplanar graphs."""

import json

from . import _semiproper as _core
from ._semiproper import (
    Graph,
    Orientation,
    ParseError,
    UnsupportedClass,
    max_degree,
    parse_graph,
    serialize_graph,
    serialize_orientation,
    synthesize,
)

__version__ = _core.__version__

__all__ = [
    "Graph",
    "Orientation",
    "ParseError",
    "UnsupportedClass",
    "classify",
    "generate",
    "inequality_audit",
    "max_degree",
    "orient",
    "parse_graph",
    "peel_ears",
    "serialize_graph",
    "serialize_orientation",
    "solve",
    "synthesize",
    "validate",
]


def generate(family, size=3, seed=0, edges=0, max_cycle=9, edge_prob=0.4):
    """Return ``(graph, metadata)`` for a named graph family."""
    graph, meta = _core.generate(family, size, seed, edges, max_cycle, edge_prob)
    return graph, json.loads(meta)


def classify(graph):
    return json.loads(_core.classify(graph))


def peel_ears(graph, designated=None):
    return json.loads(_core.peel_ears(graph, designated))


def orient(graph, method="auto"):
    """Return ``(orientation, report)``; method is auto, cactus or outerplanar."""
    orientation, report = _core.orient(graph, method)
    return orientation, json.loads(report)


def validate(graph, arcs, mu_bound=None, max_weight=None):
    """Check a list of ``(tail, head, weight)`` arcs."""
    return json.loads(_core.validate(graph, list(arcs), mu_bound, max_weight))


def solve(graph, method="brute", mu_cap=4, max_weight=2, workers=1, budget_seconds=None, budget_nodes=None):
    """Exact search; method is brute, labeling or proper."""
    return json.loads(
        _core.solve(graph, method, mu_cap, max_weight, workers, budget_seconds, budget_nodes)
    )


def inequality_audit(graph):
    return json.loads(_core.inequality_audit(graph))
