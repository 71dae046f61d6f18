"""b-colorings with d+1 colors on d-regular girth-5 graphs."""

import json

from ._bchrome import (
    Error,
    Graph,
    b_coloring_exists,
    closed_bunches,
    count_c6_in_n2,
    cycle,
    hoffman_singleton,
    is_b_coloring,
    parse_dimacs,
    parse_graph,
    parse_graph6,
    petersen,
    random_regular,
    relabel,
    robertson,
    write_dimacs,
    write_graph6,
)
from . import _bchrome

__all__ = [
    "Error",
    "Graph",
    "b_chromatic_number",
    "b_coloring_exists",
    "closed_bunches",
    "color",
    "count_c6_in_n2",
    "cycle",
    "hoffman_singleton",
    "hypothesis_report",
    "is_b_coloring",
    "parse_dimacs",
    "parse_graph",
    "parse_graph6",
    "petersen",
    "random_regular",
    "relabel",
    "robertson",
    "verify",
    "write_dimacs",
    "write_graph6",
]


def color(g, strategy="auto", x=None):
    """Build a (d+1)-b-coloring; returns the certificate as a dict."""
    return json.loads(_bchrome.color_json(g, strategy, x))


def verify(g, certificate):
    """(accepted, reason, detail) for a certificate dict or JSON string."""
    if not isinstance(certificate, str):
        certificate = json.dumps(certificate)
    return _bchrome.verify_json(g, certificate)


def hypothesis_report(g, threads=1):
    return json.loads(_bchrome.hypothesis_report_json(g, threads))


def b_chromatic_number(g, time_budget=60.0, **limits):
    """(value, exact, witness colors). value is a lower bound when not exact."""
    return _bchrome.b_chromatic_number(g, time_budget, **limits)
