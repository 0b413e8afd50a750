"""Exact link and graph invariants backed by the linkhom C++ library."""

import json

from . import _core
from ._core import (
    ComputationDefect,
    DomainError,
    InvalidInput,
    bracket,
    cli,
    dichromatic,
    jones,
    suite_names,
    tutte,
)

__all__ = [
    "ComputationDefect",
    "DomainError",
    "InvalidInput",
    "bracket",
    "cli",
    "dichromatic",
    "graph_homology",
    "homfly",
    "jones",
    "khovanov",
    "suite_names",
    "tutte",
    "verify",
]


def _table(text):
    return {(e["i"], e["j"]): (e["rank"], [int(t) for t in e["torsion"]]) for e in json.loads(text)}


def khovanov(link, i_max=None, jwindow=None):
    """Normalized Khovanov homology as {(i, j): (rank, torsion)}."""
    return _table(_core.khovanov_json(link, i_max, jwindow))


def graph_homology(graph, theory, n=2, jwindow=None, variant="zero"):
    """Homology of a graph under the pn, qn or enhanced theory."""
    return _table(_core.graph_homology_json(graph, theory, n, jwindow, variant))


def homfly(braid):
    """F and G of a braid closure, decoded from JSON."""
    return json.loads(_core.homfly_json(braid))


def verify(suite="all", slow=False):
    """Reports of one suite or of all of them."""
    return json.loads(_core.verify_json(suite, slow))
