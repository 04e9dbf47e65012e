"""Degree sequence realization for cactus graph families.

The public surface is small: parse a sequence, ``decide`` whether a family
realizes it, ``realize`` a witness, and check graphs with ``graphcheck``.
"""

__version__ = "0.1.0"

from .decide import Verdict, decide, explain
from .graphcheck import Family, Graph, is_member, read_graph, verify_realization, write_graph
from .realize import NotRealizableError, realize
from .seqcore import DegreeSequence, parse_sequence, params

__all__ = [
    "DegreeSequence",
    "Family",
    "Graph",
    "NotRealizableError",
    "Verdict",
    "decide",
    "explain",
    "is_member",
    "params",
    "parse_sequence",
    "read_graph",
    "realize",
    "verify_realization",
    "write_graph",
]
