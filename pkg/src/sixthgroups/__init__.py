"""Desk-scale computational engine for small-cancellation graph groups:
the graph-to-group reduction, Dehn's algorithm and torsion in sixth
groups, the element coding with its code multiplication, the
automorphism-extension decision procedure, and the prime-divisibility
random graph.
"""

from .graphs import Graph, graph
from .presentation import INFINITE, Presentation, RelatorSet, symmetrize
from .reduction import relators_from_graph
from .words import Word, format_word, parse_word

__all__ = [
    "Graph",
    "graph",
    "INFINITE",
    "Presentation",
    "RelatorSet",
    "symmetrize",
    "relators_from_graph",
    "Word",
    "format_word",
    "parse_word",
]
