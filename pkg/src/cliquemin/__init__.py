"""Exact toolkit for minimum clique counts under covering-number constraints.

Modules:
    graphs        -- bit-row graph type and exact counting/coloring kernels
    formulas      -- closed-form bounds and derived parameters, exact arithmetic
    constructions -- generators for the extremal graph families
    covering      -- exact pattern-covering numbers (branch and bound)
    oracle        -- independent brute-force and enumeration verification
    cli           -- command-line interface
"""

from .graphs import Graph, count_cliques, count_copies, to_graph6, from_graph6
from .formulas import triangle_params, clique_params, triangle_lower_bound
from .covering import covering_number

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "count_cliques",
    "count_copies",
    "to_graph6",
    "from_graph6",
    "triangle_params",
    "clique_params",
    "triangle_lower_bound",
    "covering_number",
    "__version__",
]
