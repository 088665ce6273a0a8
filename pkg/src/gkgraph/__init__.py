"""Gruenberg-Kegel (prime) graphs of finite simple groups.

A library and command line tool that builds the prime graphs of the finite
simple groups appearing in the three-component classification (alternating,
PSL2, Suzuki, G2 / F4 / 2F4 / E8 in their relevant characteristics, plus a
few tabulated groups), computes components and exact maximum cocliques, and
replays a registry of arithmetic claims about those graphs.
"""

__version__ = "0.1.0"

from .groups import GroupId, parse_group_id
from .graphs import PrimeGraph, graph_of, graphs_equal

__all__ = [
    "GroupId",
    "PrimeGraph",
    "__version__",
    "graph_of",
    "graphs_equal",
    "parse_group_id",
]
