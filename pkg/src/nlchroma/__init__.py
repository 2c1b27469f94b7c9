"""Exact neighbour-locating chromatic numbers of small graphs."""

from .coloring import Coloring, Verdict, is_dominating, is_ml, is_nl, is_proper, nr_tuple
from .graph import (
    UNBOUNDED,
    Graph,
    cartesian_product,
    complement,
    disjoint_union,
    from_graph6,
    induced_subgraph,
    join,
    make,
    metrics,
    mycielski,
    to_graph6,
)
from .solver import Budget, SolveResult, chi_nl_bruteforce, chi_nl_exact, counting_lower_bound

__version__ = "0.1.0"
