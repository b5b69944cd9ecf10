"""Vertex-partition decompositions, their algebra, and witness mining."""

from fractions import Fraction

from ._core import (
    Decomposition,
    Graph,
    InputError,
    SizeError,
    baker_decomposition,
    baker_mis,
    compose_bound,
    compute_treedepth,
    contains_biclique_subgraph,
    densest_part_pair,
    exact_mis,
    generate,
    graph_hash,
    half_graph_order,
    induced_subgraph,
    intersect,
    load_edge_list,
    power_coloring,
    power_graph,
    run_cli,
    save_edge_list,
    subdivide,
    subset_complement,
    vc_dimension,
    verify,
    zarankiewicz_brute,
)
from ._core import _kst_bound

__version__ = "0.1.0"


def kst_bound(n, s, t):
    """Certified upper bound on ex(n, K_{s,t}) as a Fraction.

    Irrational roots are rounded up, so the value is never below the real one.
    """
    num, den, _exact = _kst_bound(n, s, t)
    return Fraction(int(num), int(den))


__all__ = [name for name in dir() if not name.startswith("_") and name != "Fraction"]
