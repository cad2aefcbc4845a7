"""Exact stochastic dense subgraph discovery in multilayer networks."""

try:
    # Wheel layout: the extension lives inside the package.
    from ._mlds import (
        MultilayerGraph,
        densest_exact,
        f_measure,
        generate,
        greedy_peeling,
        load_multilayer,
        lower_bound,
        oracle,
        solve,
    )
except ImportError:  # development layout: extension on sys.path
    from _mlds import (
        MultilayerGraph,
        densest_exact,
        f_measure,
        generate,
        greedy_peeling,
        load_multilayer,
        lower_bound,
        oracle,
        solve,
    )

__all__ = [
    "MultilayerGraph",
    "densest_exact",
    "f_measure",
    "generate",
    "greedy_peeling",
    "load_multilayer",
    "lower_bound",
    "oracle",
    "solve",
]
