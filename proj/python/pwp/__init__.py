"""Indirect influence transform, rankings and parameter sweeps.

Matrices follow the convention ``d[i, j]`` = direct influence of vertex j on
vertex i. Vertex indices are 0-based in arguments and 1-based inside ranking
strings such as ``"3,4 > 2,5 > 1,6"``. Passing ``lam=None`` to ``scores`` or
``rank`` uses the direct matrix without the transform.
"""

from ._pwp import (
    PwpError,
    circuit_graph,
    circuit_indirect,
    crossing_consecutive,
    dominance_bound,
    eplus,
    epsilon_sweep,
    lambda_sweep,
    linear_graph,
    linear_importance,
    linear_influence,
    rank,
    ranking_from_scores,
    scores,
    transform,
    verify_unique_crossings,
)

__all__ = [
    "PwpError",
    "circuit_graph",
    "circuit_indirect",
    "crossing_consecutive",
    "dominance_bound",
    "eplus",
    "epsilon_sweep",
    "lambda_sweep",
    "linear_graph",
    "linear_importance",
    "linear_influence",
    "rank",
    "ranking_from_scores",
    "scores",
    "transform",
    "verify_unique_crossings",
]
