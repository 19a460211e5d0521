from .base import TupleColoring, VertexColoring
from .combination import (
    combination_coloring,
    combination_vertex_colors,
    cyclic_vertex_coloring,
    lower_bound_f,
    parity_coloring,
)
from .lll import LLLParams, LLLResult, lll_grid_pair_coloring, lll_threshold, lll_tuple_coloring
from .threshold import (
    balls_tuple_coloring,
    depth_threshold_coloring,
    disks_pair_coloring,
    vc_tuple_coloring,
)

__all__ = [
    "LLLParams",
    "LLLResult",
    "TupleColoring",
    "VertexColoring",
    "balls_tuple_coloring",
    "combination_coloring",
    "combination_vertex_colors",
    "cyclic_vertex_coloring",
    "depth_threshold_coloring",
    "disks_pair_coloring",
    "lll_grid_pair_coloring",
    "lll_threshold",
    "lll_tuple_coloring",
    "lower_bound_f",
    "parity_coloring",
    "vc_tuple_coloring",
]
