"""Multidimensional dominance drawings of DAGs and the reachability index they induce.

The pipeline: parse a DAG, make it an st-graph, cover it with a minimum
set of channels (chains of the reachability order), build the compressed
transitive closure, and read coordinates off the projection table. The
block-decomposition pipeline (quotient graph plus per-block drawings)
lowers the dimension further whenever the graph has nontrivial transitive
modules.
"""

from .channels import (
    Channel,
    ChannelDecomposition,
    min_channel_decomposition,
    pad_decomposition,
    validate_decomposition,
    width,
)
from .ctc import CompressedTransitiveClosure, build_ctc, projection, reach_ctc
from .draw import DominanceDrawing, kd_draw, make_distinct, verify_dominance
from .errors import (
    DomDrawError,
    ValidationReport,
    Violation,
)
from .graph import (
    Dag,
    ReachMatrix,
    StGraph,
    max_antichain_bruteforce,
    parse_edge_list,
    reach_oracle,
    to_st_graph,
    topological_order,
)
from .modular import (
    CongruencePartition,
    ModuleInducedGraph,
    NeckProfile,
    QuotientGraph,
    dimensional_neck,
    drawings_computation,
    find_congruence_partition,
    module_induced_graphs,
    nd_draw,
    quotient_graph,
    shifter,
    validate_partition,
)
from .query import ReachIndex, batch_query, build_index, query

__all__ = [
    "Channel",
    "ChannelDecomposition",
    "CompressedTransitiveClosure",
    "CongruencePartition",
    "Dag",
    "DomDrawError",
    "DominanceDrawing",
    "ModuleInducedGraph",
    "NeckProfile",
    "QuotientGraph",
    "ReachIndex",
    "ReachMatrix",
    "StGraph",
    "ValidationReport",
    "Violation",
    "batch_query",
    "build_ctc",
    "build_index",
    "dimensional_neck",
    "drawings_computation",
    "find_congruence_partition",
    "kd_draw",
    "make_distinct",
    "max_antichain_bruteforce",
    "min_channel_decomposition",
    "module_induced_graphs",
    "nd_draw",
    "pad_decomposition",
    "parse_edge_list",
    "projection",
    "query",
    "quotient_graph",
    "reach_ctc",
    "reach_oracle",
    "shifter",
    "to_st_graph",
    "topological_order",
    "validate_decomposition",
    "validate_partition",
    "verify_dominance",
    "width",
]
