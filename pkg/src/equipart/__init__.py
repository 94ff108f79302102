"""Equitable vertex partitions of planar graphs into degenerate parts and
forests, with exhaustive verification and brute-force oracles."""

from .coloring import (BUDGET_EXHAUSTED, Coloring, exact_acyclic_coloring,
                       exact_proper_coloring, validate_coloring)
from .elimination import (EdgeStep, EliminationSequence, LowVertexStep,
                          PairStep, edge_elimination_sequence,
                          trifree_elimination_sequence)
from .generators import GenSpec, gen_planar
from .graph import Graph, edges_between, parse_graph
from .oracle import brute_partition_exists, merge_bound_tight
from .partitioners import (Partition, RepairEvent, partition_2x2deg_trifree,
                           partition_2x3deg, partition_3x2deg)
from .setmerge import (MergeInput, MergeResult, equitable_merge,
                       lemma_quota_step, merge_quota, merge_threshold,
                       partition_2forests_1graph, proposition_merge)
from .verify import (PartitionSpec, Report, check_mixed_partition,
                     check_partition, degeneracy, degeneracy_order,
                     find_triangle, is_planar, is_triangle_free)

__version__ = "0.1.0"

__all__ = [
    "BUDGET_EXHAUSTED", "Coloring", "EdgeStep", "EliminationSequence",
    "GenSpec", "Graph", "LowVertexStep", "MergeInput", "MergeResult",
    "PairStep", "Partition", "PartitionSpec", "RepairEvent", "Report",
    "brute_partition_exists", "check_mixed_partition", "check_partition",
    "degeneracy", "degeneracy_order", "edge_elimination_sequence",
    "edges_between", "equitable_merge", "exact_acyclic_coloring",
    "exact_proper_coloring", "find_triangle", "gen_planar", "is_planar",
    "is_triangle_free", "lemma_quota_step", "merge_bound_tight",
    "merge_quota", "merge_threshold", "parse_graph", "partition_2forests_1graph",
    "partition_2x2deg_trifree", "partition_2x3deg", "partition_3x2deg",
    "proposition_merge", "trifree_elimination_sequence", "validate_coloring",
]
