"""Weight-tolerant shortest-path subgraphs of weighted directed graphs."""

from wtss.builder import WtssResult, branch_bound, build_wtss, build_wtss_t, indegree_cap, stats
from wtss.errors import (BudgetError, IntegralityError, NegativeCycleError, NotACutError,
                         ParameterError, ParseError, RangeError, UnreachableError,
                         WitnessBudgetError, WtssError)
from wtss.flow import CutResult, FlowAssignment, farthest_min_cut, fsmc, max_flow, partition
from wtss.generators import (LBInstance, gen_decrement_lb, gen_rational_increment_lb,
                             gen_rational_weight_lb, gen_tree_lb)
from wtss.graph import Edge, Graph, Subgraph, dump_graph, load_graph, match_subgraph
from wtss.kernels import BACKEND
from wtss.oracle import (Counterexample, EdgeVerdict, IncrementFunction, enumerate_increments,
                         verify_edge_necessity, verify_ftrs_reduction, verify_wtss, verify_wtss_t)
from wtss.shortest_path import distance, reverse_sssp, shortest_path_subgraph, sssp
from wtss.transform import TransformMapping, map_back, reduce_out_degree

__version__ = "0.1.0"
