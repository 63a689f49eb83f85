"""Good vertex covers of cubic graphs and normality witnesses for their line graphs."""

from .covers import VertexCover, greedy_cover, is_good, matching_for_edge, minimalize_cover
from .decomposition import decompose, find_wrong_set, good_vertex_cover, solve
from .graph_core import (
    Graph,
    bridges,
    connected_cubic_graphs,
    line_graph,
    named_graph,
    parse_graph,
    random_cubic,
    to_graph6,
)
from .oracle import Decision, SearchBudget, brute_good, brute_normal
from .witness import build_certificate, to_normality_witness, verify_certificate, verify_witness

__version__ = "0.1.0"
