__version__ = "0.1.0"

from igelkit.core.gamma import encode_graph_gamma, gamma_encode_vertex, gamma_equivalent
from igelkit.core.graph import Graph, GraphCollection
from igelkit.core.igel import encode_graph, encode_graph_concat, igel_encode_vertex, igel_equivalent
from igelkit.core.parsers import read_graphs
from igelkit.core.survey import EncoderSpec, pairwise_compare, run_survey
from igelkit.core.wl import wl_joint_refine, wl_refine

__all__ = [
    "EncoderSpec",
    "Graph",
    "GraphCollection",
    "encode_graph",
    "encode_graph_concat",
    "encode_graph_gamma",
    "gamma_encode_vertex",
    "gamma_equivalent",
    "igel_encode_vertex",
    "igel_equivalent",
    "pairwise_compare",
    "read_graphs",
    "run_survey",
    "wl_joint_refine",
    "wl_refine",
]
