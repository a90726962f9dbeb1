"""Mullineux symbols, residue symbols and Jantzen-Seitz partitions."""
from .cores import EMPTY, CoreShape, n_vector_of, p_core, p_rim, rect_n_vector, strip_p_rim, weight
from .fixed_points import Infeasible, build_fixed_graph, fixed_core, fixed_witness, is_fixed_js
from .js_construction import JSColumn, JSGraph, NotJS, build_js_graph, is_js, js_type, js_witness
from .partitions import (
    EMPTY_PARTITION,
    Node,
    Partition,
    content,
    enumerate_p_regular,
    is_p_regular,
    make_partition,
    parse_partition,
)
from .signatures import SignatureSequence, analyze, mullineux_sequence, node_sequence, normal_nodes_block
from .symbols import (
    InvalidSymbol,
    MullineuxSymbol,
    ResidueSymbol,
    is_mullineux_fixed,
    mullineux_conjugate,
    mullineux_symbol,
    partition_of_symbol,
    residue_symbol,
)

__version__ = "0.1.0"
