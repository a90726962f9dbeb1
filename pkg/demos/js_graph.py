"""
Building JS-partitions along a graph
====================================

Residue symbols of JS-partitions of a fixed type are the walks in a small
directed graph. Edge labels (d, e) give the weight without touching the partition.
"""

from collections import Counter

from mullineux import build_js_graph, is_js, js_type, partition_of_symbol, weight
from mullineux.cores import CoreShape, p_core
from mullineux.js_construction import js_core_at_column, js_witness, walk_symbols, weight_of_path
from mullineux.partitions import enumerate_p_regular_upto, format_exponential

p, alpha = 5, 0
g = build_js_graph(alpha, p)
print(len(g.vertices), "vertices,", len(g.edges), "edges; starts", dict(g.starts))
with open("js_graph_p5_a0.dot", "w") as fh:
    fh.write(g.to_dot())

# walk the graph up to size 12 and realize each symbol
for path, G in walk_symbols(g, 12):
    lam = partition_of_symbol(G, p)
    core = js_core_at_column(path.columns[-1], alpha, p)
    w = weight_of_path(path, g)
    assert core.as_partition() == p_core(lam, p) and w == weight(lam, p)
    print(f"{' -> '.join(c.label() for c in path.columns):32s} {format_exponential(lam):18s} core {core!r:10s} w={w}")

###############################################################################
# Count JS-partitions by type; every one of them has a rectangular core.

types = Counter(js_type(lam, p) for lam in enumerate_p_regular_upto(15, p, nmin=1) if is_js(lam, p))
print(sorted(types.items()))

# any rectangular core with any weight is reached
print(format_exponential(js_witness(CoreShape(2, 2), 2, p)))
