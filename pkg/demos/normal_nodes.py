"""
Normal and good nodes from signature sequences
==============================================

Two sequences see the same peaks: the node sequence N read off the diagram,
and the sequence M built from the residue symbol alone.
"""

from mullineux import analyze, mullineux_sequence, node_sequence, normal_nodes_block, parse_partition
from mullineux.partitions import removable_nodes

p = 5
lam = parse_partition("12,7^2,5^3,3,1^3")

N = node_sequence(lam, p)
M = mullineux_sequence(lam, p)
print("N =", N)
print("M =", M)

rn, rm = analyze(N, p), analyze(M, p)
print("peaks", rn.peaks, rm.peaks)

# mark normal entries with ^ and good ones with *
marks = []
for i, tok in enumerate(str(N).split()):
    flag = "*" if rn.good[i] else ("^" if rn.normal[i] else " ")
    marks.append(flag.center(len(tok)))
print("    " + " ".join(marks))

###############################################################################
# The same nodes come out of the block conditions on the exponential form,
# solved as a bipartite matching.

blk = normal_nodes_block(lam, p)
nodes = removable_nodes(lam)
print("normal nodes:", [tuple(nodes[i - 1]) for i in blk.normal])
print("good nodes:  ", [tuple(nodes[i - 1]) for i in blk.good])
print("heights:     ", blk.heights)
