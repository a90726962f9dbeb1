"""
Mullineux-fixed JS-partitions
=============================

"""

from mullineux import CoreShape, EMPTY, Infeasible, build_fixed_graph, fixed_witness, is_fixed_js, weight
from mullineux.cores import p_core
from mullineux.partitions import enumerate_p_regular_upto, format_exponential

p = 7
g = build_fixed_graph(p)
print("vertices:", ", ".join(v.label() for v in g.vertices))
print("singular:", [v.label() for v in g.singular_vertices()])

# fixed JS-partitions are rare; list the small ones with their cores
for lam in enumerate_p_regular_upto(20, p, nmin=1):
    if is_fixed_js(lam, p):
        print(f"{format_exponential(lam):24s} core {format_exponential(p_core(lam, p)) or '()':10s} w={weight(lam, p)}")

###############################################################################
# A witness exists for every even weight and square core, with one exception.

for j in range((p + 1) // 2):
    mu = EMPTY if j == 0 else CoreShape(j, j)
    row = []
    for w in range(0, 9, 2):
        try:
            row.append(str(fixed_witness(w, mu, p).n))
        except Infeasible:
            row.append("--")
    print(f"core {j}^{j}: sizes", " ".join(f"{s:>3s}" for s in row))
