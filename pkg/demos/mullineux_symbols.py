"""
Mullineux symbols and the Mullineux map
=======================================

"""

from mullineux import make_partition, mullineux_symbol, partition_of_symbol, residue_symbol
from mullineux.partitions import format_exponential, residue_diagram
from mullineux.symbols import mullineux_conjugate, mullineux_map_G, mullineux_map_R, reconstruct_mullineux

p = 5
lam = make_partition([6, 6, 5, 4])

# residues of the nodes, (col - row) mod p
for row in residue_diagram(lam, p):
    print(" ".join(str(r) for r in row))

# strip p-rims until nothing is left: rim lengths on top, row counts below
G = mullineux_symbol(lam, p)
print("G =", G)

# the residue symbol keeps only residues, read from the innermost rim outwards
R = residue_symbol(G, p)
print("R =", R)

# ...and still determines everything
assert reconstruct_mullineux(R, p) == G
assert partition_of_symbol(G, p) == lam

###############################################################################
# The map replaces each row count r by a - r + eps (eps = 0 when p | a).

GM = mullineux_map_G(G, p)
print("G^M =", GM)
print("R^M =", mullineux_map_R(R, p))
image = mullineux_conjugate(lam, p)
print(format_exponential(lam), "->", format_exponential(image))
assert mullineux_conjugate(image, p) == lam

# for p = 2 the map does nothing
print(format_exponential(mullineux_conjugate(make_partition([5, 3, 2]), 2)))
