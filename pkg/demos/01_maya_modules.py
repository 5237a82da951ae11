"""Maya modules: build one, hide it behind a random change of basis, recover it.

A Maya module N(A) has a one-dimensional socle.  Its dimension vector alone
pins down A, and an isomorphism back to N(A) can be found and certified with
exact arithmetic.
"""

from preproj import SubsetI, identify_maya, maya_dims, maya_module, random_basis_change, socle_dims
from preproj.maya import maya_basis

a = SubsetI(7, (3, 6, 7))
m = maya_module(a)

print(f"A = {{{a}}} in n = {a.n}")
print("dimension vector:", maya_dims(a))
print("socle dimensions:", socle_dims(m), "(one-dimensional, at vertex |A| = 3)")

# Each row k of the picture is a string of basis vectors w_{j,k} for k <= j < a_k.
by_row = {}
for vertex, labels in enumerate(maya_basis(a), start=1):
    for j, k in labels:
        by_row.setdefault(k, []).append(j)
for k, vertices in sorted(by_row.items()):
    print(f"  row {k}: vertices {vertices}")

scrambled = random_basis_change(m, seed=11)
print("\nafter a random change of basis, the right map at vertex 3 is")
print(" ", scrambled.right_map(3))

found, iso = identify_maya(scrambled, seed=0)
print(f"identified as N({{{found}}}); intertwiner is an isomorphism: {iso.is_isomorphism()}")
