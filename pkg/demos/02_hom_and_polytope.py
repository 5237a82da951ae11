"""Hom spaces between Maya modules, three ways.

dim Hom(N(A), N(B)) comes out of (1) a closed-form count, (2) an exact null
space computation over the rationals, and (3) maximising a linear functional
over a truncated permutahedron.  All three agree.
"""

import itertools

from preproj import SubsetI, hom_formula, hom_space_basis, maya_module, polytope_max, polytope_vertices
from preproj.lattice import admissible_subsets

a, b = SubsetI(7, (3, 6, 7)), SubsetI(7, (2, 5, 7))
oracle = hom_space_basis(maya_module(a), maya_module(b))
print(f"dim Hom(N({{{a}}}), N({{{b}}})): formula {hom_formula(a, b)}, linear algebra {len(oracle)}, "
      f"polytope {polytope_max(a, b)}")

small = SubsetI(3, (2, 3))
print(f"\ngenerating points of the truncated permutahedron for B = {{{small}}}:")
for p in polytope_vertices(small).points:
    print("  ", p.coords)

n = 5
subs = admissible_subsets(n)
agree = sum(
    hom_formula(x, y) == len(hom_space_basis(maya_module(x), maya_module(y))) == polytope_max(x, y)
    for x, y in itertools.product(subs, subs)
)
print(f"\nn = {n}: all three agree on {agree} of {len(subs) ** 2} ordered pairs")
