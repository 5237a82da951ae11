"""Counting components: Kostant's partition function and weight multiplicities.

The number of ways to write a positive-root-lattice vector as a sum of
positive roots, and the number of SSYT of shape lambda and content mu, which
equals the weight multiplicity given by Kostant's formula.
"""

import itertools

from preproj import kostant_partition, ssyt_enumerate, weight_multiplicity
from preproj.lattice import root_from_dims

for v in [(1,), (1, 1), (1, 1, 1), (1, 2, 1), (2, 2, 2)]:
    print(f"Kostant count for dimension vector {v}: {kostant_partition(root_from_dims(v))}")

lam = (3, 1, 0)
print(f"\nweights of the irreducible representation with highest weight {lam}:")
for mu in sorted(set(itertools.permutations((3, 1, 0))) | set(itertools.permutations((2, 2, 0)))
                 | set(itertools.permutations((2, 1, 1))), reverse=True):
    print(f"  mu = {mu}: SSYT count {len(ssyt_enumerate(lam, mu))}, "
          f"multiplicity formula {weight_multiplicity(lam, mu)}")
