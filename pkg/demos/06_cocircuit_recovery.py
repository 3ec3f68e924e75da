"""
Recovering cocircuits from a tropical basis
===========================================

Any tropical basis determines the matroid: its minimal nonempty orthogonal
sets are exactly the cocircuits.  A family that is not a basis can see
extra orthogonal sets.
"""

from tropbasis import (enumerate_minimal_tropical_bases, fmt_family, min_orthogonal_sets,
                       nonfano, uniform)

M = nonfano()
print("cocircuits:", len(M.cocircuits()))
for b in enumerate_minimal_tropical_bases(M).bases:
    print("basis of size", len(b), "recovers them:", min_orthogonal_sets(M, b) == M.cocircuits())

U = uniform(2, 4)
print("empty family on U(2,4):", fmt_family(min_orthogonal_sets(U, [])))
