"""
Searching for non-binary examples
=================================

Scan random GF(3) vector matroids and the catalog for non-binary matroids
that meet the closed-or-degree-3 condition while having a non-closed
circuit.  Same seed, same report.
"""

from tropbasis.explore import explore

print(explore("gf3", n_max=8, seed=1, count=100).to_text())
print(explore("catalog", n_max=10).to_text())
