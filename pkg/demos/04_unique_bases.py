"""
When is the minimal tropical basis unique?
==========================================

Closed circuits are forced into every tropical basis.  The basis is unique
exactly when the closed circuits already form one, which is a single
orthogonality scan.  Enumeration gives an independent count.
"""

from tropbasis import (closed_circuits, doubled_line_dual, enumerate_minimal_tropical_bases,
                       fano, fmt, fmt_family, has_unique_minimal_basis, nonfano, uniform)

for name, M in [("U(2,4)", uniform(2, 4)), ("Fano", fano()),
                ("non-Fano", nonfano()), ("doubled line dual, k=4", doubled_line_dual(4))]:
    u = has_unique_minimal_basis(M)
    count = len(enumerate_minimal_tropical_bases(M).bases)
    print(f"{name}: binary={M.is_binary()} closed circuits={len(closed_circuits(M))} "
          f"unique={u.unique} enumerated={count}")
    if u.witness is not None:
        print("   non-flat missed by the closed circuits:", fmt(u.witness))

# the doubled-line examples are non-binary from k=4 on and still unique
M = doubled_line_dual(4)
print("unique basis of the k=4 example:", fmt_family(has_unique_minimal_basis(M).basis))
