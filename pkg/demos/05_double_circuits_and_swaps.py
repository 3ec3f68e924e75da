"""
Double circuits and the swap construction
=========================================

Adding an element f of cl(C) \\ C to a circuit C gives a double circuit
whose classes partition it.  If every non-closed circuit extends to a
double circuit of degree 3, the basis is unique.  When the minimal basis is
not unique, a non-closed member C can be swapped out for the circuits
D \\ D_i of a double circuit D = C + f.
"""

from tropbasis import (closed_circuits, double_circuit_decompose, enumerate_minimal_tropical_bases,
                       fano, fmt, fmt_family, is_tropical_basis, nonfano, theorem2_check,
                       theorem3_swap)

F = fano()
D = double_circuit_decompose(F, [1, 2, 3, 4, 7])
print("Fano double circuit {1,2,3,4,7}: classes", fmt_family(D.classes), "degree", D.degree)
print("inner circuits:", fmt_family(D.inner_circuits))

res = theorem2_check(F)
print("Fano satisfies the closed-or-degree-3 condition:", res.satisfied)
for cert in res.certificates[:4]:
    print("  ", fmt(cert.circuit), cert.kind, "" if cert.f is None else f"f={cert.f}")

# the non-Fano matroid has four minimal bases; swap inside one of them
M = nonfano()
closed = set(closed_circuits(M))
basis = enumerate_minimal_tropical_bases(M).bases[0]
C = next(c for c in basis if c not in closed)
new = theorem3_swap(M, basis, C)
print("non-Fano basis:", fmt_family(basis))
print("swap out", fmt(C), "->", fmt_family(new))
print("still a tropical basis:", is_tropical_basis(M, new).is_basis)
