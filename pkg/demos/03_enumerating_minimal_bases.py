"""
Enumerating minimal tropical bases
==================================

Minimal tropical bases are the minimal transversals of the witness
hypergraph: one vertex per circuit, one edge per non-flat.  Only the
inclusion-minimal edges matter.
"""

from tropbasis import (build_witness_hypergraph, enumerate_minimal_tropical_bases,
                       fmt_family, uniform)

M = uniform(2, 4)
H = build_witness_hypergraph(M)
print("non-flats:", len(H.sets), " distinct minimal witness sets:", len(H.reduced_edges))
for e in H.reduced_edges:
    print("  edge", fmt_family(H.circuits_of(e)))

res = enumerate_minimal_tropical_bases(M)
print("U(2,4) has", len(res.bases), "minimal bases:")
for b in res.bases:
    print("  ", fmt_family(b))

# larger cases grow quickly; the cap keeps the output bounded
res = enumerate_minimal_tropical_bases(uniform(2, 6), cap=10)
print("U(2,6), first", len(res.bases), "bases, truncated:", res.truncated)
