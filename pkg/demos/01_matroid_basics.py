"""
Matroids from circuits, matrices and graphs
===========================================

Every matroid here lives on the ground set {1..n}.  Subsets are int bit
masks under the hood; `fmt` prints them as element lists.
"""

from tropbasis import Matroid, fano, fmt, fmt_family, from_gf_matrix, graphic, uniform

# U(2,4): four points on a line, every triple is a circuit
U = uniform(2, 4)
print("U(2,4) circuits:", fmt_family(U.circuits))
print("rank:", U.full_rank, " closure of {1,2}:", fmt(U.closure([1, 2])))

# circuit families are checked against the axioms on construction
try:
    Matroid(4, [[1, 2, 3], [1, 2, 4]])
except ValueError as exc:
    print("rejected:", exc)

# the Fano plane as the GF(2) vector matroid of the nonzero vectors of F_2^3
F = fano()
print("Fano has", len(F.circuits), "circuits, binary:", F.is_binary())

# the same matroid straight from a matrix
F2 = from_gf_matrix(2, [[1, 0, 1, 0, 1, 0, 1],
                        [0, 1, 1, 0, 0, 1, 1],
                        [0, 0, 0, 1, 1, 1, 1]])
print("matrix build agrees:", F2 == F)

# cycle matroid of K4 (vertices 0-based in the Python API)
K4 = graphic(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
print("K4 triangles and 4-cycles:", fmt_family(K4.circuits))

# duality: cocircuits are the complements of hyperplanes
print("U(2,4) cocircuits:", fmt_family(U.cocircuits()))
print("dual of U(2,4) is U(2,4):", U.dual() == U)
