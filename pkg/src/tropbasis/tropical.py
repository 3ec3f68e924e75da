"""Tropical bases of simple matroids.

A family of circuits is a tropical basis when every non-flat ``X`` has a
member with exactly one element outside ``X``.  Equivalently the family
meets every *witness set* ``W(X) = {C : |C - X| = 1}``, so minimal bases
are the minimal transversals of the witness hypergraph.

Circuit families are lists of circuit masks.  All scans run over the full
power set and are subject to :func:`~tropbasis.matroid.check_cap`.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional

import numpy as np

from . import _tables
from ._bits import SubsetLike, as_mask, bits, canonical, family_key, fmt, popcount
from .errors import (CircuitIsClosed, CircuitNotInBasis, InvalidInput,
                     NotACircuit, NotADoubleCircuit, NotSimple)
from .matroid import Matroid, check_cap
from .transversals import minimal_transversals, minimize_edges

DEFINITIONAL = "definitional"
ORTHOGONALITY = "orthogonality"


def _require_simple(M: Matroid) -> None:
    for c in M.circuits:
        if popcount(c) <= 2:
            raise NotSimple(c)


def _as_family(M: Matroid, family: Iterable[SubsetLike]) -> List[int]:
    members = set(M.circuits)
    out = []
    for c in family:
        m = as_mask(c)
        if m not in members:
            raise NotACircuit(f"{fmt(m)} is not a circuit of the matroid")
        out.append(m)
    return canonical(out)


def _first(flags: np.ndarray) -> Optional[int]:
    hits = np.flatnonzero(flags)
    return int(hits[0]) if hits.size else None


# -- orthogonality and witnesses -------------------------------------------

def is_orthogonal(A: SubsetLike, family: Iterable[SubsetLike]) -> bool:
    """True iff ``A`` meets no member of ``family`` in exactly one element."""
    A = as_mask(A)
    return all(popcount(A & as_mask(D)) != 1 for D in family)


def witnesses(M: Matroid, X: SubsetLike) -> List[int]:
    """Circuits with exactly one element outside ``X``; empty iff X is a flat."""
    X = as_mask(X)
    return [c for c in M.circuits if popcount(c & ~X) == 1]


def closed_circuits(M: Matroid) -> List[int]:
    """Circuits that are flats.  These lie in every tropical basis."""
    return [c for c in M.circuits if M.is_closed(c)]


# -- basis tests -------------------------------------------------------------

@dataclass
class BasisVerdict:
    is_basis: bool
    is_minimal: bool
    failure_witness: Optional[int] = None
    redundant_member: Optional[int] = None


def _failure_definitional(M, family, threads):
    nonclosed = M.nonclosed_table(threads)
    witnessed = _tables.nonclosed_table(M.n, family, threads)
    return _first(nonclosed & ~witnessed)


def _failure_orthogonality(M, family, threads):
    closed = ~M.nonclosed_table(threads)
    # complement of mask X is (2^n - 1) - X, i.e. the reversed array
    orth_complement = _tables.orthogonal_table(M.n, family, threads)[::-1]
    return _first(orth_complement != closed)


_FAILURE = {DEFINITIONAL: _failure_definitional,
            ORTHOGONALITY: _failure_orthogonality}


def tropical_basis_failure(M: Matroid, family, method: str = DEFINITIONAL,
                           force: bool = False, threads: int = 1) -> Optional[int]:
    """Smallest non-flat mask the family fails to witness, or ``None``."""
    _require_simple(M)
    check_cap(M.n, force, what="tropical basis test")
    try:
        test = _FAILURE[method]
    except KeyError:
        raise InvalidInput(f"unknown method {method!r}")
    return test(M, _as_family(M, family), threads)


def is_tropical_basis(M: Matroid, family, method: str = DEFINITIONAL,
                      force: bool = False, threads: int = 1) -> BasisVerdict:
    """Decide whether ``family`` is a (minimal) tropical basis of ``M``.

    ``method="definitional"`` checks every non-flat for a witness in the
    family; ``method="orthogonality"`` checks that the complements
    orthogonal to the family are exactly the complements of flats.
    Minimality is decided by re-testing each single-member deletion.
    """
    family = _as_family(M, family)
    bad = tropical_basis_failure(M, family, method, force, threads)
    if bad is not None:
        return BasisVerdict(False, False, failure_witness=bad)
    for c in family:
        rest = [d for d in family if d != c]
        if tropical_basis_failure(M, rest, method, force, threads) is None:
            return BasisVerdict(True, False, redundant_member=c)
    return BasisVerdict(True, True)


# -- witness hypergraph and enumeration ------------------------------------

@dataclass
class WitnessHypergraph:
    """Witness sets of all non-flats.

    ``ground`` lists the circuits; witness sets are masks over positions in
    ``ground``.  ``sets`` maps each non-flat mask to its witness set and
    ``reduced_edges`` keeps the inclusion-minimal distinct witness sets.
    """
    ground: List[int]
    sets: Dict[int, int]
    reduced_edges: List[int] = field(default_factory=list)

    @property
    def edges(self):
        return sorted(self.sets.items())

    def circuits_of(self, witness: int) -> List[int]:
        return [self.ground[i] for i in bits(witness)]

    def is_transversal(self, family: Iterable[int]) -> bool:
        index = {c: i for i, c in enumerate(self.ground)}
        T = 0
        for c in family:
            T |= 1 << index[c]
        return all(T & e for e in self.reduced_edges)


def _witness_words(n, circuits, start, stop):
    X = np.arange(start, stop, dtype=np.int64)
    words = np.zeros((stop - start, max(1, (len(circuits) + 63) // 64)),
                     dtype=np.uint64)
    for i, c in enumerate(circuits):
        d = c & ~X
        one = (d != 0) & ((d & (d - 1)) == 0)
        words[:, i // 64] |= one.astype(np.uint64) << np.uint64(i % 64)
    return X, words


def _words_to_int(row) -> int:
    return sum(int(w) << (64 * k) for k, w in enumerate(row))


def build_witness_hypergraph(M: Matroid, force: bool = False, threads: int = 1,
                             keep_sets: bool = True) -> WitnessHypergraph:
    """Enumerate all non-flats, their witness sets, and the reduced edges."""
    _require_simple(M)
    check_cap(M.n, force, what="witness hypergraph")
    circuits = list(M.circuits)
    sets: Dict[int, int] = {}
    distinct = set()

    def work(start, stop):
        X, words = _witness_words(M.n, circuits, start, stop)
        nonclosed = words.any(axis=1)
        X, words = X[nonclosed], words[nonclosed]
        rows = np.unique(words, axis=0) if len(words) else words
        return X, words, rows

    for X, words, rows in _tables.map_chunks(work, M.n, threads):
        distinct.update(_words_to_int(r) for r in rows)
        if keep_sets:
            sets.update((int(x), _words_to_int(w)) for x, w in zip(X, words))
    return WitnessHypergraph(circuits, sets, minimize_edges(distinct))


@dataclass
class BasisEnumeration:
    bases: List[List[int]]
    truncated: bool = False

    def __len__(self):
        return len(self.bases)


def enumerate_minimal_tropical_bases(M: Matroid, cap: Optional[int] = None,
                                     force: bool = False, threads: int = 1
                                     ) -> BasisEnumeration:
    """All minimal tropical bases, canonically sorted.

    With ``cap`` set, stops after ``cap`` bases and flags the result as
    truncated when more exist.
    """
    H = build_witness_hypergraph(M, force, threads, keep_sets=False)
    found, truncated = minimal_transversals(H.reduced_edges, cap)
    bases = [H.circuits_of(T) for T in found]
    bases.sort(key=family_key)
    return BasisEnumeration(bases, truncated)


# -- double circuits ---------------------------------------------------------

@dataclass
class DoubleCircuitDecomposition:
    """A double circuit ``elements`` with its classes; the circuits inside
    it are exactly the complements of the classes."""
    elements: int
    classes: List[int]
    inner_circuits: List[int]

    @property
    def degree(self) -> int:
        return len(self.classes)


def double_circuit_decompose(M: Matroid, D: SubsetLike) -> DoubleCircuitDecomposition:
    D = as_mask(D)
    size = popcount(D)
    r = M.rank(D)
    if r != size - 2:
        raise NotADoubleCircuit(
            f"{fmt(D)} has rank {r}, a double circuit needs rank {size - 2}")
    for b in bits(D):
        rb = M.rank(D & ~(1 << b))
        if rb != size - 2:
            raise NotADoubleCircuit(
                f"removing {b + 1} from {fmt(D)} gives rank {rb}, "
                f"a double circuit needs {size - 2}")
    inner = [c for c in M.circuits if c & ~D == 0]
    classes = canonical(D & ~c for c in inner)
    union = 0
    for cls in classes:
        if not cls or cls & union:
            raise NotADoubleCircuit(f"circuit complements in {fmt(D)} overlap")
        union |= cls
    if union != D:
        raise NotADoubleCircuit(f"circuit complements do not cover {fmt(D)}")
    return DoubleCircuitDecomposition(D, classes, canonical(inner))


# -- sufficient condition ---------------------------------------------------

@dataclass
class CircuitCertificate:
    """Why a circuit is fine: ``kind`` is "closed", "degree3" (with the
    extending element and its decomposition) or "none"."""
    circuit: int
    kind: str
    f: Optional[int] = None
    decomposition: Optional[DoubleCircuitDecomposition] = None


@dataclass
class Theorem2Result:
    satisfied: bool
    certificates: List[CircuitCertificate]


def theorem2_check(M: Matroid) -> Theorem2Result:
    """Every circuit is a flat or extends to a degree-3 double circuit.

    When satisfied, the closed circuits form the unique minimal tropical
    basis.
    """
    _require_simple(M)
    certs = []
    for C in M.circuits:
        extra = M.closure(C) & ~C
        if not extra:
            certs.append(CircuitCertificate(C, "closed"))
            continue
        cert = CircuitCertificate(C, "none")
        for b in bits(extra):
            dec = double_circuit_decompose(M, C | (1 << b))
            if dec.degree == 3:
                cert = CircuitCertificate(C, "degree3", b + 1, dec)
                break
        certs.append(cert)
    return Theorem2Result(all(c.kind != "none" for c in certs), certs)


# -- swap and uniqueness -----------------------------------------------------

def theorem3_swap(M: Matroid, basis, C: SubsetLike, f: Optional[int] = None
                  ) -> List[int]:
    """Replace a non-flat circuit ``C`` of a tropical basis.

    With ``f`` (1-based) in ``cl(C) - C``, ``C + f`` is a double circuit
    whose classes are ``{f}`` and ``D_1..D_k``; ``C`` is swapped for the
    circuits ``(C + f) - D_i``.  The result is again a tropical basis and
    does not contain ``C``.  ``f`` defaults to the smallest eligible
    element.
    """
    _require_simple(M)
    basis = _as_family(M, basis)
    C = as_mask(C)
    if C not in basis:
        raise CircuitNotInBasis(f"{fmt(C)} is not in the given family")
    eligible = M.closure(C) & ~C
    if not eligible:
        raise CircuitIsClosed(f"{fmt(C)} is closed; no element to swap in")
    if f is None:
        fbit = eligible & -eligible
    else:
        fbit = 1 << (f - 1)
        if not fbit & eligible:
            raise InvalidInput(f"{f} is not in cl({fmt(C)}) - {fmt(C)}")
    D = C | fbit
    dec = double_circuit_decompose(M, D)
    replacements = [D & ~cls for cls in dec.classes if cls != fbit]
    return canonical([c for c in basis if c != C] + replacements)


@dataclass
class UniquenessResult:
    """``witness`` is a non-flat whose complement is orthogonal to all
    closed circuits, present exactly when ``unique`` is false."""
    unique: bool
    closed_circuits: List[int]
    witness: Optional[int] = None

    @property
    def basis(self) -> Optional[List[int]]:
        return self.closed_circuits if self.unique else None


def has_unique_minimal_basis(M: Matroid, force: bool = False,
                             threads: int = 1) -> UniquenessResult:
    """Decide uniqueness of the minimal tropical basis.

    Unique exactly when the closed circuits already form a tropical basis,
    tested through orthogonality of complements.
    """
    _require_simple(M)
    closed = closed_circuits(M)
    bad = tropical_basis_failure(M, closed, ORTHOGONALITY, force, threads)
    return UniquenessResult(bad is None, closed, bad)


def min_orthogonal_sets(M: Matroid, family, force: bool = False,
                        threads: int = 1) -> List[int]:
    """Inclusion-minimal nonempty sets orthogonal to ``family``."""
    check_cap(M.n, force, what="orthogonal set scan")
    family = [as_mask(c) for c in family]
    orth = _tables.orthogonal_table(M.n, family, threads)
    orth[0] = False
    return canonical(int(a) for a in _tables.minimal_members(orth, M.n))
