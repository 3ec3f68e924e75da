"""Matroids given by their circuits.

A :class:`Matroid` stores the ground-set size and the canonical circuit
family; rank, closure, flats, cocircuits and the dual are all derived from
the circuits.  Subsets are bit masks (see ``_bits``); public methods also
accept iterables of 1-based elements.
"""

import itertools
import logging
from functools import cached_property
from typing import Callable, Iterable, List, Optional

import numpy as np

from . import _tables
from ._bits import (SubsetLike, as_mask, bits, canonical, elements, fmt,
                    full_mask, popcount)
from .errors import (ComparablePair, EliminationFailure, EmptyCircuit,
                     InvalidInput, ParseError, ResourceCapExceeded)

log = logging.getLogger(__name__)

#: Exhaustive 2^n scans are refused beyond this size.
HARD_CAP = 24
#: Beyond this size scans need ``force=True``; rank tables are built
#: automatically only up to here.
SOFT_CAP = 20


def check_cap(n: int, force: bool = False, what: str = "scan") -> None:
    if n > HARD_CAP:
        raise ResourceCapExceeded(
            f"{what} over 2^{n} subsets exceeds the hard cap n <= {HARD_CAP}")
    if n > SOFT_CAP:
        if not force:
            raise ResourceCapExceeded(
                f"{what} over 2^{n} subsets exceeds the soft cap n <= "
                f"{SOFT_CAP}; pass force to override")
        log.warning("%s over 2^%d subsets; this may be slow", what, n)


def validate_circuit_family(n: int, raw: Iterable) -> List[int]:
    """Check the circuit axioms and return the canonical family of masks.

    ``raw`` holds circuits as iterables of 1-based elements (or masks).
    Raises :class:`EmptyCircuit`, :class:`ComparablePair` or
    :class:`EliminationFailure` for the first violated axiom.
    """
    if n < 0:
        raise InvalidInput("ground-set size must be nonnegative")
    family = []
    for c in raw:
        m = as_mask(c)
        if m >> n:
            raise ParseError(f"circuit {fmt(m)} has elements outside 1..{n}")
        family.append(m)
    family = canonical(family)
    if family and family[0] == 0:
        raise EmptyCircuit()
    for c1, c2 in itertools.combinations(family, 2):
        if c1 & c2 in (c1, c2):
            raise ComparablePair(c1, c2)
    dep = _tables.dependent_table(n, family) if n <= SOFT_CAP else None
    for c1, c2 in itertools.combinations(family, 2):
        common = c1 & c2
        union = c1 | c2
        for b in bits(common):
            target = union & ~(1 << b)
            if dep is not None:
                ok = bool(dep[target])
            else:
                ok = any(c & ~target == 0 for c in family)
            if not ok:
                raise EliminationFailure(c1, c2, b + 1)
    return family


class Matroid:
    """A matroid on ``{1..n}`` given by its circuits.

    Instances are immutable; derived tables are cached lazily and are not
    part of equality.
    """

    def __init__(self, n: int, circuits: Iterable = (), validate: bool = True,
                 name: Optional[str] = None):
        if validate:
            circuits = validate_circuit_family(n, circuits)
        else:
            circuits = canonical(as_mask(c) for c in circuits)
        self.n = n
        self.circuits = tuple(circuits)
        self.name = name

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<Matroid{label} n={self.n} circuits={len(self.circuits)}>"

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.n == other.n and self.circuits == other.circuits

    def __hash__(self):
        return hash((self.n, self.circuits))

    @property
    def ground(self) -> int:
        return full_mask(self.n)

    def circuit_lists(self) -> List[List[int]]:
        return [elements(c) for c in self.circuits]

    # -- rank and closure -------------------------------------------------

    @cached_property
    def _by_element(self):
        by = [[] for _ in range(self.n)]
        for c in self.circuits:
            for b in bits(c):
                by[b].append(c)
        return by

    @cached_property
    def _rank_table(self) -> np.ndarray:
        check_cap(self.n, force=True, what="rank table")
        return _tables.rank_table(self.n, self.circuits)

    def rank_table(self) -> np.ndarray:
        """Rank of every subset as an int8 array indexed by mask."""
        return self._rank_table

    def is_independent(self, X: SubsetLike) -> bool:
        X = as_mask(X)
        return not any(c & ~X == 0 for c in self.circuits)

    def rank(self, X: SubsetLike) -> int:
        """Size of a largest circuit-free subset of ``X``."""
        X = as_mask(X)
        if X >> self.n:
            raise InvalidInput(f"{fmt(X)} is not a subset of the ground set")
        if self.n <= SOFT_CAP:
            return int(self._rank_table[X])
        basis = 0
        for b in bits(X):
            grown = basis | (1 << b)
            # basis is independent, so only circuits through b can appear
            if not any(c & ~grown == 0 for c in self._by_element[b]):
                basis = grown
        return popcount(basis)

    @cached_property
    def full_rank(self) -> int:
        return self.rank(self.ground)

    def closure(self, X: SubsetLike) -> int:
        """All elements ``e`` with ``rank(X + e) == rank(X)``.

        Computed from circuits: ``e`` outside ``X`` is spanned exactly when
        some circuit has ``e`` as its only element outside ``X``.
        """
        X = as_mask(X)
        cl = X
        for c in self.circuits:
            d = c & ~X
            if d and d & (d - 1) == 0:
                cl |= d
        return cl

    def nonclosed_table(self, threads: int = 1) -> np.ndarray:
        """Boolean array over all masks: true where the set is not a flat."""
        cached = self.__dict__.get("_nonclosed")
        if cached is None:
            cached = _tables.nonclosed_table(self.n, self.circuits, threads)
            self.__dict__["_nonclosed"] = cached
        return cached

    def is_closed(self, X: SubsetLike) -> bool:
        X = as_mask(X)
        return self.closure(X) == X

    # -- structure ----------------------------------------------------------

    def is_simple(self) -> bool:
        return all(popcount(c) > 2 for c in self.circuits)

    def hyperplanes(self) -> List[int]:
        """Maximal proper flats, in canonical order."""
        r = self.full_rank
        if r == 0:
            return []
        if self.n <= SOFT_CAP:
            R = self._rank_table
            closed = ~self.nonclosed_table()
            hyp = np.nonzero(closed & (R == r - 1))[0]
            return canonical(int(h) for h in hyp)
        return self._hyperplanes_by_spanning(r)

    def _hyperplanes_by_spanning(self, r: int) -> List[int]:
        # every rank r-1 flat is the closure of an independent (r-1)-set
        found = set()
        for combo in itertools.combinations(range(self.n), r - 1):
            S = sum(1 << b for b in combo)
            if self.is_independent(S):
                found.add(self.closure(S))
        return canonical(found)

    def cocircuits(self) -> List[int]:
        """Complements of the hyperplanes; the circuits of the dual."""
        E = self.ground
        return canonical(E & ~h for h in self.hyperplanes())

    def dual(self) -> "Matroid":
        name = f"dual({self.name})" if self.name else None
        return Matroid(self.n, self.cocircuits(), validate=False, name=name)

    def dual_rank(self, X: SubsetLike) -> int:
        X = as_mask(X)
        return popcount(X) - self.full_rank + self.rank(self.ground & ~X)

    def is_binary(self, force: bool = False) -> bool:
        """True iff there is no U_{2,4} minor.

        Brute force: for every 4-set ``S`` and every contraction set ``X``
        disjoint from ``S``, test whether ``A -> r(A | X) - r(X)`` on the
        subsets of ``S`` is the rank function of U_{2,4} (the remaining
        elements are deleted).
        """
        check_cap(self.n, force, what="U_{2,4}-minor scan")
        if self.n < 4:
            return True
        R = self._rank_table.astype(np.int16)
        for S_bits in itertools.combinations(range(self.n), 4):
            S = sum(1 << b for b in S_bits)
            X = _submasks_array(self.ground & ~S)
            rX = R[X]
            ok = R[X | S] - rX == 2
            for b in S_bits:
                ok &= R[X | (1 << b)] - rX == 1
            for a, b in itertools.combinations(S_bits, 2):
                ok &= R[X | (1 << a) | (1 << b)] - rX == 2
            if ok.any():
                return False
        return True


def _submasks_array(mask: int) -> np.ndarray:
    """All submasks of ``mask`` as an int64 array."""
    positions = bits(mask)
    a = np.arange(1 << len(positions), dtype=np.int64)
    out = np.zeros_like(a)
    for k, b in enumerate(positions):
        out |= ((a >> k) & 1) << b
    return out


def circuits_from_independence(n: int, is_independent: Callable[[int], bool]
                               ) -> List[int]:
    """Minimal dependent sets, found level by level.

    Only sets all of whose one-smaller subsets are independent are tested,
    so each independence query is for a genuine circuit candidate.
    """
    check_cap(n, force=True, what="circuit search")
    circuits = []
    level = {0}
    for k in range(1, n + 1):
        nxt = set()
        for base in sorted(level):
            for b in range(base.bit_length(), n):
                cand = base | (1 << b)
                if any(cand & ~(1 << x) not in level for x in bits(base)):
                    continue
                if is_independent(cand):
                    nxt.add(cand)
                else:
                    circuits.append(cand)
        level = nxt
        if not level:
            break
    return canonical(circuits)


def from_gf_matrix(p: int, columns, name: Optional[str] = None) -> Matroid:
    """Vector matroid of the columns of a matrix over GF(p)."""
    from .gf import as_gf_matrix, gf_rank

    A = as_gf_matrix(columns, p)
    n = A.shape[1] if A.ndim == 2 else 0

    def indep(mask):
        cols = bits(mask)
        return gf_rank(A[:, cols], p) == len(cols)

    circuits = circuits_from_independence(n, indep)
    return Matroid(n, circuits, validate=False, name=name)
