"""Deliberately naive reference implementations.

Everything here is full enumeration without pruning and shares no code
with the main algorithms beyond plain bit masks, so agreement between the
two is meaningful evidence.
"""

from dataclasses import dataclass, field
from typing import Callable, List

from ._bits import popcount, subset_key
from .errors import InvalidInput, ResourceCapExceeded

TRANSVERSAL_CAP = 15
RANK_CAP = 20


@dataclass
class Hypergraph:
    """Edges are masks over vertices ``0..vertex_count-1``."""
    vertex_count: int
    edges: List[int] = field(default_factory=list)

    def __post_init__(self):
        for e in self.edges:
            if e == 0:
                raise InvalidInput("hypergraph edges must be nonempty")
            if e >> self.vertex_count:
                raise InvalidInput("edge uses a vertex outside the vertex range")


def oracle_minimal_transversals(H: Hypergraph) -> List[int]:
    """All inclusion-minimal hitting sets, by scanning every vertex subset."""
    if H.vertex_count > TRANSVERSAL_CAP:
        raise ResourceCapExceeded(
            f"oracle transversal scan limited to {TRANSVERSAL_CAP} vertices")
    hitting = [T for T in range(1 << H.vertex_count)
               if all(T & e for e in H.edges)]
    minimal = []
    for T in hitting:
        if not any(S != T and S & T == S for S in hitting):
            minimal.append(T)
    return sorted(minimal, key=subset_key)


def oracle_circuits_from_rank(rank_fn: Callable[[int], int], n: int) -> List[int]:
    """Minimal dependent sets of a rank function, scanning sets by size."""
    if n > RANK_CAP:
        raise ResourceCapExceeded(f"oracle circuit scan limited to n <= {RANK_CAP}")
    order = sorted(range(1 << n), key=lambda X: (popcount(X), X))
    circuits = []
    for X in order:
        if rank_fn(X) == popcount(X):
            continue
        if all(rank_fn(X & ~(1 << b)) == popcount(X) - 1
               for b in range(n) if X >> b & 1):
            circuits.append(X)
    return sorted(circuits, key=subset_key)


def oracle_rank(circuits, X: int) -> int:
    """Largest circuit-free subset of ``X`` by trying all subsets."""
    best = 0
    S = X
    while True:
        if popcount(S) > best and not any(c & S == c for c in circuits):
            best = popcount(S)
        if S == 0:
            break
        S = (S - 1) & X
    return best


def oracle_is_tropical_basis(n: int, circuits, family) -> bool:
    """Straight from the definition, with closure from ``oracle_rank``."""
    for X in range(1 << n):
        r = oracle_rank(circuits, X)
        closed = all(oracle_rank(circuits, X | (1 << b)) > r
                     for b in range(n) if not X >> b & 1)
        if closed:
            continue
        if not any(popcount(C & ~X) == 1 for C in family):
            return False
    return True
