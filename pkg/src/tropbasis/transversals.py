"""Minimal transversals (hitting sets) of a hypergraph.

Vertices are bit positions and edges are int masks, so the vertex set can
be arbitrarily large.
"""

from typing import List, Sequence, Tuple

from ._bits import bits, popcount


def minimize_edges(edges: Sequence[int]) -> List[int]:
    """Drop duplicate edges and every edge containing another edge."""
    kept: List[int] = []
    for e in sorted(set(edges), key=lambda e: (popcount(e), e)):
        if not any(k & e == k for k in kept):
            kept.append(e)
    return kept


def _has_private_edges(S: int, edges: Sequence[int]) -> bool:
    """Every vertex of ``S`` is the only vertex of ``S`` on some edge."""
    need = S
    for e in edges:
        hit = e & S
        if hit and hit & (hit - 1) == 0:
            need &= ~hit
            if not need:
                return True
    return need == 0


def minimal_transversals(edges: Sequence[int], cap: int = None
                         ) -> Tuple[List[int], bool]:
    """Enumerate the inclusion-minimal transversals of ``edges``.

    Depth-first branching on the uncovered edge with the fewest allowed
    vertices.  Branch ``i`` takes the ``i``-th candidate and forbids the
    earlier ones, so each transversal is reached along one path only;
    partial sets with a vertex lacking a private edge are pruned.

    Returns ``(transversals, truncated)``; at most ``cap`` transversals are
    returned when ``cap`` is given, in discovery order.
    """
    edges = minimize_edges(edges)
    if not edges:
        return [0], False
    universe = 0
    for e in edges:
        universe |= e
    found: List[int] = []
    stack = [(0, universe)]
    while stack:
        S, allowed = stack.pop()
        best = None
        for e in edges:
            if e & S:
                continue
            cand = e & allowed
            if best is None or popcount(cand) < popcount(best):
                best = cand
                if not cand:
                    break
        if best is None:
            if _has_private_edges(S, edges):
                if cap is not None and len(found) == cap:
                    return found, True
                found.append(S)
            continue
        branches = []
        for v in bits(best):
            bit = 1 << v
            allowed &= ~bit
            child = S | bit
            if _has_private_edges(child, [e for e in edges if e & child]):
                branches.append((child, allowed))
        stack.extend(reversed(branches))
    return found, False
