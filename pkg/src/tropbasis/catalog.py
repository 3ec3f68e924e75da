"""Named matroid constructions.

Names use a ``name:params`` syntax on the command line, e.g. ``uniform:2,4``
or ``doubled_line_dual:4``; see :func:`from_spec`.
"""

import itertools
import os
from importlib import resources
from pathlib import Path
from typing import List, Sequence, Tuple

from ._bits import from_elements
from .errors import InvalidInput, InvalidParams, UnknownName
from .matroid import Matroid, from_gf_matrix

#: Environment variable naming an alternative P7 circuit file.
P7_ENV = "TROPBASIS_P7_FILE"


def uniform(r: int, n: int) -> Matroid:
    """U_{r,n}: every (r+1)-subset is a circuit."""
    if not 0 <= r <= n:
        raise InvalidParams(f"uniform needs 0 <= r <= n, got r={r}, n={n}")
    circuits = [sum(1 << b for b in combo)
                for combo in itertools.combinations(range(n), r + 1)]
    return Matroid(n, circuits, validate=False, name=f"uniform:{r},{n}")


def binary_columns(n_bits: int = 3) -> List[List[int]]:
    """Matrix whose column ``i`` is the binary encoding of ``i`` (1..2^k-1).

    Row ``k`` holds bit ``k``, so column 3 = column 1 + column 2.
    """
    cols = range(1, 1 << n_bits)
    return [[(i >> k) & 1 for i in cols] for k in range(n_bits)]


def fano() -> Matroid:
    return from_gf_matrix(2, binary_columns(3), name="fano")


def nonfano() -> Matroid:
    return from_gf_matrix(3, binary_columns(3), name="nonfano")


def doubled_line_dual(n: int) -> Matroid:
    """Dual of U_{2,n} with every element replaced by a parallel pair.

    The ground set has 2n elements paired as (2i-1, 2i); the circuits are
    the n complements E - {2i-1, 2i}.
    """
    if n < 3:
        raise InvalidParams(
            f"doubled_line_dual needs n >= 3 (n={n} gives a non-simple matroid)")
    E = (1 << (2 * n)) - 1
    circuits = [E & ~from_elements((2 * i - 1, 2 * i)) for i in range(1, n + 1)]
    return Matroid(2 * n, circuits, validate=False, name=f"doubled_line_dual:{n}")


def graph_cycles(vertices: int, edges: Sequence[Tuple[int, int]]) -> List[int]:
    """Edge sets of the cycles of a multigraph, as masks over edge indices.

    Each cycle is found once: from its smallest edge ``(u, v)`` we walk
    simple paths from ``v`` back to ``u`` using only larger edges.
    """
    adj = [[] for _ in range(vertices)]
    for idx, (u, v) in enumerate(edges):
        if not (0 <= u < vertices and 0 <= v < vertices):
            raise InvalidParams(f"edge {idx + 1} = ({u}, {v}) has an unknown vertex")
        adj[u].append((v, idx))
        if u != v:
            adj[v].append((u, idx))
    found = []
    for first, (u, v) in enumerate(edges):
        if u == v:
            found.append(1 << first)
            continue
        stack = [(v, 1 << first, 1 << v)]
        while stack:
            at, used, seen = stack.pop()
            for nxt, idx in adj[at]:
                if idx <= first or used >> idx & 1:
                    continue
                if nxt == u:
                    found.append(used | (1 << idx))
                elif not seen >> nxt & 1 and nxt != at:
                    stack.append((nxt, used | (1 << idx), seen | (1 << nxt)))
    return sorted(set(found))


def graphic(vertices: int, edges: Sequence[Tuple[int, int]]) -> Matroid:
    """Cycle matroid of a multigraph; vertices are 0-based, edge i is element i+1."""
    return Matroid(len(edges), graph_cycles(vertices, edges), validate=False,
                   name="graphic")


def p7_path() -> Path:
    env = os.environ.get(P7_ENV)
    if env:
        return Path(env)
    return Path(str(resources.files("tropbasis") / "data" / "p7.circuits"))


def p7() -> Matroid:
    """P7, loaded from a transcribed circuit file.

    No circuit list ships with the package; provide ``data/p7.circuits`` or
    point ``TROPBASIS_P7_FILE`` at a circuit file.
    """
    from .io import read_circuit_file

    path = p7_path()
    if not path.exists():
        raise DataFileMissing(f"P7 circuit data not found at {path}")
    M = read_circuit_file(path)
    M.name = "p7"
    return M


class DataFileMissing(InvalidInput):
    pass


NAMES = {
    "uniform": "uniform:r,n  uniform matroid U_{r,n}",
    "fano": "fano  Fano plane F7 (GF(2), column i = binary i)",
    "nonfano": "nonfano  non-Fano matroid (same columns over GF(3))",
    "doubled_line_dual": "doubled_line_dual:n  dual of U_{2,n} with doubled elements (2n elements)",
    "graphic": "graphic:V;u-v,u-v,...  cycle matroid of a multigraph (vertices 1..V)",
    "p7": "p7  P7 from the transcribed data file",
}


def _ints(text: str, count: int, name: str) -> List[int]:
    try:
        vals = [int(t) for t in text.split(",")] if text else []
    except ValueError:
        raise InvalidParams(f"{name}: parameters must be integers, got {text!r}")
    if len(vals) != count:
        raise InvalidParams(f"{name} takes {count} parameter(s), got {len(vals)}")
    return vals


def catalog(name: str, *params) -> Matroid:
    if name == "uniform":
        return uniform(*params)
    if name == "fano":
        return fano()
    if name == "nonfano":
        return nonfano()
    if name == "doubled_line_dual":
        return doubled_line_dual(*params)
    if name == "graphic":
        return graphic(*params)
    if name == "p7":
        return p7()
    raise UnknownName(f"unknown catalog entry {name!r}")


def from_spec(spec: str) -> Matroid:
    """Build a catalog matroid from ``name`` or ``name:params``."""
    name, _, rest = spec.partition(":")
    if name not in NAMES:
        raise UnknownName(f"unknown catalog entry {name!r}")
    if name == "uniform":
        return uniform(*_ints(rest, 2, name))
    if name == "doubled_line_dual":
        return doubled_line_dual(*_ints(rest, 1, name))
    if name == "graphic":
        head, _, tail = rest.partition(";")
        try:
            vertices = int(head)
            edges = [tuple(int(x) - 1 for x in e.split("-"))
                     for e in tail.split(",") if e]
        except ValueError:
            raise InvalidParams(f"cannot parse graph {rest!r}")
        if any(len(e) != 2 for e in edges):
            raise InvalidParams(f"cannot parse graph {rest!r}")
        M = graphic(vertices, edges)
        M.name = spec
        return M
    if rest:
        raise InvalidParams(f"{name} takes no parameters")
    return catalog(name)
