"""Text formats for matroids and circuit families.

Circuit file::

    # comment
    n 4
    1 2 3
    1 2 4

Matrix file: ``gfmatrix <p> <rows> <cols>`` followed by ``rows`` lines of
``cols`` integers.  Graph file: ``graph <vertices> <edges>`` followed by one
``u v`` pair per edge (vertices 1-based, edge i is element i).  A JSON
analysis report with ``n`` and ``circuits`` keys is also accepted.
"""

import json
from pathlib import Path
from typing import List, Tuple

import numpy as np

from ._bits import as_mask, elements
from .catalog import from_spec, graphic
from .errors import InvalidInput, ParseError
from .matroid import Matroid, from_gf_matrix, validate_circuit_family


def _lines(text: str) -> List[Tuple[int, List[str]]]:
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.split("#", 1)[0].strip()
        if not s:
            continue
        out.append((lineno, s.split()))
    return out


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"line {lineno}: expected an integer, got {tok!r}")


def parse_family(text: str) -> Tuple[int, List[List[int]]]:
    """Header size and raw element lists of a circuit-format text."""
    lines = _lines(text)
    if not lines or lines[0][1][0] != "n" or len(lines[0][1]) != 2:
        raise ParseError("circuit file must start with 'n <integer>'")
    lineno, head = lines[0]
    n = _int(head[1], lineno)
    if n < 0:
        raise ParseError(f"line {lineno}: negative ground-set size")
    family = []
    for lineno, toks in lines[1:]:
        elems = [_int(t, lineno) for t in toks]
        if any(not 1 <= e <= n for e in elems):
            raise ParseError(f"line {lineno}: element outside 1..{n}")
        family.append(elems)
    return n, family


def parse_matrix(text: str) -> Matroid:
    lines = _lines(text)
    lineno, head = lines[0]
    if len(head) != 4:
        raise ParseError("matrix file must start with 'gfmatrix <p> <rows> <cols>'")
    p, rows, cols = (_int(t, lineno) for t in head[1:])
    body = lines[1:]
    if len(body) != rows:
        raise ParseError(f"expected {rows} matrix rows, found {len(body)}")
    matrix = []
    for lineno, toks in body:
        if len(toks) != cols:
            raise ParseError(f"line {lineno}: expected {cols} entries")
        matrix.append([_int(t, lineno) for t in toks])
    if rows == 0:
        matrix = np.zeros((0, cols), dtype=np.int64)
    return from_gf_matrix(p, matrix)


def parse_graph(text: str) -> Matroid:
    lines = _lines(text)
    lineno, head = lines[0]
    if len(head) != 3:
        raise ParseError("graph file must start with 'graph <vertices> <edges>'")
    vertices, count = (_int(t, lineno) for t in head[1:])
    body = lines[1:]
    if len(body) != count:
        raise ParseError(f"expected {count} edges, found {len(body)}")
    edges = []
    for lineno, toks in body:
        if len(toks) != 2:
            raise ParseError(f"line {lineno}: an edge is a pair 'u v'")
        u, v = (_int(t, lineno) for t in toks)
        if not (1 <= u <= vertices and 1 <= v <= vertices):
            raise ParseError(f"line {lineno}: vertex outside 1..{vertices}")
        edges.append((u - 1, v - 1))
    return graphic(vertices, edges)


def parse_matroid(text: str) -> Matroid:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
            return Matroid(int(data["n"]), data["circuits"])
        except (ValueError, KeyError, TypeError) as exc:
            raise ParseError(f"not a matroid JSON document: {exc}")
    lines = _lines(text)
    if not lines:
        raise ParseError("empty input")
    kind = lines[0][1][0]
    if kind == "gfmatrix":
        return parse_matrix(text)
    if kind == "graph":
        return parse_graph(text)
    n, family = parse_family(text)
    return Matroid(n, family)


def read_circuit_file(path) -> Matroid:
    n, family = parse_family(Path(path).read_text(encoding="utf-8"))
    return Matroid(n, family, name=Path(path).name)


def read_family_file(path, n: int) -> List[int]:
    """A family of subsets (e.g. a candidate basis) in circuit format."""
    m, family = parse_family(Path(path).read_text(encoding="utf-8"))
    if m != n:
        raise InvalidInput(f"family file is over {m} elements, matroid has {n}")
    return [as_mask(c) for c in family]


def format_family(n: int, family, comment: str = None) -> str:
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(f"n {n}")
    out.extend(" ".join(map(str, elements(c))) for c in family)
    return "\n".join(out) + "\n"


def format_matroid(M: Matroid) -> str:
    return format_family(M.n, M.circuits, comment=M.name)


def load_matroid(source: str) -> Matroid:
    """Load from a file path, or fall back to a catalog spec."""
    path = Path(source)
    if path.is_file():
        M = parse_matroid(path.read_text(encoding="utf-8"))
        M.name = M.name or path.name
        if M.name == "graphic":
            M.name = path.name
        return M
    return from_spec(source)
