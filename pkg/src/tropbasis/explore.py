"""Search for non-binary matroids meeting the closed-or-degree-3 condition
while having a circuit that is not a flat.

Candidates come from random GF(p) vector configurations or from the
catalog.  Random instances use distinct projective points, so every
generated matroid is simple.
"""

import itertools
from dataclasses import asdict, dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from . import catalog as cat
from .catalog import DataFileMissing
from .matroid import Matroid, check_cap, from_gf_matrix
from .tropical import closed_circuits, theorem2_check

FAMILIES = ("gf2", "gf3", "catalog")


def projective_points(p: int, r: int) -> List[Tuple[int, ...]]:
    """Nonzero vectors of GF(p)^r whose first nonzero entry is 1."""
    pts = []
    for v in itertools.product(range(p), repeat=r):
        nz = [x for x in v if x]
        if nz and nz[0] == 1:
            pts.append(v)
    return pts


def random_simple_gf(p: int, n: int, rng: np.random.Generator,
                     max_rank: int = 5) -> Tuple[Matroid, List[List[int]]]:
    """Vector matroid of ``n`` distinct random projective points over GF(p)."""
    lo = 1
    while (p ** lo - 1) // (p - 1) < n:
        lo += 1
    hi = max(lo, min(n, max_rank))
    r = int(rng.integers(lo, hi + 1))
    pts = projective_points(p, r)
    pick = sorted(rng.choice(len(pts), size=n, replace=False).tolist())
    columns = np.array([pts[i] for i in pick], dtype=np.int64).T.tolist()
    return from_gf_matrix(p, columns), columns


def graph_entries() -> Dict[str, Tuple[int, List[Tuple[int, int]]]]:
    k4 = list(itertools.combinations(range(4), 2))
    k5 = list(itertools.combinations(range(5), 2))
    k33 = [(a, b) for a in range(3) for b in range(3, 6)]
    return {"K4": (4, k4), "K5": (5, k5), "K3,3": (6, k33)}


def catalog_members(n_max: int) -> Iterator[Tuple[str, Matroid]]:
    for n in range(3, n_max + 1):
        for r in range(2, n + 1):
            yield f"uniform:{r},{n}", cat.uniform(r, n)
    if n_max >= 7:
        yield "fano", cat.fano()
        yield "nonfano", cat.nonfano()
    for k in range(3, n_max // 2 + 1):
        yield f"doubled_line_dual:{k}", cat.doubled_line_dual(k)
    for name, (v, edges) in graph_entries().items():
        if len(edges) <= n_max:
            yield f"graphic:{name}", cat.graphic(v, edges)
    try:
        P = cat.p7()
    except DataFileMissing:
        return
    if P.n <= n_max:
        yield "p7", P


@dataclass
class Candidate:
    name: str
    n: int
    circuit_count: int
    non_closed_circuits: int
    matches: bool
    columns: Optional[List[List[int]]] = None


@dataclass
class ExploreReport:
    family: str
    n_max: int
    seed: int
    count: int
    scanned: int = 0
    simple: int = 0
    non_binary: int = 0
    found: int = 0
    candidates: List[Candidate] = field(default_factory=list)

    def to_dict(self):
        return asdict(self)

    def to_text(self) -> str:
        lines = [f"family: {self.family}  n-max: {self.n_max}  seed: {self.seed}",
                 f"scanned: {self.scanned}  simple: {self.simple}  "
                 f"non-binary: {self.non_binary}  found: {self.found}"]
        if self.candidates:
            lines.append("non-binary instances meeting the closed-or-degree-3 condition:")
        for c in self.candidates:
            tag = "MATCH" if c.matches else "all circuits closed"
            lines.append(f"  {c.name}: n={c.n} circuits={c.circuit_count} "
                         f"non-closed={c.non_closed_circuits} [{tag}]")
        return "\n".join(lines) + "\n"


def _instances(family, n_max, seed, count):
    if family == "catalog":
        for name, M in catalog_members(n_max):
            yield name, M, None
        return
    p = 2 if family == "gf2" else 3
    rng = np.random.default_rng(seed)
    for i in range(count):
        n = int(rng.integers(3, n_max + 1))
        M, cols = random_simple_gf(p, n, rng)
        M.name = f"{family}#{i}"
        yield M.name, M, cols


def explore(family: str, n_max: int, seed: int = 0, count: int = 100,
            force: bool = False) -> ExploreReport:
    if family not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}")
    check_cap(n_max, force, what="exploration")
    rep = ExploreReport(family, n_max, seed, count)
    for name, M, cols in _instances(family, n_max, seed, count):
        rep.scanned += 1
        if not M.is_simple():
            continue
        rep.simple += 1
        if M.is_binary(force=force):
            continue
        rep.non_binary += 1
        if not theorem2_check(M).satisfied:
            continue
        open_count = len(M.circuits) - len(closed_circuits(M))
        matches = open_count > 0
        rep.found += matches
        rep.candidates.append(Candidate(name, M.n, len(M.circuits), open_count,
                                        matches, cols))
    return rep
