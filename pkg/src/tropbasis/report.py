"""Per-matroid analysis report with deterministic text and JSON renderings."""

import json
import time
from dataclasses import asdict, dataclass
from typing import Any, Dict, List, Optional

from ._bits import elements, family_key
from .matroid import Matroid
from .tropical import (closed_circuits, double_circuit_decompose,
                       enumerate_minimal_tropical_bases,
                       has_unique_minimal_basis, min_orthogonal_sets,
                       theorem2_check, theorem3_swap)

DEFAULT_MAX_BASES = 64


def dump_json(data: Dict[str, Any]) -> str:
    """JSON with one top-level key per line and one list entry per line for
    lists of families or records; element lists stay on one line."""
    def compact(v):
        return json.dumps(v, separators=(", ", ": "))

    lines = []
    items = list(data.items())
    for i, (key, value) in enumerate(items):
        tail = "," if i < len(items) - 1 else ""
        nested = (isinstance(value, list) and value
                  and isinstance(value[0], (list, dict))
                  and not all(isinstance(x, int) for x in value[0]))
        if nested:
            body = ",\n".join(f"    {compact(x)}" for x in value)
            lines.append(f"  {json.dumps(key)}: [\n{body}\n  ]{tail}")
        else:
            lines.append(f"  {json.dumps(key)}: {compact(value)}{tail}")
    return "{\n" + "\n".join(lines) + "\n}\n"


def _fam(family) -> List[List[int]]:
    return [elements(c) for c in family]


@dataclass
class AnalysisReport:
    input_name: str
    n: int
    circuit_count: int
    circuits: List[List[int]]
    is_simple: bool
    is_binary: Optional[bool]
    closed_circuits: List[List[int]]
    unique_minimal_basis: bool
    uniqueness_witness: Optional[List[int]]
    minimal_bases: List[List[List[int]]]
    truncated: bool
    theorem2_satisfied: bool
    theorem2_certificates: List[Dict[str, Any]]
    double_circuit_summaries: List[Dict[str, Any]]
    swap_families: List[Dict[str, Any]]
    cocircuits: List[List[int]]
    cocircuit_recovery_ok: bool
    closed_circuits_recover_cocircuits: bool
    timing_ms: Optional[float] = None

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def to_json(self) -> str:
        return dump_json(self.to_dict())

    def to_text(self) -> str:
        def f(fam):
            return " ".join("{" + ",".join(map(str, c)) + "}" for c in fam) or "(none)"

        lines = [
            f"matroid: {self.input_name}",
            f"ground set size: {self.n}",
            f"circuits ({self.circuit_count}): {f(self.circuits)}",
            f"simple: {_yn(self.is_simple)}",
            f"binary: {_yn(self.is_binary)}",
            f"closed circuits ({len(self.closed_circuits)}): {f(self.closed_circuits)}",
            f"unique minimal tropical basis: {_yn(self.unique_minimal_basis)}",
        ]
        if self.uniqueness_witness is not None:
            lines.append("  non-flat whose complement is orthogonal to the closed "
                         f"circuits: {f([self.uniqueness_witness])}")
        more = " (truncated)" if self.truncated else ""
        lines.append(f"minimal tropical bases ({len(self.minimal_bases)}{more}):")
        for i, b in enumerate(self.minimal_bases, 1):
            lines.append(f"  {i}: {f(b)}")
        lines.append(f"closed-or-degree-3 condition: {_yn(self.theorem2_satisfied)}")
        for cert in self.theorem2_certificates:
            if cert["kind"] == "degree3":
                lines.append(f"  {f([cert['circuit']])}: + {cert['f']} gives degree 3")
            elif cert["kind"] == "none":
                lines.append(f"  {f([cert['circuit']])}: no certificate")
        if self.double_circuit_summaries:
            lines.append("double circuits from non-closed circuits:")
            for s in self.double_circuit_summaries:
                lines.append(f"  {f([s['circuit']])} + {s['f']}: classes "
                             f"{f(s['classes'])}, degree {s['degree']}")
        for s in self.swap_families:
            lines.append(f"swap {f([s['circuit']])} with {s['f']}: {f(s['family'])}")
        lines.append(f"cocircuits ({len(self.cocircuits)}): {f(self.cocircuits)}")
        lines.append(f"cocircuits recovered from every listed basis: "
                     f"{_yn(self.cocircuit_recovery_ok)}")
        lines.append(f"cocircuits recovered from the closed circuits: "
                     f"{_yn(self.closed_circuits_recover_cocircuits)}")
        if self.timing_ms is not None:
            lines.append(f"time: {self.timing_ms:.1f} ms")
        return "\n".join(lines) + "\n"


def _yn(v) -> str:
    return "n/a" if v is None else ("yes" if v else "no")


def analyze(M: Matroid, name: Optional[str] = None, max_bases: int = DEFAULT_MAX_BASES,
            force: bool = False, threads: int = 1, timing: bool = False
            ) -> AnalysisReport:
    """Run every analysis on a simple matroid and collect the results."""
    t0 = time.perf_counter()
    uniq = has_unique_minimal_basis(M, force=force, threads=threads)
    enum = enumerate_minimal_tropical_bases(M, cap=max_bases, force=force,
                                            threads=threads)
    thm2 = theorem2_check(M)
    closed = closed_circuits(M)
    closed_set = set(closed)
    cocircuits = M.cocircuits()

    summaries = []
    for C in M.circuits:
        if C in closed_set:
            continue
        for e in elements(M.closure(C) & ~C):
            dec = double_circuit_decompose(M, C | (1 << (e - 1)))
            summaries.append({"circuit": elements(C), "f": e,
                              "classes": _fam(dec.classes), "degree": dec.degree})

    swaps = []
    for basis in enum.bases:
        open_members = [c for c in basis if c not in closed_set]
        if not open_members:
            continue
        for C in open_members:
            eligible = M.closure(C) & ~C
            f = elements(eligible & -eligible)[0]
            swaps.append({"basis": _fam(basis), "circuit": elements(C), "f": f,
                          "family": _fam(theorem3_swap(M, basis, C, f))})
        break

    recovery = all(min_orthogonal_sets(M, b, force=force, threads=threads) == cocircuits
                   for b in enum.bases)
    closed_recovery = min_orthogonal_sets(M, closed, force=force,
                                          threads=threads) == cocircuits

    certs = []
    for cert in thm2.certificates:
        entry = {"circuit": elements(cert.circuit), "kind": cert.kind}
        if cert.kind == "degree3":
            entry["f"] = cert.f
            entry["classes"] = _fam(cert.decomposition.classes)
        certs.append(entry)

    return AnalysisReport(
        input_name=name or M.name or "matroid",
        n=M.n,
        circuit_count=len(M.circuits),
        circuits=_fam(M.circuits),
        is_simple=M.is_simple(),
        is_binary=M.is_binary(force=force),
        closed_circuits=_fam(closed),
        unique_minimal_basis=uniq.unique,
        uniqueness_witness=None if uniq.witness is None else elements(uniq.witness),
        minimal_bases=[_fam(b) for b in sorted(enum.bases, key=family_key)],
        truncated=enum.truncated,
        theorem2_satisfied=thm2.satisfied,
        theorem2_certificates=certs,
        double_circuit_summaries=summaries,
        swap_families=swaps,
        cocircuits=_fam(cocircuits),
        cocircuit_recovery_ok=recovery,
        closed_circuits_recover_cocircuits=closed_recovery,
        timing_ms=round((time.perf_counter() - t0) * 1000, 3) if timing else None,
    )
