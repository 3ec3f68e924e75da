"""Command-line front end.

Usage::

    tropbasis analyze fano --json
    tropbasis check-basis uniform:2,4 --basis basis.circuits
    tropbasis enumerate uniform:2,5 --max-bases 10
    tropbasis catalog [name:params]
    tropbasis explore --family gf3 --n-max 8 --seed 1 --count 100

Exit codes:
    0: success
    1: usage error
    2: invalid input (axiom failure, non-simple matroid, unknown name, ...)
    3: resource cap exceeded (``--force`` lifts the soft cap)
"""

import argparse
import logging
import sys

from . import catalog as cat
from ._bits import canonical, elements, family_key
from .errors import InvalidInput, ResourceCapExceeded
from .explore import FAMILIES, explore
from .io import format_matroid, load_matroid, read_family_file
from .report import DEFAULT_MAX_BASES, analyze, dump_json
from .tropical import (DEFINITIONAL, ORTHOGONALITY,
                       enumerate_minimal_tropical_bases, is_tropical_basis)

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_CAP = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _global_flags(top: bool) -> argparse.ArgumentParser:
    # shared by the top-level parser and each subcommand, so flags may go
    # either before or after the command name; subcommand copies suppress
    # their defaults to avoid overwriting a value given up front
    def d(value):
        return value if top else argparse.SUPPRESS

    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", default=d(False),
                   help="emit JSON instead of text")
    p.add_argument("--force", action="store_true", default=d(False),
                   help="allow scans beyond the soft size cap")
    p.add_argument("--threads", type=int, default=d(1),
                   help="worker threads for power-set scans")
    p.add_argument("--seed", type=int, default=d(0), help="random seed (explore)")
    p.add_argument("--timing", action="store_true", default=d(False),
                   help="include wall-clock timing in reports")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tropbasis", parents=[_global_flags(True)],
                     description="Tropical bases of simple matroids.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    flags = _global_flags(False)

    p = sub.add_parser("analyze", parents=[flags], help="full analysis report")
    p.add_argument("matroid", help="file path or catalog spec such as uniform:2,4")
    p.add_argument("--max-bases", type=int, default=DEFAULT_MAX_BASES)

    p = sub.add_parser("check-basis", parents=[flags],
                       help="test a circuit family for the tropical basis property")
    p.add_argument("matroid")
    p.add_argument("--basis", required=True, help="family file in circuit format")

    p = sub.add_parser("enumerate", parents=[flags], help="list minimal tropical bases")
    p.add_argument("matroid")
    p.add_argument("--max-bases", type=int, default=DEFAULT_MAX_BASES)

    p = sub.add_parser("catalog", parents=[flags],
                       help="list catalog entries or print one as a circuit file")
    p.add_argument("name", nargs="?")

    p = sub.add_parser("explore", parents=[flags],
                       help="search for non-binary instances with non-closed circuits")
    p.add_argument("--family", choices=FAMILIES, default="gf3")
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--count", type=int, default=100)
    return parser


def _fam(family):
    return [elements(c) for c in family]


def _fmt(fam):
    return " ".join("{" + ",".join(map(str, c)) + "}" for c in fam) or "(none)"


def _emit(args, data, text):
    sys.stdout.write(dump_json(data) if args.json else text)


def cmd_analyze(args):
    M = load_matroid(args.matroid)
    rep = analyze(M, name=args.matroid, max_bases=args.max_bases, force=args.force,
                  threads=args.threads, timing=args.timing)
    _emit(args, rep.to_dict(), rep.to_text())


def cmd_check_basis(args):
    M = load_matroid(args.matroid)
    family = read_family_file(args.basis, M.n)
    verdicts = {m: is_tropical_basis(M, family, m, force=args.force, threads=args.threads)
                for m in (DEFINITIONAL, ORTHOGONALITY)}
    v = verdicts[DEFINITIONAL]
    agree = v == verdicts[ORTHOGONALITY]
    data = {
        "matroid": args.matroid,
        "family": _fam(canonical(family)),
        "is_basis": v.is_basis,
        "is_minimal": v.is_minimal,
        "failure_witness": None if v.failure_witness is None else elements(v.failure_witness),
        "redundant_member": None if v.redundant_member is None else elements(v.redundant_member),
        "methods_agree": agree,
    }
    lines = [f"tropical basis: {'yes' if v.is_basis else 'no'}",
             f"minimal: {'yes' if v.is_minimal else 'no'}"]
    if data["failure_witness"] is not None:
        lines.append(f"unwitnessed non-flat: {_fmt([data['failure_witness']])}")
    if data["redundant_member"] is not None:
        lines.append(f"redundant member: {_fmt([data['redundant_member']])}")
    lines.append(f"definitional and orthogonality tests agree: {'yes' if agree else 'no'}")
    _emit(args, data, "\n".join(lines) + "\n")


def cmd_enumerate(args):
    M = load_matroid(args.matroid)
    res = enumerate_minimal_tropical_bases(M, cap=args.max_bases, force=args.force,
                                           threads=args.threads)
    bases = [_fam(b) for b in sorted(res.bases, key=family_key)]
    data = {"matroid": args.matroid, "count": len(bases),
            "truncated": res.truncated, "minimal_bases": bases}
    more = " (truncated)" if res.truncated else ""
    lines = [f"minimal tropical bases: {len(bases)}{more}"]
    lines += [f"  {i}: {_fmt(b)}" for i, b in enumerate(bases, 1)]
    _emit(args, data, "\n".join(lines) + "\n")


def cmd_catalog(args):
    if args.name is None:
        data = {"entries": cat.NAMES}
        text = "".join(f"{usage}\n" for usage in cat.NAMES.values())
        _emit(args, data, text)
        return
    M = cat.from_spec(args.name)
    data = {"name": args.name, "n": M.n, "circuits": _fam(M.circuits)}
    _emit(args, data, format_matroid(M))


def cmd_explore(args):
    rep = explore(args.family, args.n_max, seed=args.seed, count=args.count,
                  force=args.force)
    _emit(args, rep.to_dict(), rep.to_text())


COMMANDS = {"analyze": cmd_analyze, "check-basis": cmd_check_basis,
            "enumerate": cmd_enumerate, "catalog": cmd_catalog,
            "explore": cmd_explore}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.threads < 1:
            parser.error("--threads must be at least 1")
    except SystemExit as exc:
        return exc.code
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        COMMANDS[args.command](args)
    except ResourceCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InvalidInput, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
