"""Command-line front end: parse set-family and CNF files, run the
verifications and the extension, emit text or JSON reports, and generate
benchmark instances.

Family file format: one set per line, elements separated by whitespace;
the literal line "{}" denotes the empty set; lines starting with "#" are
comments; blank lines are ignored.  An optional leading "ground:" line
declares elements that appear in no set.  Duplicate sets are an error
unless --dedupe is given.

Exit codes: 0 when the requested property holds or the command
succeeded, 1 when a checked property fails (witnesses are reported), and
2 for usage, parse and capacity errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from .core import (
    DEFAULT_SPAN_LIMIT,
    GroundSet,
    SetFamily,
    StateSet,
    atom_masks,
    atoms,
    span,
    surmise,
)
from .errors import FamilyError, ParseError
from .extension import minimal_wg_extension
from .generate import random_base
from .oracle import oracle_tight_path
from .satreduce import parse_dimacs, reduce_3sat
from .verify import VerificationReport, is_base, is_learning_space_base, is_wg_base

GROUND_PREFIX = "ground:"


def parse_family(text: str, *, dedupe: bool = False) -> SetFamily:
    """Parse the family text format; errors carry 1-based line numbers."""
    ground_names: list[str] | None = None
    ground_line = 0
    rows: list[tuple[int, tuple[str, ...]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith(GROUND_PREFIX):
            if ground_names is not None:
                raise ParseError("repeated ground declaration", lineno)
            if rows:
                raise ParseError("ground declaration must precede the sets", lineno)
            ground_names = _parse_tokens(line[len(GROUND_PREFIX) :], lineno)
            ground_line = lineno
            continue
        if line == "{}":
            rows.append((lineno, ()))
            continue
        rows.append((lineno, tuple(_parse_tokens(line, lineno))))
    if not rows:
        raise ParseError("no sets in input")
    if ground_names is None:
        seen_names: set[str] = set()
        ground_names = []
        for _, row in rows:
            for name in row:
                if name not in seen_names:
                    seen_names.add(name)
                    ground_names.append(name)
    try:
        ground = GroundSet(ground_names)
    except FamilyError as exc:
        raise ParseError(str(exc), ground_line or None) from None
    masks: list[int] = []
    seen: set[int] = set()
    for lineno, row in rows:
        try:
            mask = ground.mask_of(row)
        except FamilyError as exc:
            raise ParseError(str(exc), lineno) from None
        if mask in seen:
            if dedupe:
                continue
            raise ParseError("duplicate set", lineno)
        seen.add(mask)
        masks.append(mask)
    return SetFamily(ground, masks)


def _parse_tokens(chunk: str, lineno: int) -> list[str]:
    tokens = chunk.split()
    if not tokens:
        raise ParseError("empty declaration", lineno)
    seen: set[str] = set()
    for tok in tokens:
        if tok == "{}":
            raise ParseError("'{}' must appear alone on its line", lineno)
        if not tok.isprintable():
            raise ParseError(f"bad codepoint in token {tok!r}", lineno)
        if tok in seen:
            raise ParseError(f"duplicate element {tok!r} in set", lineno)
        seen.add(tok)
    return tokens


def serialize_family(family: SetFamily) -> str:
    lines = [GROUND_PREFIX + " " + " ".join(family.ground.names)]
    for s in family.sorted():
        members = s.members()
        lines.append(" ".join(members) if members else "{}")
    return "\n".join(lines) + "\n"


def _braced(s: StateSet) -> str:
    return "{" + " ".join(s.members()) + "}"


def _family_json(family: SetFamily) -> dict:
    return {
        "ground": list(family.ground.names),
        "sets": [list(s.members()) for s in family.sorted()],
    }


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_family(args) -> SetFamily:
    return parse_family(_read(args.file), dedupe=args.dedupe)


def _emit_report(args, label: str, report: VerificationReport, elapsed: float) -> int:
    if args.format == "json":
        payload = {
            "verdict": report.verdict,
            "witnesses": [
                {"set": list(w.set.members()), "reason": w.reason}
                for w in report.witnesses
            ],
            "timing_ms": round(elapsed * 1000.0, 3),
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"{label}: {'yes' if report.verdict else 'no'}")
        for w in report.witnesses:
            print(f"  - {_braced(w.set)}: {w.reason}")
    return 0 if report.verdict else 1


def _emit_family(args, family: SetFamily) -> int:
    if args.format == "json":
        print(json.dumps(_family_json(family), indent=2))
    else:
        sys.stdout.write(serialize_family(family))
    return 0


def _cmd_check(args, which: str) -> int:
    family = _load_family(args)
    start = time.perf_counter()
    if which == "base":
        report, label = is_base(family), "base"
    elif which == "learning-space":
        report, label = is_learning_space_base(family), "learning-space base"
    else:
        report, label = (
            is_wg_base(family, parallel=args.parallel),
            "well-graded base",
        )
    return _emit_report(args, label, report, time.perf_counter() - start)


def _cmd_span(args) -> int:
    return _emit_family(args, span(_load_family(args), limit=args.limit))


def _cmd_atoms(args) -> int:
    return _emit_family(args, atoms(_load_family(args)))


def _cmd_base(args) -> int:
    family = _load_family(args)
    return _emit_family(args, family.replaced(atom_masks(family.masks)))


def _cmd_surmise(args) -> int:
    family = _load_family(args)
    sigma = surmise(family)
    if args.format == "json":
        payload = {
            x: [list(s.members()) for s in sigma[x]] for x in sigma.elements()
        }
        print(json.dumps(payload, indent=2))
    else:
        for x in sigma.elements():
            print(f"{x}: " + " ".join(_braced(s) for s in sigma[x]))
    return 0


def _parse_set_arg(family: SetFamily, text: str) -> StateSet:
    if text == "{}":
        return StateSet(family.ground, 0)
    return StateSet.of(family.ground, text.split(","))


def _cmd_tight_path(args) -> int:
    family = _load_family(args)
    p = _parse_set_arg(family, args.p)
    q = _parse_set_arg(family, args.q)
    path = oracle_tight_path(family, p, q)
    if args.format == "json":
        payload = {
            "path": None if path is None else [list(s.members()) for s in path]
        }
        print(json.dumps(payload, indent=2))
    else:
        if path is None:
            print("no tight path")
        else:
            for s in path:
                print(_braced(s))
    return 0 if path is not None else 1


def _cmd_extend(args) -> int:
    family = _load_family(args)
    result = minimal_wg_extension(family)
    if args.paths:
        with open(args.paths, "w", encoding="utf-8") as fh:
            for (k, l), path in result.paths.items():
                steps = " ".join(_braced(s) for s in path)
                fh.write(f"{_braced(k)} => {_braced(k | l)}: {steps}\n")
    if args.format == "json":
        payload = {
            "generators": _family_json(result.generators),
            "base": _family_json(result.base),
            "added": [list(s.members()) for s in result.added],
        }
        print(json.dumps(payload, indent=2))
        return 0
    return _emit_family(args, result.generators)


def _cmd_reduce_sat(args) -> int:
    inst = parse_dimacs(_read(args.file))
    return _emit_family(args, reduce_3sat(inst))


def _cmd_gen(args) -> int:
    rng = random.Random(args.seed)
    family = random_base(
        rng,
        n=args.n,
        ell=args.ell,
        ground_size=args.ground,
        include_empty=args.include_empty,
    )
    if args.format == "json":
        print(json.dumps(_family_json(family), indent=2))
        return 0
    header = (
        f"# seed={args.seed} n={args.n} ell={args.ell} ground={args.ground}"
        f" include_empty={args.include_empty}\n"
    )
    sys.stdout.write(header + serialize_family(family))
    return 0


def _cmd_bench(args) -> int:
    from . import bench

    return bench.cmd_bench(args)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wellgraded",
        description="Verify and repair the well-gradedness of union-closed set families.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    family_in = argparse.ArgumentParser(add_help=False)
    family_in.add_argument("file", help="family file, or - for stdin")
    family_in.add_argument(
        "--dedupe", action="store_true", help="merge duplicate input sets"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "check-base", parents=[common, family_in], help="test whether the family is a base"
    )
    p.set_defaults(func=lambda a: _cmd_check(a, "base"))
    p = sub.add_parser(
        "check-learning-space",
        parents=[common, family_in],
        help="test whether the family is the base of a learning space",
    )
    p.set_defaults(func=lambda a: _cmd_check(a, "learning-space"))
    p = sub.add_parser(
        "check-wg",
        parents=[common, family_in],
        help="test whether the family is the base of a well-graded union-closed family",
    )
    p.add_argument(
        "--parallel",
        action="store_true",
        help="evaluate the quotient subproblems on a thread pool",
    )
    p.set_defaults(func=lambda a: _cmd_check(a, "wg"))

    p = sub.add_parser("span", parents=[common, family_in], help="closure under unions")
    p.add_argument("--limit", type=int, default=DEFAULT_SPAN_LIMIT)
    p.set_defaults(func=_cmd_span)
    p = sub.add_parser(
        "atoms", parents=[common, family_in], help="atoms of a union-closed family"
    )
    p.set_defaults(func=_cmd_atoms)
    p = sub.add_parser(
        "base", parents=[common, family_in], help="base of the family's span"
    )
    p.set_defaults(func=_cmd_base)
    p = sub.add_parser(
        "surmise", parents=[common, family_in], help="surmise function of a base"
    )
    p.set_defaults(func=_cmd_surmise)

    p = sub.add_parser(
        "tight-path",
        parents=[common, family_in],
        help="tight path between two member sets, if any",
    )
    p.add_argument("p", help="start set: comma-separated elements, or {}")
    p.add_argument("q", help="end set: comma-separated elements, or {}")
    p.set_defaults(func=_cmd_tight_path)

    p = sub.add_parser(
        "extend",
        parents=[common, family_in],
        help="minimal well-graded extension of the family",
    )
    p.add_argument("--paths", help="also write the witnessing path family to this file")
    p.set_defaults(func=_cmd_extend)

    p = sub.add_parser(
        "reduce-sat", parents=[common], help="reduce a 3-CNF DIMACS file to a set family"
    )
    p.add_argument("file", help="DIMACS CNF file, or - for stdin")
    p.set_defaults(func=_cmd_reduce_sat)

    p = sub.add_parser(
        "gen", parents=[common], help="generate a seeded random base"
    )
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=int, required=True, help="number of sets")
    p.add_argument("--ell", type=int, required=True, help="largest cardinality")
    p.add_argument("--ground", type=int, default=24, help="ground set size")
    p.add_argument("--include-empty", action="store_true")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser(
        "bench",
        parents=[common],
        help="time the decision procedures and the extension across sizes",
    )
    p.add_argument("--sizes", default="25,50,100,200,400")
    p.add_argument("--ell", type=int, default=8)
    p.add_argument("--ground", type=int, default=24)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--outdir", default="bench-out", help="directory for the CSV and figure")
    p.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FamilyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
