"""``fk``: command-line front end.

Exit codes: 0 success (``distinguish``: distinguished), 1 check failed or
not distinguished, 2 usage / parse error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import groups
from .gauss import (
    KINDS,
    LONG,
    ChordDiagram,
    DiagramError,
    connected_sum,
    random_corpus,
    read_corpus,
    serialize_diagram,
)
from .harness import check_walks, minimal
from .invariants import closed_invariants, invariants, slice_obstruction
from .moves import describe, move_to_dict
from .parity import classify
from .search import search_trivialize

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


class CliError(Exception):
    pass


def _read_lines(path: str) -> list[str]:
    try:
        if path == "-":
            return sys.stdin.read().splitlines()
        with open(path, encoding="utf-8") as fh:
            return fh.read().splitlines()
    except OSError as exc:
        raise CliError(str(exc)) from None


def _load(path: str) -> list[ChordDiagram]:
    try:
        return [D for _, D in read_corpus(_read_lines(path))]
    except DiagramError as exc:
        raise CliError(f"{path}: {exc}") from None


def _load_one(path: str) -> ChordDiagram:
    ds = _load(path)
    if len(ds) != 1:
        raise CliError(f"{path}: expected exactly one diagram, found {len(ds)}")
    return ds[0]


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def cmd_parse(args) -> int:
    for D in _load(args.file):
        if args.json:
            _emit({"kind": D.kind, "n": D.n, "pairs": D.pairs(), "diagram": serialize_diagram(D)})
        else:
            print(serialize_diagram(D))
    return EXIT_OK


def cmd_classify(args) -> int:
    cols = ("label", "first", "second", "parity", "type", "sort", "letter")
    if args.tsv:
        print("\t".join(("diagram",) + cols))
    for D in _load(args.file):
        if not args.tsv:
            print(f"# {serialize_diagram(D)}")
        for cc in classify(D):
            row = (
                cc.chord.label,
                str(cc.chord.first),
                str(cc.chord.second),
                cc.parity,
                "-" if cc.chord_type is None else f"type{cc.chord_type}",
                "-" if cc.chord_sort is None else f"sort{cc.chord_sort}",
                cc.letter,
            )
            if args.tsv:
                print("\t".join((serialize_diagram(D),) + row))
            else:
                print(f"{row[0]:>4} ({row[1]},{row[2]})  {row[3]:<4}  {row[4]:<5}  {row[5]:<5}  {row[6]}")
    return EXIT_OK


def bundle_dict(D: ChordDiagram) -> dict:
    out = {"diagram": serialize_diagram(D)}
    if D.kind == LONG:
        out.update(invariants(D).to_dict())
    else:
        out.update(closed_invariants(D).to_dict())
    rep = slice_obstruction(D)
    out["slice"] = rep.verdict
    out["sort1"], out["sort2"] = rep.sort1, rep.sort2
    return out


def cmd_inv(args) -> int:
    for D in _load(args.file):
        d = bundle_dict(D)
        if args.json:
            _emit(d)
            continue
        print(d["diagram"])
        print(f"  n       = {d['n']}")
        if D.kind == LONG:
            print(f"  l       = {d['l']}")
            print(f"  phi     = {d['phi']}")
            print(f"  psi     = {d['psi']}")
            print(f"  phi NF  = {d['phi_nf']}")
            print(f"  psi NF  = {d['psi_nf']}")
            kind = "reflection" if d["reflected"] else "translation"
            print(f"  shift   = {d['shift']} ({kind})")
        else:
            print(f"  |l|     = {d['abs_l']}")
            print(f"  phi cls = {d['phi_class']}")
            print(f"  psi cls = {d['psi_canonical']}")
        print(f"  slice   = {str(slice_obstruction(D))}")
    return EXIT_OK


def cmd_walk(args) -> int:
    diagrams = _load(args.file)
    summary = check_walks(diagrams, args.steps, args.trials, args.seed, args.max_chords)
    fail = minimal(summary.failures)
    if args.json:
        _emit(
            {
                "ok": summary.ok,
                "diagrams": len(diagrams),
                "walks": summary.walks,
                "steps": summary.steps,
                "truncated": summary.truncated,
                "failures": len(summary.failures),
                "counterexample": None if fail is None else fail.to_dict(),
            }
        )
    else:
        verdict = "PASS" if summary.ok else "FAIL"
        print(
            f"{verdict}: {len(diagrams)} diagrams, {summary.walks} walks, {summary.steps} steps, "
            f"{summary.truncated} truncated, {len(summary.failures)} failing walks"
        )
        if fail is not None:
            print(fail)
    return EXIT_OK if summary.ok else EXIT_FAIL


def _comparison(D: ChordDiagram) -> list[tuple[str, object]]:
    if D.kind == LONG:
        b = invariants(D)
        return [("l", b.l), ("phi", str(b.phi_nf)), ("psi", str(b.psi_nf))]
    b = closed_invariants(D)
    return [("|l|", b.abs_l), ("phi class", str(b.phi_class)), ("psi class", str(b.psi_canonical))]


def cmd_distinguish(args) -> int:
    D1, D2 = _load_one(args.file_a), _load_one(args.file_b)
    if D1.kind != D2.kind:
        raise CliError("cannot compare a long diagram with a closed one")
    separating = [(name, x, y) for (name, x), (_, y) in zip(_comparison(D1), _comparison(D2)) if x != y]
    if args.json:
        _emit({"distinguished": bool(separating), "by": [{"invariant": n, "a": x, "b": y} for n, x, y in separating]})
    elif separating:
        for name, x, y in separating:
            print(f"distinguished by {name}: {x} vs {y}")
    else:
        print("not distinguished")
    return EXIT_OK if separating else EXIT_FAIL


def cmd_search(args) -> int:
    D = _load_one(args.file)
    if args.budget <= 0:
        raise CliError("--budget must be positive")
    res = search_trivialize(D, args.budget, args.max_chords)
    if args.json:
        _emit(
            {
                "status": res.status,
                "expanded": res.expanded,
                "visited": res.visited,
                "moves": [move_to_dict(m) for m in res.moves],
            }
        )
    else:
        print(f"{res.status} after expanding {res.expanded} nodes ({res.visited} visited)")
        for i, m in enumerate(res.moves, 1):
            print(f"  {i}. {describe(m)}")
    return EXIT_OK


def cmd_reduce(args) -> int:
    group = {"g": groups.G, "gp": groups.GPRIME}.get(args.group)
    if group is None:
        raise CliError(f"unknown group {args.group!r} (expected g or gp)")
    try:
        w = groups.parse_word(args.word, group)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    nf = groups.cyclic_normal_form(w) if args.cyclic else groups.reduce(w)
    print(str(nf))
    return EXIT_OK


def cmd_sum(args) -> int:
    try:
        D = connected_sum(_load_one(args.file_a), _load_one(args.file_b))
    except DiagramError as exc:
        raise CliError(str(exc)) from None
    print(serialize_diagram(D))
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.min_chords > args.max_chords:
        raise CliError("--min-chords exceeds --max-chords")
    for D in random_corpus(args.count, args.min_chords, args.max_chords, args.seed, args.kind):
        print(serialize_diagram(D))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fk", description="Free-knot parity invariants.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help, file=True):
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(func=func)
        if file:
            sp.add_argument("file", help="corpus file, or - for stdin")
        return sp

    sp = add("parse", cmd_parse, "validate and canonicalize diagrams")
    sp.add_argument("--json", action="store_true")

    sp = add("classify", cmd_classify, "parity/type/sort/letter per chord")
    sp.add_argument("--tsv", action="store_true")

    sp = add("inv", cmd_inv, "invariants l, phi, psi")
    sp.add_argument("--json", action="store_true")

    sp = add("walk", cmd_walk, "randomized move-walk invariance check")
    sp.add_argument("--steps", type=int, default=30)
    sp.add_argument("--trials", type=int, default=10)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--max-chords", type=int, default=10)
    sp.add_argument("--json", action="store_true")

    sp = add("distinguish", cmd_distinguish, "compare the invariants of two diagrams", file=False)
    sp.add_argument("file_a")
    sp.add_argument("file_b")
    sp.add_argument("--json", action="store_true")

    sp = add("search", cmd_search, "BFS for a trivializing move sequence")
    sp.add_argument("--budget", type=int, default=10_000)
    sp.add_argument("--max-chords", type=int, default=None)
    sp.add_argument("--json", action="store_true")

    sp = add("reduce", cmd_reduce, "normal form of a word in G (g) or G' (gp)", file=False)
    sp.add_argument("--group", required=True)
    sp.add_argument("--cyclic", action="store_true", help="conjugacy-class representative")
    sp.add_argument("word")

    sp = add("sum", cmd_sum, "connected sum of two long diagrams", file=False)
    sp.add_argument("file_a")
    sp.add_argument("file_b")

    sp = add("gen", cmd_gen, "random corpus", file=False)
    sp.add_argument("--count", type=int, default=100)
    sp.add_argument("--min-chords", type=int, default=0)
    sp.add_argument("--max-chords", type=int, default=10)
    sp.add_argument("--kind", choices=KINDS, default=LONG)
    sp.add_argument("--seed", type=int, default=0)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        return args.func(args)
    except CliError as exc:
        print(f"fk: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
