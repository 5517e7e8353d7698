"""Command-line entry point: ``tuttecov VERB FILE [flags]``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io
from .dctree import common_refinement, indecomposable_covering
from .errors import CapacityExceeded, InvalidMatroid, MatroidError, ParseError
from .kzero import k0_class
from .matroid import (
    AUTOMORPHISM_LIMIT,
    automorphism_count,
    check_axioms,
    classify_element,
    indecomposable_class,
    is_indecomposable,
)
from .pivot import MAX_INDEX, MIN_INDEX, seeded
from .tutte import MemoPolicy, tutte_dc, tutte_direct

EXIT_OK, EXIT_PARSE, EXIT_INVALID, EXIT_CAPACITY, EXIT_MISMATCH = 0, 1, 2, 3, 4
AXIOM_CHECK_LIMIT = 10

DEFAULT_FORMAT = {
    "tutte": "text",
    "tree": "json",
    "cover": "json",
    "refine": "json",
    "k0": "json",
    "check": "text",
    "info": "text",
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--engine", choices=["direct", "dc", "dc-memo"], default="dc-memo")
    common.add_argument("--strategy", choices=["min-index", "max-index", "random"], default=None)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--format", choices=["text", "json", "dot"], default=None)
    common.add_argument("--input-kind", choices=["matroid", "graph"], default=None)

    parser = _Parser(prog="tuttecov", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    for verb, text in [
        ("tutte", "print the Tutte polynomial"),
        ("tree", "emit a fully expanded deletion-contraction tree"),
        ("cover", "emit an indecomposable Tutte covering"),
        ("k0", "print the K0 class"),
        ("check", "cross-check both Tutte engines and the matroid axioms"),
        ("info", "rank, element classes, indecomposability, automorphisms"),
    ]:
        p = sub.add_parser(verb, parents=[common], help=text)
        p.add_argument("input")
    p = sub.add_parser("refine", parents=[common], help="common refinement of two coverings")
    p.add_argument("first")
    p.add_argument("second")
    return parser


def _strategy(args):
    if args.strategy == "max-index":
        return MAX_INDEX
    if args.strategy == "random" or (args.strategy is None and args.seed is not None):
        if args.seed is None:
            print("tuttecov: no --seed given, pivoting by min-index", file=sys.stderr)
            return MIN_INDEX
        return seeded(args.seed)
    return MIN_INDEX


def _emit(data, fmt, text):
    if fmt == "json":
        sys.stdout.write(io.dumps(data))
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


def _tutte(M, args):
    if args.engine == "direct":
        return tutte_direct(M)
    memo = MemoPolicy.EXACT if args.engine == "dc-memo" else MemoPolicy.NONE
    return tutte_dc(M, _strategy(args), memo)


def _run(args) -> int:
    fmt = args.format or DEFAULT_FORMAT[args.verb]
    if fmt == "dot" and args.verb != "tree":
        raise ParseError("--format dot is only available for 'tree'")

    if args.verb == "refine":
        a = io.covering_from_json(Path(args.first).read_text())
        b = io.covering_from_json(Path(args.second).read_text())
        ref = common_refinement(a, b, _strategy(args))
        data = io.covering_to_json(ref.covering)
        data["into_first"] = [
            {"leg": j, "map": dict(h.mapping)} for j, h in zip(ref.into_a.through, ref.into_a.factors)
        ]
        data["into_second"] = [{"leg": j, "map": dict(h.mapping)} for j, h in ref.into_b]
        lines = [f"{len(ref.covering)} legs"]
        for k, leg in enumerate(ref.covering.legs):
            cls = indecomposable_class(leg.source)
            lines.append(
                f"leg {k}: class ({cls.loops},{cls.coloops}) "
                f"-> first[{ref.into_a.through[k]}], second[{ref.into_b[k][0]}]"
            )
        _emit(data, fmt, "\n".join(lines))
        return EXIT_OK

    M = io.load_matroid(args.input, args.input_kind)

    if args.verb == "tutte":
        p = _tutte(M, args)
        _emit(p.to_json(), fmt, str(p))
    elif args.verb in ("tree", "cover"):
        c = indecomposable_covering(M, _strategy(args))
        if fmt == "dot":
            sys.stdout.write(io.tree_to_dot(c.witness))
        else:
            data = io.tree_to_json(c.witness) if args.verb == "tree" else io.covering_to_json(c)
            lines = []
            for k, leg in enumerate(c.legs):
                cls = indecomposable_class(leg.source)
                lines.append(f"leg {k}: class ({cls.loops},{cls.coloops}) on {sorted(leg.source.labels)}")
            _emit(data, fmt, "\n".join(lines))
    elif args.verb == "k0":
        a = k0_class(M, _strategy(args))
        _emit(a.to_json(), fmt, repr(a))
    elif args.verb == "info":
        classes = {lab: classify_element(M, lab).value for lab in M.labels}
        indec = is_indecomposable(M)
        autos = automorphism_count(M) if M.size <= AUTOMORPHISM_LIMIT else None
        data = {
            "size": M.size,
            "rank": M.rank,
            "bases": len(M.bases),
            "elements": classes,
            "indecomposable": indec,
            "class": list(indecomposable_class(M)) if indec else None,
            "automorphisms": autos,
        }
        lines = [f"size: {M.size}", f"rank: {M.rank}", f"bases: {len(M.bases)}"]
        lines += [f"element {lab}: {kind}" for lab, kind in classes.items()]
        lines.append(f"indecomposable: {'yes' if indec else 'no'}")
        if indec:
            lines.append(f"class: {tuple(indecomposable_class(M))}")
        lines.append(
            f"automorphisms: {autos}" if autos is not None
            else f"automorphisms: skipped (more than {AUTOMORPHISM_LIMIT} elements)"
        )
        _emit(data, fmt, "\n".join(lines))
    elif args.verb == "check":
        return _check(M, fmt)
    return EXIT_OK


def _check(M, fmt) -> int:
    reference = tutte_direct(M)
    results = {}
    for strategy in (MIN_INDEX, MAX_INDEX, seeded(0)):
        for memo in MemoPolicy:
            results[f"{strategy}/{memo.value}"] = tutte_dc(M, strategy, memo) == reference
    if M.size <= AXIOM_CHECK_LIMIT:
        problems = check_axioms(M)
        axioms = "ok" if not problems else "violated: " + ", ".join(problems)
    else:
        problems = []
        axioms = f"skipped (more than {AXIOM_CHECK_LIMIT} elements)"
    agree = all(results.values())
    data = {"tutte": reference.to_json(), "engines": results, "axioms": axioms, "ok": agree and not problems}
    lines = [f"tutte: {reference}"]
    lines += [f"engine {name}: {'agrees' if ok else 'DISAGREES'}" for name, ok in results.items()]
    lines.append(f"axioms: {axioms}")
    _emit(data, fmt, "\n".join(lines))
    if problems:
        return EXIT_INVALID
    return EXIT_OK if agree else EXIT_MISMATCH


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_PARSE
    try:
        return _run(args)
    except CapacityExceeded as exc:
        print(f"tuttecov: capacity exceeded: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except ParseError as exc:
        print(f"tuttecov: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (OSError, json.JSONDecodeError) as exc:
        print(f"tuttecov: cannot read input: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InvalidMatroid as exc:
        print(f"tuttecov: invalid matroid: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except MatroidError as exc:
        print(f"tuttecov: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
