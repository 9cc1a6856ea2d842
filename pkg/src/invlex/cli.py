"""Command-line entry point: ``invlex {lex,roundtrip,json-sort,bench}``.

Exit codes: 0 success, 1 I/O error, 2 untokenizable input, 3 round-trip
violation, 4 input not shaped like an array of objects with ids,
5 token sequence not printable, 6 non-separable seam on rebuild,
64 unknown benchmark experiment or bad bench options.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from invlex import bench
from invlex.json_app import (
    JSON_RULES,
    BoundaryNotSeparableError,
    MalformedShapeError,
    MissingIdError,
    NotPrintableError,
    UnlexableInputError,
    json_sort_pipeline,
)
from invlex.lexer import Token, lex, print_tokens
from invlex.memo import DerivationCaches
from invlex.separability import mk_printable_tokens

PRESETS = {"json": JSON_RULES}

EXIT_IO = 1
EXIT_UNLEXABLE = 2
EXIT_ROUNDTRIP = 3
EXIT_SHAPE = 4
EXIT_NOT_PRINTABLE = 5
EXIT_SEAM = 6
EXIT_USAGE = 64


def _read(path: str) -> str:
    data = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    return data.decode("utf-8", errors="surrogateescape")


def _write(path: Optional[str], text: str) -> None:
    data = text.encode("utf-8", errors="surrogateescape")
    if path is None or path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        Path(path).write_bytes(data)


def _byte_offset(text: str, pos: int) -> int:
    return len(text[:pos].encode("utf-8", errors="surrogateescape"))


def token_record(t: Token) -> dict:
    return {"tag": t.tag, "isSeparator": t.is_separator, "size": t.size, "text": t.characters}


def tokens_to_jsonl(tokens: Sequence[Token]) -> str:
    return "".join(json.dumps(token_record(t), ensure_ascii=False) + "\n" for t in tokens)


def cmd_lex(args: argparse.Namespace) -> int:
    try:
        text = _read(args.input)
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO
    tokens, suffix = lex(PRESETS[args.preset], text)
    try:
        _write(args.output, tokens_to_jsonl(tokens))
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO
    if suffix:
        offset = _byte_offset(text, len(text) - len(suffix))
        print(f"error: untokenizable input at byte offset {offset}", file=sys.stderr)
        return EXIT_UNLEXABLE
    return 0


def cmd_roundtrip(args: argparse.Namespace) -> int:
    try:
        text = _read(args.input)
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO
    rules = PRESETS[args.preset]
    caches = DerivationCaches()
    tokens, suffix = lex(rules, text, caches)
    if print_tokens(tokens) + suffix != text:
        print("FAIL print(lex(s)) != s", file=sys.stderr)
        return EXIT_ROUNDTRIP
    p = mk_printable_tokens(rules, tokens, caches)
    if p is not None and lex(rules, p.print(), caches) != (p.tokens, ""):
        print("FAIL lex(print(ts)) != ts", file=sys.stderr)
        return EXIT_ROUNDTRIP
    status = "printable" if p is not None else "not printable"
    print(f"ok: {len(tokens)} tokens, suffix {len(suffix)} chars, {status}")
    return 0


def cmd_json_sort(args: argparse.Namespace) -> int:
    try:
        text = _read(args.input)
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO
    try:
        out = json_sort_pipeline(text)
    except UnlexableInputError as e:
        print(f"error: untokenizable input at byte offset {_byte_offset(text, e.offset)}", file=sys.stderr)
        return EXIT_UNLEXABLE
    except (MalformedShapeError, MissingIdError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_SHAPE
    except NotPrintableError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_NOT_PRINTABLE
    except BoundaryNotSeparableError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_SEAM
    try:
        _write(args.output, out)
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO
    return 0


def _sizes(text: Optional[str]) -> Optional[tuple[int, ...]]:
    if not text:
        return None
    return tuple(int(x) for x in text.replace(" ", "").split(",") if x)


def cmd_bench(args: argparse.Namespace) -> int:
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("INVLEX_SEED", bench.DEFAULT_SEED))
    try:
        config = bench.BenchConfig(
            args.experiment, _sizes(args.sizes), args.reps, args.warmup, seed,
            Path(args.corpus) if args.corpus is not None else None,
        )
    except bench.UnknownExperiment:
        known = ", ".join(bench.EXPERIMENTS)
        print(f"error: unknown experiment {args.experiment!r} (known: {known})", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    records = bench.run(config)
    try:
        if args.output is None or args.output == "-":
            bench.write_csv(records, sys.stdout, seed)
        else:
            with open(args.output, "w", newline="") as f:
                bench.write_csv(records, f, seed)
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO
    return 0


def _positive_reps(text: str) -> int:
    n = int(text)
    if n < 5:
        raise argparse.ArgumentTypeError("need at least 5 measured repetitions")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="invlex", description="Invertible lexing toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lex", help="tokenize a file, one JSON object per token")
    p.add_argument("--preset", choices=sorted(PRESETS), default="json")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_lex)

    p = sub.add_parser("roundtrip", help="check print(lex(s)) == s and lex(print(ts)) == ts")
    p.add_argument("--preset", choices=sorted(PRESETS), default="json")
    p.add_argument("-i", "--input", required=True)
    p.set_defaults(func=cmd_roundtrip)

    p = sub.add_parser("json-sort", help="sort the objects of a JSON array by their integer id")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_json_sort)

    p = sub.add_parser("bench", help="run a benchmark experiment and write CSV")
    p.add_argument("--experiment", required=True)
    p.add_argument("--sizes", help="comma-separated input sizes")
    p.add_argument("--reps", type=_positive_reps, default=5)
    p.add_argument("--warmup", type=int, default=3)
    p.add_argument("--seed", type=int, default=None, help="default: $INVLEX_SEED or 42")
    p.add_argument("--corpus", help="directory of *.json files to lex instead of generated input")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
