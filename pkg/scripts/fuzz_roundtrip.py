"""Fuzz the JSON lexer in both directions and report any counterexample.

    python scripts/fuzz_roundtrip.py --cases 20000 --seed 7

Checks print(lex(s)) ::: suffix == s, the maximal-munch audit, and, when the
token sequence is printable, lex(print(tokens)) == (tokens, "").
"""

from __future__ import annotations

import argparse
import random
import sys

from invlex.json_app import JSON_RULES, json_lex
from invlex.lexer import audit_maximal_munch, lex, print_tokens
from invlex.memo import DerivationCaches
from invlex.separability import mk_printable_tokens
from invlex.workloads import fuzz_input


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--cases", type=int, default=10_000)
    p.add_argument("--max-len", type=int, default=200)
    p.add_argument("--seed", type=int, default=42)
    args = p.parse_args()

    rng = random.Random(args.seed)
    caches = DerivationCaches()
    printable = 0
    for i in range(args.cases):
        s = fuzz_input(rng, args.max_len)
        tokens, suffix = json_lex(s, caches)
        if print_tokens(tokens) + suffix != s:
            print(f"case {i}: print(lex(s)) lost input: {s!r}")
            return 1
        if not audit_maximal_munch(JSON_RULES, s, tokens, suffix):
            print(f"case {i}: maximal munch violated: {s!r}")
            return 1
        pt = mk_printable_tokens(JSON_RULES, tokens, caches)
        if pt is not None:
            printable += 1
            if lex(JSON_RULES, pt.print(), caches) != (pt.tokens, ""):
                print(f"case {i}: lex(print(ts)) != ts for {s!r}")
                return 1
    bad = caches.audit()
    print(f"{args.cases} cases ok, {printable} printable, cache entries audited: {len(caches.up) + len(caches.down)}, bad: {len(bad)}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
