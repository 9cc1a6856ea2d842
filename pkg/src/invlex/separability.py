"""R-path predicates and token sequences that are safe to print.

An R-path is a sequence where ``R`` holds between every pair of neighbours.
That property survives slicing, and concatenation only needs ``R`` checked
once at the seam. :class:`PrintableTokens` keeps the R-path for ``sep_pair``
as an invariant, which guarantees ``lex(print(tokens)) == (tokens, empty)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import pairwise
from typing import Callable, NamedTuple, Optional, Sequence, TypeVar

from invlex.lexer import LexerError, RuleSet, Token, lex, print_tokens
from invlex.memo import DerivationCaches
from invlex.regex import used_symbols
from invlex.zipper import derivation_step_zipper, prefix_match_zipper

T = TypeVar("T")


class RuleSetMismatchError(LexerError):
    def __init__(self) -> None:
        super().__init__("cannot combine token sequences built over different rule sets")


def r_path_holds(relation: Callable[[T, T], bool], s: Sequence[T]) -> bool:
    return all(relation(x, y) for x, y in pairwise(s))


def _step(caches: Optional[DerivationCaches], memoize: bool):
    if not memoize:
        return derivation_step_zipper
    return (caches if caches is not None else DerivationCaches()).step


def sep_pair(
    t1: Token,
    t2: Token,
    rules: RuleSet,
    caches: Optional[DerivationCaches] = None,
    *,
    memoize: bool = True,
) -> bool:
    """No rule can match anything starting with ``t1`` followed by the first symbol of ``t2``."""
    probe = t1.characters + t2.characters[:1]
    return not prefix_match_zipper(rules.union_zipper, probe, _step(caches, memoize))


def sep_seq(
    tokens: Sequence[Token],
    rules: RuleSet,
    caches: Optional[DerivationCaches] = None,
    *,
    memoize: bool = True,
) -> bool:
    step_caches = caches if caches is not None or not memoize else DerivationCaches()
    return r_path_holds(
        lambda a, b: sep_pair(a, b, rules, step_caches, memoize=memoize), tokens
    )


def reproduces(t: Token, rules: RuleSet, caches: Optional[DerivationCaches] = None) -> bool:
    """Lexing the token's own characters gives back exactly that token."""
    chars = t.characters
    toks, suffix = lex(rules, chars, caches)
    return len(suffix) == 0 and toks == (t,)


class Violation(NamedTuple):
    kind: str  # "token" (not reproducible) or "boundary" (sep fails between index and index + 1)
    index: int


def find_violation(
    rules: RuleSet, tokens: Sequence[Token], caches: Optional[DerivationCaches] = None
) -> Optional[Violation]:
    caches = caches if caches is not None else DerivationCaches()
    for i, t in enumerate(tokens):
        if not reproduces(t, rules, caches):
            return Violation("token", i)
    for i in range(len(tokens) - 1):
        if not sep_pair(tokens[i], tokens[i + 1], rules, caches):
            return Violation("boundary", i)
    return None


@dataclass(frozen=True)
class PrintableTokens:
    """Tokens guaranteed to re-lex to themselves once printed.

    Build with :func:`mk_printable_tokens`; the constructor itself does not
    check anything.
    """

    rules: RuleSet
    tokens: tuple[Token, ...]

    def __len__(self) -> int:
        return len(self.tokens)

    def append(
        self, other: PrintableTokens, caches: Optional[DerivationCaches] = None
    ) -> Optional[PrintableTokens]:
        if self.rules != other.rules:
            raise RuleSetMismatchError()
        if not self.tokens:
            return other
        if not other.tokens:
            return self
        if not sep_pair(self.tokens[-1], other.tokens[0], self.rules, caches):
            return None
        return PrintableTokens(self.rules, self.tokens + other.tokens)

    def slice(self, start: int, stop: int) -> PrintableTokens:
        if not 0 <= start <= stop <= len(self.tokens):
            raise IndexError(f"slice [{start}, {stop}) out of range for {len(self.tokens)} tokens")
        return PrintableTokens(self.rules, self.tokens[start:stop])

    def print(self, empty="") -> object:
        return print_tokens(self.tokens, empty)


def mk_printable_tokens(
    rules: RuleSet, tokens: Sequence[Token], caches: Optional[DerivationCaches] = None
) -> Optional[PrintableTokens]:
    if find_violation(rules, tokens, caches) is not None:
        return None
    return PrintableTokens(rules, tuple(tokens))


def print_pt(p: PrintableTokens, empty="") -> object:
    return p.print(empty)


def check_separator_interleaving(rules: RuleSet, tokens: Sequence[Token]) -> bool:
    sep_syms: set = set()
    other_syms: set = set()
    for rule in rules:
        (sep_syms if rule.is_separator else other_syms).update(used_symbols(rule.regex))
    if sep_syms & other_syms:
        return False
    return r_path_holds(lambda a, b: a.is_separator != b.is_separator, tokens)
