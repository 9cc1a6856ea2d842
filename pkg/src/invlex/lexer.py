"""Maximal-munch lexing with injective token values, and printing back to text.

Rules are tried in priority order (index 0 first). At each position the
lexer takes the longest prefix any rule matches; among rules reaching that
length the lowest index wins. Lexing stops at the first position no rule
can start from and returns the rest of the input as the suffix.

A token keeps its semantic value, not its text. The rule's injection turns
matched text into a value and back, and printing relies on
``chars_of(transform(s)) == s`` for every ``s`` the rule matches.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Optional, Sequence

from invlex.memo import DerivationCaches
from invlex.regex import Regex, Str, alt, derivative_step
from invlex.zipper import Step, Zipper, derivation_step_zipper, focus, longest_match_length_zipper


class LexerError(ValueError):
    pass


class NullableRegexError(LexerError):
    def __init__(self, tag: str) -> None:
        super().__init__(f"rule {tag!r} has a nullable regex")
        self.tag = tag


class DuplicateTagError(LexerError):
    def __init__(self, tag: str) -> None:
        super().__init__(f"tag {tag!r} is used by more than one rule")
        self.tag = tag


class EmptyRuleSetError(LexerError):
    def __init__(self) -> None:
        super().__init__("a rule set needs at least one rule")


@dataclass(frozen=True)
class Injection:
    transform: Callable[[Str], Any]
    chars_of: Callable[[Any], Str]

    def __call__(self, s: Str) -> Any:
        return self.transform(s)


def _identity(x: Any) -> Any:
    return x


#: Tokens whose value is their own text.
IDENTITY = Injection(_identity, _identity)


@dataclass(frozen=True)
class Rule:
    regex: Regex
    tag: str
    is_separator: bool = False
    transformation: Injection = IDENTITY


@dataclass(frozen=True)
class Token:
    value: Any
    tag: str
    is_separator: bool
    size: int
    # Not part of the token's identity; lets a token print itself without its rule set.
    chars_of: Callable[[Any], Str] = field(default=_identity, compare=False, repr=False)

    @property
    def characters(self) -> Str:
        return self.chars_of(self.value)


def make_token(rule: Rule, chars: Str) -> Token:
    inj = rule.transformation
    return Token(inj.transform(chars), rule.tag, rule.is_separator, len(chars), inj.chars_of)


class RuleSet:
    """A validated, ordered list of rules, plus the derived data the engines need."""

    def __init__(self, rules: Iterable[Rule]) -> None:
        rules = tuple(rules)
        if not rules:
            raise EmptyRuleSetError()
        seen: set[str] = set()
        for rule in rules:
            if rule.regex.nullable:
                raise NullableRegexError(rule.tag)
            if rule.tag in seen:
                raise DuplicateTagError(rule.tag)
            seen.add(rule.tag)
        self.rules = rules
        self.index = {rule.tag: i for i, rule in enumerate(rules)}
        self.zippers: tuple[Zipper, ...] = tuple(focus(rule.regex) for rule in rules)
        self.union: Regex = alt(*(rule.regex for rule in rules))
        self.union_zipper: Zipper = focus(self.union)

    def __len__(self) -> int:
        return len(self.rules)

    def __iter__(self):
        return iter(self.rules)

    def __getitem__(self, i: int) -> Rule:
        return self.rules[i]

    def rule(self, tag: str) -> Rule:
        return self.rules[self.index[tag]]

    def token(self, tag: str, chars: Str) -> Token:
        return make_token(self.rule(tag), chars)

    def __eq__(self, other: object) -> bool:
        return self is other or (isinstance(other, RuleSet) and self.rules == other.rules)

    def __hash__(self) -> int:
        return hash(self.rules)

    def __repr__(self) -> str:
        return f"RuleSet({[r.tag for r in self.rules]})"


def validate_rule_set(rules: Iterable[Rule]) -> RuleSet:
    if isinstance(rules, RuleSet):
        return rules
    return RuleSet(rules)


def _step_for(caches: Optional[DerivationCaches], memoize: bool) -> Step:
    if not memoize:
        return derivation_step_zipper
    return (caches if caches is not None else DerivationCaches()).step


def max_prefix_one_rule(
    rule: Rule, input: Str, caches: Optional[DerivationCaches] = None, *, memoize: bool = True
) -> Optional[int]:
    n = longest_match_length_zipper(focus(rule.regex), input, 0, _step_for(caches, memoize))
    return n or None


def _max_prefix_at(rules: RuleSet, input: Str, start: int, step: Step) -> Optional[tuple[int, int]]:
    best: Optional[tuple[int, int]] = None
    best_len = 0
    for i, z in enumerate(rules.zippers):
        n = longest_match_length_zipper(z, input, start, step)
        if n > best_len:
            best, best_len = (i, n), n
    return best


def max_prefix(
    rules: RuleSet, input: Str, caches: Optional[DerivationCaches] = None, *, memoize: bool = True
) -> Optional[tuple[int, int]]:
    """``(rule_index, length)`` of the winning rule on ``input``, or None."""
    return _max_prefix_at(rules, input, 0, _step_for(caches, memoize))


def lex(
    rules: RuleSet, input: Str, caches: Optional[DerivationCaches] = None, *, memoize: bool = True
) -> tuple[tuple[Token, ...], Str]:
    """Tokenize ``input``; returns the tokens and the untokenized suffix.

    A fresh cache pair is used unless ``caches`` is given. ``memoize=False``
    runs the plain zipper derivation instead.
    """
    step = _step_for(caches, memoize)
    tokens = []
    pos = 0
    n = len(input)
    while pos < n:
        found = _max_prefix_at(rules, input, pos, step)
        if found is None:
            break
        i, length = found
        tokens.append(make_token(rules.rules[i], input[pos : pos + length]))
        pos += length
    return tuple(tokens), input[pos:]


def _join(pieces: Sequence[Str], empty: Str) -> Str:
    if not pieces:
        return empty
    if isinstance(pieces[0], str):
        return "".join(pieces)
    out: list = []
    for p in pieces:
        out.extend(p)
    return type(pieces[0])(out) if isinstance(pieces[0], tuple) else out


def print_tokens(tokens: Sequence[Token], empty: Str = "") -> Str:
    """Concatenated characters of ``tokens``; ``empty`` is returned for no tokens."""
    return _join([t.characters for t in tokens], empty)


def print_with_sep(tokens: Sequence[Token], sep: Token, empty: Str = "") -> Str:
    pieces: list = []
    sep_chars = sep.characters
    for i, t in enumerate(tokens):
        if i:
            pieces.append(sep_chars)
        pieces.append(t.characters)
    return _join(pieces, empty)


def print_with_sep_when_needed(
    tokens: Sequence[Token],
    sep: Token,
    rules: RuleSet,
    caches: Optional[DerivationCaches] = None,
    empty: Str = "",
) -> Str:
    """Insert ``sep`` only where gluing the next token on would change the re-lexing.

    Re-lexes the whole accumulated output at every boundary, so this is
    quadratic; :class:`~invlex.separability.PrintableTokens` is the cheap route.
    """
    caches = caches if caches is not None else DerivationCaches()
    out: list[Token] = []
    for t in tokens:
        if out:
            glued = out + [t]
            if lex(rules, print_tokens(glued, empty), caches) != (tuple(glued), empty):
                out.append(sep)
        out.append(t)
    return print_tokens(out, empty)


def _matched_lengths(r: Regex, input: Str, start: int) -> list[int]:
    """Every n >= 1 with match_r(r, input[start:start+n]), by one derivative per symbol."""
    lengths = []
    for i in range(start, len(input)):
        if r.empty:
            break
        r = derivative_step(r, input[i])
        if r.nullable:
            lengths.append(i + 1 - start)
    return lengths


def audit_maximal_munch(rules: RuleSet, input: Str, tokens: Sequence[Token], suffix: Str) -> bool:
    """Check a lexing result against the maximal-munch statement, prefix by prefix.

    Independent of the lexer: it uses naive derivatives, not zippers. For
    each token, a higher-priority rule may not match any prefix at least as
    long, and a lower-priority one may not match a strictly longer prefix.
    No rule may match a non-empty prefix of the leftover suffix.
    """
    pos = 0
    for t in tokens:
        if t.tag not in rules.index:
            return False
        chars = t.characters
        if t.size < 1 or len(chars) != t.size or input[pos : pos + t.size] != chars:
            return False
        own = rules.index[t.tag]
        if t.is_separator != rules.rules[own].is_separator:
            return False
        for i, rule in enumerate(rules.rules):
            lengths = _matched_lengths(rule.regex, input, pos)
            if i == own:
                if t.size not in lengths:
                    return False
            if i < own and any(n >= t.size for n in lengths):
                return False
            if any(n > t.size for n in lengths):
                return False
        pos += t.size
    if input[pos:] != suffix:
        return False
    return all(not _matched_lengths(rule.regex, input, pos) for rule in rules.rules)
