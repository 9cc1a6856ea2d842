"""Invertible lexing: derivative-based matching, maximal munch, and printable token sequences."""

from invlex.lexer import (
    Injection,
    Rule,
    RuleSet,
    Token,
    lex,
    print_tokens,
    print_with_sep,
    print_with_sep_when_needed,
    validate_rule_set,
)
from invlex.memo import DerivationCaches, MemoCache
from invlex.separability import PrintableTokens, mk_printable_tokens, sep_pair, sep_seq

__all__ = [
    "DerivationCaches",
    "Injection",
    "MemoCache",
    "PrintableTokens",
    "Rule",
    "RuleSet",
    "Token",
    "lex",
    "mk_printable_tokens",
    "print_tokens",
    "print_with_sep",
    "print_with_sep_when_needed",
    "sep_pair",
    "sep_seq",
    "validate_rule_set",
]
