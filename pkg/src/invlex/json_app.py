"""A JSON lexer with semantic token values, and an object-sorting pipeline.

The pipeline lexes a JSON array of flat objects, slices it into objects,
sorts them by their integer ``"id"`` key and glues the slices back together
through :meth:`PrintableTokens.append`, so only the seams are rechecked.
The printed result is guaranteed to lex back to exactly the rebuilt tokens.

String literals are simplified: no escapes and no whitespace inside, so the
whitespace separator's symbols stay disjoint from every other rule's.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from invlex.lexer import Injection, LexerError, Rule, RuleSet, Token, lex
from invlex.memo import DerivationCaches
from invlex.regex import Regex, Union, any_of, char_range, opt, plus, seq, star, sym, word
from invlex.separability import PrintableTokens, Violation, find_violation, mk_printable_tokens


@dataclass(frozen=True)
class IntegerValue:
    value: int
    # Kept so that "007" and "7" stay distinct tokens.
    text: str


@dataclass(frozen=True)
class StringValue:
    text: str

    @property
    def content(self) -> str:
        return self.text[1:-1]


@dataclass(frozen=True)
class PunctValue:
    text: str


@dataclass(frozen=True)
class BoolValue:
    value: bool
    text: str


@dataclass(frozen=True)
class NullValue:
    text: str


@dataclass(frozen=True)
class WhitespaceValue:
    text: str


def _text(v) -> str:
    return v.text


def _to_int(s: str) -> IntegerValue:
    digits = s[1:] if s.startswith("-") else s
    n = 0
    for c in digits:
        n = n * 10 + (ord(c) - 48)
    return IntegerValue(-n if s.startswith("-") else n, s)


INTEGER_INJECTION = Injection(_to_int, _text)
STRING_INJECTION = Injection(StringValue, _text)
PUNCT_INJECTION = Injection(PunctValue, _text)
BOOL_INJECTION = Injection(lambda s: BoolValue(s == "true", s), _text)
NULL_INJECTION = Injection(NullValue, _text)
WHITESPACE_INJECTION = Injection(WhitespaceValue, _text)

WHITESPACE_CHARS = " \t\n\r"
# Printable ASCII without the quote, the backslash and the space.
STRING_CHARS = "".join(chr(c) for c in range(0x21, 0x7F) if chr(c) not in '"\\')

INT_RE: Regex = seq(
    opt(sym("-")),
    Union(plus(sym("0")), seq(char_range("1", "9"), star(char_range("0", "9")))),
)
STRING_RE: Regex = seq(sym('"'), star(any_of(STRING_CHARS)), sym('"'))
WHITESPACE_RE: Regex = plus(any_of(WHITESPACE_CHARS))

PUNCTUATION = {
    "lbrace": "{",
    "rbrace": "}",
    "lbracket": "[",
    "rbracket": "]",
    "comma": ",",
    "colon": ":",
}


def json_rules() -> RuleSet:
    rules = [Rule(sym(c), tag, False, PUNCT_INJECTION) for tag, c in PUNCTUATION.items()]
    rules += [
        Rule(word("true"), "true", False, BOOL_INJECTION),
        Rule(word("false"), "false", False, BOOL_INJECTION),
        Rule(word("null"), "null", False, NULL_INJECTION),
        Rule(INT_RE, "integerLiteral", False, INTEGER_INJECTION),
        Rule(STRING_RE, "stringLiteral", False, STRING_INJECTION),
        Rule(WHITESPACE_RE, "whitespace", True, WHITESPACE_INJECTION),
    ]
    return RuleSet(rules)


JSON_RULES = json_rules()


def json_lex(
    input: str, caches: Optional[DerivationCaches] = None, *, memoize: bool = True
) -> tuple[tuple[Token, ...], str]:
    return lex(JSON_RULES, input, caches, memoize=memoize)


class JsonPipelineError(LexerError):
    pass


class UnlexableInputError(JsonPipelineError):
    def __init__(self, offset: int) -> None:
        super().__init__(f"no JSON token starts at offset {offset}")
        self.offset = offset


class NotPrintableError(JsonPipelineError):
    def __init__(self, violation: Violation) -> None:
        super().__init__(f"token sequence is not printable: {violation.kind} at {violation.index}")
        self.violation = violation


class MalformedShapeError(JsonPipelineError):
    def __init__(self, index: int, reason: str) -> None:
        super().__init__(f"token {index}: {reason}")
        self.index = index


class MissingIdError(JsonPipelineError):
    def __init__(self, object_index: int) -> None:
        super().__init__(f"object {object_index} has no integer \"id\" key")
        self.object_index = object_index


class BoundaryNotSeparableError(JsonPipelineError):
    def __init__(self, index: int) -> None:
        super().__init__(f"cannot append piece {index}: boundary tokens are not separable")
        self.index = index


class ObjectSplit(NamedTuple):
    prefix: PrintableTokens  # tokens before the first object, or before "]" if there is none
    objects: tuple[PrintableTokens, ...]
    ids: tuple[int, ...]


def _skip_ws(tokens: Sequence[Token], i: int) -> int:
    while i < len(tokens) and tokens[i].is_separator:
        i += 1
    return i


def _object_end(tokens: Sequence[Token], start: int) -> int:
    depth = 0
    for j in range(start, len(tokens)):
        tag = tokens[j].tag
        if tag in ("lbrace", "lbracket"):
            depth += 1
        elif tag in ("rbrace", "rbracket"):
            depth -= 1
            if depth == 0:
                if tag != "rbrace":
                    raise MalformedShapeError(j, "object closed by ']'")
                return j
    raise MalformedShapeError(start, "unterminated object")


def _object_id(tokens: Sequence[Token], object_index: int) -> int:
    depth = 0
    for j, t in enumerate(tokens):
        if t.tag in ("lbrace", "lbracket"):
            depth += 1
        elif t.tag in ("rbrace", "rbracket"):
            depth -= 1
        elif depth == 1 and t.tag == "stringLiteral" and t.value.text == '"id"':
            k = _skip_ws(tokens, j + 1)
            if k < len(tokens) and tokens[k].tag == "colon":
                k = _skip_ws(tokens, k + 1)
                if k < len(tokens) and tokens[k].tag == "integerLiteral":
                    return tokens[k].value.value
    raise MissingIdError(object_index)


def shallow_split_objects(p: PrintableTokens) -> ObjectSplit:
    """Slice ``[ {...}, {...} ]`` into its objects and read each object's id."""
    tokens = p.tokens
    i = _skip_ws(tokens, 0)
    if i >= len(tokens) or tokens[i].tag != "lbracket":
        raise MalformedShapeError(i, "expected '['")
    i += 1
    objects: list[PrintableTokens] = []
    ids: list[int] = []
    prefix_end: Optional[int] = None
    expect_object = True
    while True:
        i = _skip_ws(tokens, i)
        if i >= len(tokens):
            raise MalformedShapeError(i, "unterminated array")
        tag = tokens[i].tag
        if tag == "rbracket" and (not objects or not expect_object):
            break
        if expect_object:
            if tag != "lbrace":
                raise MalformedShapeError(i, "expected '{'")
            if prefix_end is None:
                prefix_end = i
            end = _object_end(tokens, i)
            obj = p.slice(i, end + 1)
            ids.append(_object_id(obj.tokens, len(objects)))
            objects.append(obj)
            i = end + 1
            expect_object = False
        elif tag == "comma":
            i += 1
            expect_object = True
        else:
            raise MalformedShapeError(i, "expected ',' or ']'")
    if _skip_ws(tokens, i + 1) != len(tokens):
        raise MalformedShapeError(i + 1, "trailing tokens after the array")
    return ObjectSplit(p.slice(0, i if prefix_end is None else prefix_end), tuple(objects), tuple(ids))


def _piece(tags_and_text: Sequence[tuple[str, str]], caches: Optional[DerivationCaches]) -> PrintableTokens:
    tokens = [JSON_RULES.token(tag, text) for tag, text in tags_and_text]
    p = mk_printable_tokens(JSON_RULES, tokens, caches)
    assert p is not None, tags_and_text
    return p


def sort_and_rebuild(
    objects: Sequence[PrintableTokens],
    ids: Sequence[int],
    caches: Optional[DerivationCaches] = None,
) -> PrintableTokens:
    """Stable sort by id, then ``[`` obj ``, `` obj ... ``]`` by appending slices."""
    caches = caches if caches is not None else DerivationCaches()
    order = sorted(range(len(objects)), key=ids.__getitem__)
    between = _piece([("comma", ","), ("whitespace", " ")], caches)
    acc = _piece([("lbracket", "[")], caches)
    pieces: list[PrintableTokens] = []
    for k, i in enumerate(order):
        if k:
            pieces.append(between)
        pieces.append(objects[i])
    pieces.append(_piece([("rbracket", "]")], caches))
    for n, piece in enumerate(pieces):
        joined = acc.append(piece, caches)
        if joined is None:
            raise BoundaryNotSeparableError(n)
        acc = joined
    return acc


def json_printable(input: str, caches: Optional[DerivationCaches] = None) -> PrintableTokens:
    caches = caches if caches is not None else DerivationCaches()
    tokens, suffix = json_lex(input, caches)
    if suffix:
        raise UnlexableInputError(len(input) - len(suffix))
    violation = find_violation(JSON_RULES, tokens, caches)
    if violation is not None:
        raise NotPrintableError(violation)
    return PrintableTokens(JSON_RULES, tokens)


def json_sort_tokens(input: str, caches: Optional[DerivationCaches] = None) -> PrintableTokens:
    caches = caches if caches is not None else DerivationCaches()
    split = shallow_split_objects(json_printable(input, caches))
    return sort_and_rebuild(split.objects, split.ids, caches)


def json_sort_pipeline(input: str) -> str:
    return json_sort_tokens(input).print()
