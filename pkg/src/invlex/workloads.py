"""Seeded input generators shared by the benchmarks, the CLI and the tests."""

from __future__ import annotations

import random

from invlex.json_app import STRING_CHARS, WHITESPACE_CHARS
from invlex.regex import Regex, any_of, seq, star, sym

# Tab plus printable ASCII: the comment body alphabet (anything but a newline).
COMMENT_CHARS = "\t" + "".join(chr(c) for c in range(0x20, 0x7F))


def comment_regex(body_chars: str = COMMENT_CHARS) -> Regex:
    """``//`` followed by any run of non-newline symbols."""
    return seq(sym("/"), sym("/"), star(any_of(body_chars)))


def random_comment(rng: random.Random, n: int) -> str:
    """A valid single-line comment of exactly ``n`` characters (``n >= 2``)."""
    return "//" + "".join(rng.choice(COMMENT_CHARS) for _ in range(n - 2))


_KEY_CHARS = "abcdefghijklmnopqrstuvwxyz_"
_VALUE_CHARS = STRING_CHARS


def _ws(rng: random.Random, spacing: bool) -> str:
    if not spacing or rng.random() < 0.5:
        return ""
    return "".join(rng.choice(WHITESPACE_CHARS) for _ in range(rng.randint(1, 3)))


def _value(rng: random.Random) -> str:
    kind = rng.randrange(5)
    if kind == 0:
        return str(rng.randint(-10_000, 10_000))
    if kind == 1:
        return '"' + "".join(rng.choice(_VALUE_CHARS) for _ in range(rng.randint(0, 8))) + '"'
    if kind == 2:
        return rng.choice(["true", "false"])
    if kind == 3:
        return "null"
    return "[" + ",".join(str(rng.randint(0, 99)) for _ in range(rng.randint(0, 3))) + "]"


def random_object(rng: random.Random, ident: int, max_fields: int = 3, spacing: bool = True) -> str:
    fields = [("id", str(ident))]
    for _ in range(rng.randint(0, max_fields)):
        key = "".join(rng.choice(_KEY_CHARS) for _ in range(rng.randint(1, 6)))
        if key != "id":
            fields.append((key, _value(rng)))
    rng.shuffle(fields)
    w = lambda: _ws(rng, spacing)  # noqa: E731
    body = ("," + w()).join(f'{w()}"{k}"{w()}:{w()}{v}{w()}' for k, v in fields)
    return "{" + body + "}"


def random_json_array(
    rng: random.Random, n_objects: int, max_fields: int = 3, spacing: bool = True, id_range: int = 1000
) -> str:
    objs = [random_object(rng, rng.randint(-id_range, id_range), max_fields, spacing) for _ in range(n_objects)]
    sep = lambda: "," + _ws(rng, spacing)  # noqa: E731
    out = _ws(rng, spacing) + "[" + _ws(rng, spacing)
    for i, obj in enumerate(objs):
        out += (sep() if i else "") + obj
    return out + _ws(rng, spacing) + "]" + _ws(rng, spacing)


def json_of_length(rng: random.Random, n_chars: int) -> str:
    """A flat-object JSON array of at least ``n_chars`` characters, closed properly."""
    parts = []
    total = 2
    while total < n_chars:
        obj = random_object(rng, rng.randint(0, 10 * n_chars))
        parts.append(obj)
        total += len(obj) + 2
    return "[" + ", ".join(parts) + "]"


_JSON_SOUP = STRING_CHARS + WHITESPACE_CHARS + '"'


def fuzz_input(rng: random.Random, max_len: int = 200) -> str:
    """Mostly-adversarial lexer input: random bytes, JSON-alphabet soup, or mangled JSON."""
    n = rng.randint(0, max_len)
    mode = rng.randrange(4)
    if mode == 0:
        raw = bytes(rng.randrange(256) for _ in range(n))
        return raw.decode("utf-8", errors="surrogateescape")
    if mode == 1:
        return "".join(rng.choice(_JSON_SOUP) for _ in range(n))
    text = random_json_array(rng, rng.randint(0, 6))[:n]
    if mode == 3 and text:
        chars = list(text)
        for _ in range(rng.randint(1, 4)):
            i = rng.randrange(len(chars))
            op = rng.randrange(3)
            if op == 0:
                del chars[i]
            elif op == 1:
                chars.insert(i, rng.choice(_JSON_SOUP))
            else:
                chars[i] = rng.choice(_JSON_SOUP)
            if not chars:
                break
        text = "".join(chars)[:max_len]
    return text
