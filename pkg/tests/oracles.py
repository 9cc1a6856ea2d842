"""Independent test oracles: regex enumeration, set-free spec matching, word sampling."""

from __future__ import annotations

import functools
import itertools
import random
from typing import Iterator, Sequence

from invlex.regex import (
    EMPTY,
    EPSILON,
    Concat,
    ElementMatch,
    EmptyExpr,
    EmptyLang,
    Regex,
    Star,
    Union,
    match_r_spec,
)

AB = ("a", "b")


@functools.cache
def regexes_of_depth(depth: int, alphabet: tuple = AB) -> tuple[Regex, ...]:
    """Every regex whose tree has at most ``depth`` levels (a leaf is one level)."""
    leaves = (EPSILON, EMPTY) + tuple(ElementMatch(a) for a in alphabet)
    if depth <= 1:
        return leaves
    sub = regexes_of_depth(depth - 1, alphabet)
    out = list(leaves)
    out += [Star(r) for r in sub]
    out += [Union(l, r) for l, r in itertools.product(sub, sub)]
    out += [Concat(l, r) for l, r in itertools.product(sub, sub)]
    return tuple(out)


def strings_up_to(n: int, alphabet: Sequence = AB) -> list[str]:
    return ["".join(p) for k in range(n + 1) for p in itertools.product(alphabet, repeat=k)]


def leaf_count(r: Regex) -> int:
    t = type(r)
    if t is ElementMatch:
        return 1
    if t is Union or t is Concat:
        return leaf_count(r.left) + leaf_count(r.right)
    if t is Star:
        return leaf_count(r.inner)
    return 0


@functools.lru_cache(maxsize=1 << 20)
def _spec_cached(r: Regex, s: str) -> bool:
    return spec(r, s)


def spec(r: Regex, s: str) -> bool:
    """The split-enumeration semantics of ``match_r_spec``, with subterm results cached.

    Only sub-expressions go through the cache, so one-off top-level queries do
    not bloat it. Agreement with ``match_r_spec`` itself is tested.
    """
    t = type(r)
    if t is EmptyExpr:
        return not s
    if t is EmptyLang:
        return False
    if t is ElementMatch:
        return len(s) == 1 and s[0] == r.sym
    if t is Union:
        return _spec_cached(r.left, s) or _spec_cached(r.right, s)
    if t is Concat:
        return any(_spec_cached(r.left, s[:i]) and _spec_cached(r.right, s[i:]) for i in range(len(s) + 1))
    if t is Star:
        return not s or any(
            _spec_cached(r.inner, s[:i]) and _spec_cached(r, s[i:]) for i in range(1, len(s) + 1)
        )
    raise TypeError(r)


def has_extension(r: Regex, s: str, bound: int, alphabet: Sequence = AB) -> bool:
    """Some ``s + w`` with ``len(w) <= bound`` is in L(r), by the spec semantics."""
    return any(spec(r, s + w) for w in strings_up_to(bound, alphabet))


def sample_word(r: Regex, rng: random.Random, max_repeat: int = 3) -> str | None:
    """A random member of L(r), or None if the sampler hits the empty language."""
    t = type(r)
    if t is EmptyExpr:
        return ""
    if t is EmptyLang:
        return None
    if t is ElementMatch:
        return r.sym
    if t is Union:
        first, second = (r.left, r.right) if rng.random() < 0.5 else (r.right, r.left)
        w = sample_word(first, rng, max_repeat)
        return w if w is not None else sample_word(second, rng, max_repeat)
    if t is Concat:
        left = sample_word(r.left, rng, max_repeat)
        right = sample_word(r.right, rng, max_repeat) if left is not None else None
        return None if right is None else left + right
    if t is Star:
        parts = []
        for _ in range(rng.randint(0, max_repeat)):
            w = sample_word(r.inner, rng, max_repeat)
            if w is None:
                break
            parts.append(w)
        return "".join(parts)
    raise TypeError(r)


def random_regex(rng: random.Random, depth: int, alphabet: Sequence = ("a", "b", "c")) -> Regex:
    if depth <= 1 or rng.random() < 0.2:
        k = rng.randrange(len(alphabet) + 2)
        return (EPSILON, EMPTY)[k] if k < 2 else ElementMatch(alphabet[k - 2])
    kind = rng.randrange(3)
    if kind == 0:
        return Star(random_regex(rng, depth - 1, alphabet))
    ctor = Union if kind == 1 else Concat
    return ctor(random_regex(rng, depth - 1, alphabet), random_regex(rng, depth - 1, alphabet))


def random_string(rng: random.Random, max_len: int, alphabet: Sequence = ("a", "b", "c")) -> str:
    return "".join(rng.choice(alphabet) for _ in range(rng.randint(0, max_len)))


def reachable_zippers(z, alphabet: Sequence, steps: int, step) -> Iterator:
    """Zippers reachable from ``z`` in at most ``steps`` derivation steps (with repeats)."""
    frontier = [z]
    for _ in range(steps + 1):
        yield from frontier
        frontier = [step(x, a) for x in frontier for a in alphabet]


__all__ = [
    "AB",
    "reachable_zippers",
    "has_extension",
    "leaf_count",
    "match_r_spec",
    "random_regex",
    "random_string",
    "regexes_of_depth",
    "sample_word",
    "spec",
    "strings_up_to",
]
