"""Zipper form of regular expressions and its two-phase derivative.

A :class:`Context` is a pending concatenation ``r1 . (r2 . (... rn))`` held
as a persistent cons list, so descending into a ``Concat`` or ``Star``
prepends in O(1) and shares the tail. A zipper is a ``frozenset`` of
contexts standing for their union; the empty set is the empty language.

Derivation runs *up* a context while the focused expression is nullable and
*down* into each expression reached, following the shape of the Brzozowski
rules. The result is language-equivalent to the derivative of the unfocused
regex but stays within a finite set of contexts, which is what makes
memoizing the steps worthwhile.
"""

from __future__ import annotations

from typing import Callable, Iterator, Optional, Sequence

from invlex.regex import (
    EMPTY,
    EPSILON,
    Concat,
    ElementMatch,
    Regex,
    Star,
    Str,
    Symbol,
    Union,
)

Zipper = frozenset  # frozenset[Context]
Step = Callable[["Zipper", Symbol], "Zipper"]
DownFn = Callable[[Regex, "Context", Symbol], "Zipper"]

EMPTY_ZIPPER: Zipper = frozenset()


class Context:
    __slots__ = ("head", "tail", "size", "_hash")

    def __init__(self, head: Optional[Regex] = None, tail: Optional[Context] = None) -> None:
        # Context() is the empty context; Context(r, ctx) is r prepended to ctx.
        self.head = head
        self.tail = tail
        if tail is None:
            if head is not None:
                raise ValueError("a non-empty context needs a tail")
            self.size = 0
            self._hash = hash("Context")
        else:
            self.size = tail.size + 1
            self._hash = hash((head._hash, tail._hash))

    @classmethod
    def of(cls, *exprs: Regex) -> Context:
        ctx = EMPTY_CONTEXT
        for r in reversed(exprs):
            ctx = cls(r, ctx)
        return ctx

    def prepend(self, r: Regex) -> Context:
        return Context(r, self)

    @property
    def exprs(self) -> tuple[Regex, ...]:
        return tuple(self)

    def __iter__(self) -> Iterator[Regex]:
        node = self
        while node.size:
            yield node.head
            node = node.tail

    def __len__(self) -> int:
        return self.size

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if type(other) is not Context:
            return NotImplemented
        a, b = self, other
        if a.size != b.size or a._hash != b._hash:
            return False
        while a is not b and a.size:
            if a.head != b.head:
                return False
            a, b = a.tail, b.tail
        return True

    def __repr__(self) -> str:
        return "Context(" + ", ".join(map(repr, self)) + ")"


EMPTY_CONTEXT = Context()


def focus(r: Regex) -> Zipper:
    return frozenset((Context.of(r),))


def as_list(z: Zipper) -> list[Context]:
    return list(z)


def _context_regex(ctx: Context) -> Regex:
    exprs = ctx.exprs
    if not exprs:
        return EPSILON
    out = exprs[-1]
    for r in reversed(exprs[:-1]):
        out = Concat(r, out)
    return out


def unfocus(contexts: Sequence[Context]) -> Regex:
    """Rebuild a regex from a list of contexts (test oracle; order matters only structurally)."""
    if not contexts:
        return EMPTY
    out = _context_regex(contexts[-1])
    for ctx in reversed(contexts[:-1]):
        out = Union(_context_regex(ctx), out)
    return out


def _down(expr: Regex, ctx: Context, a: Symbol, down: DownFn) -> Zipper:
    t = type(expr)
    if t is ElementMatch:
        return frozenset((ctx,)) if expr.sym == a else EMPTY_ZIPPER
    if t is Union:
        return down(expr.left, ctx, a) | down(expr.right, ctx, a)
    if t is Concat:
        res = down(expr.left, Context(expr.right, ctx), a)
        if expr.left.nullable:
            res = res | down(expr.right, ctx, a)
        return res
    if t is Star:
        return down(expr.inner, Context(expr, ctx), a)
    return EMPTY_ZIPPER


def _up(ctx: Context, a: Symbol, down: DownFn) -> Zipper:
    parts = []
    while ctx.size:
        r = ctx.head
        ctx = ctx.tail
        parts.append(down(r, ctx, a))
        if not r.nullable:
            break
    if not parts:
        return EMPTY_ZIPPER
    if len(parts) == 1:
        return parts[0]
    return frozenset().union(*parts)


def derivation_step_zipper_down(expr: Regex, ctx: Context, a: Symbol) -> Zipper:
    return _down(expr, ctx, a, derivation_step_zipper_down)


def derivation_step_zipper_up(ctx: Context, a: Symbol) -> Zipper:
    return _up(ctx, a, derivation_step_zipper_down)


def derivation_step_zipper(z: Zipper, a: Symbol) -> Zipper:
    out: set = set()
    for ctx in z:
        out |= derivation_step_zipper_up(ctx, a)
    return frozenset(out)


def nullable_zipper(z: Zipper) -> bool:
    return any(all(r.nullable for r in ctx) for ctx in z)


def zipper_has_non_empty_language(z: Zipper) -> bool:
    return any(not any(r.empty for r in ctx) for ctx in z)


def match_zipper(z: Zipper, s: Str, step: Step = derivation_step_zipper) -> bool:
    for a in s:
        if not z:
            return False
        z = step(z, a)
    return nullable_zipper(z)


def longest_match_length_zipper(
    z: Zipper, s: Str, start: int = 0, step: Step = derivation_step_zipper
) -> int:
    """Length of the longest non-empty prefix of ``s[start:]`` accepted by ``z``, 0 if none."""
    best = 0
    for i in range(start, len(s)):
        if not z:
            break
        z = step(z, s[i])
        if nullable_zipper(z):
            best = i + 1 - start
    return best


def find_longest_match_zipper(
    z: Zipper, s: Str, step: Step = derivation_step_zipper
) -> tuple[Str, Str]:
    n = longest_match_length_zipper(z, s, 0, step)
    return s[:n], s[n:]


def prefix_match_zipper(z: Zipper, s: Str, step: Step = derivation_step_zipper) -> bool:
    for a in s:
        if not z:
            return False
        z = step(z, a)
    return zipper_has_non_empty_language(z)
