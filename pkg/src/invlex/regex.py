"""Regular expressions over an arbitrary alphabet, matched with Brzozowski derivatives.

Symbols can be any hashable value. Strings are plain indexable sequences of
symbols (``str`` for character alphabets, ``tuple`` otherwise).

Every node caches its structural hash together with its nullability and
whether its language is empty, so those three queries are O(1) and
structurally equal trees built independently still hash equally.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Sequence

Symbol = Hashable
Str = Sequence[Symbol]

__all__ = [
    "Regex",
    "EmptyExpr",
    "EmptyLang",
    "ElementMatch",
    "Union",
    "Concat",
    "Star",
    "EPSILON",
    "EMPTY",
    "nullable",
    "is_empty_language",
    "derivative_step",
    "match_r",
    "match_r_spec",
    "find_longest_match",
    "longest_match_length",
    "prefix_match",
    "used_symbols",
    "regex_size",
    "sym",
    "word",
    "any_of",
    "char_range",
    "alt",
    "seq",
    "opt",
    "star",
    "plus",
]


class Regex:
    __slots__ = ("_hash", "nullable", "empty", "depth")

    nullable: bool
    empty: bool
    depth: int  # levels in the tree; a leaf is 1

    def __hash__(self) -> int:
        return self._hash

    def __ne__(self, other: object) -> bool:
        return not self == other


class EmptyExpr(Regex):
    """Matches only the empty string."""

    __slots__ = ()
    __match_args__ = ()

    def __init__(self) -> None:
        self._hash = hash("EmptyExpr")
        self.nullable = True
        self.empty = False
        self.depth = 1

    __hash__ = Regex.__hash__

    def __eq__(self, other: object) -> bool:
        return type(other) is EmptyExpr

    def __repr__(self) -> str:
        return "EmptyExpr()"


class EmptyLang(Regex):
    """Matches nothing."""

    __slots__ = ()
    __match_args__ = ()

    def __init__(self) -> None:
        self._hash = hash("EmptyLang")
        self.nullable = False
        self.empty = True
        self.depth = 1

    __hash__ = Regex.__hash__

    def __eq__(self, other: object) -> bool:
        return type(other) is EmptyLang

    def __repr__(self) -> str:
        return "EmptyLang()"


class ElementMatch(Regex):
    __slots__ = ("sym",)
    __match_args__ = ("sym",)

    def __init__(self, sym: Symbol) -> None:
        self.sym = sym
        self._hash = hash(("ElementMatch", sym))
        self.nullable = False
        self.empty = False
        self.depth = 1

    __hash__ = Regex.__hash__

    def __eq__(self, other: object) -> bool:
        return self is other or (type(other) is ElementMatch and self.sym == other.sym)

    def __repr__(self) -> str:
        return f"ElementMatch({self.sym!r})"


class Union(Regex):
    __slots__ = ("left", "right")
    __match_args__ = ("left", "right")

    def __init__(self, left: Regex, right: Regex) -> None:
        self.left = left
        self.right = right
        self._hash = hash((2, left._hash, right._hash))
        self.nullable = left.nullable or right.nullable
        self.empty = left.empty and right.empty
        self.depth = 1 + max(left.depth, right.depth)

    __hash__ = Regex.__hash__

    def __eq__(self, other: object) -> bool:
        return self is other or (
            type(other) is Union
            and self._hash == other._hash
            and self.left == other.left
            and self.right == other.right
        )

    def __repr__(self) -> str:
        return f"Union({self.left!r}, {self.right!r})"


class Concat(Regex):
    __slots__ = ("left", "right")
    __match_args__ = ("left", "right")

    def __init__(self, left: Regex, right: Regex) -> None:
        self.left = left
        self.right = right
        self._hash = hash((3, left._hash, right._hash))
        self.nullable = left.nullable and right.nullable
        self.empty = left.empty or right.empty
        self.depth = 1 + max(left.depth, right.depth)

    __hash__ = Regex.__hash__

    def __eq__(self, other: object) -> bool:
        return self is other or (
            type(other) is Concat
            and self._hash == other._hash
            and self.left == other.left
            and self.right == other.right
        )

    def __repr__(self) -> str:
        return f"Concat({self.left!r}, {self.right!r})"


class Star(Regex):
    __slots__ = ("inner",)
    __match_args__ = ("inner",)

    def __init__(self, inner: Regex) -> None:
        self.inner = inner
        self._hash = hash((4, inner._hash))
        self.nullable = True
        self.empty = False
        self.depth = 1 + inner.depth

    __hash__ = Regex.__hash__

    def __eq__(self, other: object) -> bool:
        return self is other or (
            type(other) is Star and self._hash == other._hash and self.inner == other.inner
        )

    def __repr__(self) -> str:
        return f"Star({self.inner!r})"


EPSILON = EmptyExpr()
EMPTY = EmptyLang()


def nullable(r: Regex) -> bool:
    return r.nullable


def is_empty_language(r: Regex) -> bool:
    return r.empty


# Trees deeper than this are derived with an explicit stack instead of recursion.
_RECURSION_DEPTH = 200


def derivative_step(r: Regex, a: Symbol) -> Regex:
    """Brzozowski derivative of ``r`` with respect to ``a``, without simplification.

    Unsimplified derivatives nest one level deeper per consumed symbol, so
    deep trees go through an explicit stack rather than the call stack.
    """
    if r.depth < _RECURSION_DEPTH:
        return _derive(r, a, {})
    return _derive_iterative(r, a)


def _derive(r: Regex, a: Symbol, done: dict[int, Regex]) -> Regex:
    # `done` maps id(node) -> derivative so subtrees shared in the DAG are derived once.
    got = done.get(id(r))
    if got is not None:
        return got
    t = type(r)
    if t is ElementMatch:
        out = EPSILON if r.sym == a else EMPTY
    elif t is Union:
        out = Union(_derive(r.left, a, done), _derive(r.right, a, done))
    elif t is Concat:
        head = Concat(_derive(r.left, a, done), r.right)
        out = Union(head, _derive(r.right, a, done) if r.left.nullable else EMPTY)
    elif t is Star:
        out = Concat(_derive(r.inner, a, done), r)
    else:
        out = EMPTY
    done[id(r)] = out
    return out


def _derive_iterative(r: Regex, a: Symbol) -> Regex:
    done: dict[int, Regex] = {}  # id(node) -> derivative; every node stays alive during the call
    stack = [r]
    while stack:
        node = stack[-1]
        key = id(node)
        if key in done:
            stack.pop()
            continue
        t = type(node)
        if t is ElementMatch:
            done[key] = EPSILON if node.sym == a else EMPTY
        elif t is Union or t is Concat:
            left, right = done.get(id(node.left)), done.get(id(node.right))
            need_right = t is Union or node.left.nullable
            if left is None or (need_right and right is None):
                stack.append(node.left)
                if need_right:
                    stack.append(node.right)
                continue
            if t is Union:
                done[key] = Union(left, right)
            else:
                done[key] = Union(Concat(left, node.right), right if need_right else EMPTY)
        elif t is Star:
            inner = done.get(id(node.inner))
            if inner is None:
                stack.append(node.inner)
                continue
            done[key] = Concat(inner, node)
        else:
            done[key] = EMPTY
        stack.pop()
    return done[id(r)]


def match_r(r: Regex, s: Str) -> bool:
    for a in s:
        r = derivative_step(r, a)
    return r.nullable


def match_r_spec(r: Regex, s: Str) -> bool:
    """Reference semantics by explicit enumeration of split points.

    Exponential; only meant as a test oracle. The star case only tries
    non-empty first pieces so the recursion always shrinks the input.
    """
    t = type(r)
    if t is EmptyExpr:
        return len(s) == 0
    if t is EmptyLang:
        return False
    if t is ElementMatch:
        return len(s) == 1 and s[0] == r.sym
    if t is Union:
        return match_r_spec(r.left, s) or match_r_spec(r.right, s)
    if t is Concat:
        return any(
            match_r_spec(r.left, s[:i]) and match_r_spec(r.right, s[i:])
            for i in range(len(s) + 1)
        )
    if t is Star:
        if len(s) == 0:
            return True
        return any(
            match_r_spec(r.inner, s[:i]) and match_r_spec(r, s[i:])
            for i in range(1, len(s) + 1)
        )
    raise TypeError(f"not a regex: {r!r}")


def longest_match_length(r: Regex, s: Str, start: int = 0) -> int:
    """Length of the longest non-empty prefix of ``s[start:]`` in L(r), 0 if none."""
    best = 0
    for i in range(start, len(s)):
        if r.empty:
            break
        r = derivative_step(r, s[i])
        if r.nullable:
            best = i + 1 - start
    return best


def find_longest_match(r: Regex, s: Str) -> tuple[Str, Str]:
    n = longest_match_length(r, s)
    return s[:n], s[n:]


def prefix_match(r: Regex, s: Str) -> bool:
    """True iff some extension of ``s`` is in L(r)."""
    for a in s:
        if r.empty:
            return False
        r = derivative_step(r, a)
    return not r.empty


def _walk(r: Regex) -> Iterable[Regex]:
    stack = [r]
    while stack:
        node = stack.pop()
        yield node
        t = type(node)
        if t is Union or t is Concat:
            stack.append(node.right)
            stack.append(node.left)
        elif t is Star:
            stack.append(node.inner)


def used_symbols(r: Regex) -> frozenset:
    return frozenset(node.sym for node in _walk(r) if type(node) is ElementMatch)


def regex_size(r: Regex) -> int:
    return sum(1 for _ in _walk(r))


# Sugar. Everything below desugars to the six constructors at build time.


def sym(a: Symbol) -> Regex:
    return ElementMatch(a)


def word(s: Str) -> Regex:
    """Concatenation of the symbols of ``s`` (the empty string gives EPSILON)."""
    return seq(*(ElementMatch(a) for a in s))


def any_of(symbols: Iterable[Symbol]) -> Regex:
    """Union of single-symbol matches, built as a balanced tree to keep it shallow."""
    leaves = [ElementMatch(a) for a in dict.fromkeys(symbols)]
    if not leaves:
        return EMPTY

    def build(lo: int, hi: int) -> Regex:
        if hi - lo == 1:
            return leaves[lo]
        mid = (lo + hi) // 2
        return Union(build(lo, mid), build(mid, hi))

    return build(0, len(leaves))


def char_range(lo: str, hi: str) -> Regex:
    return any_of(chr(c) for c in range(ord(lo), ord(hi) + 1))


def alt(*rs: Regex) -> Regex:
    """Right-folded union; no arguments gives EMPTY."""
    if not rs:
        return EMPTY
    out = rs[-1]
    for r in reversed(rs[:-1]):
        out = Union(r, out)
    return out


def seq(*rs: Regex) -> Regex:
    """Right-folded concatenation; no arguments gives EPSILON."""
    if not rs:
        return EPSILON
    out = rs[-1]
    for r in reversed(rs[:-1]):
        out = Concat(r, out)
    return out


def opt(r: Regex) -> Regex:
    return Union(r, EPSILON)


def star(r: Regex) -> Regex:
    return Star(r)


def plus(r: Regex) -> Regex:
    return Concat(r, Star(r))
