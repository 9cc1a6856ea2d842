import inspect
import random
import sys

import pytest
from hypothesis import given, settings, strategies as st

from invlex import regex
from invlex.json_app import INT_RE
from invlex.regex import (
    EMPTY,
    EPSILON,
    Concat,
    ElementMatch,
    EmptyExpr,
    EmptyLang,
    Star,
    Union,
    alt,
    any_of,
    char_range,
    derivative_step,
    find_longest_match,
    is_empty_language,
    longest_match_length,
    match_r,
    match_r_spec,
    nullable,
    opt,
    plus,
    prefix_match,
    regex_size,
    seq,
    star,
    sym,
    used_symbols,
    word,
)
from invlex.workloads import comment_regex

from oracles import leaf_count, random_regex, regexes_of_depth, spec, strings_up_to

a, b = ElementMatch("a"), ElementMatch("b")
LOWER = plus(char_range("a", "z"))
DIGITS = plus(char_range("0", "9"))

regexes = st.builds(lambda seed, d: random_regex(random.Random(seed), d), st.integers(0, 2**32), st.integers(1, 5))
words = st.text(alphabet="abc", max_size=8)


def longest_by_oracle(r, s):
    return max((i for i in range(1, len(s) + 1) if match_r_spec(r, s[:i])), default=0)


class TestConstruction:
    def test_structural_equality_and_hash(self):
        x = Concat(Star(a), Union(a, b))
        y = Concat(Star(ElementMatch("a")), Union(ElementMatch("a"), ElementMatch("b")))
        assert x == y and hash(x) == hash(y) and x is not y
        assert x != Concat(Star(a), Union(b, a))
        assert EmptyExpr() == EPSILON and EmptyLang() == EMPTY and EPSILON != EMPTY

    def test_generic_alphabet(self):
        r = seq(sym(1), star(sym((2, 3))))
        assert match_r(r, (1, (2, 3), (2, 3)))
        assert not match_r(r, ((2, 3),))

    def test_sugar_desugars_to_primitives(self):
        prims = (EmptyExpr, EmptyLang, ElementMatch, Union, Concat, Star)
        for r in (opt(a), any_of("xyz"), plus(a), char_range("0", "9"), word("abc")):
            stack = [r]
            while stack:
                n = stack.pop()
                assert type(n) in prims
                stack += [getattr(n, f) for f in ("left", "right", "inner") if hasattr(n, f)]

    def test_sugar_edge_cases(self):
        assert any_of("") == EMPTY and alt() == EMPTY and seq() == EPSILON and word("") == EPSILON
        assert any_of("aab") == Union(a, b)


class TestNullable:
    @pytest.mark.parametrize(
        "r, expected",
        [(EPSILON, True), (a, False), (Concat(Star(a), EPSILON), True), (EMPTY, False), (Union(a, EPSILON), True)],
    )
    def test_examples(self, r, expected):
        assert nullable(r) is expected

    def test_matches_empty_string_oracle(self):
        for r in regexes_of_depth(3):
            assert nullable(r) == match_r_spec(r, "")


class TestDerivative:
    def test_examples(self):
        assert derivative_step(a, "a") == EPSILON
        assert derivative_step(b, "a") == EMPTY
        d = derivative_step(Star(a), "a")
        assert d == Concat(EPSILON, Star(a))
        assert all(match_r(d, s) == match_r(Star(a), s) for s in strings_up_to(4))

    def test_no_simplification(self):
        r = Concat(a, b)
        assert derivative_step(r, "a") == Union(Concat(EPSILON, b), EMPTY)

    @settings(max_examples=300, deadline=None)
    @given(regexes, st.sampled_from("abc"), words)
    def test_derivative_law(self, r, c, s):
        assert match_r(derivative_step(r, c), s) == match_r(r, c + s)


class TestMatch:
    def test_examples(self):
        assert match_r(LOWER, "foobar")
        assert not match_r(EMPTY, "")
        assert match_r(INT_RE, "-120") and match_r_spec(INT_RE, "-120")
        assert not match_r(INT_RE, "-") and not match_r(INT_RE, "012")
        assert match_r(INT_RE, "-0") and match_r(INT_RE, "000")

    def test_spec_examples(self):
        assert match_r_spec(Union(a, b), "b")
        assert match_r_spec(Concat(a, b), "ab")
        assert match_r_spec(Star(Union(a, b)), "abba")
        assert not match_r_spec(Star(Union(a, b)), "abca")

    def test_deep_derivatives_do_not_recurse(self):
        # 150 unsimplified steps nest ~300 levels deep; the stack must stay bounded regardless.
        depth = len(inspect.stack(0))
        old = sys.getrecursionlimit()
        sys.setrecursionlimit(depth + 260)
        try:
            assert match_r(star(a), "a" * 150)
            assert not match_r(star(a), "a" * 149 + "b")
        finally:
            sys.setrecursionlimit(old)

    def test_shallow_and_deep_paths_agree(self):
        r = star(alt(word("ab"), b))
        x = r
        for c in "ab" * 60:
            x = derivative_step(x, c)
        assert x.depth > 200
        for c in "abbab":
            assert derivative_step(x, c) == regex._derive_iterative(x, c)
        assert regex._derive(r, "a", {}) == regex._derive_iterative(r, "a")

    def test_memoized_spec_agrees_with_reference(self):
        for r in regexes_of_depth(3)[::7]:
            for s in strings_up_to(5):
                assert spec(r, s) == match_r_spec(r, s)

    @settings(max_examples=300, deadline=None)
    @given(regexes, st.text(alphabet="abc", max_size=6))
    def test_match_agrees_with_spec(self, r, s):
        assert match_r(r, s) == match_r_spec(r, s)


class TestEmptiness:
    def test_examples(self):
        assert is_empty_language(Concat(EMPTY, Star(a)))
        assert not is_empty_language(Star(EMPTY))
        assert not is_empty_language(Union(EMPTY, a))

    def test_against_enumeration(self):
        # The shortest word of L(r), if any, is no longer than r's number of symbol leaves.
        for r in regexes_of_depth(3):
            witness = any(spec(r, s) for s in strings_up_to(leaf_count(r)))
            assert is_empty_language(r) == (not witness), r


class TestLongestMatch:
    def test_examples(self):
        assert find_longest_match(LOWER, "foo1bar") == ("foo", "1bar")
        assert find_longest_match(a, "bbb") == ("", "bbb")
        assert find_longest_match(comment_regex(), "//hi\nx") == ("//hi", "\nx")

    def test_only_empty_match_reports_no_match(self):
        assert find_longest_match(star(a), "bbb") == ("", "bbb")

    def test_start_offset(self):
        assert longest_match_length(LOWER, "12abc3", 2) == 3

    @settings(max_examples=300, deadline=None)
    @given(regexes, words)
    def test_maximality(self, r, s):
        prefix, suffix = find_longest_match(r, s)
        assert prefix + suffix == s
        assert len(prefix) == longest_by_oracle(r, s)


class TestPrefixMatch:
    def test_examples(self):
        r = Union(LOWER, DIGITS)
        assert prefix_match(r, "foob")
        assert not prefix_match(r, "foo1")
        for x in (EMPTY, a, Concat(EMPTY, a), Star(EMPTY)):
            assert prefix_match(x, "") == (not is_empty_language(x))

    @settings(max_examples=300, deadline=None)
    @given(regexes, words)
    def test_prefix_closed(self, r, s):
        if prefix_match(r, s):
            assert all(prefix_match(r, s[:i]) for i in range(len(s)))


class TestUsedSymbols:
    def test_examples(self):
        assert used_symbols(EPSILON) == frozenset()
        assert used_symbols(Union(a, Concat(b, a))) == {"a", "b"}
        assert used_symbols(INT_RE) == set("-0123456789")

    @settings(max_examples=300, deadline=None)
    @given(regexes, words, st.sampled_from("xyz"), st.integers(0, 8))
    def test_character_set_lemma(self, r, s, foreign, at):
        s = s[:at] + foreign + s[at:]
        assert not match_r(r, s) and not prefix_match(r, s)

    def test_size(self):
        assert regex_size(Union(a, Star(b))) == 4
