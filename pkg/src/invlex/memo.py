"""Memoization caches for pure functions, and memoized derivation steps.

A :class:`MemoCache` maps a 64-bit hash to a bucket of ``(key, value)``
pairs, so colliding keys live side by side and are told apart by equality.
Every stored value is ``fn(key)``; :meth:`MemoCache.audit` rechecks that.

Caches are single-owner: one :class:`DerivationCaches` per lexing session,
threaded explicitly, never global. Nothing is ever evicted.
"""

from __future__ import annotations

from typing import Callable, Generic, Hashable, Iterator, NamedTuple, Optional, TypeVar

from invlex.regex import Regex, Symbol, derivative_step
from invlex.zipper import (
    EMPTY_ZIPPER,
    Context,
    Zipper,
    _down,
    _up,
    derivation_step_zipper_down,
    derivation_step_zipper_up,
)

K = TypeVar("K", bound=Hashable)
V = TypeVar("V")

_MASK64 = (1 << 64) - 1


def hash64(key: Hashable) -> int:
    return hash(key) & _MASK64


class CacheStats(NamedTuple):
    hits: int
    misses: int
    entries: int


class MemoCache(Generic[K, V]):
    def __init__(self, fn: Callable[[K], V], hasher: Callable[[K], int] = hash64) -> None:
        self.fn = fn
        self._hasher = hasher
        self._table: dict[int, list[tuple[K, V]]] = {}
        self._hits = 0
        self._misses = 0
        self._entries = 0

    def get_or_compute(self, key: K) -> V:
        h = self._hasher(key)
        bucket = self._table.get(h)
        if bucket is not None:
            for k, v in bucket:
                if k == key:
                    self._hits += 1
                    return v
        self._misses += 1
        value = self.fn(key)
        # fn may have filled this very bucket through a recursive memoized call.
        bucket = self._table.setdefault(h, [])
        for k, _ in bucket:
            if k == key:
                return value
        bucket.append((key, value))
        self._entries += 1
        return value

    __call__ = get_or_compute

    def stats(self) -> CacheStats:
        return CacheStats(self._hits, self._misses, self._entries)

    def items(self) -> Iterator[tuple[K, V]]:
        for bucket in self._table.values():
            yield from bucket

    def __len__(self) -> int:
        return self._entries

    def audit(self, reference: Optional[Callable[[K], V]] = None) -> list[K]:
        """Keys whose stored value differs from ``reference(key)`` (``fn`` by default)."""
        ref = reference or self.fn
        return [k for k, v in self.items() if ref(k) != v]


class DerivUpKey(NamedTuple):
    ctx: Context
    a: Symbol


class DerivDownKey(NamedTuple):
    expr: Regex
    ctx: Context
    a: Symbol


class DerivationCaches:
    """The up/down cache pair of one lexing session.

    Misses in either cache recurse through the memoized down step, so both
    tables fill as derivation proceeds.
    """

    def __init__(self) -> None:
        self.down: MemoCache[DerivDownKey, Zipper] = MemoCache(self._compute_down)
        self.up: MemoCache[DerivUpKey, Zipper] = MemoCache(self._compute_up)

    def _memo_down(self, expr: Regex, ctx: Context, a: Symbol) -> Zipper:
        return self.down.get_or_compute(DerivDownKey(expr, ctx, a))

    def _compute_down(self, key: DerivDownKey) -> Zipper:
        return _down(key.expr, key.ctx, key.a, self._memo_down)

    def _compute_up(self, key: DerivUpKey) -> Zipper:
        return _up(key.ctx, key.a, self._memo_down)

    def step(self, z: Zipper, a: Symbol) -> Zipper:
        return memoized_derivation_step_zipper(self.up, self.down, z, a)

    def audit(self) -> list:
        """Entries disagreeing with the unmemoized derivation functions."""
        bad: list = self.up.audit(lambda k: derivation_step_zipper_up(k.ctx, k.a))
        bad += self.down.audit(lambda k: derivation_step_zipper_down(k.expr, k.ctx, k.a))
        return bad


def memoized_derivation_step_zipper(
    cache_up: MemoCache[DerivUpKey, Zipper],
    cache_down: MemoCache[DerivDownKey, Zipper],
    z: Zipper,
    a: Symbol,
) -> Zipper:
    # cache_down is reached through cache_up's compute function.
    if not z:
        return EMPTY_ZIPPER
    get = cache_up.get_or_compute
    if len(z) == 1:
        (ctx,) = z
        return get(DerivUpKey(ctx, a))
    out: set = set()
    for ctx in z:
        out |= get(DerivUpKey(ctx, a))
    return frozenset(out)


def memoized_derivative(cache: Optional[MemoCache] = None) -> Callable[[Regex, Symbol], Regex]:
    """A naive derivative step memoized on ``(regex, symbol)``."""
    cache = cache if cache is not None else MemoCache(lambda k: derivative_step(k[0], k[1]))

    def step(r: Regex, a: Symbol) -> Regex:
        return cache.get_or_compute((r, a))

    step.cache = cache  # type: ignore[attr-defined]
    return step
