"""In-process benchmark harness for the matcher, lexer and R-path experiments.

Each run discards ``warmup`` iterations and reports mean and standard
deviation over ``reps`` measured ones. Before timing, every variant of an
experiment is run once and their outputs compared, so no variant can win
by being wrong. Memoized variants keep their cache across iterations of the
same experiment (steady state), except ``lex-memo``, which starts every
lexing run from an empty cache.
"""

from __future__ import annotations

import csv
import gc
import random
import statistics
import time
from dataclasses import astuple, dataclass
from pathlib import Path
from typing import Callable, Iterable, Optional, Sequence, TextIO

from invlex.json_app import JSON_RULES, json_lex
from invlex.memo import DerivationCaches, memoized_derivative
from invlex.regex import match_r
from invlex.separability import PrintableTokens, sep_seq
from invlex.workloads import comment_regex, json_of_length, random_comment
from invlex.zipper import focus, match_zipper

CSV_HEADER = ["experiment", "n", "variant", "mean_ns", "stddev_ns", "reps"]
DEFAULT_SEED = 42


@dataclass(frozen=True)
class BenchRecord:
    experiment: str
    n: int
    variant: str
    mean_ns: float
    stddev_ns: float
    reps: int


class VariantMismatch(AssertionError):
    pass


def time_call(fn: Callable[[], object], reps: int = 5, warmup: int = 3) -> tuple[float, float]:
    for _ in range(warmup):
        fn()
    samples = []
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        for _ in range(reps):
            t0 = time.perf_counter_ns()
            fn()
            samples.append(time.perf_counter_ns() - t0)
    finally:
        if gc_was_enabled:
            gc.enable()
    sd = statistics.stdev(samples) if len(samples) > 1 else 0.0
    return statistics.fmean(samples), sd


def _check_same(experiment: str, n: int, outputs: dict) -> None:
    values = list(outputs.values())
    if any(v != values[0] for v in values[1:]):
        raise VariantMismatch(f"{experiment} n={n}: variants disagree: {sorted(outputs)}")


def _run(
    experiment: str, n: int, variants: dict[str, Callable[[], object]], reps: int, warmup: int
) -> list[BenchRecord]:
    _check_same(experiment, n, {name: fn() for name, fn in variants.items()})
    out = []
    for name, fn in variants.items():
        mean, sd = time_call(fn, reps, warmup)
        out.append(BenchRecord(experiment, n, name, mean, sd, reps))
    return out


def _naive_memo_match(step):
    def run(r, s):
        for a in s:
            r = step(r, a)
        return r.nullable

    return run


def bench_regex_comment(
    sizes: Sequence[int], reps: int = 5, warmup: int = 3, seed: int = DEFAULT_SEED,
    variants: Optional[Sequence[str]] = None,
) -> list[BenchRecord]:
    rng = random.Random(seed)
    r = comment_regex()
    z = focus(r)
    naive_memo = _naive_memo_match(memoized_derivative())
    caches = DerivationCaches()
    records = []
    for n in sizes:
        s = random_comment(rng, n)
        table = {
            "naive": lambda s=s: match_r(r, s),
            "naive-memo": lambda s=s: naive_memo(r, s),
            "zipper": lambda s=s: match_zipper(z, s),
            "zipper-memo": lambda s=s: match_zipper(z, s, caches.step),
        }
        if variants:
            table = {k: v for k, v in table.items() if k in variants}
        records += _run("regex-comment", n, table, reps, warmup)
    return records


def _tags(tokens) -> tuple:
    return tuple((t.tag, t.characters) for t in tokens[0]), tokens[1]


def bench_json_lex(
    sizes: Sequence[int], reps: int = 5, warmup: int = 3, seed: int = DEFAULT_SEED,
    corpus: Optional[Path] = None,
) -> list[BenchRecord]:
    rng = random.Random(seed)
    if corpus is not None:
        inputs = [p.read_text("utf-8") for p in sorted(Path(corpus).glob("*.json"))]
    else:
        inputs = [json_of_length(rng, n) for n in sizes]
    records = []
    for text in inputs:
        records += _run(
            "json-lex",
            len(text),
            {
                "lex": lambda t=text: _tags(json_lex(t, memoize=False)),
                "lex-memo": lambda t=text: _tags(json_lex(t, DerivationCaches())),
            },
            reps,
            warmup,
        )
    return records


def _lexed(rng: random.Random, n_chars: int) -> tuple[tuple, DerivationCaches]:
    caches = DerivationCaches()
    tokens, suffix = json_lex(json_of_length(rng, n_chars), caches)
    assert not suffix
    return tokens, caches


def bench_rpath_check(
    sizes: Sequence[int], reps: int = 5, warmup: int = 3, seed: int = DEFAULT_SEED
) -> list[BenchRecord]:
    """sep over a lexed token sequence; ``n`` is the token count."""
    rng = random.Random(seed)
    records = []
    for n in sizes:
        tokens, caches = _lexed(rng, n * 4)
        tokens = tokens[:n]
        records += _run(
            "rpath-check",
            len(tokens),
            {
                "rpath": lambda t=tokens: sep_seq(t, JSON_RULES, memoize=False),
                "rpath-memo": lambda t=tokens, c=caches: sep_seq(t, JSON_RULES, c),
            },
            reps,
            warmup,
        )
    return records


def bench_pt_recombine(
    sizes: Sequence[int], reps: int = 5, warmup: int = 3, seed: int = DEFAULT_SEED,
    slices: int = 8,
) -> list[BenchRecord]:
    """Rebuild ``slices`` pieces by PrintableTokens.append versus a full sep recheck."""
    rng = random.Random(seed)
    records = []
    for n in sizes:
        tokens, caches = _lexed(rng, n * 4)
        tokens = tokens[:n]
        whole = PrintableTokens(JSON_RULES, tokens)
        cuts = [round(i * len(tokens) / slices) for i in range(slices + 1)]
        pieces = [whole.slice(a, b) for a, b in zip(cuts, cuts[1:])]

        def by_append(pieces=pieces, c=caches):
            acc = pieces[0]
            for p in pieces[1:]:
                acc = acc.append(p, c)
            return acc.tokens, True

        def full_recheck(pieces=pieces, c=caches):
            joined = tuple(t for p in pieces for t in p.tokens)
            return joined, sep_seq(joined, JSON_RULES, c)

        records += _run(
            "pt-recombine",
            len(tokens),
            {"pt-append": by_append, "full-recheck": full_recheck},
            reps,
            warmup,
        )
    return records


EXPERIMENTS: dict[str, Callable[..., list[BenchRecord]]] = {
    "regex-comment": bench_regex_comment,
    "json-lex": bench_json_lex,
    "rpath-check": bench_rpath_check,
    "pt-recombine": bench_pt_recombine,
}

DEFAULT_SIZES = {
    "regex-comment": list(range(5, 121, 5)),
    "json-lex": [1000, 2000, 4000, 8000],
    "rpath-check": [500, 1000, 2000, 4000],
    "pt-recombine": [1000, 2500, 5000, 10000],
}


class UnknownExperiment(KeyError):
    pass


@dataclass(frozen=True)
class BenchConfig:
    experiment: str
    sizes: Optional[tuple[int, ...]] = None  # None: the experiment's defaults
    reps: int = 5
    warmup: int = 3
    seed: int = DEFAULT_SEED
    corpus: Optional[Path] = None  # json-lex only: lex these *.json files instead

    def __post_init__(self) -> None:
        if self.experiment not in EXPERIMENTS:
            raise UnknownExperiment(self.experiment)
        if self.reps < 5:
            raise ValueError("reps must be at least 5")
        if self.warmup < 0:
            raise ValueError("warmup must be non-negative")
        if self.corpus is not None and self.experiment != "json-lex":
            raise ValueError("a corpus only applies to json-lex")


def run(config: BenchConfig) -> list[BenchRecord]:
    sizes = list(config.sizes) if config.sizes else DEFAULT_SIZES[config.experiment]
    kwargs = {"corpus": Path(config.corpus)} if config.corpus is not None else {}
    fn = EXPERIMENTS[config.experiment]
    return fn(sizes, reps=config.reps, warmup=config.warmup, seed=config.seed, **kwargs)


def write_csv(records: Iterable[BenchRecord], out: TextIO, seed: int) -> None:
    out.write(f"# seed={seed}\n")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for rec in records:
        row = list(astuple(rec))
        row[3] = f"{rec.mean_ns:.1f}"
        row[4] = f"{rec.stddev_ns:.1f}"
        writer.writerow(row)


def read_csv(path: Path) -> list[BenchRecord]:
    with open(path, newline="") as f:
        rows = csv.DictReader(line for line in f if not line.startswith("#"))
        return [
            BenchRecord(
                row["experiment"], int(row["n"]), row["variant"],
                float(row["mean_ns"]), float(row["stddev_ns"]), int(row["reps"]),
            )
            for row in rows
        ]


def median_of_rounds(rounds: Sequence[Sequence[BenchRecord]]) -> list[BenchRecord]:
    """Collapse repeated sweeps into one record per (experiment, n, variant).

    Each record keeps its own mean; across rounds the median mean is kept,
    so a burst of machine noise during one sweep does not bend the trend.
    """
    groups: dict[tuple, list[BenchRecord]] = {}
    for records in rounds:
        for r in records:
            groups.setdefault((r.experiment, r.n, r.variant), []).append(r)
    out = []
    for recs in groups.values():
        mid = sorted(recs, key=lambda r: r.mean_ns)[len(recs) // 2]
        out.append(mid)
    return out


def linear_r2(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Coefficient of determination of the least-squares line through the points."""
    return statistics.correlation(xs, ys) ** 2

