"""
Conjugacy machinery: cycling, decycling, summit representatives, super
summit sets, summit sets, and the conjugacy decision.

Cycling moves the first canonical factor to the end (twisted by tau^-r) and
decycling moves the last to the front; neither can lower inf or raise sup,
so iterating cycling until inf stops improving and then decycling until sup
stops improving lands on a representative realizing the conjugacy-class
extremes.  The super summit set (conjugates of minimal canonical length)
and the summit set (conjugates of maximal inf) are then closed out by
breadth-first search, conjugating members by all nontrivial canonical
factors and keeping those that still meet the membership criterion.
"""

from __future__ import annotations

import dataclasses
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Iterator

from . import factors as fa
from . import lcf as lc
from .lcf import LeftCanonicalForm
from .words import ArtinWord, BandWord, as_band_word, permutation_of, writhe


class IterationLimitError(RuntimeError):
    """Cycling/decycling exceeded the configured step cap; carries the trace."""

    def __init__(self, message: str, trace: list[tuple[int, int]]):
        super().__init__(f"{message}; (inf, sup) trace: {trace}")
        self.trace = trace


class SizeLimitError(RuntimeError):
    """A summit-set closure grew past the configured size guard."""


@dataclasses.dataclass(frozen=True)
class EngineConfig:
    max_sss_size: int = 10**6
    max_ss_size: int = 10**6
    max_cycling_steps: int = 10_000
    threads: int = 1


DEFAULT_CONFIG = EngineConfig()


@dataclasses.dataclass(frozen=True)
class ConjugacyClassSummary:
    class_inf: int
    class_sup: int
    class_len: int
    representative: LeftCanonicalForm

    def __post_init__(self):
        assert self.class_len == self.class_sup - self.class_inf
        assert self.representative.inf == self.class_inf
        assert self.representative.sup == self.class_sup


def cycling(f: LeftCanonicalForm) -> LeftCanonicalForm:
    """Conjugate by tau^-r(A_1): delta^r A_2 ... A_k tau^-r(A_1)."""
    if not f.factors:
        return f
    seq = [*f.factors[1:], fa.tau(f.factors[0], -f.power)]
    d, fs = lc._normalize(f.n, seq)
    return LeftCanonicalForm(f.n, f.power + d, fs)


def decycling(f: LeftCanonicalForm) -> LeftCanonicalForm:
    """Conjugate by A_k^-1: delta^r tau^r(A_k) A_1 ... A_{k-1}."""
    if not f.factors:
        return f
    seq = [fa.tau(f.factors[-1], f.power), *f.factors[:-1]]
    d, fs = lc._normalize(f.n, seq)
    return LeftCanonicalForm(f.n, f.power + d, fs)


def _stabilize(f: LeftCanonicalForm, step, improved, config: EngineConfig) -> LeftCanonicalForm:
    # Iterate `step` until `improved` has failed for a full window of
    # consecutive steps.  The window n(n-1)/2 is a conservative bound on how
    # long an orbit can wander before the next improvement.
    window = max(1, f.n * (f.n - 1) // 2)
    trace = [(f.inf, f.sup)]
    since_improve = 0
    steps = 0
    while since_improve < window:
        nxt = step(f)
        steps += 1
        if steps > config.max_cycling_steps:
            raise IterationLimitError(
                f"exceeded max_cycling_steps={config.max_cycling_steps}", trace)
        since_improve = 0 if improved(f, nxt) else since_improve + 1
        f = nxt
        trace.append((f.inf, f.sup))
    return f


def summit_representative(
    w: BandWord | ArtinWord | LeftCanonicalForm,
    config: EngineConfig = DEFAULT_CONFIG,
) -> ConjugacyClassSummary:
    """A super summit representative, found by cycling then decycling."""
    f = w if isinstance(w, LeftCanonicalForm) else lc.lcf(w)
    f = _stabilize(f, cycling, lambda a, b: b.inf > a.inf, config)
    f = _stabilize(f, decycling, lambda a, b: b.sup < a.sup, config)
    return ConjugacyClassSummary(f.inf, f.sup, f.canonical_length, f)


def _nontrivial_factors(n: int) -> tuple[fa.NoncrossingPartition, ...]:
    return tuple(F for F in fa.enumerate_factors(n) if F.length > 0)


def _closure(
    start: LeftCanonicalForm,
    keep,
    max_size: int,
    config: EngineConfig,
) -> Iterator[LeftCanonicalForm]:
    """BFS over conjugation by nontrivial canonical factors, yielding members."""
    conjugators = _nontrivial_factors(start.n)
    seen = {start}
    frontier = [start]
    yield start

    def expand(f: LeftCanonicalForm) -> list[LeftCanonicalForm]:
        return [lc.conjugate_by_factor(f, u) for u in conjugators]

    pool = ThreadPoolExecutor(config.threads) if config.threads > 1 else None
    try:
        while frontier:
            batches: Iterable[list[LeftCanonicalForm]]
            if pool is not None:
                batches = pool.map(expand, frontier)
            else:
                batches = map(expand, frontier)
            frontier = []
            for batch in batches:
                for g in batch:
                    if g in seen or not keep(g):
                        continue
                    seen.add(g)
                    if len(seen) > max_size:
                        raise SizeLimitError(
                            f"summit-set closure exceeded size guard {max_size}")
                    frontier.append(g)
                    yield g
    finally:
        if pool is not None:
            pool.shutdown(wait=False)


def iter_sss(
    w: BandWord | ArtinWord | LeftCanonicalForm,
    config: EngineConfig = DEFAULT_CONFIG,
) -> Iterator[LeftCanonicalForm]:
    summary = summit_representative(w, config)
    ci, cs = summary.class_inf, summary.class_sup
    return _closure(summary.representative,
                    lambda g: g.inf == ci and g.sup == cs,
                    config.max_sss_size, config)


def sss(
    w: BandWord | ArtinWord | LeftCanonicalForm,
    config: EngineConfig = DEFAULT_CONFIG,
) -> frozenset[LeftCanonicalForm]:
    """The super summit set: conjugates of minimal canonical length."""
    return frozenset(iter_sss(w, config))


def iter_ss(
    w: BandWord | ArtinWord | LeftCanonicalForm,
    config: EngineConfig = DEFAULT_CONFIG,
) -> Iterator[LeftCanonicalForm]:
    summary = summit_representative(w, config)
    ci = summary.class_inf
    return _closure(summary.representative,
                    lambda g: g.inf == ci,
                    config.max_ss_size, config)


def ss(
    w: BandWord | ArtinWord | LeftCanonicalForm,
    config: EngineConfig = DEFAULT_CONFIG,
) -> frozenset[LeftCanonicalForm]:
    """The summit set: conjugates of maximal inf (finite; sup is writhe-bounded)."""
    return frozenset(iter_ss(w, config))


def are_conjugate(
    w1: BandWord | ArtinWord,
    w2: BandWord | ArtinWord,
    config: EngineConfig = DEFAULT_CONFIG,
) -> bool:
    """Conjugacy decision: the super summit sets intersect iff they coincide."""
    w1, w2 = as_band_word(w1), as_band_word(w2)
    if w1.n != w2.n:
        raise ValueError(f"mismatched strand counts {w1.n} and {w2.n}")
    f1, f2 = lc.lcf(w1), lc.lcf(w2)
    if f1 == f2:
        return True
    # Cheap conjugacy invariants decide many non-conjugate pairs outright.
    if writhe(w1) != writhe(w2):
        return False
    if permutation_of(w1).cycle_type() != permutation_of(w2).cycle_type():
        return False
    s1 = summit_representative(f1, config)
    s2 = summit_representative(f2, config)
    if (s1.class_inf, s1.class_sup) != (s2.class_inf, s2.class_sup):
        return False
    target = s1.representative
    return any(member == target for member in iter_sss(s2.representative, config))
