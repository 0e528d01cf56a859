"""
The left-canonical form: delta^r A_1 ... A_k with every consecutive pair of
factors maximally left-weighted.  The pair (r, factor list) is unique per
braid element, which solves the word problem: two words are equal iff their
forms coincide.

Algorithm: each negative band a^-1 is replaced by right_complement(a) *
delta^-1, every delta^-1 is commuted to the front with the rule
X delta^-1 = delta^-1 tau^-1(X), and the resulting positive factor sequence
is normalized by left-to-right insertion, combing each new factor's weight
backwards with left_weight_pair until stable.  Identity factors are dropped
and full delta factors migrate into the leading power.
"""

from __future__ import annotations

import dataclasses
import json
from typing import Iterable

from . import factors as fa
from .words import ArtinWord, BandWord, as_band_word

NCP = fa.NoncrossingPartition


@dataclasses.dataclass(frozen=True)
class LeftCanonicalForm:
    """Normal form delta^power A_1 ... A_k; factors exclude e and delta."""

    n: int
    power: int
    factors: tuple[NCP, ...]

    def __post_init__(self):
        assert all(0 < A.length < self.n - 1 for A in self.factors)
        assert all(
            fa.is_left_weighted(a, b) for a, b in zip(self.factors, self.factors[1:])
        )

    @staticmethod
    def identity(n: int) -> LeftCanonicalForm:
        return LeftCanonicalForm(n, 0, ())

    @staticmethod
    def delta_power(n: int, m: int) -> LeftCanonicalForm:
        return LeftCanonicalForm(n, m if n > 1 else 0, ())

    @property
    def inf(self) -> int:
        return self.power

    @property
    def sup(self) -> int:
        return self.power + len(self.factors)

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        parts = []
        if self.power == 1:
            parts.append("d")
        elif self.power:
            parts.append(f"d^{self.power}")
        parts.extend(str(A) for A in self.factors)
        return " ".join(parts) if parts else "e"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "inf": self.inf,
            "sup": self.sup,
            "factors": [[list(b) for b in A.blocks] for A in self.factors],
        }

    @staticmethod
    def from_json(data: dict) -> LeftCanonicalForm:
        n = data["n"]
        factors = tuple(NCP.from_blocks(n, blocks) for blocks in data["factors"])
        return LeftCanonicalForm(n, data["inf"], factors)

    def key(self) -> str:
        """Canonical string encoding, used for deterministic ordering."""
        return json.dumps(self.to_json(), separators=(",", ":"))


def _normalize(n: int, seq: Iterable[NCP]) -> tuple[int, tuple[NCP, ...]]:
    """Left-greedy normalization of a factor sequence.

    Returns the delta power absorbed from the sequence together with the
    left-weighted factors.  Inserting one factor at a time and combing its
    weight backwards is the standard quadratic normal form algorithm.
    """
    out: list[NCP] = []
    power = 0
    delta_len = n - 1
    for f in seq:
        if f.length == 0:
            continue
        if f.length == delta_len:
            # A full twist commutes past everything already normalized.
            out = [fa.tau(A) for A in out]
            power += 1
            continue
        out.append(f)
        for i in range(len(out) - 2, -1, -1):
            a, b = fa.left_weight_pair(out[i], out[i + 1])
            if a == out[i]:
                break
            out[i], out[i + 1] = a, b
        while out and out[-1].length == 0:
            out.pop()
        while out and out[0].length == delta_len:
            out.pop(0)
            power += 1
    return power, tuple(out)


def _eliminate_negatives(w: BandWord) -> tuple[int, list[NCP]]:
    """Rewrite a word as delta^p * (positive factor sequence).

    Scanning right to left, a positive band prepends its factor and a
    negative band prepends its right complement while pushing one more
    delta^-1 to the front: every factor crossed by a delta power p picks up
    tau^p.
    """
    p = 0
    rev: list[NCP] = []
    for g in reversed(w.letters):
        band = NCP.band(w.n, g.i, g.j)
        if g.sign > 0:
            rev.append(fa.tau(band, p))
        else:
            p -= 1
            rev.append(fa.tau(fa.right_complement(band), p))
    rev.reverse()
    return w.delta_power + p, rev


def lcf(w: BandWord | ArtinWord) -> LeftCanonicalForm:
    """The left-canonical form of the braid element represented by a word."""
    w = as_band_word(w)
    if w.n == 1:
        return LeftCanonicalForm.identity(1)
    p, seq = _eliminate_negatives(w)
    d, fs = _normalize(w.n, seq)
    return LeftCanonicalForm(w.n, p + d, fs)


def inf_sup_len(f: LeftCanonicalForm) -> tuple[int, int, int]:
    return (f.inf, f.sup, f.canonical_length)


def equal(w1: BandWord | ArtinWord, w2: BandWord | ArtinWord) -> bool:
    """Word problem: equality of braid elements."""
    if w1.n != w2.n:
        raise ValueError(f"mismatched strand counts {w1.n} and {w2.n}")
    return lcf(w1) == lcf(w2)


def multiply(f1: LeftCanonicalForm, f2: LeftCanonicalForm) -> LeftCanonicalForm:
    """Normal form of the product f1 * f2."""
    if f1.n != f2.n:
        raise ValueError(f"mismatched strand counts {f1.n} and {f2.n}")
    # delta^r1 F1 delta^r2 F2 = delta^(r1+r2) tau^r2(F1) F2
    seq = [fa.tau(A, f2.power) for A in f1.factors] + list(f2.factors)
    d, fs = _normalize(f1.n, seq)
    return LeftCanonicalForm(f1.n, f1.power + f2.power + d, fs)


def invert(f: LeftCanonicalForm) -> LeftCanonicalForm:
    """Normal form of the inverse."""
    p = -f.power
    rev: list[NCP] = []
    for A in f.factors:  # factors of the inverse appear in reversed order
        p -= 1
        rev.append(fa.tau(fa.right_complement(A), p))
    rev.reverse()
    d, fs = _normalize(f.n, rev)
    return LeftCanonicalForm(f.n, p + d, fs)


def conjugate(f: LeftCanonicalForm, u: BandWord | ArtinWord) -> LeftCanonicalForm:
    """Normal form of u^-1 * f * u."""
    fu = lcf(u)
    return multiply(multiply(invert(fu), f), fu)


def conjugate_by_factor(f: LeftCanonicalForm, u: NCP) -> LeftCanonicalForm:
    """Fast path for conjugation by a single canonical factor."""
    if f.n != u.n:
        raise ValueError(f"mismatched strand counts {f.n} and {u.n}")
    if u.length == 0:
        return f
    # u^-1 delta^r A_1..A_k u = delta^(r-1) tau^(r-1)(rc(u)) A_1..A_k u
    seq = [fa.tau(fa.right_complement(u), f.power - 1), *f.factors, u]
    d, fs = _normalize(f.n, seq)
    return LeftCanonicalForm(f.n, f.power - 1 + d, fs)


def lcf_to_word(f: LeftCanonicalForm) -> BandWord:
    """A word spelling the normal form: leading delta power, then factor words."""
    letters: list = []
    for A in f.factors:
        letters.extend(fa.factor_to_word(A).letters)
    return BandWord(f.n, tuple(letters), f.power)
