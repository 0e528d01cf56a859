"""
Quasipositivity decisions, the reduction operation, shortest words, and
negative band numbers.

A braid is strongly quasipositive (SQP) exactly when its normal form has
inf >= 0, and conjugate to one exactly when the class inf is >= 0.  The
strictly-almost-SQP decision (conjugate to a word with one negative band
but not to a positive word) reads off the class inf and, depending on the
strand count, either the super summit representative (n = 3, 4) or a lazy
summit-set search for a member whose first factor has length n-2.

The reduction trades one leading delta^-1 against the longest positive
factor per step; for n <= 4 the fully reduced word is a shortest word for
the element and its negative letter count is the exact negative band
number.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import Literal

from . import factors as fa
from . import lcf as lc
from .conjugacy import ConjugacyClassSummary, DEFAULT_CONFIG, EngineConfig, iter_ss, iter_sss, summit_representative
from .lcf import LeftCanonicalForm
from .words import ArtinWord, BandWord, as_band_word, nb_of_word, writhe

NCP = fa.NoncrossingPartition

Scope = Literal["word", "element", "class"]


def is_sqp(w: BandWord | ArtinWord) -> bool:
    """Whether the element is strongly quasipositive: inf >= 0."""
    return lc.lcf(w).inf >= 0


def is_sqp_conjugate(w: BandWord | ArtinWord, config: EngineConfig = DEFAULT_CONFIG) -> bool:
    """Whether the element is conjugate to a strongly quasipositive braid."""
    return summit_representative(w, config).class_inf >= 0


def is_strict_asqp_conjugate(
    w: BandWord | ArtinWord, config: EngineConfig = DEFAULT_CONFIG
) -> bool:
    """Conjugate to an almost-SQP braid (one negative band) but not to a SQP braid.

    Class inf must be exactly -1.  For n = 3 and n = 4 the super summit
    representative decides; for n >= 5 the summit set is searched lazily for
    a member whose normal form starts with a factor of length n-2.
    """
    w = as_band_word(w)
    if w.n < 3:
        raise ValueError("defined for n >= 3")
    summary = summit_representative(w, config)
    if summary.class_inf != -1:
        return False
    if w.n == 3:
        # Every nontrivial factor has length 1 = n-2; a first factor just has to exist.
        return summary.class_len >= 1
    if w.n == 4:
        return any(A.length == 2 for A in summary.representative.factors)
    return _ss_witness(summary, config)


def _ss_witness(summary: ConjugacyClassSummary, config: EngineConfig) -> bool:
    n = summary.representative.n
    return any(
        member.factors and member.factors[0].length == n - 2
        for member in iter_ss(summary.representative, config)
    )


def strict_asqp_general(
    w: BandWord | ArtinWord, config: EngineConfig = DEFAULT_CONFIG
) -> bool:
    """The summit-set criterion without the n = 3, 4 shortcuts (for cross-checks)."""
    summary = summit_representative(w, config)
    if summary.class_inf != -1:
        return False
    return _ss_witness(summary, config)


@dataclasses.dataclass(frozen=True)
class ReducedForm:
    """A word delta^power W_1 ... W_s whose W_i are signed canonical factors.

    Terminal forms have power >= 0, or power < 0 with no positive factor
    left.  `choices` records the factor index picked at each reduction step.
    """

    n: int
    power: int
    factors: tuple[tuple[NCP, int], ...]
    choices: tuple[int, ...] = ()

    def __post_init__(self):
        assert all(s in (1, -1) and 0 < A.length < self.n - 1 for A, s in self.factors)

    @staticmethod
    def from_lcf(f: LeftCanonicalForm) -> ReducedForm:
        return ReducedForm(f.n, f.power, tuple((A, 1) for A in f.factors))

    @property
    def is_terminal(self) -> bool:
        return self.power >= 0 or all(s < 0 for _, s in self.factors)

    def to_word(self) -> BandWord:
        """Flatten to a concrete band word (delta powers expanded into letters)."""
        word = BandWord(self.n, (), self.power).expand_delta()
        letters = list(word.letters)
        for A, s in self.factors:
            aw = fa.factor_to_word(A)
            if s > 0:
                letters.extend(aw.letters)
            else:
                letters.extend(g.inverse() for g in reversed(aw.letters))
        return BandWord(self.n, tuple(letters), 0)

    def __str__(self) -> str:
        parts = []
        if self.power == 1:
            parts.append("d")
        elif self.power:
            parts.append(f"d^{self.power}")
        parts.extend(str(A) + ("" if s > 0 else "^-1") for A, s in self.factors)
        return " ".join(parts) if parts else "e"


def red_step(rf: ReducedForm) -> ReducedForm:
    """One reduction step: cancel one delta^-1 against a longest positive factor.

    The chosen factor W_k is replaced by the inverse of its right complement
    and every factor before it picks up tau.  Ties between equal-length
    positive factors go to the largest index, which reproduces the fixed
    reference reduction of delta^-2 (a3a2)(a4a3) a4 b1 b2.
    """
    if rf.power >= 0:
        raise ValueError("reduction step requires a negative delta power")
    positives = [(A.length, idx) for idx, (A, s) in enumerate(rf.factors) if s > 0]
    if not positives:
        raise ValueError("reduction step requires a positive factor")
    _, k = max(positives)
    new_factors = tuple(
        (fa.tau(A), s) if idx < k else
        ((fa.right_complement(A), -1) if idx == k else (A, s))
        for idx, (A, s) in enumerate(rf.factors)
    )
    return ReducedForm(rf.n, rf.power + 1, new_factors, rf.choices + (k,))


def red_full(f: LeftCanonicalForm) -> ReducedForm:
    """Iterate red_step from a normal form until terminal."""
    rf = ReducedForm.from_lcf(f)
    while not rf.is_terminal:
        rf = red_step(rf)
    return rf


def shortest_word(
    w: BandWord | ArtinWord,
    scope: Scope = "element",
    config: EngineConfig = DEFAULT_CONFIG,
) -> BandWord:
    """A word of minimal band-generator length (n <= 4 only).

    scope="element" minimizes over words for the element; scope="class"
    minimizes over the whole conjugacy class by reducing a super summit
    representative.
    """
    w = as_band_word(w)
    if w.n > 4:
        raise ValueError("shortest words are only computed for n <= 4")
    if scope == "element":
        return red_full(lc.lcf(w)).to_word()
    if scope == "class":
        return red_full(summit_representative(w, config).representative).to_word()
    raise ValueError(f"unsupported scope {scope!r}")


@dataclasses.dataclass(frozen=True)
class NbReport:
    """Bounds (and, when available, the exact value) of the negative band number."""

    lower: int
    upper: int
    exact: int | None
    witness_word: BandWord
    ito_bound: Fraction | None = None

    def __post_init__(self):
        assert self.lower <= self.upper
        assert self.exact is None or self.lower <= self.exact <= self.upper
        assert nb_of_word(self.witness_word) == self.upper
        assert self.ito_bound is None or self.upper <= self.ito_bound

    def to_json(self) -> dict:
        data = {
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "witness": str(self.witness_word),
        }
        if self.ito_bound is not None:
            data["ito_bound"] = str(self.ito_bound)
        return data


def _averaged_upper_bound(f: LeftCanonicalForm) -> Fraction | None:
    # (n-1)r - (r/k) * sum ||A_i|| for inf = -r < 0 < sup; the reduction
    # replaces the r longest factors, so its negative count never exceeds it.
    if not (f.inf < 0 < f.sup):
        return None
    r = -f.inf
    k = f.canonical_length
    total = sum(A.length for A in f.factors)
    return Fraction((f.n - 1) * r * k - r * total, k)


def _nb_of_form(f: LeftCanonicalForm) -> tuple[int, int, int | None, BandWord, Fraction | None]:
    n = f.n
    witness = red_full(f).to_word()
    upper = nb_of_word(witness)
    lower = max(0, -f.inf)
    exact = upper if n <= 4 else None
    if n == 3:
        # Closed forms for three strands.
        if f.inf < 0 < f.sup:
            assert upper == -f.inf
        elif f.inf < 0 and f.sup <= 0:
            assert upper == -(f.power * (n - 1) + sum(A.length for A in f.factors))
    return lower, upper, exact, witness, _averaged_upper_bound(f)


def nb(
    w: BandWord | ArtinWord,
    scope: Scope = "element",
    config: EngineConfig = DEFAULT_CONFIG,
) -> NbReport:
    """Negative band number of a word, an element, or a conjugacy class.

    scope="word" counts letters.  scope="element" and scope="class" bound the
    minimum over representatives: lower from |inf| (resp. |class inf|), upper
    from the reduced form, exact for n <= 4 where the reduction is optimal.
    """
    w = as_band_word(w)
    if scope == "word":
        exact = nb_of_word(w)
        return NbReport(exact, exact, exact, w)
    if scope == "element":
        return NbReport(*_nb_of_form(lc.lcf(w)))
    if scope == "class":
        return NbReport(*_nb_of_form(summit_representative(w, config).representative))
    raise ValueError(f"unsupported scope {scope!r}")


def tunnel_stab_accounting(stats: tuple[int, int, int], sign: int) -> tuple[int, int, int]:
    """Band bookkeeping of a tunnel stabilization on (strands, pos, neg) counts.

    A positive stabilization adds a strand and deletes a negative band, a
    negative one adds a strand and deletes a positive band; either way the
    Euler characteristic strands - bands rises by 2.
    """
    strands, pos, neg = stats
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if sign > 0:
        if neg < 1:
            raise ValueError("positive stabilization needs a negative band")
        return (strands + 1, pos, neg - 1)
    if pos < 1:
        raise ValueError("negative stabilization needs a positive band")
    return (strands + 1, pos - 1, neg)


def classify(w: BandWord | ArtinWord, config: EngineConfig = DEFAULT_CONFIG) -> str:
    """Trichotomy by conjugacy class: 'sqp', 'strict_asqp', or 'neither'."""
    if is_sqp_conjugate(w, config):
        return "sqp"
    if is_strict_asqp_conjugate(w, config):
        return "strict_asqp"
    return "neither"


@dataclasses.dataclass(frozen=True)
class ConjectureRecord:
    """One data point of the n >= 5 super-summit-sufficiency experiment."""

    word: BandWord
    strict_asqp: bool
    sss_has_long_factor: bool

    @property
    def is_counterexample(self) -> bool:
        return self.strict_asqp and not self.sss_has_long_factor


def asqp_sss_experiment(
    words: list[BandWord], config: EngineConfig = DEFAULT_CONFIG
) -> list[ConjectureRecord]:
    """Probe whether strictly-ASQP classes always show a length-(n-2) factor
    somewhere in the super summit set.

    This is exercised experimentally and never used as a decision rule; a
    record with is_counterexample=True falsifies the stronger criterion.
    """
    out = []
    for w in words:
        summary = summit_representative(w, config)
        if summary.class_inf != -1:
            continue
        strict = is_strict_asqp_conjugate(w, config)
        witness = any(
            any(A.length == w.n - 2 for A in member.factors)
            for member in iter_sss(summary.representative, config)
        )
        out.append(ConjectureRecord(w, strict, witness))
    return out
