"""
Invariant computations for the link family L_n used to separate the
negative band number of a class from that of its closure.

L_n is the closure of the B_{n+3} word

    W_n = A(1,3) g_1 g_2 ... g_n,   g_j = (a(1,2) a(2,3+j) A(1,2) A(1,3))^2,

whose non-unknot component K_n is also the closure of the B_{n+2} word

    W'_n = A(1,2) g'_1 ... g'_n,   g'_j = (a(1,2+j) A(1,2))^2.

The module computes:

- the Alexander polynomial of L_n from the family's Seifert matrix (a block
  bidiagonal matrix assembled from two fixed 5x5 blocks), cross-checked
  against a reduced-Burau determinant formula on the braid word;
- the HOMFLY-PT polynomial of K_n by recursive skein resolution of one
  positive crossing per g'-syllable, reducing to closures of two-strand
  negative twists, and the resulting Morton-Franks-Williams braid index
  bound (d+ - d-)/2 + 1;
- Euler characteristic / self-linking / defect arithmetic.

The skein relation is used with the convention

    v^-1 P(K+) + v P(K-) = z P(K0),   P(unknot) = 1,

(note the plus sign; SKEIN_SIGN toggles the usual minus-sign convention for
the two-strand computations).  The recursion for K_n,

    Q(m, j) = v^2 Q(m-1, j+1) + v z Q(m-1, j+2),
    Q(0, j) = P(closure of two-strand negative twist sigma^-(j+1)),

is taken verbatim from its source alongside that convention, and is
cross-checked against its closed binomial expansion; all degree claims are
insensitive to the relative sign of the two terms.
"""

from __future__ import annotations

import dataclasses
import functools
import json
import math
from fractions import Fraction

from . import positivity as po
from .laurent import IntMatrix, LaurentPoly1, LaurentPoly2, det_int, interpolate_integer_poly
from .words import ArtinWord, BandGenerator, BandWord, as_band_word, band_to_artin, nb_of_word, self_linking

PAPER_SIGN = 1
STANDARD_SIGN = -1


def ln_words(n: int) -> tuple[BandWord, BandWord]:
    """The words W_n (in B_{n+3}, 8n+1 letters) and W'_n (in B_{n+2}, 4n+1 letters)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    strands = n + 3
    letters = [BandGenerator(1, 3, -1)]
    for j in range(1, n + 1):
        syllable = [
            BandGenerator(1, 2, 1),
            BandGenerator(2, 3 + j, 1),
            BandGenerator(1, 2, -1),
            BandGenerator(1, 3, -1),
        ]
        letters.extend(syllable * 2)
    w = BandWord(strands, tuple(letters), 0)

    strands2 = n + 2
    letters2 = [BandGenerator(1, 2, -1)]
    for j in range(1, n + 1):
        syllable2 = [BandGenerator(1, 2 + j, 1), BandGenerator(1, 2, -1)]
        letters2.extend(syllable2 * 2)
    w2 = BandWord(strands2, tuple(letters2), 0)
    return w, w2


_SEIFERT_B = (
    (1, 0, -1, -1, -1),
    (0, 0, 0, 1, 0),
    (-1, 1, 0, 0, 1),
    (0, 1, 0, -1, 0),
    (0, 0, 1, 1, 1),
)
_SEIFERT_C = (
    (0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0),
    (-1, 0, 0, 0, 0),
)


def seifert_matrix_Ln(n: int) -> IntMatrix:
    """The 5n x 5n Seifert matrix of L_n: B blocks on the diagonal, C above."""
    if n < 1:
        raise ValueError("n must be >= 1")
    size = 5 * n
    rows = [[0] * size for _ in range(size)]
    for b in range(n):
        for r in range(5):
            for c in range(5):
                rows[5 * b + r][5 * b + c] = _SEIFERT_B[r][c]
                if b + 1 < n:
                    rows[5 * b + r][5 * (b + 1) + c] = _SEIFERT_C[r][c]
    return IntMatrix.from_rows(rows)


def alexander_from_seifert(m: IntMatrix) -> LaurentPoly1:
    """det(M - t M^T), computed exactly by integer evaluation and interpolation."""
    d = m.dim
    mt = m.transpose()
    points = []
    for t0 in range(d + 1):
        rows = [
            [m.rows[i][j] - t0 * mt.rows[i][j] for j in range(d)]
            for i in range(d)
        ]
        points.append((t0, det_int(rows)))
    return interpolate_integer_poly(points)


def _burau_entry_matrices(n: int) -> dict[tuple[int, int], list[list[LaurentPoly1]]]:
    one = LaurentPoly1.one()
    t = LaurentPoly1.monomial(1, 1)
    tinv = LaurentPoly1.monomial(1, -1)
    out = {}
    for i in range(1, n):
        for sign in (1, -1):
            rows = [[one if r == c else LaurentPoly1.zero() for c in range(n - 1)]
                    for r in range(n - 1)]
            r = i - 1
            if sign > 0:
                rows[r][r] = -t
                if r > 0:
                    rows[r][r - 1] = t
                if r + 1 < n - 1:
                    rows[r][r + 1] = one
            else:
                rows[r][r] = -tinv
                if r > 0:
                    rows[r][r - 1] = one
                if r + 1 < n - 1:
                    rows[r][r + 1] = tinv
            out[(i, sign)] = rows
    return out


def _mat_mul(a, b):
    size = len(a)
    return [
        [sum((a[i][k] * b[k][j] for k in range(size)), LaurentPoly1.zero())
         for j in range(size)]
        for i in range(size)
    ]


def reduced_burau(w: BandWord | ArtinWord) -> list[list[LaurentPoly1]]:
    """The (n-1)x(n-1) reduced Burau matrix of a word."""
    w = as_band_word(w).expand_delta()
    n = w.n
    gens = _burau_entry_matrices(n)
    size = n - 1
    acc = [[LaurentPoly1.one() if i == j else LaurentPoly1.zero() for j in range(size)]
           for i in range(size)]
    for g in w.letters:
        for i, s in band_to_artin(g, n).letters:
            acc = _mat_mul(acc, gens[(i, s)])
    return acc


def _det_poly_matrix(rows: list[list[LaurentPoly1]]) -> LaurentPoly1:
    # Shift all entries to plain polynomials, evaluate at integers, interpolate,
    # then undo the global t^shift.
    size = len(rows)
    if size == 0:
        return LaurentPoly1.one()
    lows = [e.min_exp for row in rows for e in row if not e.is_zero()]
    highs = [e.max_exp for row in rows for e in row if not e.is_zero()]
    shift = -min(min(lows), 0)
    deg_bound = size * (max(highs) + shift) + 1
    points = []
    for t0 in range(1, deg_bound + 1):
        scale = Fraction(t0) ** shift
        vals = [[(e(t0) * scale) for e in row] for row in rows]
        as_int = [[int(v) for v in row] for row in vals]
        assert all(v == iv for r, ri in zip(vals, as_int) for v, iv in zip(r, ri))
        points.append((t0, det_int(as_int)))
    return interpolate_integer_poly(points).shift(-shift * size)


def alexander_from_burau(w: BandWord | ArtinWord) -> LaurentPoly1:
    """Alexander polynomial of the closure, up to units +-t^k.

    Uses det(I - reduced Burau) = unit * Alexander * (1 - t^n)/(1 - t); the
    division is exact and asserted.  Serves as an independent oracle for the
    Seifert-matrix route.
    """
    w = as_band_word(w)
    n = w.n
    burau = reduced_burau(w)
    size = n - 1
    delta_m = [
        [(LaurentPoly1.one() if i == j else LaurentPoly1.zero()) - burau[i][j]
         for j in range(size)]
        for i in range(size)
    ]
    det = _det_poly_matrix(delta_m)
    cyclotomic_like = LaurentPoly1.from_dict({e: 1 for e in range(n)})
    return det.div_exact(cyclotomic_like).unit_normalize()


@functools.lru_cache(maxsize=None)
def homfly_neg_torus2(k: int, sign: int = PAPER_SIGN) -> LaurentPoly2:
    """P of the closure of the two-strand braid sigma^-k, by the skein recursion.

    Bases: the unknot (k = 1) is 1 and the two-component unlink (k = 0) is
    (v + sign * v^-1) / z.  For k >= 2 the skein at one crossing gives
    P(sigma^-k) = sign * (v^-1 z P(sigma^-(k-1)) - v^-2 P(sigma^-(k-2))).
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if sign not in (PAPER_SIGN, STANDARD_SIGN):
        raise ValueError("sign must be +1 or -1")
    if k == 0:
        return LaurentPoly2.from_dict({(1, -1): sign, (-1, -1): 1})
    if k == 1:
        return LaurentPoly2.one()
    term1 = LaurentPoly2.monomial(sign, -1, 1) * homfly_neg_torus2(k - 1, sign)
    term2 = LaurentPoly2.monomial(sign, -2, 0) * homfly_neg_torus2(k - 2, sign)
    return term1 - term2


@functools.lru_cache(maxsize=None)
def _homfly_Q(m: int, j: int) -> LaurentPoly2:
    if m == 0:
        return homfly_neg_torus2(j + 1)
    return (LaurentPoly2.monomial(1, 2, 0) * _homfly_Q(m - 1, j + 1)
            + LaurentPoly2.monomial(1, 1, 1) * _homfly_Q(m - 1, j + 2))


def homfly_Kn(n: int) -> LaurentPoly2:
    """HOMFLY-PT polynomial of K_n via the syllable-by-syllable skein recursion."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _homfly_Q(n, 0)


def homfly_Kn_closed_form(n: int) -> LaurentPoly2:
    """The binomial expansion of the recursion (cross-check; sum starts at i=0)."""
    out = LaurentPoly2.zero()
    for i in range(n + 1):
        coeff = LaurentPoly2.monomial(_binom(n, i), 2 * n - i, i)
        out = out + coeff * homfly_neg_torus2(n + 1 + i)
    return out


def _binom(n: int, k: int) -> int:
    return math.comb(n, k)


def mfw_bound(p: LaurentPoly2) -> int:
    """Morton-Franks-Williams braid index lower bound: (d+ - d-)/2 + 1."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    lo, hi = p.v_degrees()
    if (hi - lo) % 2:
        raise ValueError("odd v-degree span; not a link polynomial")
    return (hi - lo) // 2 + 1


def bennequin_chi(w: BandWord | ArtinWord) -> int:
    """Euler characteristic of the surface of the word: strands minus bands."""
    w = as_band_word(w).expand_delta()
    return w.n - len(w.letters)


def defect(chi: int, sl: int) -> int:
    """Half of (-chi - sl); an integer whenever chi and sl belong to one link."""
    if (-chi - sl) % 2:
        raise ValueError("parity violation: -chi - sl must be even")
    return (-chi - sl) // 2


@dataclasses.dataclass(frozen=True)
class LnReport:
    """All computed values and verdicts for one member of the family."""

    n: int
    mfw_bound: int
    braid_index: int
    degree_span: int
    chi: int
    word_chi: int
    alexander_at_zero: int
    sl: int
    defect: int
    nb_word: int
    nb_upper: int
    nb_lower: int
    verdicts: dict[str, bool]
    conditional: tuple[str, ...]

    @property
    def all_ok(self) -> bool:
        return all(self.verdicts.values())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "mfw_bound": self.mfw_bound,
            "braid_index": self.braid_index,
            "degree_span": self.degree_span,
            "chi": self.chi,
            "word_chi": self.word_chi,
            "alexander_at_zero": self.alexander_at_zero,
            "sl": self.sl,
            "defect": self.defect,
            "nb_word": self.nb_word,
            "nb_upper": self.nb_upper,
            "nb_lower": self.nb_lower,
            "verdicts": self.verdicts,
            "conditional": list(self.conditional),
            "all_ok": self.all_ok,
        }


def verify_Ln_claims(n: int, max_n: int = 6) -> LnReport:
    """Check every numeric claim about L_n and assemble a report.

    The braid-index and negative-band verdicts combine: the two-variable
    polynomial bound pins the braid index of K_n (hence of L_n), the
    Alexander degree span pins chi, and tunnel-stabilization bookkeeping
    turns the word's 4n+1 negative bands into the class upper bound 3n+1
    that meets the defect lower bound.  The final verdict equating the
    maximal self-linking number with the word's value is conditional on the
    generalized Jones conjecture and flagged as such.
    """
    if not 1 <= n <= max_n:
        raise ValueError(f"n must be within 1..{max_n}")
    w, _w2 = ln_words(n)

    p = homfly_Kn(n)
    bound = mfw_bound(p)
    braid_index = bound + 1  # L_n = K_n plus a split-free unknot strand

    alex = alexander_from_seifert(seifert_matrix_Ln(n))
    span = alex.degree_span
    at_zero = alex.coeff(0)
    det_b = det_int([list(r) for r in _SEIFERT_B])

    chi = -5 * n + 2
    word_chi = bennequin_chi(w)
    sl = self_linking(w)
    dft = defect(chi, sl)

    nb_word = nb_of_word(w)
    stats = (w.n, len(w.letters) - nb_word, nb_word)
    for _ in range(n):
        stats = po.tunnel_stab_accounting(stats, +1)
    nb_upper = stats[2]
    nb_lower = dft  # defect lower-bounds the negative band number of the link

    verdicts = {
        "mfw_bound": bound == n + 2,
        "braid_index": braid_index == n + 3,
        "degree_span": span == 5 * n,
        "alexander_at_zero": at_zero == 1,
        "seifert_block_det": det_b == 1,
        "top_coefficient": alex.coeff(5 * n) == 1,
        "chi": span == 5 * n and at_zero == 1 and chi == -(span) + 2,
        "self_linking": sl == -(n + 4),
        "defect": dft == 3 * n + 1,
        "nb_word": nb_word == 4 * n + 1,
        "tunnel_accounting": nb_upper == 3 * n + 1
        and stats[0] == 2 * n + 3
        and bennequin_chi_after_stabs(word_chi, n) == chi,
        "nb_equals_defect": nb_lower == nb_upper == 3 * n + 1,
        "stabilization_gap": nb_word - nb_upper == n,
    }
    conditional = ("nb_equals_defect", "stabilization_gap")
    return LnReport(
        n=n,
        mfw_bound=bound,
        braid_index=braid_index,
        degree_span=span,
        chi=chi,
        word_chi=word_chi,
        alexander_at_zero=at_zero,
        sl=sl,
        defect=dft,
        nb_word=nb_word,
        nb_upper=nb_upper,
        nb_lower=nb_lower,
        verdicts=verdicts,
        conditional=conditional,
    )


def bennequin_chi_after_stabs(word_chi: int, stabs: int) -> int:
    """Each tunnel stabilization raises the surface Euler characteristic by 2."""
    return word_chi + 2 * stabs


def format_poly2(p: LaurentPoly2) -> str:
    """Sparse text form: 'coef v^a z^b' terms sorted by (a, b)."""
    if p.is_zero():
        return "0"
    terms = sorted(p.coeffs)
    return " + ".join(f"{c} v^{v} z^{z}" for (v, z), c in terms)


def format_poly1(p: LaurentPoly1) -> str:
    """Sparse text form: 'coef t^a' terms sorted by a."""
    return str(p)


def report_json(report: LnReport) -> str:
    return json.dumps(report.to_json())
