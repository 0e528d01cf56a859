"""
Words in the braid group B_n written in band generators.

Conventions used throughout the package:

- Strands are numbered 1..n.  The band generator a(i,j), 1 <= i < j <= n,
  swaps strands i and j in front of all intermediate strands; it is a
  *positive* band, its inverse A(i,j) a *negative* band.
- Words act left to right.  Each band acts on strand positions as the
  transposition (i j), so the permutation of the descending word
  s(n-1) ... s(1) is the cycle 1 -> 2 -> ... -> n -> 1.  That element is
  called delta below.
- A BandWord may carry a leading power of delta as syntactic sugar; all
  other letters are concrete band generators.

Text grammar (bit-exact, shared with the CLI):

    word  = "B" n ":" token*
    token = ("a(i,j)" | "A(i,j)" | "s(i)" | "S(i)" | "d" | "D") ["^" int]

Lowercase tokens are positive, uppercase negative, and an exponent repeats
the token (a negative exponent also inverts it).  "d" stands for delta; a
leading run of d-tokens is stored as the word's delta power, while a
d-token appearing after any letter is expanded into explicit bands.
Whitespace between tokens is optional.
"""

from __future__ import annotations

import dataclasses
import re


class WordSyntaxError(ValueError):
    """Raised by parse_word; carries the character position of the error."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclasses.dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n}; images[i-1] is the image of i."""

    images: tuple[int, ...]

    def __post_init__(self):
        assert sorted(self.images) == list(range(1, len(self.images) + 1))

    @staticmethod
    def identity(n: int) -> Permutation:
        return Permutation(tuple(range(1, n + 1)))

    @staticmethod
    def transposition(n: int, i: int, j: int) -> Permutation:
        assert 1 <= i < j <= n
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return Permutation(tuple(images))

    @staticmethod
    def rotation(n: int, k: int) -> Permutation:
        """The k-th power of the cycle 1 -> 2 -> ... -> n -> 1."""
        return Permutation(tuple((i + k) % n + 1 for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def then(self, other: Permutation) -> Permutation:
        """The permutation of a concatenated word: apply self, then other."""
        if self.n != other.n:
            raise ValueError("mismatched sizes")
        return Permutation(tuple(other.images[x - 1] for x in self.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, x in enumerate(self.images):
            inv[x - 1] = i + 1
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(x == i + 1 for i, x in enumerate(self.images))

    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """Disjoint cycles, each starting at its minimum, sorted by minimum."""
        seen = [False] * self.n
        out = []
        for i in range(1, self.n + 1):
            if seen[i - 1]:
                continue
            cycle = []
            pos = i
            while not seen[pos - 1]:
                seen[pos - 1] = True
                cycle.append(pos)
                pos = self.images[pos - 1]
            out.append(tuple(cycle))
        return tuple(out)

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))


@dataclasses.dataclass(frozen=True)
class BandGenerator:
    """A signed band a(i,j)^sign with 1 <= i < j and sign = +1 or -1."""

    i: int
    j: int
    sign: int

    def __post_init__(self):
        assert 1 <= self.i < self.j
        assert self.sign in (1, -1)

    def inverse(self) -> BandGenerator:
        return BandGenerator(self.i, self.j, -self.sign)

    def __str__(self) -> str:
        return f"{'a' if self.sign > 0 else 'A'}({self.i},{self.j})"


@dataclasses.dataclass(frozen=True)
class BandWord:
    """A word in band generators on n strands, with optional leading delta power."""

    n: int
    letters: tuple[BandGenerator, ...] = ()
    delta_power: int = 0

    def __post_init__(self):
        assert self.n >= 1
        assert all(g.j <= self.n for g in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BandWord) -> BandWord:
        if not isinstance(other, BandWord):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("mismatched strand counts")
        if other.delta_power and (self.letters or self.delta_power):
            other = other.expand_delta()
        return BandWord(self.n, self.letters + other.letters,
                        self.delta_power + other.delta_power)

    def expand_delta(self) -> BandWord:
        """Replace the leading delta power by explicit band letters."""
        if self.delta_power == 0:
            return self
        if self.delta_power > 0:
            head = delta_word(self.n).letters * self.delta_power
        else:
            inv = tuple(g.inverse() for g in reversed(delta_word(self.n).letters))
            head = inv * (-self.delta_power)
        return BandWord(self.n, head + self.letters, 0)

    def inverse(self) -> BandWord:
        w = self.expand_delta()
        return BandWord(self.n, tuple(g.inverse() for g in reversed(w.letters)), 0)

    def __str__(self) -> str:
        parts = []
        if self.delta_power == 1:
            parts.append("d")
        elif self.delta_power:
            parts.append(f"d^{self.delta_power}")
        parts.extend(str(g) for g in self.letters)
        return f"B{self.n}:" + (" " + " ".join(parts) if parts else "")


@dataclasses.dataclass(frozen=True)
class ArtinWord:
    """A word in the adjacent-transposition generators s(1)..s(n-1)."""

    n: int
    letters: tuple[tuple[int, int], ...] = ()  # (index, sign)

    def __post_init__(self):
        assert self.n >= 1
        assert all(1 <= i <= self.n - 1 and s in (1, -1) for i, s in self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        parts = [f"{'s' if s > 0 else 'S'}({i})" for i, s in self.letters]
        return f"B{self.n}:" + (" " + " ".join(parts) if parts else "")


def delta_word(n: int) -> BandWord:
    """The descending word s(n-1) ... s(1) written in bands."""
    letters = tuple(BandGenerator(i, i + 1, 1) for i in range(n - 1, 0, -1))
    return BandWord(n, letters, 0)


_HEADER_RE = re.compile(r"\s*B(\d+)\s*:")
_TOKEN_RE = re.compile(
    r"""(?:(?P<band>[aA])\(\s*(?P<bi>\d+)\s*,\s*(?P<bj>\d+)\s*\)
        |(?P<artin>[sS])\(\s*(?P<si>\d+)\s*\)
        |(?P<delta>[dD]))
        (?:\^(?P<exp>-?\d+))?""",
    re.VERBOSE,
)


def parse_word(text: str) -> BandWord | ArtinWord:
    """Parse a word in the text grammar.

    Returns an ArtinWord when every token is an s/S token, otherwise a
    BandWord (s/S tokens are then mapped to their bands a(i,i+1)).
    """
    m = _HEADER_RE.match(text)
    if not m:
        raise WordSyntaxError("expected header 'B<n>:'", 0)
    n = int(m.group(1))
    if n < 1:
        raise WordSyntaxError("strand count must be >= 1", m.start(1))

    pos = m.end()
    band_letters: list[BandGenerator] = []
    artin_letters: list[tuple[int, int]] = []
    delta_power = 0
    pure_artin = True
    leading = True  # still inside the leading run of d-tokens

    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        tok = _TOKEN_RE.match(text, pos)
        if not tok:
            raise WordSyntaxError("unrecognized token", pos)
        exp = int(tok.group("exp")) if tok.group("exp") is not None else 1

        if tok.group("delta"):
            pure_artin = False
            k = exp if tok.group("delta") == "d" else -exp
            if leading:
                delta_power += k
            elif k != 0:
                tail = delta_word(n) if k > 0 else delta_word(n).inverse()
                band_letters.extend(tail.letters * abs(k))
        elif tok.group("band"):
            pure_artin = False
            leading = False
            i, j = int(tok.group("bi")), int(tok.group("bj"))
            if i >= j:
                hint = f"; suggest a({j},{i})" if j < i else ""
                raise WordSyntaxError(f"band requires i < j{hint}", pos)
            if j > n:
                raise WordSyntaxError(f"strand index {j} out of range for B{n}", pos)
            sign = (1 if tok.group("band") == "a" else -1) * (1 if exp > 0 else -1)
            band_letters.extend([BandGenerator(i, j, sign)] * abs(exp))
        else:
            leading = False
            i = int(tok.group("si"))
            if not 1 <= i <= n - 1:
                raise WordSyntaxError(f"generator index {i} out of range for B{n}", pos)
            sign = (1 if tok.group("artin") == "s" else -1) * (1 if exp > 0 else -1)
            artin_letters.extend([(i, sign)] * abs(exp))
            band_letters.extend([BandGenerator(i, i + 1, sign)] * abs(exp))
        pos = tok.end()

    if pure_artin and artin_letters:
        return ArtinWord(n, tuple(artin_letters))
    return BandWord(n, tuple(band_letters), delta_power)


def band_to_artin(g: BandGenerator, n: int) -> ArtinWord:
    """Expand a band into adjacent generators; the word has 2(j-i)-1 letters."""
    if g.j > n:
        raise ValueError(f"band {g} does not fit in B{n}")
    prefix = list(range(g.j - 1, g.i, -1))
    letters = [(k, 1) for k in prefix] + [(g.i, g.sign)] + [(k, -1) for k in reversed(prefix)]
    return ArtinWord(n, tuple(letters))


def artin_to_band(w: ArtinWord) -> BandWord:
    """Letter-for-letter image s(i)^e -> a(i,i+1)^e."""
    return BandWord(w.n, tuple(BandGenerator(i, i + 1, s) for i, s in w.letters), 0)


def as_band_word(w: BandWord | ArtinWord) -> BandWord:
    return w if isinstance(w, BandWord) else artin_to_band(w)


def permutation_of(w: BandWord | ArtinWord) -> Permutation:
    """Position map of the word read left to right; bands act as transpositions."""
    if isinstance(w, ArtinWord):
        w = artin_to_band(w)
    perm = Permutation.rotation(w.n, w.delta_power)
    for g in w.letters:
        perm = perm.then(Permutation.transposition(w.n, g.i, g.j))
    return perm


def writhe(w: BandWord | ArtinWord) -> int:
    """Exponent sum: positive letters minus negative letters."""
    if isinstance(w, ArtinWord):
        return sum(s for _, s in w.letters)
    return sum(g.sign for g in w.letters) + w.delta_power * (w.n - 1)


def self_linking(w: BandWord | ArtinWord) -> int:
    """Self-linking number of the closed braid: writhe minus strand count."""
    return writhe(w) - w.n


def nb_of_word(w: BandWord) -> int:
    """Number of negative bands in the word.

    Words with a negative delta power are rejected: the count is only
    defined for a concrete word, so callers must expand_delta() first.
    """
    if w.delta_power < 0:
        raise ValueError("negative delta power; expand_delta() before counting")
    return sum(1 for g in w.letters if g.sign < 0)
