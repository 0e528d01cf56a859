"""
Canonical factors of the band-generator Garside structure on B_n.

A canonical factor (simple element) is a braid A with e <= A <= delta.  The
factors are in bijection with noncrossing partitions of {1..n}: the block
{i_1 < ... < i_k} corresponds to the band word
a(i_{k-1},i_k) a(i_{k-2},i_{k-1}) ... a(i_1,i_2), whose permutation is the
increasing cycle i_1 -> i_2 -> ... -> i_k -> i_1.  We store factors as
partitions and derive words and permutations on demand: partitions make the
lattice operations (meet, join, complement, order) O(n), and equality of
factors is plain structural equality.

All products and quotients of factors are decided through their
permutations, never by rewriting words.
"""

from __future__ import annotations

import dataclasses
import functools
import math

from .words import BandGenerator, BandWord, Permutation

Blocks = tuple[tuple[int, ...], ...]


def _canonical_blocks(blocks) -> Blocks:
    return tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))


def _is_partition(n: int, blocks: Blocks) -> bool:
    seen = sorted(x for b in blocks for x in b)
    return seen == list(range(1, n + 1)) and all(b for b in blocks)


def _crossing_free(n: int, blocks: Blocks) -> bool:
    # Scan 1..n keeping a stack of open blocks; a block must close (or
    # continue) while it is on top, exactly like matched parentheses.
    owner = {}
    for bid, block in enumerate(blocks):
        for x in block:
            owner[x] = bid
    stack: list[int] = []
    for x in range(1, n + 1):
        bid = owner[x]
        block = blocks[bid]
        if x == block[0]:
            stack.append(bid)
        elif not stack or stack[-1] != bid:
            return False
        if x == block[-1]:
            if not stack or stack[-1] != bid:
                return False
            stack.pop()
    return True


@dataclasses.dataclass(frozen=True)
class NoncrossingPartition:
    """A noncrossing partition of {1..n}; blocks sorted by minimum, ascending inside."""

    n: int
    blocks: Blocks

    def __post_init__(self):
        assert self.blocks == _canonical_blocks(self.blocks)
        assert _is_partition(self.n, self.blocks), "blocks do not partition {1..n}"
        assert _crossing_free(self.n, self.blocks), "blocks cross"

    @staticmethod
    def from_blocks(n: int, blocks) -> NoncrossingPartition:
        """Build a factor from any iterable of blocks, validating the input."""
        canon = _canonical_blocks(blocks)
        if not _is_partition(n, canon):
            raise ValueError(f"blocks do not partition {{1..{n}}}")
        if not _crossing_free(n, canon):
            raise ValueError("blocks cross")
        return NoncrossingPartition(n, canon)

    @staticmethod
    def identity(n: int) -> NoncrossingPartition:
        return NoncrossingPartition(n, tuple((i,) for i in range(1, n + 1)))

    @staticmethod
    def delta(n: int) -> NoncrossingPartition:
        return NoncrossingPartition(n, (tuple(range(1, n + 1)),))

    @staticmethod
    def band(n: int, i: int, j: int) -> NoncrossingPartition:
        """The factor of a single positive band a(i,j)."""
        if not 1 <= i < j <= n:
            raise ValueError(f"invalid band ({i},{j}) in B{n}")
        blocks = [(i, j)] + [(x,) for x in range(1, n + 1) if x != i and x != j]
        return NoncrossingPartition(n, _canonical_blocks(blocks))

    @staticmethod
    def from_permutation(perm: Permutation) -> NoncrossingPartition:
        """Inverse of the factor -> permutation map; rejects non-factor permutations."""
        cycles = perm.cycles()
        for c in cycles:
            if any(a >= b for a, b in zip(c, c[1:])):
                raise ValueError("permutation is not a product of increasing cycles")
        canon = _canonical_blocks(cycles)
        if not _crossing_free(perm.n, canon):
            raise ValueError("cycles cross; not a canonical factor")
        return NoncrossingPartition(perm.n, canon)

    @property
    def length(self) -> int:
        """Band word length of the factor: n minus the number of blocks."""
        return self.n - len(self.blocks)

    @property
    def permutation(self) -> Permutation:
        return Permutation(_images(self))

    def __str__(self) -> str:
        return "{" + "|".join(",".join(str(x) for x in b) for b in self.blocks) + "}"


def parse_partition(text: str) -> NoncrossingPartition:
    """Parse the text form '{1,3|2|4}'."""
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ValueError("partition text must be wrapped in braces")
    body = text[1:-1]
    try:
        blocks = [tuple(int(x) for x in part.split(",")) for part in body.split("|") if part != ""]
    except ValueError:
        raise ValueError(f"malformed partition text {text!r}") from None
    n = sum(len(b) for b in blocks)
    return NoncrossingPartition.from_blocks(n, blocks)


@functools.lru_cache(maxsize=None)
def _images(p: NoncrossingPartition) -> tuple[int, ...]:
    # Each element maps to the next-larger element of its block, cyclically.
    images = [0] * p.n
    for block in p.blocks:
        for a, b in zip(block, block[1:]):
            images[a - 1] = b
        images[block[-1] - 1] = block[0]
    return tuple(images)


def is_noncrossing(n: int, blocks) -> bool:
    """Whether the given partition of {1..n} has no crossing pair of blocks."""
    canon = _canonical_blocks(blocks)
    if not _is_partition(n, canon):
        raise ValueError(f"blocks do not partition {{1..{n}}}")
    return _crossing_free(n, canon)


def factor_length(p: NoncrossingPartition) -> int:
    return p.length


def factor_to_word(p: NoncrossingPartition) -> BandWord:
    """The fixed band word of a factor: blocks in decreasing order of minimum.

    Any block order yields the same braid element; this order is a convention
    so the output is deterministic.
    """
    letters = []
    for block in reversed(p.blocks):
        for a, b in zip(reversed(block[:-1]), reversed(block[1:])):
            letters.append(BandGenerator(a, b, 1))
    return BandWord(p.n, tuple(letters), 0)


def refines(a: NoncrossingPartition, b: NoncrossingPartition) -> bool:
    """The prefix/divisibility order on factors: every block of a lies in a block of b."""
    _check_same_n(a, b)
    owner = {}
    for bid, block in enumerate(b.blocks):
        for x in block:
            owner[x] = bid
    return all(len({owner[x] for x in block}) == 1 for block in a.blocks)


@functools.lru_cache(maxsize=None)
def meet(a: NoncrossingPartition, b: NoncrossingPartition) -> NoncrossingPartition:
    """Greatest lower bound: blockwise intersections (noncrossing automatically)."""
    _check_same_n(a, b)
    owner_a, owner_b = {}, {}
    for bid, block in enumerate(a.blocks):
        for x in block:
            owner_a[x] = bid
    for bid, block in enumerate(b.blocks):
        for x in block:
            owner_b[x] = bid
    groups: dict[tuple[int, int], list[int]] = {}
    for x in range(1, a.n + 1):
        groups.setdefault((owner_a[x], owner_b[x]), []).append(x)
    return NoncrossingPartition(a.n, _canonical_blocks(groups.values()))


def _crosses(x: tuple[int, ...], y: tuple[int, ...]) -> bool:
    # Two disjoint sorted blocks cross iff their labels alternate more than twice.
    merged = sorted([(v, 0) for v in x] + [(v, 1) for v in y])
    flips = sum(1 for (_, s), (_, t) in zip(merged, merged[1:]) if s != t)
    return flips > 2


@functools.lru_cache(maxsize=None)
def join(a: NoncrossingPartition, b: NoncrossingPartition) -> NoncrossingPartition:
    """Least upper bound: union closure, then merge crossing blocks to a fixpoint."""
    _check_same_n(a, b)
    blocks = [set(x) for x in a.blocks + b.blocks]
    changed = True
    while changed:
        changed = False
        for i in range(len(blocks)):
            for j in range(i + 1, len(blocks)):
                x, y = blocks[i], blocks[j]
                if x & y or _crosses(tuple(sorted(x)), tuple(sorted(y))):
                    blocks[i] = x | y
                    del blocks[j]
                    changed = True
                    break
            if changed:
                break
    return NoncrossingPartition(a.n, _canonical_blocks(blocks))


@functools.lru_cache(maxsize=None)
def right_complement(a: NoncrossingPartition) -> NoncrossingPartition:
    """The factor A'' with A * A'' = delta (a Kreweras complement)."""
    inv = Permutation(_images(a)).inverse()
    n = a.n
    images = tuple(inv.images[k - 1] % n + 1 for k in range(1, n + 1))
    return NoncrossingPartition.from_permutation(Permutation(images))


@functools.lru_cache(maxsize=None)
def left_complement(a: NoncrossingPartition) -> NoncrossingPartition:
    """The factor A' with A' * A = delta."""
    inv = Permutation(_images(a)).inverse()
    n = a.n
    images = tuple(inv.images[k % n] for k in range(1, n + 1))
    return NoncrossingPartition.from_permutation(Permutation(images))


def tau(a: NoncrossingPartition, k: int = 1) -> NoncrossingPartition:
    """Conjugation by delta^k: shift every element by +k mod n."""
    n = a.n
    k %= n
    if k == 0:
        return a
    return NoncrossingPartition(
        n, _canonical_blocks(tuple((x - 1 + k) % n + 1 for x in b) for b in a.blocks))


def tau_inv(a: NoncrossingPartition) -> NoncrossingPartition:
    return tau(a, -1)


def compose_simple(a: NoncrossingPartition, s: NoncrossingPartition) -> NoncrossingPartition:
    """The factor equal to the braid product a * s; requires s <= right_complement(a)."""
    _check_same_n(a, s)
    prod = Permutation(_images(a)).then(Permutation(_images(s)))
    try:
        out = NoncrossingPartition.from_permutation(prod)
    except ValueError:
        raise ValueError("product of factors is not a factor") from None
    if out.length != a.length + s.length:
        raise ValueError("product of factors is not a factor")
    return out


def _left_quotient(s: NoncrossingPartition, b: NoncrossingPartition) -> NoncrossingPartition:
    # The factor q with s * q = b; callers guarantee s <= b.
    q = Permutation(_images(s)).inverse().then(Permutation(_images(b)))
    out = NoncrossingPartition.from_permutation(q)
    assert out.length == b.length - s.length
    return out


@functools.lru_cache(maxsize=None)
def left_weight_pair(
    a: NoncrossingPartition, b: NoncrossingPartition
) -> tuple[NoncrossingPartition, NoncrossingPartition]:
    """Transfer the maximal head of b into a.

    Returns (a', b') with a*b = a'*b' as braid elements and the pair maximally
    left-weighted: meet(right_complement(a'), b') = e.
    """
    _check_same_n(a, b)
    s = meet(right_complement(a), b)
    if s.length == 0:
        return (a, b)
    return (compose_simple(a, s), _left_quotient(s, b))


def is_left_weighted(a: NoncrossingPartition, b: NoncrossingPartition) -> bool:
    return meet(right_complement(a), b).length == 0


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


_ENUMERATION_CAP = 12


@functools.lru_cache(maxsize=None)
def _partitions_of(elems: tuple[int, ...]) -> tuple[Blocks, ...]:
    if not elems:
        return ((),)
    first, rest = elems[0], elems[1:]
    out = []
    for mask in range(1 << len(rest)):
        block = (first,) + tuple(rest[t] for t in range(len(rest)) if mask >> t & 1)
        # Elements between consecutive block members partition independently;
        # nothing may cross the block, so segments cannot talk to each other.
        bounds = block + (elems[-1] + 1,)
        segments = [tuple(x for x in rest if lo < x < hi) for lo, hi in zip(bounds, bounds[1:])]
        partials: list[Blocks] = [()]
        for seg in segments:
            partials = [p + q for p in partials for q in _partitions_of(seg)]
        out.extend((block,) + p for p in partials)
    return tuple(out)


def enumerate_factors(n: int, max_n: int = _ENUMERATION_CAP) -> tuple[NoncrossingPartition, ...]:
    """All canonical factors of B_n, sorted by (length, blocks); Catalan(n) of them."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > max_n:
        raise ValueError(f"enumeration cap exceeded: n={n} > {max_n}")
    factors = [
        NoncrossingPartition(n, _canonical_blocks(blocks))
        for blocks in _partitions_of(tuple(range(1, n + 1)))
    ]
    factors.sort(key=lambda p: (p.length, p.blocks))
    return tuple(factors)


def _check_same_n(a: NoncrossingPartition, b: NoncrossingPartition) -> None:
    if a.n != b.n:
        raise ValueError(f"mismatched strand counts {a.n} and {b.n}")
