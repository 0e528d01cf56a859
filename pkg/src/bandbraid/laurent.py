"""
Exact integer Laurent polynomials in one and two variables, plus integer
matrix determinants.  No floating point: coefficients are Python ints and
interpolation uses fractions.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import Iterable, Mapping


def _clean(coeffs: Mapping) -> dict:
    return {e: c for e, c in coeffs.items() if c}


@dataclasses.dataclass(frozen=True)
class LaurentPoly1:
    """A one-variable integer Laurent polynomial, stored sparsely."""

    coeffs: tuple[tuple[int, int], ...]  # sorted (exponent, coefficient) pairs

    @staticmethod
    def from_dict(coeffs: Mapping[int, int]) -> LaurentPoly1:
        return LaurentPoly1(tuple(sorted(_clean(coeffs).items())))

    @staticmethod
    def zero() -> LaurentPoly1:
        return LaurentPoly1(())

    @staticmethod
    def one() -> LaurentPoly1:
        return LaurentPoly1.monomial(1, 0)

    @staticmethod
    def monomial(c: int, e: int) -> LaurentPoly1:
        return LaurentPoly1.from_dict({e: c})

    def as_dict(self) -> dict[int, int]:
        return dict(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: LaurentPoly1) -> LaurentPoly1:
        out = self.as_dict()
        for e, c in other.coeffs:
            out[e] = out.get(e, 0) + c
        return LaurentPoly1.from_dict(out)

    def __neg__(self) -> LaurentPoly1:
        return LaurentPoly1(tuple((e, -c) for e, c in self.coeffs))

    def __sub__(self, other: LaurentPoly1) -> LaurentPoly1:
        return self + (-other)

    def __mul__(self, other: LaurentPoly1) -> LaurentPoly1:
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs:
            for e2, c2 in other.coeffs:
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly1.from_dict(out)

    def shift(self, k: int) -> LaurentPoly1:
        """Multiply by t^k."""
        return LaurentPoly1(tuple((e + k, c) for e, c in self.coeffs))

    @property
    def min_exp(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return self.coeffs[0][0]

    @property
    def max_exp(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return self.coeffs[-1][0]

    @property
    def degree_span(self) -> int:
        return self.max_exp - self.min_exp

    def coeff(self, e: int) -> int:
        return self.as_dict().get(e, 0)

    def __call__(self, t: int) -> Fraction:
        return sum((Fraction(c) * Fraction(t) ** e for e, c in self.coeffs), Fraction(0))

    def unit_normalize(self) -> LaurentPoly1:
        """Canonical representative modulo units +-t^k: min exponent 0, first coefficient > 0."""
        if not self.coeffs:
            return self
        shifted = self.shift(-self.min_exp)
        if shifted.coeffs[0][1] < 0:
            shifted = -shifted
        return shifted

    def div_exact(self, divisor: LaurentPoly1) -> LaurentPoly1:
        """Exact division; raises if the divisor does not divide self."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return self
        # Work with ordinary polynomials: shift both to minimum exponent 0.
        num = dict(self.shift(-self.min_exp).coeffs)
        den = divisor.shift(-divisor.min_exp)
        den_lead_e, den_lead_c = den.coeffs[-1]
        out: dict[int, int] = {}
        while num:
            e = max(num)
            c = num[e]
            if e < den_lead_e or c % den_lead_c:
                raise ValueError("division is not exact")
            q = c // den_lead_c
            out[e - den_lead_e] = q
            for de, dc in den.coeffs:
                ne = e - den_lead_e + de
                num[ne] = num.get(ne, 0) - q * dc
                if num[ne] == 0:
                    del num[ne]
        return LaurentPoly1.from_dict(out).shift(self.min_exp - divisor.min_exp)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c} t^{e}" for e, c in self.coeffs)


def unit_equal(a: LaurentPoly1, b: LaurentPoly1) -> bool:
    """Equality modulo multiplication by +-t^k."""
    return a.unit_normalize() == b.unit_normalize()


@dataclasses.dataclass(frozen=True)
class LaurentPoly2:
    """A two-variable integer Laurent polynomial in (v, z), stored sparsely."""

    coeffs: tuple[tuple[tuple[int, int], int], ...]  # sorted ((v_exp, z_exp), coeff)

    @staticmethod
    def from_dict(coeffs: Mapping[tuple[int, int], int]) -> LaurentPoly2:
        return LaurentPoly2(tuple(sorted(_clean(coeffs).items())))

    @staticmethod
    def zero() -> LaurentPoly2:
        return LaurentPoly2(())

    @staticmethod
    def one() -> LaurentPoly2:
        return LaurentPoly2.monomial(1, 0, 0)

    @staticmethod
    def monomial(c: int, v_exp: int, z_exp: int) -> LaurentPoly2:
        return LaurentPoly2.from_dict({(v_exp, z_exp): c})

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: LaurentPoly2) -> LaurentPoly2:
        out = self.as_dict()
        for e, c in other.coeffs:
            out[e] = out.get(e, 0) + c
        return LaurentPoly2.from_dict(out)

    def __neg__(self) -> LaurentPoly2:
        return LaurentPoly2(tuple((e, -c) for e, c in self.coeffs))

    def __sub__(self, other: LaurentPoly2) -> LaurentPoly2:
        return self + (-other)

    def __mul__(self, other: LaurentPoly2) -> LaurentPoly2:
        out: dict[tuple[int, int], int] = {}
        for (v1, z1), c1 in self.coeffs:
            for (v2, z2), c2 in other.coeffs:
                e = (v1 + v2, z1 + z2)
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly2.from_dict(out)

    def v_degrees(self) -> tuple[int, int]:
        """(lowest, highest) exponent of v appearing with a nonzero coefficient."""
        if not self.coeffs:
            raise ValueError("zero polynomial has no degrees")
        exps = [v for (v, _), _ in self.coeffs]
        return (min(exps), max(exps))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c} v^{v} z^{z}" for (v, z), c in self.coeffs)


@dataclasses.dataclass(frozen=True)
class IntMatrix:
    """A square integer matrix."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        assert all(len(r) == len(self.rows) for r in self.rows)

    @staticmethod
    def from_rows(rows: Iterable[Iterable[int]]) -> IntMatrix:
        return IntMatrix(tuple(tuple(int(x) for x in r) for r in rows))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def transpose(self) -> IntMatrix:
        return IntMatrix(tuple(zip(*self.rows))) if self.rows else self

    def det(self) -> int:
        return det_int([list(r) for r in self.rows])


def det_int(rows: list[list[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination with pivoting."""
    m = [row[:] for row in rows]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1] if n else 1


def interpolate_integer_poly(points: list[tuple[int, int]]) -> LaurentPoly1:
    """The unique polynomial of degree < len(points) through the given points.

    Coefficients must come out integral; raises otherwise.
    """
    xs = [Fraction(x) for x, _ in points]
    ys = [Fraction(y) for _, y in points]
    # Newton divided differences.
    coef = ys[:]
    for level in range(1, len(xs)):
        for i in range(len(xs) - 1, level - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level])
    # Expand the Newton form into monomial coefficients.
    poly = [Fraction(0)] * len(xs)
    basis = [Fraction(1)] + [Fraction(0)] * (len(xs) - 1)  # product (t - x_0)...(t - x_{i-1})
    for i, c in enumerate(coef):
        for d in range(len(poly)):
            poly[d] += c * basis[d]
        if i + 1 < len(xs):
            new_basis = [Fraction(0)] * len(xs)
            for d in range(len(xs) - 1):
                new_basis[d + 1] += basis[d]
                new_basis[d] -= xs[i] * basis[d]
            basis = new_basis
    out = {}
    for d, c in enumerate(poly):
        if c.denominator != 1:
            raise ValueError("interpolated polynomial is not integral")
        out[d] = int(c)
    return LaurentPoly1.from_dict(out)
