"""Exact scalars, exact matrix rank, and binary forms of degree at most two.

Everything in this package computes over the rationals; no floats appear
anywhere.  Scalars are `fractions.Fraction` (always in canonical form:
positive denominator, reduced).  They serialize as decimal strings "p/q",
or "p" when the denominator is 1.

A homogeneous binary form of degree d in (y0, y1) is stored by its
coefficient tuple (c0, ..., cd), meaning

    c0*y0^d + c1*y0^(d-1)*y1 + ... + cd*y1^d.

A vanishing leading coefficient encodes the projective root (1:0), so a
nonzero degree-d form always has exactly d roots counted with
multiplicity.  Degree is capped at two: all determinants of the pencil
matrices downstream are quadratics, and the cap is enforced structurally.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Rational = Fraction

_MAX_FORM_DEGREE = 2


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" into a Fraction."""
    return Fraction(text.strip())


def format_rational(value: Fraction) -> str:
    """Format a Fraction as "p/q", or "p" when the denominator is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class RatMatrix:
    """An immutable matrix with exact rational entries."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if not self.entries or not self.entries[0]:
            raise ValueError("matrix must have at least one row and column")
        width = len(self.entries[0])
        if any(len(row) != width for row in self.entries):
            raise ValueError("ragged rows")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> RatMatrix:
        return cls(tuple(tuple(Fraction(x) for x in row) for row in rows))

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0])

    def rank(self) -> int:
        return rank(self)

    def __getitem__(self, pos: tuple[int, int]) -> Fraction:
        return self.entries[pos[0]][pos[1]]


def rank(matrix: RatMatrix) -> int:
    """Exact rank over Q by fraction-free (Bareiss) elimination.

    Rows are first scaled to integers (row scaling preserves rank); the
    elimination then stays in Z, which keeps intermediate entries to
    minor-sized integers instead of ever-growing fractions.
    """
    mat: list[list[int]] = []
    for row in matrix.entries:
        scale = 1
        for x in row:
            scale = scale * x.denominator // gcd(scale, x.denominator)
        mat.append([int(x * scale) for x in row])
    nrows, ncols = len(mat), len(mat[0])
    rnk = 0
    prev = 1
    for col in range(ncols):
        pivot = next((i for i in range(rnk, nrows) if mat[i][col]), None)
        if pivot is None:
            continue
        if pivot != rnk:
            mat[rnk], mat[pivot] = mat[pivot], mat[rnk]
        for i in range(rnk + 1, nrows):
            for j in range(col + 1, ncols):
                mat[i][j] = (mat[rnk][col] * mat[i][j] - mat[i][col] * mat[rnk][j]) // prev
            mat[i][col] = 0
        prev = mat[rnk][col]
        rnk += 1
        if rnk == nrows:
            break
    return rnk


@dataclass(frozen=True)
class BinaryForm:
    """Homogeneous form in (y0, y1) of structural degree len(coeffs)-1 <= 2."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not 1 <= len(self.coeffs) <= _MAX_FORM_DEGREE + 1:
            raise ValueError("binary forms are capped at degree 2")

    @classmethod
    def from_coeffs(cls, coeffs: Sequence) -> BinaryForm:
        return cls(tuple(Fraction(c) for c in coeffs))

    @classmethod
    def zero(cls) -> BinaryForm:
        return cls((Fraction(0),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def monic(self) -> BinaryForm:
        """Scale so the leading nonzero coefficient is 1."""
        for c in self.coeffs:
            if c != 0:
                return BinaryForm(tuple(x / c for x in self.coeffs))
        return self

    def discriminant(self) -> Fraction:
        """c1^2 - 4*c0*c2 of a degree-2 form."""
        if self.degree != 2:
            raise ValueError("discriminant requires a degree-2 form")
        c0, c1, c2 = self.coeffs
        return c1 * c1 - 4 * c0 * c2

    def scaled(self, factor) -> BinaryForm:
        f = Fraction(factor)
        return BinaryForm(tuple(c * f for c in self.coeffs))

    def __sub__(self, other: BinaryForm) -> BinaryForm:
        if len(self.coeffs) != len(other.coeffs):
            raise ValueError("forms of unequal degree")
        return BinaryForm(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __call__(self, y0, y1) -> Fraction:
        d = self.degree
        return sum(
            (c * Fraction(y0) ** (d - i) * Fraction(y1) ** i for i, c in enumerate(self.coeffs)),
            Fraction(0),
        )


def linear_product(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Product of two degree-1 forms (the only multiplication the cap allows)."""
    if f.degree != 1 or g.degree != 1:
        raise ValueError("linear_product multiplies two linear forms")
    a0, a1 = f.coeffs
    b0, b1 = g.coeffs
    return BinaryForm((a0 * b0, a0 * b1 + a1 * b0, a1 * b1))


def _dehomogenize(f: BinaryForm) -> tuple[int, list[Fraction]]:
    """Split f = y1^shift * g with g(1:0) != 0; return (shift, g as poly in t=y0/y1).

    The returned coefficient list is descending in t and its leading
    coefficient is nonzero.  `shift` is the multiplicity of the root (1:0).
    """
    coeffs = list(f.coeffs)
    lead = 0
    while coeffs[lead] == 0:
        lead += 1
    return lead, coeffs[lead:]


def _poly_mod(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """Remainder of dense descending-coefficient division (exact)."""
    a = list(a)
    while len(a) >= len(b) and any(c != 0 for c in a):
        while a and a[0] == 0:
            a.pop(0)
        if len(a) < len(b):
            break
        q = a[0] / b[0]
        for i in range(len(b)):
            a[i] -= q * b[i]
        a.pop(0)
    while a and a[0] == 0:
        a.pop(0)
    return a


def binary_gcd(forms: Sequence[BinaryForm]) -> BinaryForm:
    """Monic gcd of binary forms; identically-zero inputs are ignored.

    Factors out the shared power of y1 (the root at (1:0)), takes the
    univariate gcd in t = y0/y1, and re-homogenizes, so the (1:0) root is
    accounted exactly.  Returns the zero form when every input is zero.
    """
    if not forms:
        raise ValueError("binary_gcd requires at least one form")
    nonzero = [f for f in forms if not f.is_zero]
    if not nonzero:
        return BinaryForm.zero()
    shift = None
    g: list[Fraction] | None = None
    for f in nonzero:
        s, p = _dehomogenize(f)
        shift = s if shift is None else min(shift, s)
        if g is None:
            g = p
        else:
            while p:
                g, p = p, _poly_mod(g, p)
        if len(g) == 1 and shift == 0:
            break
    assert g is not None and shift is not None
    if not g:
        # The dehomogenized parts are coprime; only the shared y1 power remains.
        g = [Fraction(1)]
    # Re-homogenize y1^shift * sum(g[i] t^(e-i)) with e = len(g)-1: the term
    # g[i] * y0^(e-i) * y1^(i+shift) lands at index i+shift of a degree
    # e+shift coefficient tuple.
    e = len(g) - 1
    cs = [Fraction(0)] * (e + shift + 1)
    for i, c in enumerate(g):
        cs[i + shift] = c
    return BinaryForm(tuple(cs)).monic()


def distinct_root_count(f: BinaryForm) -> int | None:
    """Number of distinct projective roots; None for the identically-zero form.

    Degree-2 forms have 2 distinct roots iff the discriminant is nonzero,
    else 1; degree-1 forms have 1; nonzero constants have 0.
    """
    if f.is_zero:
        return None
    if f.degree == 2:
        return 2 if f.discriminant() != 0 else 1
    if f.degree == 1:
        return 1
    return 0
