from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from segreml.exact import (
    BinaryForm,
    RatMatrix,
    binary_gcd,
    distinct_root_count,
    format_rational,
    linear_product,
    parse_rational,
    rank,
)


def test_rational_strings_round_trip():
    for text in ["3", "-7", "3/4", "-22/7", "0"]:
        assert format_rational(parse_rational(text)) == text
    assert parse_rational("6/4") == Fraction(3, 2)
    assert format_rational(Fraction(10, 5)) == "2"


def rank_by_minors(rows):
    """Independent oracle: largest k with a nonzero k x k minor."""
    m, n = len(rows), len(rows[0])

    def det(sub):
        if len(sub) == 1:
            return sub[0][0]
        total = Fraction(0)
        for j in range(len(sub)):
            minor = [row[:j] + row[j + 1 :] for row in sub[1:]]
            total += (-1) ** j * sub[0][j] * det(minor)
        return total

    for k in range(min(m, n), 0, -1):
        for rs in itertools.combinations(range(m), k):
            for cs in itertools.combinations(range(n), k):
                if det([[rows[r][c] for c in cs] for r in rs]) != 0:
                    return k
    return 0


def test_rank_examples():
    assert rank(RatMatrix.from_rows([[1, 2], [2, 4]])) == 1
    assert rank(RatMatrix.from_rows([[1, 0], [0, 1]])) == 2
    assert rank(RatMatrix.from_rows([[1, 3], [2, 1], [3, 4]])) == 2


def test_rank_matches_minor_expansion_exhaustive_2x2():
    values = [Fraction(v) for v in range(-2, 3)]
    for a, b, c, d in itertools.product(values, repeat=4):
        rows = [[a, b], [c, d]]
        assert rank(RatMatrix.from_rows(rows)) == rank_by_minors(rows)


@pytest.mark.parametrize("shape", [(3, 3), (3, 4), (4, 4), (4, 2)])
def test_rank_matches_minor_expansion_sampled(shape):
    rng = random.Random(42)
    m, n = shape
    for _ in range(300):
        rows = [[Fraction(rng.randint(-2, 2)) for _ in range(n)] for _ in range(m)]
        assert rank(RatMatrix.from_rows(rows)) == rank_by_minors(rows)


def test_rank_handles_fractions():
    rows = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), Fraction(1, 1)]]
    assert rank(RatMatrix.from_rows(rows)) == rank_by_minors(rows)


def test_binary_gcd_examples():
    f = BinaryForm.from_coeffs([0, 8, 14])
    g = BinaryForm.from_coeffs([0, -8, -14])
    got = binary_gcd([f, g])
    # y1*(4 y0 + 7 y1) up to scalar, monic-normalized
    assert got.coeffs == (Fraction(0), Fraction(1), Fraction(7, 4))
    assert binary_gcd([BinaryForm.from_coeffs([1, 0, 0]), BinaryForm.from_coeffs([0, 0, 1])]).degree == 0
    assert binary_gcd([BinaryForm.zero(), BinaryForm.zero()]).is_zero
    # zero inputs are ignored alongside nonzero ones
    assert binary_gcd([BinaryForm.zero(), f]).coeffs == f.monic().coeffs


def test_binary_gcd_divides_both():
    rng = random.Random(7)

    def random_linear():
        return BinaryForm.from_coeffs([rng.randint(-9, 9), rng.choice([v for v in range(-9, 10) if v])])

    def divides(d, f):
        # gcd of {d, f} must be d itself (monic) when d | f
        return binary_gcd([d, f]).coeffs == d.monic().coeffs

    for _ in range(1000):
        shared = random_linear()
        f = linear_product(shared, random_linear())
        g = linear_product(shared, random_linear())
        d = binary_gcd([f, g])
        assert not d.is_zero and d.degree >= 1
        assert divides(d, f) and divides(d, g)


def test_distinct_root_counts():
    assert distinct_root_count(BinaryForm.from_coeffs([0, 8, 14])) == 2
    assert distinct_root_count(BinaryForm.from_coeffs([0, 0, 1])) == 1  # y1^2
    assert distinct_root_count(BinaryForm.from_coeffs([3])) == 0
    assert distinct_root_count(BinaryForm.from_coeffs([0, 5])) == 1
    assert distinct_root_count(BinaryForm.zero()) is None


def test_distinct_roots_of_linear_products():
    rng = random.Random(3)
    pool = [v for v in range(-9, 10) if v]
    for _ in range(1000):
        f = BinaryForm.from_coeffs([rng.choice(pool), rng.choice(pool)])
        g = BinaryForm.from_coeffs([rng.choice(pool), rng.choice(pool)])
        prod = linear_product(f, g)
        coprime = f.coeffs[0] * g.coeffs[1] - f.coeffs[1] * g.coeffs[0] != 0
        assert distinct_root_count(prod) == (2 if coprime else 1)
        assert distinct_root_count(linear_product(f, f)) == 1


def test_degree_cap_is_enforced():
    with pytest.raises(ValueError):
        BinaryForm.from_coeffs([1, 2, 3, 4])
    with pytest.raises(ValueError):
        linear_product(BinaryForm.from_coeffs([1, 1, 1]), BinaryForm.from_coeffs([1, 1]))


def test_discriminant():
    assert BinaryForm.from_coeffs([0, 8, 14]).discriminant() == 64
    with pytest.raises(ValueError):
        BinaryForm.from_coeffs([1, 2]).discriminant()
