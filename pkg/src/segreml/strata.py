"""The complete Euler stratification atlas for the 2x2x2 case.

The coefficient space of two bilinear quadrics splits into 41 strata by
which factors vanish: the empty pattern (chi 6), 7 singletons (5), all 21
pairs (4), 8 corner triples (3), 3 cubic-frame-plus-H quintuples (2) and
the full pattern (1).  Every stratum here carries a constructive witness
recipe; generation is untrusted and each candidate passes an exact
vanishing-pattern gate before being returned.

Witnesses involving the hyperdeterminant are built geometrically rather
than by solving H = 0 directly (whose discriminant is rarely a rational
square): a tangency is forced by adding a multiple of the product of the
two lines through a chosen rational point of the first quadric, an
axis tangency by the analogous degenerate pencil member, and a node
incidence by passing the second quadric through the singular point of the
first.  All constructions stay rational.

The module also hosts the sign-pattern sampling experiment over the seven
factor values (F[0*(0,1)], F[1*(0,1)], F[*0(0,1)], F[*1(0,1)], F[**0],
F[**1], H[0,1]), in that order.
"""

from __future__ import annotations

import itertools
import random
import zlib
from dataclasses import dataclass
from fractions import Fraction

from .errors import GenerationFailedError
from .factors import (
    FactorId,
    VanishingPattern,
    face_minor_x,
    face_minor_y,
    hyp222,
    n1_factor_universe,
    slice_minor,
    vanishing_pattern,
)
from .realize import _all_factors_witness, _frame_with_h_witness, _solve_minor, random_entry
from .tensor import ScalingTensor

_RETRY_BUDGET = 400

SIGN_FACTOR_ORDER = (
    face_minor_x(0, 0, 1),
    face_minor_x(1, 0, 1),
    face_minor_y(0, 0, 1),
    face_minor_y(1, 0, 1),
    slice_minor(0),
    slice_minor(1),
    hyp222(0, 1),
)

# The only realizable sign patterns with H < 0, in the order
# (F[0*(0,1)], F[1*(0,1)], F[*0(0,1)], F[*1(0,1)], F[**0], F[**1], H[0,1]).
# Confirmed by exhaustive exact enumeration over all entries in +-{1,2,3}:
# that grid realizes 68 patterns in total, these four on the H < 0 side.
NEGATIVE_H_PATTERNS = frozenset({"-------", "++++---", "++--++-", "--++++-"})


@dataclass(frozen=True)
class Stratum:
    """One realizable n=1 vanishing pattern with its Euler characteristic."""

    pattern: VanishingPattern
    chi: int
    witness_recipe: str
    symmetry_class: str

    @property
    def name(self) -> str:
        inner = ",".join(self.pattern.names())
        return f"{{{inner}}}"


def enumerate_strata_n1() -> list[Stratum]:
    """All 41 strata in deterministic order (by class, then pattern)."""
    h = hyp222(0, 1)
    universe = n1_factor_universe()
    minors = [f for f in universe if f.is_minor]
    out = [Stratum(VanishingPattern(1, ()), 6, "generic entries", "empty")]
    for f in universe:
        recipe = "tangent quadrics" if f == h else f"solve {f.name} = 0 for one entry"
        out.append(Stratum(VanishingPattern(1, (f,)), 5, recipe, "single"))
    for f, g in itertools.combinations(universe, 2):
        if h in (f, g):
            m = f if g == h else g
            recipe = f"degenerate-pencil tangency keeping {m.name} = 0"
        else:
            recipe = "solve both minors through designated entries"
        out.append(Stratum(VanishingPattern(1, (f, g)), 4, recipe, "pair"))
    for i in range(2):
        for j in range(2):
            for k in range(2):
                triple = (face_minor_x(i, 0, 1), face_minor_y(j, 0, 1), slice_minor(k))
                out.append(
                    Stratum(
                        VanishingPattern(1, triple),
                        3,
                        f"corner at w[{i}][{j}][{k}]: three independent solves",
                        "corner",
                    )
                )
    fx = [face_minor_x(0, 0, 1), face_minor_x(1, 0, 1)]
    fy = [face_minor_y(0, 0, 1), face_minor_y(1, 0, 1)]
    sl = [slice_minor(0), slice_minor(1)]
    frames = [
        (tuple(fx + fy), "proportional nonsingular slices"),
        (tuple(fx + sl), "row-scaled singular slices (shared horizontal line)"),
        (tuple(fy + sl), "column-scaled singular slices (shared vertical line)"),
    ]
    for quad, recipe in frames:
        out.append(Stratum(VanishingPattern(1, quad + (h,)), 2, recipe, "frame"))
    out.append(
        Stratum(VanishingPattern(1, tuple(universe)), 1, "proportional singular slices", "full")
    )
    return out


# -- witness construction ------------------------------------------------------


def _random_slice(rng: random.Random) -> list[list[Fraction]]:
    return [[random_entry(rng), random_entry(rng)], [random_entry(rng), random_entry(rng)]]


def _random_entries(rng: random.Random) -> list[list[list[Fraction]]]:
    return [[[random_entry(rng) for _ in range(2)] for _ in range(2)] for _ in range(2)]


def _force_minors(entries, minors) -> bool:
    """Zero each minor through an entry no earlier minor touches."""
    used: set[tuple[int, int, int]] = set()
    for fid in minors:
        free = sorted(fid.variables() - used)
        if not free:
            return False
        _solve_minor(entries, fid, free[-1])
        used |= fid.variables()
    return all(entries[i][j][k] != 0 for i in range(2) for j in range(2) for k in range(2))


def _double_line_slice(kind: str, side: int, base: list[list[Fraction]]) -> list[list[Fraction]]:
    """Coefficients of the degenerate (1,1)-form used for axis tangencies.

    For a face minor on side i of the x-axis the form is the product of
    the line {x = (1-i : i)} with the y-line through the root of row i of
    the base slice; mirrored for y-face minors.  Adding a multiple of it
    to the base quadric keeps the relevant face minor zero and makes the
    intersection a double point on that axis.
    """
    if kind == "face_x":
        # F[i*] = 0 puts the contact at x = (1-i : i); the vanishing line
        # there is x_{1-i}, times the y-line through the root of row i.
        row = base[side]
        zero = [Fraction(0), Fraction(0)]
        return [zero, list(row)] if side == 0 else [list(row), zero]
    col = [base[0][side], base[1][side]]
    if side == 0:
        return [[Fraction(0), col[0]], [Fraction(0), col[1]]]
    return [[col[0], Fraction(0)], [col[1], Fraction(0)]]


def _tangency_witness(rng: random.Random, minor: FactorId | None) -> ScalingTensor | None:
    """One candidate tensor with H = 0, plus `minor` = 0 when given.

    With no minor: pick a rational torus point P on the first quadric and
    add a multiple of the product of the two lines through P.  With a face
    minor: the contact point moves to the corresponding axis.  With a
    slice minor: make the first quadric a line pair and pass the second
    through its node.
    """
    if minor is not None and minor.kind == "slice":
        which = minor.index[0]
        a, b, c = random_entry(rng), random_entry(rng), random_entry(rng)
        pair = [[a, b], [c, b * c / a]]  # singular: a pair of axis-parallel lines
        x_star, y_star = -b / pair[1][1], -c / pair[1][1]
        other = _random_slice(rng)
        # Pass the other quadric through the node: a double intersection point.
        other[0][0] = -(other[1][0] * x_star + other[0][1] * y_star + other[1][1] * x_star * y_star)
        if other[0][0] == 0:
            return None
        slices = [pair, other] if which == 0 else [other, pair]
        return ScalingTensor.from_slices(slices)
    s0 = _random_slice(rng)
    if s0[0][0] * s0[1][1] == s0[0][1] * s0[1][0]:
        return None
    alpha, beta = random_entry(rng), random_entry(rng)
    if minor is None:
        x_star = random_entry(rng) * rng.choice((1, -1))
        denom = s0[0][1] + s0[1][1] * x_star
        if denom == 0:
            return None
        y_star = -(s0[0][0] + s0[1][0] * x_star) / denom
        if y_star == 0:
            return None
        # (x - x*)(y - y*) in slice layout [[const, y],[x, xy]].
        g = [[x_star * y_star, -x_star], [-y_star, Fraction(1)]]
    else:
        g = _double_line_slice(minor.kind, minor.index[0], s0)
    s1 = [[alpha * s0[i][j] + beta * g[i][j] for j in range(2)] for i in range(2)]
    if any(x == 0 for row in s1 for x in row):
        return None
    return ScalingTensor.from_slices([s0, s1])


def _frame_slice_witness(rng: random.Random, axis: str) -> ScalingTensor | None:
    """Both slices singular sharing one line: frame of face minors + slices + H."""
    a, b, c = random_entry(rng), random_entry(rng), random_entry(rng)
    s0 = [[a, b], [c, b * c / a]]
    lam, mu = random_entry(rng), random_entry(rng)
    if lam == mu:
        return None
    if axis == "x":  # scale the two x-rows separately: face_x minors vanish
        s1 = [[lam * s0[0][0], lam * s0[0][1]], [mu * s0[1][0], mu * s0[1][1]]]
    else:  # scale the two y-columns separately: face_y minors vanish
        s1 = [[lam * s0[0][0], mu * s0[0][1]], [lam * s0[1][0], mu * s0[1][1]]]
    return ScalingTensor.from_slices([s0, s1])


def witness_for_stratum(stratum: Stratum, seed: int = 0) -> ScalingTensor:
    """A tensor whose vanishing pattern equals the stratum's, exactly."""
    rng = random.Random((seed << 32) ^ zlib.crc32(stratum.name.encode()))
    target = stratum.pattern.factors
    h = hyp222(0, 1)
    minors = [f for f in stratum.pattern.vanishing if f.is_minor]
    has_h = h in target
    for _ in range(_RETRY_BUDGET):
        candidate: ScalingTensor | None
        if not target:
            candidate = ScalingTensor.from_entries(1, _random_entries(rng))
        elif len(target) == 7:
            candidate = _all_factors_witness(rng)
        elif len(target) == 5:
            kinds = {f.kind for f in minors}
            if kinds == {"face_x", "face_y"}:
                candidate = _frame_with_h_witness(rng)
            else:
                candidate = _frame_slice_witness(rng, "x" if "face_x" in kinds else "y")
        elif has_h:
            candidate = _tangency_witness(rng, minors[0] if minors else None)
        else:
            entries = _random_entries(rng)
            candidate = None
            if _force_minors(entries, minors):
                candidate = ScalingTensor.from_entries(1, entries)
        if candidate is not None and vanishing_pattern(candidate).factors == target:
            return candidate
    raise GenerationFailedError(f"witness generation failed for {stratum.name}")


def atlas(seed: int = 0) -> list[tuple[Stratum, ScalingTensor]]:
    """All 41 strata paired with verified witnesses."""
    return [(s, witness_for_stratum(s, seed)) for s in enumerate_strata_n1()]


# -- sign-pattern experiment ---------------------------------------------------


def _sign_vector(e) -> tuple[int, ...] | None:
    """The seven factor values, as ints, for an integer 2x2x2 tensor."""
    fx0 = e[0][0][0] * e[0][1][1] - e[0][1][0] * e[0][0][1]
    fx1 = e[1][0][0] * e[1][1][1] - e[1][1][0] * e[1][0][1]
    fy0 = e[0][0][0] * e[1][0][1] - e[1][0][0] * e[0][0][1]
    fy1 = e[0][1][0] * e[1][1][1] - e[1][1][0] * e[0][1][1]
    s0 = e[0][0][0] * e[1][1][0] - e[0][1][0] * e[1][0][0]
    s1 = e[0][0][1] * e[1][1][1] - e[0][1][1] * e[1][0][1]
    a = e[0][0][0] * e[1][1][1] - e[0][0][1] * e[1][1][0]
    b = e[0][1][0] * e[1][0][1] - e[0][1][1] * e[1][0][0]
    hh = (a - b) ** 2 - 4 * fx0 * fx1
    values = (fx0, fx1, fy0, fy1, s0, s1, hh)
    if any(v == 0 for v in values):
        return None
    return values


def _sign_string(values) -> str:
    return "".join("+" if v > 0 else "-" for v in values)


def sample_sign_patterns(samples: int, bound: int, seed: int = 0) -> dict[str, int]:
    """Sample integer tensors and tally exact sign patterns of the factors.

    Entries are uniform in [-bound, bound] without 0; draws on which any
    factor is exactly zero are skipped.  Returns pattern -> count.
    """
    if samples < 1 or bound < 2:
        raise ValueError("need samples >= 1 and bound >= 2")
    rng = random.Random(seed)
    nonzero = list(range(-bound, 0)) + list(range(1, bound + 1))
    counts: dict[str, int] = {}
    for _ in range(samples):
        e = [[[rng.choice(nonzero) for _ in range(2)] for _ in range(2)] for _ in range(2)]
        values = _sign_vector(e)
        if values is None:
            continue
        key = _sign_string(values)
        counts[key] = counts.get(key, 0) + 1
    return counts


def find_negative_h_patterns(seed: int = 0, budget: int = 200_000, bound: int = 10) -> dict[str, list[list[list[int]]]]:
    """Locate integer witnesses for every sign pattern with negative H.

    Any sample with H < 0 realizes one such pattern; sign flips of one
    x-row, one y-column or one slice map it onto the others (they scale
    each factor by a monomial in the flips, so exact vanishing and H are
    preserved).  Returns pattern -> witness entries.
    """
    rng = random.Random(seed)
    nonzero = list(range(-bound, 0)) + list(range(1, bound + 1))
    found: dict[str, list[list[list[int]]]] = {}
    for _ in range(budget):
        e = [[[rng.choice(nonzero) for _ in range(2)] for _ in range(2)] for _ in range(2)]
        values = _sign_vector(e)
        if values is None or values[-1] > 0:
            continue
        for flip_x, flip_y, flip_z in itertools.product((1, -1), repeat=3):
            flipped = [
                [
                    [e[i][j][k] * (flip_x if i else 1) * (flip_y if j else 1) * (flip_z if k else 1) for k in range(2)]
                    for j in range(2)
                ]
                for i in range(2)
            ]
            fv = _sign_vector(flipped)
            if fv is not None and fv[-1] < 0:
                found.setdefault(_sign_string(fv), flipped)
        if len(found) >= 4:
            break
    return found
