"""Construct scaling tensors with any prescribed ML degree.

The workhorse family is the set altH(n) of 2n alternating hook minors:
for each consecutive slice pair (c, c+1) take {F[*0(c,c+1)], F[1*(c,c+1)]}
when c is even and {F[*1(c,c+1)], F[0*(c,c+1)]} when c is odd.  Adjacent
pairs then use different faces and no configuration that would force a
hyperdeterminant ever appears, so a generic solution of any subset
S of altH(n) + {F[**n]} vanishes on exactly S and has ML degree
(n+1)(n+2) - |S|.

That covers every target r with n(n+1) < r <= (n+1)(n+2); smaller targets
recurse to n-1 and duplicate the last slice, which leaves the union of
quadrics and hence the ML degree unchanged.  The n = 1 base closes the
range with the cubic-frame (r = 2) and proportional-singular (r = 1)
witnesses.

Each constraint is solved by one division for a designated entry owned by
no other constraint, in an order that never rewrites an entry an earlier
constraint used; genericity is untrusted and every output is gated by an
exact vanishing-pattern check.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import GenerationFailedError
from .euler import degree_bound
from .factors import FactorId, face_minor_x, face_minor_y, slice_minor, vanishing_pattern
from .tensor import ScalingTensor

_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)
_DENOMS = (1, 2, 3, 4, 5, 6, 7)
_RETRY_BUDGET = 200


def random_entry(rng: random.Random) -> Fraction:
    """A nonzero rational from the primes-over-small-denominators pool."""
    return Fraction(rng.choice(_PRIMES), rng.choice(_DENOMS))


def alt_hooks(n: int) -> list[FactorId]:
    """The 2n alternating hook minors, ordered by slice pair."""
    if n < 1:
        raise ValueError("n must be at least 1")
    out: list[FactorId] = []
    for c in range(n):
        if c % 2 == 0:
            out += [face_minor_y(0, c, c + 1), face_minor_x(1, c, c + 1)]
        else:
            out += [face_minor_x(0, c, c + 1), face_minor_y(1, c, c + 1)]
    return out


def hook_constraint_universe(n: int) -> list[FactorId]:
    """altH(n) plus the last slice minor, in forcing order."""
    return alt_hooks(n) + [slice_minor(n)]


def _owned_entry(fid: FactorId, n: int) -> tuple[int, int, int]:
    """The entry each constraint is solved for; all pairwise distinct."""
    if fid.kind == "face_y":
        j, c, c1 = fid.index
        return (1, j, c1)
    if fid.kind == "face_x":
        i, c, c1 = fid.index
        return (i, 1, c1)
    # slice minor F[**n]: pick a slot the pair-(n-1) hooks never own.
    return (0, 1, n) if (n - 1) % 2 == 0 else (1, 0, n)


def _solve_minor(entries: list[list[list[Fraction]]], fid: FactorId, pos: tuple[int, int, int]) -> None:
    """Overwrite entries[pos] so the minor vanishes (one exact division)."""
    (i, j, k) = pos
    if fid.kind == "slice":
        (kk,) = fid.index
        other = entries[1 - i][1 - j][kk]
        entries[i][j][k] = entries[i][1 - j][kk] * entries[1 - i][j][kk] / other
    elif fid.kind == "face_x":
        ii, k1, k2 = fid.index
        ko = k1 if k == k2 else k2
        entries[i][j][k] = entries[ii][1 - j][k] * entries[ii][j][ko] / entries[ii][1 - j][ko]
    else:
        _, k1, k2 = fid.index
        ko = k1 if k == k2 else k2
        entries[i][j][k] = entries[1 - i][j][k] * entries[i][j][ko] / entries[1 - i][j][ko]


def generic_solution(S, n: int, seed: int = 0) -> ScalingTensor:
    """A tensor whose vanishing pattern is exactly the constraint set S.

    S must be a subset of altH(n) + {F[**n]}.  Entries are drawn from a
    seeded pool, each constraint is forced through its designated entry,
    and the result is rejected unless the exact pattern equals S.
    """
    allowed = hook_constraint_universe(n)
    S = set(S)
    if not S <= set(allowed):
        bad = sorted(f.name for f in S - set(allowed))
        raise ValueError(f"constraints outside altH({n}) + {{F[**{n}]}}: {bad}")
    S = sorted(S, key=allowed.index)
    rng = random.Random(seed)
    target = frozenset(S)
    for _ in range(_RETRY_BUDGET):
        entries = [[[random_entry(rng) for _ in range(n + 1)] for _ in range(2)] for _ in range(2)]
        for fid in S:
            _solve_minor(entries, fid, _owned_entry(fid, n))
        if any(entries[i][j][k] == 0 for i in range(2) for j in range(2) for k in range(n + 1)):
            continue
        W = ScalingTensor.from_entries(n, entries)
        if vanishing_pattern(W).factors == target:
            return W
    raise GenerationFailedError(f"no generic solution for {sorted(f.name for f in S)} after {_RETRY_BUDGET} tries")


def _frame_with_h_witness(rng: random.Random) -> ScalingTensor:
    """n=1 tensor vanishing exactly on the four face minors plus H.

    Proportional nonsingular slices kill every face minor and make the
    pencil determinant identically zero while both slice minors survive.
    """
    for _ in range(_RETRY_BUDGET):
        s = [[random_entry(rng), random_entry(rng)], [random_entry(rng), random_entry(rng)]]
        lam = random_entry(rng)
        if s[0][0] * s[1][1] == s[0][1] * s[1][0] or lam == 1:
            continue
        W = ScalingTensor.from_slices([s, [[lam * x for x in row] for row in s]])
        if len(vanishing_pattern(W)) == 5:
            return W
    raise GenerationFailedError("frame-plus-H witness generation failed")


def _all_factors_witness(rng: random.Random) -> ScalingTensor:
    """n=1 tensor on which all seven factors vanish: proportional singular slices."""
    for _ in range(_RETRY_BUDGET):
        a, b, c = random_entry(rng), random_entry(rng), random_entry(rng)
        s = [[a, b], [c, b * c / a]]  # singular by construction
        lam = random_entry(rng)
        W = ScalingTensor.from_slices([s, [[lam * x for x in row] for row in s]])
        if len(vanishing_pattern(W)) == 7:
            return W
    raise GenerationFailedError("all-factors witness generation failed")


def realize(n: int, r: int, seed: int = 0) -> ScalingTensor:
    """A tensor with ML degree exactly r, for any 1 <= r <= (n+1)(n+2)."""
    top = degree_bound(n)
    if not 1 <= r <= top:
        raise ValueError(f"r must be in [1, {top}] for n = {n}")
    if n == 1 and r <= 2:
        rng = random.Random(seed)
        return _frame_with_h_witness(rng) if r == 2 else _all_factors_witness(rng)
    if r > n * (n + 1):
        universe = hook_constraint_universe(n)
        return generic_solution(universe[: top - r], n, seed)
    return realize(n - 1, r, seed).duplicate_last_slice()
