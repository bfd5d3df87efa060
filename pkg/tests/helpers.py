"""Shared fixtures-in-spirit: reference tensors and random generators."""

from __future__ import annotations

import random
from fractions import Fraction

from segreml.tensor import ScalingTensor

# The rank-deficient / full-rank counterexample pair: identical vanishing
# patterns ({three F[*0] minors, H[0,1,2]}) but ML degrees 8 and 9.
COUNTEREXAMPLE_W = ScalingTensor.from_slices(
    [[[1, 3], [2, 4]], [[2, 1], [4, 6]], [[3, 4], [6, 10]]]
)
COUNTEREXAMPLE_W_PRIME = ScalingTensor.from_slices(
    [[[1, 3], [2, 4]], [[2, 1], [4, 6]], [[3, 3], [6, 1]]]
)

# Three quadrics 2+x+5y+2xy, 2+2x+5y+2xy, 1+x+y+xy: five vanishing hook
# constraints, ML degree 7 = 12 - 5.
HOOK_EXAMPLE = ScalingTensor.from_slices(
    [[[2, 5], [1, 2]], [[2, 5], [2, 2]], [[1, 1], [1, 1]]]
)


def all_ones(n: int) -> ScalingTensor:
    return ScalingTensor.from_entries(n, [[[1] * (n + 1)] * 2] * 2)


def random_tensor(rng: random.Random, n: int, bound: int = 20) -> ScalingTensor:
    """Integer entries uniform in [-bound, bound] without zero."""
    pool = [v for v in range(-bound, bound + 1) if v != 0]
    return ScalingTensor.from_entries(
        n, [[[rng.choice(pool) for _ in range(n + 1)] for _ in range(2)] for _ in range(2)]
    )


def random_positive_tensor(rng: random.Random, n: int, bound: int = 20) -> ScalingTensor:
    return ScalingTensor.from_entries(
        n, [[[rng.randint(1, bound) for _ in range(n + 1)] for _ in range(2)] for _ in range(2)]
    )


def random_rational_tensor(rng: random.Random, n: int, bound: int = 12) -> ScalingTensor:
    def entry():
        num = rng.choice([v for v in range(-bound, bound + 1) if v != 0])
        return Fraction(num, rng.randint(1, 5))

    return ScalingTensor.from_entries(
        n, [[[entry() for _ in range(n + 1)] for _ in range(2)] for _ in range(2)]
    )
