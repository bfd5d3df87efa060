"""Exception hierarchy shared across the package."""

from __future__ import annotations


class SegremlError(Exception):
    """Base class for all package-specific errors."""


class ZeroEntryError(SegremlError):
    """A scaling tensor entry is zero (the model lives in the torus)."""

    def __init__(self, i: int, j: int, k: int):
        super().__init__(f"entry w[{i}][{j}][{k}] is zero; all entries must be nonzero")
        self.index = (i, j, k)


class DimensionMismatchError(SegremlError):
    """Input data has the wrong shape."""


class GenerationFailedError(SegremlError):
    """Witness construction exhausted its retry budget."""


class NotZeroDimensionalError(SegremlError):
    """The saturated score ideal has infinitely many solutions."""


class ResourceBudgetExceededError(SegremlError):
    """A basis-size or coefficient-size budget was exceeded."""
