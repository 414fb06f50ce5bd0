class CoverIdealError(Exception):
    """Base error for the toolkit."""


class DimensionMismatchError(CoverIdealError, ValueError):
    """Monomials or ideals live in different ambient rings."""


class NotSquarefreeError(CoverIdealError, ValueError):
    """A squarefree monomial ideal was required."""


class ZeroIdealError(CoverIdealError, ValueError):
    """The operation is undefined on the zero ideal."""


class InvalidGraphError(CoverIdealError, ValueError):
    """Bad graph, partition or whiskering input."""


class InvalidComplexError(CoverIdealError, ValueError):
    """Bad simplicial complex or co-complex input."""


class HypothesisViolationError(CoverIdealError):
    """A structural hypothesis required by a closed formula does not hold."""


class CapExceededError(CoverIdealError):
    """A configured resource cap was exceeded."""

    def __init__(self, what: str, value: int, cap: int):
        self.what = what
        self.value = value
        self.cap = cap
        super().__init__(f"{what} cap exceeded: {value} > {cap}")
