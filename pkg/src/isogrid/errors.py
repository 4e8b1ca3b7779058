"""Exception hierarchy shared across the library."""


class IsogridError(Exception):
    """Base class for all isogrid-specific errors."""


class InvalidTripleError(IsogridError):
    """A triangle operation was given duplicate points."""


class GridTooLargeError(IsogridError):
    """Grid exceeds the 64-bit count overflow guard or a configured cap."""


class OracleCapExceededError(GridTooLargeError):
    """Brute-force census refused; grid is over the oracle point cap."""


class OutOfRegimeError(IsogridError):
    """A closed form was requested outside its proven range of validity."""


class UnknownTheoremError(IsogridError):
    """check_recurrence was given an identifier not in the registry."""


class TableTooShortError(IsogridError):
    """A sequence table does not cover the k-range an operation needs."""


class RecurrenceTailError(IsogridError):
    """A sequence does not satisfy the expected recurrence within the
    reliable window when reconstructing a generating-function numerator."""

    def __init__(self, index: int, coefficient: int):
        self.index = index
        self.coefficient = coefficient
        super().__init__(
            f"sequence does not satisfy the recurrence at claimed range: "
            f"nonzero tail coefficient {coefficient} at x^{index}"
        )
