"""Shared exception types.

The CLI maps these onto exit codes: parse/usage problems exit 2,
budget violations exit 3, everything else that aborts a computation
exits 1.
"""


class SyntaftError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(SyntaftError):
    pass


class UnknownSymbol(SyntaftError):
    pass


class AlphabetMismatch(SyntaftError):
    pass


class ZeroSeries(SyntaftError):
    """The zero series has no unital syntactic algebra."""


class InvalidAlgebra(SyntaftError):
    pass


class ZeroFunctional(SyntaftError):
    pass


class NotSemisimple(SyntaftError):
    pass


class NotSplitOverQ(SyntaftError):
    """A simple factor is not a matrix algebra over the rationals."""


class NonSquareBlock(NotSplitOverQ):
    """Block dimension is not a perfect square."""


class InvalidGroup(SyntaftError):
    pass


class UnknownCatalogEntry(SyntaftError):
    pass


class ParameterTooLarge(SyntaftError):
    pass


class IncompleteAutomaton(SyntaftError):
    pass


class NotClosed(SyntaftError):
    """Slot pairing is not a fixed-point-free involution on all slots."""


class NotConnected(SyntaftError):
    pass


class InvalidMoveSite(SyntaftError):
    pass


class NotCommutative(SyntaftError):
    pass


class DegenerateForm(SyntaftError):
    pass


class NotRestricted(SyntaftError):
    pass


class UnassignedVariable(SyntaftError):
    pass


class FormulaSyntaxError(SyntaftError):
    """Formula text rejected; carries a character offset."""

    def __init__(self, message, position=None):
        super().__init__(message if position is None else f"{message} (at offset {position})")
        self.position = position


class ParseError(SyntaftError):
    """Object file rejected; carries a line number."""

    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class BudgetExceeded(SyntaftError):
    pass
