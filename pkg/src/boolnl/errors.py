"""Exception types shared across the package."""


class BoolnlError(Exception):
    """Base class for every error raised by boolnl."""


class NotPowerOfTwo(BoolnlError):
    """Truth-table length is not a power of two >= 2."""


class NotBooleanValued(BoolnlError):
    """A value that must be a bit (0 or 1) is not."""


class DimensionMismatch(BoolnlError):
    """Operands are defined over different numbers of variables."""


class ParseError(BoolnlError):
    """Malformed textual input. ``position`` is a 0-based character index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class VariableOutOfRange(ParseError):
    """A variable index in a parsed expression is outside 1..n."""


class CapExceeded(BoolnlError):
    """Requested computation exceeds a hard resource cap."""


class TooLarge(BoolnlError):
    """Input size exceeds the cap of the selected operation."""


class OutOfRange(BoolnlError):
    """A numeric parameter lies outside its admissible range."""


class LimitExceeded(BoolnlError):
    """A streamed enumeration was truncated at the caller's limit."""
