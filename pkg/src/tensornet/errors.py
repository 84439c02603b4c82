"""Exception types shared across the package."""


class TensorError(ValueError):
    """Base class for tensor construction and wiring mistakes."""


class WireError(TensorError):
    """Unknown label, flavor mismatch, or illegal wire pairing."""


class ShapeError(TensorError):
    """Operand has the wrong order or dimensions for the operation."""


class DegenerateTrimError(ValueError):
    """A trim policy would discard every singular value."""


class NonIntegralError(ValueError):
    """A counting contraction did not round cleanly to an integer."""


class ParseError(ValueError):
    """Malformed input file; carries a 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


class SizeLimitError(ValueError):
    """Operation refused because the input exceeds its size guard."""
