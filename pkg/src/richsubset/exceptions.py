"""Exception types raised by richsubset."""


class ValidationError(ValueError):
    """Input violates a documented precondition (bad ratio, negative coordinate, ...)."""


class ParseError(ValidationError):
    """Malformed rational or instance text.

    ``position`` is the 0-based character offset where parsing failed.
    """

    def __init__(self, message, text="", position=0):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


class SizeLimitError(ValidationError):
    """Exhaustive search refused because the instance is too large."""
