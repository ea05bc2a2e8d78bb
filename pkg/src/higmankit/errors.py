"""Exception types shared across the package."""


class HigmanKitError(Exception):
    pass


class ParseError(HigmanKitError, ValueError):
    """Malformed text input; ``pos`` is the 0-based offset of the offending token."""

    def __init__(self, message: str, pos: int | None = None, text: str | None = None):
        self.pos = pos
        self.text = text
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)


class UnknownGenerator(ParseError):
    pass


class AlphabetMismatch(HigmanKitError, ValueError):
    pass


class InvalidCoding(HigmanKitError, ValueError):
    """A tuple whose even-length extension has a zero in an interior slot."""


class SchemeDomainError(HigmanKitError, ValueError):
    pass


class PatternError(HigmanKitError, ValueError):
    """Ill-formed pattern set, e.g. a parameter without a valid pivot."""


class UnsupportedPattern(HigmanKitError, ValueError):
    pass
