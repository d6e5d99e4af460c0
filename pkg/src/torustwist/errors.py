"""Shared exception types."""


class InvalidKnotError(ValueError):
    """Parameters do not describe a torus knot (non-coprime, or both zero)."""


class UnsupportedTwistError(ValueError):
    """A twist move outside the supported families."""


class NotAKnotError(ValueError):
    """A braid closure with more than one component."""


class DomainError(ValueError):
    """Input outside a formula's stated domain."""


class UndecidedSignError(RuntimeError):
    """Certified sign resolution ran out of precision.

    Callers must treat this as "undecided", never as a sign guess.
    """

    def __init__(self, message, precision_bits=None):
        super().__init__(message)
        self.precision_bits = precision_bits


class InternalCheckError(RuntimeError):
    """An internal cross-check failed; indicates a bug, not bad input."""


class SequenceSyntaxError(ValueError):
    """Malformed line in a twist-sequence file."""

    def __init__(self, message, line, column=1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class SequenceSemanticError(ValueError):
    """Well-formed but invalid step in a twist-sequence file."""

    def __init__(self, message, line=None):
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)
        self.line = line
