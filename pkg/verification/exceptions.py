"""
Errors raised by the verification kernel.
"""


class VerificationError(Exception):
    """Base class for every error raised by the kernel."""


class AlphabetMismatch(VerificationError, ValueError):
    """Two operands live over different alphabets."""


class DegreeError(VerificationError, ValueError):
    """An input or generator image has the wrong (or no single) degree."""


class ConstantTermError(VerificationError, ValueError):
    """A series that must be constant-free has a nonzero empty-word coefficient."""


class DomainError(VerificationError, ValueError):
    """An argument lies outside the domain of an operation."""


class NotMaurerCartan(VerificationError):
    """A degree -1 element fails the Maurer-Cartan equation."""

    def __init__(self, message, residual):
        super().__init__(message)
        self.residual = residual
