class QOError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(QOError, ValueError):
    """Input violates a standing assumption. ``code`` names the assumption."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code

    def __str__(self):
        return f"[{self.code}] {super().__str__()}"


class SingularSwapError(QOError, ZeroDivisionError):
    pass


class CannotDeriveError(QOError, ValueError):
    pass


class TheoremViolation(QOError, ArithmeticError):
    """A quantity that must hold by a proved identity did not.

    Raising this always means a bug upstream, never bad input.
    """
