"""Exception types raised across the package."""


class ZeroConstantTerm(ValueError):
    """A series (or function value) that must be invertible at 0 is zero there."""


class InvalidR(ValueError):
    """Denominator ratio outside [0, 1)."""


class DivergentTail(ValueError):
    """Tail estimate requested outside its radius of validity."""


class PoleHit(ArithmeticError):
    """A denominator vanished at the evaluation point."""


class MissingDenominator(ValueError):
    """A factor product lacks the denominator ratio required for assembly."""


class OutsideDisc(ValueError):
    """A point expected in the open unit disc lies outside it."""


class DiscNotInUnitDisc(ValueError):
    """The closed Euclidean disc is not contained in the open unit disc."""


class VanishingOnDisc(ValueError):
    """The target function vanishes (numerically) near the requested disc."""


class BudgetExceeded(RuntimeError):
    """The requested accuracy was not reached within the allowed truncation."""


class ZeroOutsideDisc(ValueError):
    """A prescribed zero does not lie in the open unit disc."""


class RootInsideDisc(ValueError):
    """A polynomial expected to be zero-free on the closed disc has a root there."""


class ParseError(ValueError):
    """Malformed function or disc specification.

    ``position`` is the character offset of the offending token, when known.
    """

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
