"""Exception types shared across the package."""


class QVanishError(Exception):
    """Base class for every qvanish-specific error."""


class NonUnitConstantTerm(QVanishError):
    """Series inversion needs constant term +1 or -1."""


class IndexBeyondOrder(QVanishError):
    """A coefficient past the truncation order was requested."""


class NegativeExponent(QVanishError):
    """A construction would produce a term q^e with e < 0."""


class ResidueBeyondOrder(QVanishError):
    """Progression extraction started past the truncation order."""


class PreconditionViolated(QVanishError):
    """An arithmetic precondition (divisibility, character class) fails."""


class Infeasible(QVanishError):
    """The requested linear congruence has no integer solutions."""


class InvalidFamily(QVanishError):
    """Product-family parameters violate their constraints."""


class ParseError(QVanishError):
    """Expression text was rejected; `position` is the 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ExprSyntaxError(ParseError):
    """Unexpected token; `expected` lists what would have been accepted."""

    def __init__(self, position: int, expected, found: str):
        self.expected = tuple(expected)
        self.found = found
        want = ", ".join(self.expected)
        super().__init__(f"expected {want}, found {found}", position)


class OffsetOutOfRange(ParseError):
    """A q-power appears where a positive (or non-negative) exponent is required."""

    def __init__(self, position: int, offset: int, minimum: int):
        self.offset = offset
        self.minimum = minimum
        super().__init__(f"exponent {offset} out of range (minimum {minimum})", position)
