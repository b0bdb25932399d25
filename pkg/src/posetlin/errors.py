"""Exception types raised across the package."""


class PosetError(ValueError):
    pass


class CycleError(PosetError):
    """The supplied relation contains a directed cycle."""


class UnknownElement(PosetError):
    pass


class LabelCollision(PosetError):
    pass


class Overflow(OverflowError):
    """A count exceeded the configured limit or budget."""


class NonPolynomial(ValueError):
    """Sampled values are not explained by any polynomial within the degree bound.

    ``witness`` holds the first offending sample (an abscissa, a grid point,
    or a monomial exponent vector, depending on the caller).
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class DuplicateAbscissa(ValueError):
    pass


class NotIncomparable(ValueError):
    pass


class NotAChain(ValueError):
    pass


class PreconditionViolated(ValueError):
    pass


class ParseError(ValueError):
    pass


class DefectError(RuntimeError):
    """A proven guarantee failed to hold; indicates a bug, not bad input."""
