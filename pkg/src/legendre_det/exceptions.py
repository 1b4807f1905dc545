"""Exception types raised by the library."""


class LegendreDetError(ValueError):
    """Base class for all library errors."""


class NotAnOddPrime(LegendreDetError):
    pass


class WrongResidueClass(LegendreDetError):
    """The prime is outside the residue class a claim or formula is stated for."""


class HypothesisViolated(LegendreDetError):
    """A divisibility hypothesis such as ``p does not divide c`` fails."""


class UncoveredPrime(LegendreDetError):
    """No prediction exists for this prime."""


class IndexOutOfRange(LegendreDetError, IndexError):
    pass


class BoundExceeded(LegendreDetError):
    pass
