"""Exception hierarchy for the drinfeld package."""


class DrinfeldError(Exception):
    """Base class for all mathematical errors raised by this package."""


# field tower construction
class NotPrime(DrinfeldError):
    pass


class ReducibleModulus(DrinfeldError):
    pass


class WrongDegree(DrinfeldError):
    pass


class TowerMismatch(DrinfeldError):
    pass


# polynomials and rational functions
class DivisionByZeroPoly(DrinfeldError):
    pass


class DivisionByZeroRational(DrinfeldError):
    pass


# Ore polynomials
class DivisionByZeroOre(DrinfeldError):
    pass


class ZeroPolynomial(DrinfeldError):
    pass


# Drinfeld modules
class RankZero(DrinfeldError):
    pass


class ZeroLeadingCoefficient(DrinfeldError):
    pass


class RankTooSmall(DrinfeldError):
    pass


class InvalidParameter(DrinfeldError):
    pass


class RankNotTwo(DrinfeldError):
    pass


# morphisms
class NotAMorphism(DrinfeldError):
    pass


class CategoryMismatch(DrinfeldError):
    pass


class ZeroOrePolynomial(DrinfeldError):
    pass


class ComposabilityMismatch(DrinfeldError):
    pass


class HomSetMismatch(DrinfeldError):
    pass


class NotAnIsomorphism(DrinfeldError):
    pass


class RankMismatch(DrinfeldError):
    pass


class SearchCapExceeded(DrinfeldError):
    pass


# motives
class ZeroMorphism(DrinfeldError):
    pass


class DescentFailure(DrinfeldError):
    pass


class ElementFormRequiresEndomorphism(DrinfeldError):
    pass


class NotAnEndomorphism(DrinfeldError):
    pass


class AmbiguousSolution(DrinfeldError):
    pass
