"""Exception hierarchy shared by all modules."""


class MinorIdealsError(ValueError):
    pass


class NonIncreasingIndices(MinorIdealsError):
    pass


class IndexOutOfRange(MinorIdealsError):
    pass


class LengthMismatch(MinorIdealsError):
    pass


class InvalidShape(MinorIdealsError):
    pass


class ShapeExceedsAmbient(InvalidShape):
    pass


class ShapeTooWide(InvalidShape):
    pass


class DegreeBoundExceeded(MinorIdealsError):
    """A configured enumeration or dimension cap was hit."""


class EmptyTableau(MinorIdealsError):
    pass


class NotStandard(MinorIdealsError):
    pass


class WitnessPreconditionFailed(MinorIdealsError):
    pass


class ZeroPolynomial(MinorIdealsError):
    pass


class ComparablePair(MinorIdealsError):
    pass


class TooManyGenerators(MinorIdealsError):
    pass


class NotSymmetric(MinorIdealsError):
    pass


class MixedDegree(MinorIdealsError):
    """Generators of a monomial ideal do not share one total degree."""


class ParseError(MinorIdealsError):
    pass
