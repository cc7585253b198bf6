class FatPointsError(Exception):
    """Base class for every error raised by the library."""


class AmbientDimensionError(FatPointsError, ValueError):
    """Classes living on different blow-ups, or an operation not defined for this n."""


class NotARootError(FatPointsError, ValueError):
    pass


class NotStandardError(FatPointsError, ValueError):
    pass


class PreconditionError(FatPointsError, ValueError):
    pass


class WordNotInvertibleError(FatPointsError, ValueError):
    """Raised when a word containing Clamp moves is inverted."""


class OracleError(FatPointsError, ValueError):
    pass


class ClassExpressionError(FatPointsError, ValueError):
    pass
