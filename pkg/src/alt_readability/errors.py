"""Exception types shared across the package."""


class AltError(Exception):
    """Base class for all errors raised by this package."""


class EmptyTextError(AltError):
    """The input text contains no analyzable letters."""


class UnknownFormulaError(AltError, KeyError):
    """A formula id that no profile defines."""


class LexiconFormatError(AltError, ValueError):
    """A lexicon data file is not valid UTF-8 text."""


class TooFewRowsError(AltError, ValueError):
    """A regression sample has fewer rows than the fit requires."""


class RankDeficientError(AltError, ValueError):
    """The regression design matrix does not have full column rank."""


class LengthMismatchError(AltError, ValueError):
    """Two paired series differ in length."""


class ZeroVarianceError(AltError, ValueError):
    """A series is constant where nonzero variance is required."""


class InvalidDofError(AltError, ValueError):
    """Degrees of freedom below one."""
