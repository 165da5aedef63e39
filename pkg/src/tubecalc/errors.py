"""Domain-specific exceptions, shared across the package."""


class TubecalcError(Exception):
    """Base class for all errors raised by this package."""


class QuasilengthViolation(TubecalcError):
    """A tube summand has quasilength outside [1, r-1]."""


class SeparationViolation(TubecalcError):
    """Two consecutive wings are not separated by a quasisimple."""


class RigidityViolation(TubecalcError):
    """A pair of declared summands has nonvanishing self-extensions."""


class UnsupportedConfiguration(TubecalcError):
    """The requested computation needs the single-maximal-wing regime."""


class NotInD(TubecalcError):
    """The module does not lie in the diamond region D."""


class PreconditionViolation(TubecalcError):
    """An operation was called below its quasilength bound."""


class ConsistencyFailure(TubecalcError):
    """An internal cross-check identity failed; indicates a bug."""


class CalibrationError(TubecalcError):
    """The serial-module oracle orientation failed its startup checks."""


class ParseError(TubecalcError):
    """Malformed coloured-quiver input."""


class NotATree(ParseError):
    """The overlay quiver is not a tree."""


class ColourMismatch(ParseError):
    """An overlay arrow's colour is incompatible with its endpoint colours."""


class UnknownArrowName(ParseError):
    """An overlay arrow refers to an undeclared base-quiver arrow."""


class BaseQuiverMismatch(TubecalcError):
    """Hom requested between representations of different base quivers."""


class NonComposablePath(TubecalcError):
    """A relation contains a path whose arrows do not compose."""


class CapExceeded(TubecalcError):
    """Endomorphism space too large for exhaustive idempotent search."""
