class TGraphError(Exception):
    """Base class for all errors raised by tgraph-lab."""


class InvalidParameterError(TGraphError, ValueError):
    """A parameter lies outside its documented domain."""


class IncompatibleElementsError(TGraphError, ValueError):
    """Two elements belong to different exponent bounds."""


class SizeLimitError(TGraphError):
    """A configured resource cap would be exceeded."""


class OracleDivergenceError(TGraphError):
    """Two independent component counts disagree."""
