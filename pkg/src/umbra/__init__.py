"""Generalized sequence transforms, operator calculus, and Appell expansions."""

from . import appell, gftrans, opcalc, seqcore, specfun
from .errors import (
    DivergenceError,
    DomainTooSmallError,
    InternalConsistencyError,
    InvalidParameterError,
    PreconditionError,
    SequenceFormatError,
    TruncationError,
    UmbraError,
    UnsupportedSymbolError,
)
from .seqcore import Sequence

__all__ = [
    "Sequence",
    "appell",
    "gftrans",
    "opcalc",
    "seqcore",
    "specfun",
    "UmbraError",
    "InvalidParameterError",
    "DivergenceError",
    "DomainTooSmallError",
    "TruncationError",
    "UnsupportedSymbolError",
    "PreconditionError",
    "SequenceFormatError",
    "InternalConsistencyError",
]

__version__ = "0.1.0"
