"""Executable kernel for set theory with a complement over finite-or-cofinite codes."""

from .coset import (
    EMPTY,
    UNIVERSE,
    CoSet,
    canonicalize,
    cofin,
    complement,
    decode,
    encode,
    equal,
    fin,
    is_antifounded,
    is_founded,
    make,
    member,
    rank,
)
from .errors import (
    ChoiceViolation,
    NotAFunction,
    NotRepresentable,
    ParseError,
    SizeLimit,
    UndecidableFragment,
    ZFKError,
)

__version__ = "0.1.0"
