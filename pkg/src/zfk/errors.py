"""Exception hierarchy shared by every module."""


class ZFKError(Exception):
    pass


class NotRepresentable(ZFKError):
    """The exact result is neither finite nor cofinite.

    Callers can fall back to :mod:`zfk.properclass`, which handles
    collections that have a decidable membership test but no code.
    """


class NotAFunction(ZFKError):
    pass


class ChoiceViolation(ZFKError):
    pass


class UndecidableFragment(ZFKError):
    """A formula left the fragment that can be decided without a domain."""


class SizeLimit(ZFKError):
    pass


class ParseError(ZFKError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
