"""Exception types raised across the package."""


class SwapnetError(Exception):
    """Base class for all package errors."""


class InvalidSwap(SwapnetError, ValueError):
    pass


class Disconnected(SwapnetError, ValueError):
    pass


class MinDegreeTooLow(SwapnetError, ValueError):
    pass


class BadSpec(SwapnetError, ValueError):
    pass


class MixedConfig(SwapnetError, ValueError):
    pass


class ParseError(SwapnetError, ValueError):
    """Malformed edge-list input. ``line`` is 1-based, or None for whole-file problems."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
