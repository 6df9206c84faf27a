"""Exception hierarchy shared by every subpackage."""


class RegboundError(Exception):
    """Base class for all errors raised by regbound."""


class FieldError(RegboundError, ValueError):
    """Invalid characteristic or mixed coefficient fields."""


class AmbientMismatch(RegboundError, ValueError):
    """Operands live in polynomial rings with different variable counts."""


class NotStableError(RegboundError, ValueError):
    """A formula valid only for stable ideals was given a non-stable one."""


class NotArtinianError(RegboundError, ValueError):
    """An operation requiring dim R/I = 0 got a positive-dimensional ideal."""


class InfiniteLengthError(RegboundError, ValueError):
    """A quotient module whose length was requested has positive dimension."""


class GenericityError(RegboundError, RuntimeError):
    """Random sampling failed to reach a generic configuration."""


class ResourceCapExceeded(RegboundError, RuntimeError):
    """A configured computation cap (Buchberger steps, corpus size, ...) was hit."""


class InputError(RegboundError, ValueError):
    """Malformed ideal source text.

    ``code`` is one of ``syntax``, ``unknown-variable``, ``field`` or
    ``inhomogeneous``; ``line``/``column`` are 1-based when known.
    """

    def __init__(self, code, message, line=None, column=None):
        self.code = code
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"[{code}] {message}{where}")
