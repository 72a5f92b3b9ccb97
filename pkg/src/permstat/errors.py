"""Exception types shared across the package."""


class PermstatError(Exception):
    """Base class for all package-specific errors."""


class InvalidPermutationError(PermstatError, ValueError):
    """A word or text input does not describe a permutation of 1..n."""


class InvalidCodeError(PermstatError, ValueError):
    """A tuple falls outside the Lehmer range 0 <= e_j <= j-1."""


class CapExceededError(PermstatError, RuntimeError):
    """An operation would exceed a configured size limit."""


class InternalCheckError(PermstatError, RuntimeError):
    """A built-in cross-check failed; this always indicates a bug."""


class UnsupportedFormatError(PermstatError, ValueError):
    """The requested output format does not apply to this result kind."""
