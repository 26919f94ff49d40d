class CutjoinError(Exception):
    """Base class for every error raised by the cutjoin services."""


class PartitionError(CutjoinError, ValueError):
    """Malformed parts, or an empty partition where a conjugacy class is needed."""


class SizeMismatchError(CutjoinError, ValueError):
    """Objects that must live in the same degree (or ring, or truncation) do not."""


class CharacterConsistencyError(CutjoinError, ArithmeticError):
    """A central character came out non-integral, which means a character value is wrong."""


class RingError(CutjoinError, ArithmeticError):
    """Division by a non-unit, or an exp/log precondition was violated."""


class NoSuchCoverError(CutjoinError, ValueError):
    """The number of simple branch points r = 2g - 2 + |eta| + l(eta) - 2|eta|h is negative."""


class IdentityViolation(CutjoinError, AssertionError):
    """An operation that asserts an identity observed it failing."""


class CacheFormatError(CutjoinError, ValueError):
    """A character-table cache file cannot be parsed or does not match its degree."""


class UnknownSuiteError(CutjoinError, ValueError):
    """A verification suite name that is not registered."""
