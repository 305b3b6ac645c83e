################## Exceptions ####################

# Input-domain errors derive from ValueError as well, so callers that only know about
#   ValueError still catch them. VerificationError flags a failed internal self-check.


class LREmbedError(Exception):
    """Base class for all errors raised by lrembed."""


class NotIncreasingError(LREmbedError, ValueError):
    """A partition sequence is not increasing (some gamma^h does not contain gamma^(h-1))."""


class StripError(LREmbedError, ValueError):
    """A step of a partition sequence is not a horizontal strip (a part grows by 2 or more)."""


class NotLRError(LREmbedError, ValueError):
    """A partition sequence that must be an LR sequence is not one."""


class WeightMismatchError(LREmbedError, ValueError):
    """The weights of a triple (alpha, beta, gamma) do not satisfy |alpha| + |gamma| = |beta|."""


class PrimeError(LREmbedError, ValueError):
    """The given modulus is not a prime."""


class PrimeMismatchError(LREmbedError, ValueError):
    """Two modules over different primes were combined."""


class ElementRangeError(LREmbedError, ValueError):
    """An element has the wrong length or a coordinate outside 0 <= c < p^lambda_i."""


class NotSemisimpleError(LREmbedError, ValueError):
    """A submodule that must be killed by p is not."""


class NotP2BoundedError(LREmbedError, ValueError):
    """A submodule that must be killed by p^2 is not."""


class SummandRangeError(LREmbedError, ValueError):
    """Parameters of an indecomposable P(l,m) or Q(l,s) are out of range."""


class PreconditionError(LREmbedError, ValueError):
    """A documented precondition of a construction step does not hold."""


class BoundExceededError(LREmbedError, ValueError):
    """A brute-force routine was asked to work on a module above its configured size bound."""


class VerificationError(LREmbedError, RuntimeError):
    """An internal self-check failed. This indicates a bug, not bad input."""


class PartitionError(LREmbedError, ValueError):
    """Malformed partition: negative, non-integer or increasing parts."""


class InputFormatError(LREmbedError, ValueError):
    """JSON input that cannot be read or does not have the documented shape."""
