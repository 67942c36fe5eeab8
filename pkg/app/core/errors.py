"""Exception hierarchy shared by every service.

Each error carries a short ``code`` used in JSON error output; the command
layer maps any ``MaciasError`` to exit status 2.
"""


class MaciasError(Exception):
    code = "error"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class UnsupportedForRing(MaciasError):
    code = "unsupported_for_ring"


class ZeroElement(MaciasError):
    code = "zero_element"


class SizeLimit(MaciasError):
    code = "size_limit"


class IndexBeyondFinitePrimes(MaciasError):
    code = "index_beyond_finite_primes"


class NoPrimeOutside(MaciasError):
    code = "no_prime_outside"


class NotHomeomorphicPrecondition(MaciasError):
    code = "not_homeomorphic_precondition"


class PreconditionHomeomorphic(MaciasError):
    code = "precondition_homeomorphic"


class LiteralParseError(MaciasError):
    code = "literal_parse_error"


class RingMismatch(MaciasError):
    code = "ring_mismatch"


class InvariantViolation(MaciasError):
    code = "invariant_violation"


class UsageError(MaciasError):
    code = "usage_error"
