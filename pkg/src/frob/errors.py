"""Exception hierarchy.

Domain errors (bad input, undefined quantity) derive from :class:`DomainError`
and map to CLI exit code 2.  :class:`InternalInconsistency` means a computed
value violated an exactness check and maps to exit code 3.
"""


class FrobError(Exception):
    pass


class DomainError(FrobError, ValueError):
    """A precondition on the arguments was violated."""


class NotCoprime(DomainError):
    pass


class InvalidWeight(DomainError):
    pass


class OutOfValidatedRange(DomainError):
    """Closed forms are only established for 0 <= p <= floor(a/2)."""


class EmptySet(DomainError):
    """No integer has at most p representations, so g_p is undefined."""


class InternalInconsistency(FrobError, ArithmeticError):
    """An expression that must be an integer came out fractional."""
