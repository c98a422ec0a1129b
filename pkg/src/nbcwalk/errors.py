"""Shared exception types.

PreconditionError marks a call outside an operation's contract, SizeGuardError a
desk-scale enumeration guard (always overridable with force=True), and
VerificationError a certified identity that failed an exact check.
"""


class PreconditionError(ValueError):
    """Arguments violate the operation's stated preconditions."""


class SizeGuardError(RuntimeError):
    """The requested enumeration exceeds a size guard; pass force=True to override."""


class VerificationError(RuntimeError):
    """An exact identity or inequality that the construction certifies did not hold."""
