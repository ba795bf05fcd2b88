"""Exception types shared across the package.

All long-running enumeration routines take explicit caps and raise
CapExceeded rather than running unbounded.  Decision procedures that
cannot certify an answer within their caps raise Undecided instead of
guessing.  PreconditionError marks calls whose mathematical hypotheses
fail (for example applying the translate to a projective module).
"""


class CapExceeded(RuntimeError):
    """An enumeration would exceed its configured resource cap."""


class Undecided(RuntimeError):
    """A decision procedure could not certify an answer within its caps."""


class PreconditionError(ValueError):
    """A mathematical precondition of the call is violated."""
