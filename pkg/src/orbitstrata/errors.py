"""Shared exception types.

Plain ValueError is reserved for malformed construction data (bad shapes in
user files, zero parameters where nonzero is required); the subclasses below
mark violations of an operation's stated requirements on otherwise
well-formed inputs.
"""


class DimensionError(ValueError):
    """Operand shapes are incompatible."""


class FormError(ValueError):
    """A bilinear-form requirement fails (not symmetric, not in sp)."""


class SupportError(ValueError):
    """A functional is not supported on the center of the given Levi."""


class CapabilityError(ValueError):
    """Input exceeds the implemented exhaustive-search range."""


class PreconditionError(ValueError):
    """A semantic precondition fails (non-semisimple input, wrong regime)."""
