"""Exception types shared across the package.

Plain ``ValueError`` is used for caller mistakes (mismatched variable sets,
inhomogeneous input where a graded class is required); the classes below mark
the structured failure modes that the verification checks report on.
"""


class UnsupportedRange(ValueError):
    """An operation was asked for a parameter outside its declared domain."""


class NotTopDegree(ValueError):
    """The degree map was applied to a class not of top codimension."""


class CheckFailed(RuntimeError):
    """A verified identity failed; computed data contradicts the expected law."""


class NonIntegralResult(ArithmeticError):
    """An exact division left a remainder where none is permitted."""
