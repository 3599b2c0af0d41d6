"""Exception types raised when a matrix or parameter fails a physical validity check."""


class StateValidationError(ValueError):
    """Base class for all physical-validity failures."""


class NormalizationError(StateValidationError):
    """Amplitude pair is not normalized to unit total probability."""


class HermiticityError(StateValidationError):
    """Matrix is not Hermitian within tolerance."""


class TraceError(StateValidationError):
    """Density matrix trace deviates from 1 beyond tolerance."""


class PositivityError(StateValidationError):
    """Matrix is not positive semidefinite within tolerance."""


class RangeError(StateValidationError):
    """Scalar parameter lies outside its allowed interval."""


class DegenerateError(StateValidationError):
    """Operation is undefined for this degenerate input (e.g. zero-trace matrix)."""


class NonUnitaryError(StateValidationError):
    """Matrix supplied where a unitary was required is not unitary within tolerance."""
