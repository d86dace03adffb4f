"""Exception hierarchy.

The CLI maps these onto exit codes: config problems -> 2, numeric/invariant
failures -> 3, out-of-regime parameter combinations -> 4.
"""


class GeophaseError(Exception):
    """Base class for all package-specific errors."""


class DimensionMismatchError(GeophaseError):
    """Operands with incompatible dimensions."""


class NonHermitianError(GeophaseError):
    """A matrix required to be Hermitian fails the tolerance check."""


class StateInvariantError(GeophaseError):
    """A quantum-state invariant (trace, Hermiticity, positivity, norm) is violated."""


class IntegrationError(GeophaseError):
    """The integrator exceeded its step budget or the step size underflowed."""


class InvariantDriftError(GeophaseError):
    """An integrated trajectory drifted past the allowed trace/positivity bounds.

    Carries the measured drifts so callers can report magnitudes.
    """

    def __init__(self, message: str, **drifts: float):
        super().__init__(message)
        self.drifts = drifts


class PhaseUndefinedError(GeophaseError):
    """Phase extraction requested from a state with (near-)zero DFS coherence."""


class OutOfRegimeError(GeophaseError):
    """A first-order formula was evaluated outside its domain of validity."""


class ConvergenceError(GeophaseError):
    """A truncation-convergence or fit-quality check failed."""


class ConfigError(GeophaseError):
    """Malformed, incomplete, or inconsistent run configuration."""
