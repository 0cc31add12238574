"""Exception types shared across the package."""


class ContextMismatchError(ValueError):
    """Operands were created under different arithmetic contexts."""


class NonUnitError(ArithmeticError):
    """Inversion was requested for an element of positive valuation."""


class PrecisionExhaustedError(ArithmeticError):
    """A decision depends on coefficients beyond the precision cap and the
    exactness flags cannot certify them."""


class NoSolutionError(ValueError):
    """A linear system has no solution over O; carries a witness row where
    divisibility fails."""

    def __init__(self, message, witness_row=None):
        super().__init__(message)
        self.witness_row = witness_row


class AlgorithmFailureError(RuntimeError):
    """An a-posteriori verification step rejected a computed answer."""


class NotIdempotentError(ValueError):
    """Idempotent lifting was given a non-idempotent seed (or a trivial one)."""


class StabilizationFailureError(RuntimeError):
    """The reduction-pattern probe did not stabilize below the precision cap."""


class ProjectiveInputError(ValueError):
    """An operation defined only for non-projective lattices got a projective one."""


class PropertyStarError(ValueError):
    """The lattice does not become projective after inverting epsilon."""


class NotLocalError(ValueError):
    """An operation requiring a local endomorphism ring got a non-local one."""


class NoPhiExistsError(RuntimeError):
    """The socle search found no morphism outside the factoring subspace."""


class CertificationFailureError(RuntimeError):
    """An almost split sequence candidate failed one of its certificates."""

    def __init__(self, message, failed=()):
        super().__init__(message)
        self.failed = tuple(failed)


class BudgetExceededError(RuntimeError):
    """Component exploration hit the vertex-count cap."""


class InconclusiveError(RuntimeError):
    """Exploration depth is too small to witness the queried property."""
