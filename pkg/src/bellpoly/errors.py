"""Exception types shared across the package."""


class BellpolyError(Exception):
    """Base class for package errors."""


class DomainError(BellpolyError, ValueError):
    """Input violates a documented precondition (bad label, mismatched n, ...)."""


class FormatError(BellpolyError, ValueError):
    """Malformed or incomplete input file / table."""


class BudgetExceededError(BellpolyError, RuntimeError):
    """A resource-budgeted run stopped early; carries resumable state."""

    def __init__(self, message, checkpoint_path=None, progress=None):
        super().__init__(message)
        self.checkpoint_path = checkpoint_path
        self.progress = progress


class SolverFailure(BellpolyError, RuntimeError):
    """Numerical backend failed or returned an unusable status."""


class CertificateError(BellpolyError, RuntimeError):
    """A dual certificate failed exact re-certification; carries the raw dual."""

    def __init__(self, message, raw_dual=None):
        super().__init__(message)
        self.raw_dual = raw_dual


class ConstructionError(BellpolyError, RuntimeError):
    """Symbolic construction failed (e.g. a non-confluent rewrite system)."""
