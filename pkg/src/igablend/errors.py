"""Exception types shared across the package."""


class NumericalFailureError(RuntimeError):
    """A numerical procedure failed (non-convergence, loss of definiteness)."""


class NoRootError(NumericalFailureError):
    """A root bracket could not be established for a scalar search."""


class InconclusiveFitError(NumericalFailureError):
    """Sampled data did not support the requested asymptotic fit."""


class DegenerateFitError(NumericalFailureError):
    """Too few usable data points remained to fit a convergence rate."""
