"""Exception types shared across the package."""


class InvalidArgumentError(ValueError):
    """Raised for malformed inputs: wrong shapes, non-Hermitian matrices, bad indices."""


class InvalidStateError(ValueError):
    """Raised when parameters do not describe a physical (PSD, unit-trace) state.

    Attributes
    ----------
    min_eigenvalue : float or None
        The most negative eigenvalue found, if known.
    label : str or None
        Name of the offending eigenvalue, e.g. ``"lambda_10"``.
    """

    def __init__(self, message, min_eigenvalue=None, label=None):
        super().__init__(message)
        self.min_eigenvalue = min_eigenvalue
        self.label = label


class OptimizerFailureError(RuntimeError):
    """Raised when an optimized discord comes out negative beyond float noise."""
