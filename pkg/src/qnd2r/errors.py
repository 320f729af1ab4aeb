"""Exception types raised by the solver and the protocol simulator."""


class ParseError(ValueError):
    """A malformed line or token was found while reading a data file."""


class ProxConvergenceError(RuntimeError):
    """The inner proximal solver hit its iteration cap before reaching tolerance.

    Carries the gradient-norm residual at termination in ``residual``.
    """

    def __init__(self, message: str, residual: float):
        super().__init__(message)
        self.residual = residual


class ProtocolError(RuntimeError):
    """A message arrived in a state where the protocol does not allow it."""


class DegenerateStepError(RuntimeError):
    """The previous step collapsed to zero; the caller should treat the run as converged."""


class LineSearchError(RuntimeError):
    """Backtracking exhausted its halving budget without sufficient decrease."""
