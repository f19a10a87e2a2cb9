"""Exception types raised across the package."""


class UnsupportedParameterError(ValueError):
    """A parameter value outside the supported domain (e.g. alpha = 1)."""


class DivergenceError(ValueError):
    """The requested moment or integral does not exist for these parameters."""


class ConvergenceError(RuntimeError):
    """An iterative or adaptive routine stopped before reaching its tolerance."""

    def __init__(self, message, *, achieved=None):
        super().__init__(message)
        self.achieved = achieved


class UnsupportedOrderError(ValueError):
    """Meijer-G order above the configured contour-evaluator limit."""


class PoleCollisionError(ValueError):
    """No vertical contour separates the two Gamma pole families."""


class InfeasibleConstraintError(RuntimeError):
    """No Lagrange multiplier in the search bracket meets the amplitude constraint."""
