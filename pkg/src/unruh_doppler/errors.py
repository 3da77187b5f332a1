"""Exception types shared by the numerical modules."""


class DomainError(ValueError):
    """An argument lies outside the domain of the requested quantity."""


class ConvergenceError(ArithmeticError):
    """A quadrature or extrapolation did not reach its tolerance.

    ``residual`` carries the worst error estimate that was achieved.
    """

    def __init__(self, message, residual=float("nan")):
        super().__init__(message)
        self.residual = residual
