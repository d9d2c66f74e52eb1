"""Exception types raised across the package."""


class BclError(Exception):
    """Base class for all package errors."""


class NonPhysical(BclError, ValueError):
    """Channel parameters violate the complete-positivity bound."""


class UnsupportedDirection(BclError, ValueError):
    pass


class ModeMismatch(BclError, ValueError):
    pass


class InvalidCovariance(BclError, ValueError):
    pass


class NegativeArgument(BclError, ValueError):
    pass


class DimensionMismatch(BclError, ValueError):
    pass


class NonHermitian(BclError, ValueError):
    pass


class InvalidGrid(BclError, ValueError):
    pass


class SingularReference(BclError, ValueError):
    """Reference state of a relative entropy is (numerically) rank deficient."""


class TruncationBudgetExceeded(BclError, RuntimeError):
    """Population lost to Fock-space truncation exceeds the configured budget.

    Raised instead of renormalizing: silently rescaling a truncated state can
    lower its entropy and fake a violation.
    """

    def __init__(self, lost: float, budget: float, where: str = ""):
        self.lost = lost
        self.budget = budget
        msg = f"truncation lost {lost:.3e} > budget {budget:.3e}"
        if where:
            msg = f"{where}: {msg}"
        super().__init__(msg)
