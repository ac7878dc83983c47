"""Exception types shared across the package."""


class NewtonForgeError(Exception):
    """Base class for every package-specific error."""


class DetZeroError(NewtonForgeError):
    """The exponent matrix is singular over the rationals."""


class NotInConeError(NewtonForgeError):
    """A lattice point lies outside the nonnegative span of the exponent vectors."""


class NotPrimeError(NewtonForgeError):
    """The characteristic is not a prime number."""


class NotCoprimeError(NewtonForgeError):
    """The characteristic divides the determinant of the exponent matrix."""


class NotInDomainError(NewtonForgeError):
    """A point handed to the p-action has coordinates outside [0, 1)^n."""


class HodgeMismatchError(NewtonForgeError):
    """The two independent Hodge-number computations disagree (internal bug guard)."""


class MissingEndpointError(NewtonForgeError):
    """Valuation data lacks a usable left or right polygon endpoint."""


class RangeMismatchError(NewtonForgeError):
    """Two polygons being compared do not span the same horizontal range."""


class NotPolynomialError(NewtonForgeError):
    """The exponential of the power-sum series does not truncate at the expected degree."""


class NotIntegralError(NewtonForgeError):
    """A coefficient that must be a cyclotomic integer has a nontrivial denominator."""


class TraceNotInPrimeFieldError(NewtonForgeError):
    """A Frobenius orbit sum failed to land in the prime field (internal bug guard)."""


class InvalidInstanceError(NewtonForgeError):
    """A problem-instance document is malformed or violates an input invariant."""


class BudgetExceededError(NewtonForgeError):
    """A torus enumeration would exceed the configured evaluation budget."""

    def __init__(self, size: int, budget: int):
        super().__init__(f"torus has {size} points, budget is {budget}")
        self.size = size
        self.budget = budget
