"""Exception types shared across the package."""


class Codim2Error(Exception):
    """Base class for all package-specific errors."""


class NonPositiveC2(Codim2Error, ValueError):
    """Spectral parametrization requested with C2 <= 0 (rho undefined)."""


class DegenerateZ(Codim2Error, ValueError):
    """alpha requested for a candidate with z <= 0 (sigma undefined)."""


class RootOrderViolated(Codim2Error, ValueError):
    """The hypothesis s-1 < smaller Chern root fails, so the defining
    equation for alpha has no solution; reported, never guessed around."""


class IdentityViolation(Codim2Error, RuntimeError):
    """The four-ratio identity failed at a solved alpha.  This indicates an
    implementation bug, never a legitimate verdict on a candidate."""


class PrecisionExhausted(Codim2Error, ArithmeticError):
    """A transcendental comparison margin fell below the guard threshold.
    Ties cannot genuinely occur (the thresholds are irrational), so the
    gate aborts loudly instead of guessing a sign."""


class NotFoundWithinLimit(Codim2Error, LookupError):
    """A bounded search exhausted its candidate range without a hit."""


class CapExceeded(Codim2Error, RuntimeError):
    """A scan would enumerate more tuples than the configured cap."""


class DomainError(Codim2Error, ValueError):
    """Argument outside the mathematical domain of the operation."""
