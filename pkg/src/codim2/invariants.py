"""Candidate numerical invariants and their derived spectral data.

A candidate is the integer tuple (n, d, e, s): ambient dimension of the
projective space, degree of the subvariety X, speciality (the twist in
omega_X = O_X(e)) and the least degree s of a hypersurface containing X.
In the subcanonical situation X is the zero locus of a rank-two bundle E
with c1(E) = e+n+1 and c2(E) = d; every gate works with the normalized
bundle E(-1), whose Chern classes are

    C1 = e+n-1,    C2 = d-e-n,    Delta = C1^2 - 4*C2.

The sign of Delta selects how the Chern roots of E(-1) are parametrized:

  * Delta > 0 (hyperbolic): roots a = rho*exp(-t), b = rho*exp(t) with
    rho = sqrt(C2) and t > 0, so 2*rho*cosh(t) = C1;
  * Delta = 0 (parabolic): double root rho = C1/2, an exact integer;
  * Delta < 0 (elliptic): t = i*theta with theta in (0, pi), so
    2*rho*cos(theta) = C1.

Two further derived integers recur throughout: z = d - s*(e+n+1) + s^2,
the degree of the residual scheme linked to X on a degree-s hypersurface
(z = 0 exactly for complete intersections), and q = min(s, e+n), the
twist used by the positivity sequence.

All values are exact integers except the spectral data, which lives in
the high-precision real kernel.  Everything here is immutable and pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Optional

from mpmath import acos, log, mpf, sqrt

from .errors import NonPositiveC2
from .precision import WORKING_DPS, working_precision


class Regime(str, Enum):
    """Parametrization regime, tagged by the sign of Delta."""

    HYPERBOLIC = "Hyperbolic"
    PARABOLIC = "Parabolic"
    ELLIPTIC = "Elliptic"


class GateStatus(str, Enum):
    PASS = "Pass"
    FAIL = "Fail"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True, slots=True)
class Invariants:
    """Candidate tuple (n, d, e, s) with its derived exact quantities."""

    n: int
    d: int
    e: int
    s: int

    def __post_init__(self):
        if self.n < 4:
            raise ValueError(f"ambient dimension n must be >= 4, got {self.n}")
        if self.d < 1:
            raise ValueError(f"degree d must be >= 1, got {self.d}")
        if self.s < 1:
            raise ValueError(f"hypersurface degree s must be >= 1, got {self.s}")

    @property
    def z(self) -> int:
        """Degree of the residual scheme: d - s*(e+n+1) + s^2."""
        return self.d - self.s * (self.e + self.n + 1) + self.s * self.s

    @property
    def q(self) -> int:
        """Twist q = min(s, e+n) used by the positivity sequence."""
        return min(self.s, self.e + self.n)


@dataclass(frozen=True, slots=True)
class NormalizedChern:
    """Chern data (C1, C2, Delta) of the normalized bundle E(-1)."""

    c1: int
    c2: int
    delta: int

    def __post_init__(self):
        if self.delta != self.c1 * self.c1 - 4 * self.c2:
            raise ValueError("delta must equal c1^2 - 4*c2")

    @property
    def regime(self) -> Regime:
        if self.delta > 0:
            return Regime.HYPERBOLIC
        if self.delta == 0:
            return Regime.PARABOLIC
        return Regime.ELLIPTIC

    def is_square_discriminant(self) -> bool:
        """True when Delta is a perfect square (split Chern polynomial)."""
        if self.delta < 0:
            return False
        r = math.isqrt(self.delta)
        return r * r == self.delta

    def chern_polynomial_at(self, x: int) -> int:
        """Evaluate x^2 - C1*x + C2 exactly."""
        return x * x - self.c1 * x + self.c2


def normalize(inv: Invariants) -> NormalizedChern:
    """Chern data of E(-1) for a candidate: C1 = e+n-1, C2 = d-e-n."""
    c1 = inv.e + inv.n - 1
    c2 = inv.d - inv.e - inv.n
    return NormalizedChern(c1, c2, c1 * c1 - 4 * c2)


@dataclass(frozen=True)
class SpectralData:
    """Chern-root parametrization (rho, t or theta) of a normalized bundle.

    rho is sqrt(C2); t_or_theta holds t > 0 in the hyperbolic regime and
    theta in (0, pi) in the elliptic one (absent for parabolic).  a <= b
    are the real roots in the hyperbolic regime.  sigma = sqrt(z) is
    attached only when the caller supplies a nonnegative z; delta_half is
    sqrt(-Delta)/2 in the elliptic regime.
    """

    regime: Regime
    rho: Any
    t_or_theta: Optional[Any] = None
    a: Optional[Any] = None
    b: Optional[Any] = None
    sigma: Optional[Any] = None
    delta_half: Optional[Any] = None


def spectral(nc: NormalizedChern, z: Optional[int] = None) -> SpectralData:
    """Parametrize the Chern roots of a normalized bundle.

    Requires C2 > 0 (raises NonPositiveC2 otherwise; callers fall back to
    the exact-integer gates).  In the parabolic and hyperbolic regimes the
    roots are positive reals, which forces C1 > 0.  Pass z >= 0 to attach
    sigma = sqrt(z).
    """
    if nc.c2 <= 0:
        raise NonPositiveC2(f"C2 = {nc.c2} <= 0: spectral parametrization undefined")
    with working_precision():
        rho = sqrt(mpf(nc.c2))
        sigma = sqrt(mpf(z)) if (z is not None and z >= 0) else None
        if nc.delta > 0:
            if nc.c1 <= 0:
                raise ValueError(
                    f"C1 = {nc.c1} <= 0 with Delta > 0: roots are not positive reals"
                )
            sd = sqrt(mpf(nc.delta))
            b = (nc.c1 + sd) / 2
            a = mpf(nc.c2) / b
            t = log(b / rho)
            return SpectralData(Regime.HYPERBOLIC, rho, t, a, b, sigma, None)
        if nc.delta == 0:
            r = math.isqrt(nc.c2)
            # Delta = 0 forces C2 = (C1/2)^2, so rho is an exact integer.
            if r * r != nc.c2 or nc.c1 != 2 * r:
                raise ValueError(
                    f"(C1, C2) = ({nc.c1}, {nc.c2}) with Delta = 0: "
                    "double root is not a positive integer"
                )
            return SpectralData(Regime.PARABOLIC, mpf(r), None, mpf(r), mpf(r), sigma, None)
        theta = acos(mpf(nc.c1) / (2 * rho))
        delta_half = sqrt(mpf(-nc.delta)) / 2
        return SpectralData(Regime.ELLIPTIC, rho, theta, None, None, sigma, delta_half)


@dataclass(frozen=True)
class GateReport:
    """Verdict of one gate with its exact witnesses and provenance.

    witness is a tuple of (name, value) pairs; values are exact integers
    or rationals wherever the gate is rationalized, high-precision reals
    for the genuinely transcendental comparisons.  citation states the
    mathematical condition the gate enforces, so a report is readable
    without any external context.
    """

    gate_id: str
    status: GateStatus
    witness: tuple
    citation: str

    def __post_init__(self):
        if not self.witness:
            raise ValueError(f"gate {self.gate_id}: at least one witness required")

    @property
    def passed(self) -> bool:
        return self.status is GateStatus.PASS

    @property
    def failed(self) -> bool:
        return self.status is GateStatus.FAIL

    def witness_value(self, name: str):
        for key, value in self.witness:
            if key == name:
                return value
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "gate_id": self.gate_id,
            "status": self.status.value,
            "witness": [[k, _jsonable(v)] for k, v in self.witness],
            "citation": self.citation,
        }


def _jsonable(value):
    """Render a witness value for JSON output (exact where possible)."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else str(value)
    if isinstance(value, (tuple, list)):
        return [_jsonable(v) for v in value]
    if isinstance(value, str):
        return value
    # high-precision reals are reported rounded to 6 decimals
    return round(float(value), 6)
