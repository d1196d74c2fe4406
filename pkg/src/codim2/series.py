"""Truncated power series over exact rationals and the positivity sequence.

The positivity sequence u_0, u_1, ... attached to a candidate tuple is
the coefficient sequence of the rational generating series

    (1 + c1L*t) / (1 - C1*t + C2*t^2)

where (C1, C2) are the normalized Chern classes and c1L = q - e - n with
q = min(s, e+n), so that u_0 = 1 and u_1 = q - 1.  When s >= e+n the
numerator collapses to 1 and the u_i coincide with the Segre numbers s_i
of the normalized bundle.

Three independent routes compute the sequence:

  * exact long division of truncated series over Fraction,
  * the integer two-term recurrence u_i = C1*u_{i-1} - C2*u_{i-2},
  * closed forms in the spectral (rho, t / theta) parametrization.

The recurrence is the fast production route; the other two exist to
cross-check it.  The minus sign in front of C2 is forced by expanding
the generating series, and it is the sign that reproduces the low-order
specializations u_2 = (s-1)^2 - z, u_3 = (s-1)^3 - z(e+n+s-2) and
u_4 = u_2^2 - z(e+n-1)^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence, Union

from mpmath import mpf, nint, sin, sinh

from .errors import PrecisionExhausted
from .invariants import Invariants, Regime, SpectralData, normalize, spectral
from .precision import working_precision

Rational = Union[int, Fraction]


class TruncatedSeries:
    """Univariate power series over Fraction, truncated at a fixed order.

    The ambient ring is Q[t]/(t^(order+1)); multiplication and inversion
    are exact and drop every term beyond the truncation order.
    """

    __slots__ = ("coefficients", "order")

    def __init__(self, coefficients: Sequence[Rational], order: int):
        if order < 0:
            raise ValueError(f"truncation order must be >= 0, got {order}")
        coeffs = [Fraction(c) for c in coefficients[: order + 1]]
        coeffs.extend([Fraction(0)] * (order + 1 - len(coeffs)))
        self.coefficients = coeffs
        self.order = order

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coefficients == other.coefficients

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.coefficients!r}, order={self.order})"

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if self.order != other.order:
            raise ValueError("cannot multiply series of different truncation orders")
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.coefficients[j]
                if b != 0:
                    out[i + j] += a * b
        return TruncatedSeries(out, n)

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires an invertible constant term."""
        a0 = self.coefficients[0]
        if a0 == 0:
            raise ZeroDivisionError("series with zero constant term has no inverse")
        n = self.order
        inv = [Fraction(0)] * (n + 1)
        inv[0] = Fraction(1) / a0
        for k in range(1, n + 1):
            acc = Fraction(0)
            for j in range(1, k + 1):
                acc += self.coefficients[j] * inv[k - j]
            inv[k] = -acc / a0
        return TruncatedSeries(inv, n)

    def __truediv__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self * other.inverse()


def positivity_series(
    c1: Rational, c2: Rational, c1l: Rational, order: int
) -> TruncatedSeries:
    """Expand (1 + c1l*t) / (1 - c1*t + c2*t^2) to the given order.

    Coefficient i is the class u_i in Q[t]/(t^(order+1)); for integer
    Chern data every coefficient is an integer, but the division is done
    over exact rationals so the routine stays usable for rational data.
    """
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    numerator = TruncatedSeries([1, c1l], order)
    denominator = TruncatedSeries([1, -Fraction(c1), Fraction(c2)], order)
    return numerator / denominator


class USource(str, Enum):
    RECURRENCE = "Recurrence"
    SERIES_DIVISION = "SeriesDivision"
    CLOSED_FORM = "ClosedForm"


@dataclass(frozen=True)
class USequence:
    """Exact integer values u_0..u_m with their computation provenance."""

    values: tuple
    source: USource
    q_used: int

    def __post_init__(self):
        if not self.values or self.values[0] != 1:
            raise ValueError("u_0 must equal 1")

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    def __len__(self) -> int:
        return len(self.values)


def u_recurrence(inv: Invariants, upto: int) -> USequence:
    """u_0 = 1, u_1 = q-1, then u_i = C1*u_{i-1} - C2*u_{i-2}, exactly.

    C1 = e+n-1 and C2 = d-e-n are the normalized Chern classes and
    q = min(s, e+n); when s >= e+n the sequence equals the Segre numbers.
    """
    if upto < 1:
        raise ValueError(f"upto must be >= 1, got {upto}")
    nc = normalize(inv)
    q = inv.q
    values = [1, q - 1]
    for _ in range(2, upto + 1):
        values.append(nc.c1 * values[-1] - nc.c2 * values[-2])
    return USequence(tuple(values), USource.RECURRENCE, q)


def u_closed_form(sd: SpectralData, s: int, k: int) -> mpf:
    """Evaluate u_k from the spectral parametrization, as a real.

    Hyperbolic: rho^k [ (s-1)/rho * sinh(kt)/sinh(t) - sinh((k-1)t)/sinh(t) ].
    Elliptic: same shape with sin and theta.
    Parabolic: rho^k [ k(s-1)/rho - (k-1) ].
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    with working_precision():
        rho = sd.rho
        if sd.regime is Regime.PARABOLIC:
            return rho**k * (k * (s - 1) / rho - (k - 1))
        wave = sinh if sd.regime is Regime.HYPERBOLIC else sin
        t = sd.t_or_theta
        return rho**k * ((s - 1) / rho * wave(k * t) - wave((k - 1) * t)) / wave(t)


def segre_closed_form(sd: SpectralData, k: int) -> mpf:
    """Segre number s_k = rho^k sinh((k+1)t)/sinh(t), as a real.

    Elliptic regime substitutes sin and theta; parabolic degenerates to
    rho^k (k+1).
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    with working_precision():
        rho = sd.rho
        if sd.regime is Regime.PARABOLIC:
            return rho**k * (k + 1)
        wave = sinh if sd.regime is Regime.HYPERBOLIC else sin
        t = sd.t_or_theta
        return rho**k * wave((k + 1) * t) / wave(t)


def _round_to_int(value: mpf, context: str) -> int:
    """Round a closed-form real to its exact integer value, guarded."""
    with working_precision():
        rounded = int(nint(value))
        tolerance = max(mpf("0.5"), mpf("1e-9") * abs(value))
        if abs(value - rounded) > tolerance:
            raise PrecisionExhausted(
                f"{context}: {value} is not within {tolerance} of an integer"
            )
        return rounded


def u_sequence(
    inv: Invariants, upto: int, source: USource = USource.RECURRENCE
) -> USequence:
    """Compute u_0..u_upto by the requested route.

    Recurrence and SeriesDivision are exact and agree identically;
    ClosedForm evaluates in the spectral parametrization (requires
    C2 > 0) and rounds to the nearest integer.  When q = e+n differs
    from s the closed-form route evaluates the Segre formula, since the
    twisted numerator is trivial there.
    """
    if upto < 1:
        raise ValueError(f"upto must be >= 1, got {upto}")
    if source is USource.RECURRENCE:
        return u_recurrence(inv, upto)
    nc = normalize(inv)
    if source is USource.SERIES_DIVISION:
        c1l = inv.q - inv.e - inv.n
        ts = positivity_series(nc.c1, nc.c2, c1l, upto)
        values = []
        for i, c in enumerate(ts.coefficients):
            if c.denominator != 1:
                raise ArithmeticError(f"non-integer coefficient u_{i} = {c}")
            values.append(int(c))
        return USequence(tuple(values), USource.SERIES_DIVISION, inv.q)
    sd = spectral(nc)
    values = []
    for k in range(upto + 1):
        if inv.q == inv.s:
            r = u_closed_form(sd, inv.s, k)
        else:
            r = segre_closed_form(sd, k)
        values.append(_round_to_int(r, f"u_{k}"))
    return USequence(tuple(values), USource.CLOSED_FORM, inv.q)
