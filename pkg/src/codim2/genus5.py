"""Sectional-genus constraints for threefolds in projective 5-space.

This is the non-subcanonical side of the toolkit: a candidate is the
triple (d, s, pi) of degree, minimal containing-hypersurface degree and
sectional genus.  The central quantity is

    mu = d(s^2 - 4s + d) - s(2 pi - 2),

which must satisfy 0 <= mu <= s(s-1)^3; complete intersections sit at
mu = 0.  Rearranged in pi, the window is an interval of rational length
(s-1)^3 / 2 depending only on s.

Two Euler-characteristic evaluations for the curve section's ideal
sheaf on a degree-s surface accompany the bound.  chi_oracle is the
normative one, assembled from the standard exact-sequence decomposition

    chi(I(m)) = [binom(m+3,3) - binom(m-s+3,3)] - [dm + 1 - pi].

chi_fractional evaluates the compact closed form

    binom(s+eps, 3) - binom(eps, 3) - mu/(2s),   eps = d/s - floor(d/s),

with generalized (cubic-polynomial) binomials at rational arguments;
this is the evaluation at twist m = floor(d/s).  The two differ by a
constant offset for some (s, eps) classes; the offset is independent of
pi, and discrepancy_table reports it instead of deciding which
normalization was intended.  All arithmetic is over exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .invariants import GateReport, GateStatus

MU_CITATION = (
    "sectional-genus window: 0 <= mu <= s(s-1)^3 with "
    "mu = d(s^2-4s+d) - s(2 pi - 2), assuming the threefold is not "
    "contained in the singular locus of the degree-s hypersurface"
)


@dataclass(frozen=True, slots=True)
class P5Candidate:
    """Numerical data (d, s, pi) of a threefold section in P^5."""

    d: int
    s: int
    pi: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"degree d must be >= 1, got {self.d}")
        if self.s < 1:
            raise ValueError(f"hypersurface degree s must be >= 1, got {self.s}")
        if self.pi < 0:
            raise ValueError(f"sectional genus must be >= 0, got {self.pi}")


def mu(c: P5Candidate) -> int:
    """mu = d(s^2 - 4s + d) - s(2 pi - 2), exactly."""
    return c.d * (c.s * c.s - 4 * c.s + c.d) - c.s * (2 * c.pi - 2)


def mu_gate(c: P5Candidate) -> GateReport:
    """Pass iff 0 <= mu <= s(s-1)^3."""
    value = mu(c)
    upper = c.s * (c.s - 1) ** 3
    ok = 0 <= value <= upper
    witness = (("mu", value), ("upper", upper))
    return GateReport(
        "mu", GateStatus.PASS if ok else GateStatus.FAIL, witness, MU_CITATION
    )


def genus_interval(d: int, s: int) -> Tuple[Fraction, Fraction]:
    """The admissible window (pi_min, pi_max) for the sectional genus.

    pi_max = 1 + d(s^2-4s+d)/(2s) comes from mu >= 0; pi_min is pi_max
    minus (s-1)^3/2, from mu <= s(s-1)^3.  Exact rationals; the length
    is identically (s-1)^3/2.
    """
    if d < 1 or s < 1:
        raise ValueError(f"d and s must be >= 1, got d={d}, s={s}")
    pi_max = 1 + Fraction(d * (s * s - 4 * s + d), 2 * s)
    pi_min = pi_max - Fraction((s - 1) ** 3, 2)
    return pi_min, pi_max


def binom3(x) -> Fraction:
    """Generalized binomial binom(x, 3) = x(x-1)(x-2)/6 over rationals."""
    x = Fraction(x)
    return x * (x - 1) * (x - 2) / 6


def chi_oracle(d: int, s: int, pi: int, m: int) -> Fraction:
    """chi of the curve section's ideal sheaf on a degree-s surface, twist m.

    [binom(m+3,3) - binom(m-s+3,3)] counts degree-m forms on the surface;
    subtracting the Hilbert polynomial dm + 1 - pi of the curve gives chi.
    Integer-valued for integer inputs.
    """
    if m < 0:
        raise ValueError(f"twist m must be >= 0, got {m}")
    return binom3(m + 3) - binom3(m - s + 3) - (d * m + 1 - pi)


def chi_fractional_from_mu(d: int, s: int, mu_value) -> Fraction:
    """binom(s+eps,3) - binom(eps,3) - mu/(2s) with eps = d/s - floor(d/s)."""
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    eps = Fraction(d, s) - (d // s)
    return binom3(s + eps) - binom3(eps) - Fraction(mu_value, 2 * s)


def chi_fractional(d: int, s: int, pi: int) -> Fraction:
    """The compact closed form evaluated from (d, s, pi) via mu."""
    return chi_fractional_from_mu(d, s, mu(P5Candidate(d, s, pi)))


def discrepancy_table(
    s_range: Tuple[int, int] = (2, 8), d_multiple: int = 6
) -> List[Tuple[int, int, Fraction, Fraction]]:
    """Rows (s, d, eps, chi_fractional - chi_oracle) at twist m = floor(d/s).

    The offset does not depend on pi (both evaluations carry pi with
    coefficient +1), so it is computed at pi = 1.  Emitted for audit;
    nothing here asserts the offset to be zero.
    """
    rows = []
    pi = 1
    for s in range(s_range[0], s_range[1] + 1):
        for d in range(s, d_multiple * s + 1):
            m = d // s
            eps = Fraction(d, s) - m
            offset = chi_fractional(d, s, pi) - chi_oracle(d, s, pi, m)
            rows.append((s, d, eps, offset))
    return rows
