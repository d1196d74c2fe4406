"""Root finding for the exponent alpha and the minimizer m(alpha).

alpha is the unique positive solution of

    sinh((alpha+1) t) / sinh(alpha t) = rho / (s-1)

in the hyperbolic regime, with sin and theta substituted in the elliptic
regime and the exact degeneration alpha = (s-1)/sigma, sigma = rho-s+1,
in the parabolic one.  The left side is strictly decreasing in alpha, so
bisection gives a guaranteed enclosure; no Newton steps are used.

Every solved alpha satisfies the four-ratio chain

    sigma/sh(t) = (s-1)/sh(alpha t) = rho/sh((alpha+1) t)
               = (e+n-s)/sh((alpha+2) t)

(sh meaning sinh or sin by regime), which this module re-derives and
asserts as an internal consistency check: a violation signals a bug in
the solver, never a legitimate verdict about a candidate.

m(alpha) is the minimum of phi(x) = sin(alpha x)/(sin x sin((alpha+1) x))
on (0, pi/(alpha+1)), attained at the angle beta where
sin((alpha+1) beta)/sin(beta) = sqrt(alpha+1).  It feeds the elliptic
lower bound s-1 >= (sqrt(-Delta)/2) m(n-3).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List

from mpmath import mpf, pi, sin, sinh, sqrt

from .errors import DegenerateZ, DomainError, IdentityViolation, RootOrderViolated
from .invariants import Invariants, Regime, SpectralData, normalize, spectral
from .precision import working_precision

#: Bisection step count; halving 220 times leaves an enclosure far below
#: the 60-digit working precision, so residuals are rounding-level.
BISECT_ITERATIONS = 220

#: Pairwise relative tolerance for the four-ratio identity.
RATIO_RTOL = mpf("1e-9")


@dataclass(frozen=True)
class AlphaSolution:
    """A solved alpha with its residual and the four consistency ratios."""

    alpha: mpf
    regime: Regime
    residual: mpf
    panoplie_ratios: tuple

    @property
    def ratio_value(self) -> mpf:
        return self.panoplie_ratios[0]


@dataclass(frozen=True)
class MinimizerResult:
    """Minimum of phi on (0, pi/(alpha+1)) and the critical angle beta."""

    alpha: mpf
    beta: mpf
    m_value: mpf


def _bisect_decreasing(
    f: Callable[[mpf], mpf], lo: mpf, hi: mpf, target: mpf
) -> mpf:
    """Solve f(x) = target for strictly decreasing f on a bracket [lo, hi]."""
    flo, fhi = f(lo), f(hi)
    if not (flo > target > fhi):
        raise ValueError(
            f"bracket does not enclose target: f({lo})={flo}, f({hi})={fhi}, "
            f"target={target}"
        )
    for _ in range(BISECT_ITERATIONS):
        mid = (lo + hi) / 2
        if f(mid) > target:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def _pairwise_agree(ratios) -> None:
    for i in range(len(ratios)):
        for j in range(i + 1, len(ratios)):
            scale = max(abs(ratios[i]), abs(ratios[j]), mpf(1))
            if abs(ratios[i] - ratios[j]) > RATIO_RTOL * scale:
                raise IdentityViolation(
                    f"ratio chain broken: position {i} gives {ratios[i]} but "
                    f"position {j} gives {ratios[j]}"
                )


def _ratio_chain(alpha, sd: SpectralData, inv: Invariants) -> tuple:
    """Evaluate the four-ratio chain at a given alpha.

    In the elliptic regime with s = e+n both the numerator e+n-s and the
    denominator sin((alpha+2) theta) vanish; the fourth ratio is then
    dropped rather than assigned a limit.
    """
    s, ens = inv.s, inv.e + inv.n - inv.s
    z = inv.z
    with working_precision():
        if sd.regime is Regime.PARABOLIC:
            sigma = sd.rho - (s - 1)
            alpha = mpf(alpha)
            return (alpha + 2, ens / sigma, sd.rho / sigma + 1, (s - 1) / sigma + 2)
        wave = sinh if sd.regime is Regime.HYPERBOLIC else sin
        w = sd.t_or_theta
        sigma = sqrt(mpf(z))
        ratios = [
            sigma / wave(w),
            (s - 1) / wave(alpha * w),
            sd.rho / wave((alpha + 1) * w),
        ]
        denom = wave((alpha + 2) * w)
        if not (abs(ens) <= mpf("1e-9") and abs(denom) <= mpf("1e-9")):
            ratios.append(ens / denom)
        return tuple(ratios)


def solve_alpha(sd: SpectralData, inv: Invariants) -> AlphaSolution:
    """Solve the defining equation of alpha for one candidate.

    Requires z > 0 and s >= 2.  In the hyperbolic and parabolic regimes
    the equation is solvable only when s-1 lies strictly below the small
    root, which for z > 0 amounts to the exact test 2(s-1) < C1; when it
    fails the hypothesis is reported via RootOrderViolated, not guessed
    around.  The elliptic equation always has a unique solution in
    (0, pi/theta - 1).
    """
    z = inv.z
    if z <= 0:
        raise DegenerateZ(f"z = {z} <= 0: alpha is undefined")
    if inv.s < 2:
        raise DomainError(f"s = {inv.s} < 2: the target rho/(s-1) is undefined")
    s = inv.s
    c1 = inv.e + inv.n - 1
    with working_precision():
        if sd.regime is Regime.PARABOLIC:
            if 2 * (s - 1) >= c1:
                raise RootOrderViolated(
                    f"s-1 = {s - 1} >= rho = {c1} / 2: no positive alpha"
                )
            sigma_int = (c1 // 2) - (s - 1)
            alpha = mpf(s - 1) / sigma_int
            residual = mpf(0)
        elif sd.regime is Regime.HYPERBOLIC:
            if 2 * (s - 1) >= c1:
                raise RootOrderViolated(
                    f"s-1 = {s - 1} is not below the small root a "
                    f"(exact test 2(s-1) >= C1 = {c1})"
                )
            t = sd.t_or_theta
            target = sd.rho / (s - 1)

            def f(x):
                return sinh((x + 1) * t) / sinh(x * t)

            lo = mpf("1e-6")
            while f(lo) <= target:
                lo /= 2
            hi = mpf(1)
            for _ in range(200):
                if f(hi) < target:
                    break
                hi *= 2
            else:
                raise ArithmeticError("failed to bracket alpha from above")
            alpha = _bisect_decreasing(f, lo, hi, target)
            residual = abs(f(alpha) - target)
        else:
            theta = sd.t_or_theta
            target = sd.rho / (s - 1)
            upper = pi / theta - 1

            def g(x):
                return sin((x + 1) * theta) / sin(x * theta)

            lo = upper * mpf("1e-9")
            while g(lo) <= target:
                lo /= 2
            hi = upper * (1 - mpf("1e-30"))
            alpha = _bisect_decreasing(g, lo, hi, target)
            residual = abs(g(alpha) - target)
        ratios = _ratio_chain(alpha, sd, inv)
        _pairwise_agree(ratios)
        return AlphaSolution(alpha, sd.regime, residual, ratios)


def verify_panoplie(sol: AlphaSolution, inv: Invariants) -> List[mpf]:
    """Re-derive the four-ratio chain at sol.alpha and assert agreement.

    Returns the ratios (fourth dropped in the degenerate elliptic s = e+n
    case); raises IdentityViolation when any pair disagrees beyond 1e-9
    relative, which indicates an implementation bug.
    """
    sd = spectral(normalize(inv), z=inv.z)
    ratios = _ratio_chain(sol.alpha, sd, inv)
    _pairwise_agree(ratios)
    return list(ratios)


def minimize_m(alpha) -> MinimizerResult:
    """Minimize phi(x) = sin(alpha x)/(sin x sin((alpha+1) x)).

    The domain is (0, pi/(alpha+1)) and the minimum sits at the angle
    beta solving sin((alpha+1) beta)/sin(beta) = sqrt(alpha+1); that
    ratio falls strictly from alpha+1 to 0 across the domain, so the
    bracket is the full domain and bisection converges unconditionally.
    Defined for real alpha >= 1.
    """
    with working_precision():
        a = mpf(alpha)
        if a < 1:
            raise DomainError(f"m(alpha) requires alpha >= 1, got {alpha}")
        upper = pi / (a + 1)
        target = sqrt(a + 1)

        def h(x):
            return sin((a + 1) * x) / sin(x)

        lo = upper * mpf("1e-9")
        while h(lo) <= target:
            lo /= 2
        hi = upper * (1 - mpf("1e-30"))
        beta = _bisect_decreasing(h, lo, hi, target)
        m_value = sin(a * beta) / (sin(beta) * sin((a + 1) * beta))
        return MinimizerResult(a, beta, m_value)


def m_table(alpha_max: int) -> List[tuple]:
    """m(alpha) for integer alpha in 2..alpha_max, strictly increasing."""
    if alpha_max < 2:
        raise ValueError(f"alpha_max must be >= 2, got {alpha_max}")
    table = []
    for a in range(2, alpha_max + 1):
        table.append((a, minimize_m(a).m_value))
    for (_, lowm), (_, highm) in zip(table, table[1:]):
        if not lowm < highm:
            raise IdentityViolation("m(alpha) failed to increase along the table")
    return table
