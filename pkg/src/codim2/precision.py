"""High-precision real kernel settings and the comparison guard.

All transcendental work runs at WORKING_DPS significant decimal digits
(mpmath).  Comparisons of a transcendental quantity against an integer
carry a guard: a margin smaller than GUARD_MARGIN aborts the gate with
PrecisionExhausted instead of deciding a sign that the working precision
cannot support.
"""

from mpmath import mp, mpf, workdps

from .errors import PrecisionExhausted

# >= 50 significant digits required everywhere; 60 leaves headroom over
# the 1e-20 guard and the 1e-30 spectral identities.
WORKING_DPS = 60

REPORT_DECIMALS = 6


def working_precision():
    """Context manager entering the package-wide working precision."""
    return workdps(WORKING_DPS)


def guard_threshold():
    with workdps(WORKING_DPS):
        return mpf("1e-20")


def guarded_nonnegative(margin, context: str) -> bool:
    """Decide margin >= 0, refusing to guess when |margin| < 1e-20."""
    with workdps(WORKING_DPS):
        if abs(margin) < guard_threshold():
            raise PrecisionExhausted(
                f"{context}: margin {mp.nstr(mpf(margin), 8)} below guard threshold"
            )
        return margin > 0
