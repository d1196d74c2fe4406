"""Necessary-condition gates and the composite verdict pipeline.

Each gate takes a candidate tuple (n, d, e, s), decides one necessary
condition for the existence of a smooth codimension-two subvariety with
those invariants, and returns a GateReport carrying exact witnesses.
Algebraic inequalities are rationalized to big-integer comparisons
(squaring with sign guards, raising to the (n-4)-th power), so the only
tolerance-bearing gates are the genuinely transcendental ones, and those
abort with PrecisionExhausted instead of guessing when a margin falls
under the guard threshold.

Strictness follows the source inequalities exactly: the degree bound
against M^2 s^2 is strict, the s-1 lower bounds are non-strict.

The composite pipeline runs the gates in a fixed documented order and
aggregates them into a GateSet with an overall verdict: Degenerate when
z = 0 (complete-intersection-consistent, nothing to exclude), Excluded
when at least one gate fails, Admissible otherwise.  Gates whose
hypotheses are not met report NotApplicable, never a silent skip.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Optional, Tuple

from mpmath import mpf, pi, sqrt

from .arithmetic import qr_claim_check, schwarzenberger_check
from .errors import Codim2Error
from .invariants import GateReport, GateStatus, Invariants, normalize
from .precision import guarded_nonnegative, working_precision
from .series import u_recurrence
from .transcendental import minimize_m

CITATIONS = {
    "z-lower": (
        "the residual scheme of a non-complete-intersection in a minimal-degree "
        "hypersurface link has degree z = d - s(e+n+1) + s^2 >= n-1"
    ),
    "u-positivity": (
        "pseudo-effectivity of the residual classes forces u_i >= 0 for "
        "2 <= i <= n-2, with u_i generated by (1 + (q-e-n)t)/(1 - C1 t + C2 t^2)"
    ),
    "speciality": (
        "speciality bounds: 4(e+3+s) <= (s-1)^3 and 4(d-1) <= s(s-1)((s-1)^2-4) "
        "at n=5; sqrt(n-1)(e+n-1) <= (s-1)^2-n+1 and sqrt(n-1)(d-1) <= "
        "s((s-1)^2-n+1) for n >= 6"
    ),
    "ens-exponent": (
        "(n-1)(e+n-s)^(n-4) <= (s-1)^(n-2) when e+n > s, and the companion "
        "degree bound (n-1)(d-s)^(n-4) <= s^(n-4)(s-1)^(n-2) when d > s"
    ),
    "dms2": (
        "degree bound d < M^2 s^2 + s M sqrt(Delta) with M = (n-2)/(n-3) when "
        "Delta > 0, and d < M^2 s(s-1) + s when Delta <= 0"
    ),
    "sdelta": (
        "s-1 >= (n-3) sqrt(n-1) and e+n >= (2n-4) sqrt(n-1) when Delta >= 0; "
        "the (2/pi)-scaled forms when Delta < 0 and e+n+1 >= 2s"
    ),
    "hs-elliptic": (
        "in the negative-discriminant regime with e+n+1 <= 2s, the speciality "
        "lower bounds e >= n+2 (n >= 6) and e >= 2n-1 (n >= 8) force "
        "2s >= e_min + n + 1"
    ),
    "m-alpha": (
        "s-1 >= (sqrt(-Delta)/2) m(n-3), where m(alpha) is the minimum of "
        "sin(alpha x)/(sin x sin((alpha+1) x)) on (0, pi/(alpha+1))"
    ),
    "qr-claim": (
        "the discriminant must be a square or 0 mod every prime p < n"
    ),
    "schwarzenberger": (
        "integrality of Tr binom(xi+k, n) over Z[X]/(X^2 - C1 X + C2)"
    ),
}

GATE_ORDER = (
    "z-lower",
    "u-positivity",
    "speciality",
    "ens-exponent",
    "dms2",
    "sdelta",
    "hs-elliptic",
    "m-alpha",
    "qr-claim",
    "schwarzenberger",
)

#: Speciality lower bounds in the negative-discriminant regime, applied
#: from the largest matching n downward.  Kept in one table so the
#: constants are not scattered through gate code.
ELLIPTIC_E_LOWER_BOUNDS = (
    (8, "2n-1", "speciality satisfies e >= 2n-1 for n >= 8 (negative discriminant)"),
    (6, "n+2", "speciality satisfies e >= n+2 for n >= 6 (negative discriminant)"),
)


def elliptic_e_lower(n: int) -> Optional[int]:
    """The strongest tabulated speciality lower bound applying at n."""
    if n >= 8:
        return 2 * n - 1
    if n >= 6:
        return n + 2
    return None


class Verdict(str, Enum):
    ADMISSIBLE = "Admissible"
    EXCLUDED = "Excluded"
    DEGENERATE = "Degenerate"


def _report(gate_id: str, status: GateStatus, witness) -> GateReport:
    return GateReport(gate_id, status, tuple(witness), CITATIONS[gate_id])


def _not_applicable(gate_id: str, reason: str, **extra) -> GateReport:
    witness = [("reason", reason)] + list(extra.items())
    return _report(gate_id, GateStatus.NOT_APPLICABLE, witness)


def gate_z_lower(inv: Invariants, assume_non_ci: bool = True) -> GateReport:
    """z >= n-1 for candidates assumed not complete intersections."""
    z = inv.z
    if not assume_non_ci:
        return _not_applicable(
            "z-lower", "bound applies only under the non-complete-intersection "
            "assumption", z=z,
        )
    status = GateStatus.PASS if z >= inv.n - 1 else GateStatus.FAIL
    return _report("z-lower", status, [("z", z), ("lower", inv.n - 1)])


def gate_u_positivity(inv: Invariants) -> GateReport:
    """u_i >= 0 for 2 <= i <= n-2, via the exact integer recurrence."""
    useq = u_recurrence(inv, inv.n - 2)
    witness = [("u", tuple(useq.values)), ("q", useq.q_used)]
    for i in range(2, inv.n - 1):
        if useq[i] < 0:
            witness.append(("first_negative_index", i))
            witness.append(("value", useq[i]))
            return _report("u-positivity", GateStatus.FAIL, witness)
    return _report("u-positivity", GateStatus.PASS, witness)


def gate_speciality(inv: Invariants, assume_non_ci: bool = True) -> GateReport:
    """Upper bounds on e and d from the speciality theorem, rationalized."""
    n, d, e, s = inv.n, inv.d, inv.e, inv.s
    if n == 4:
        return _not_applicable("speciality", "bounds stated only for n >= 5")
    if not assume_non_ci:
        return _not_applicable(
            "speciality", "bound applies only under the "
            "non-complete-intersection assumption",
        )
    if n == 5:
        e_lhs, e_rhs = 4 * (e + 3 + s), (s - 1) ** 3
        d_lhs, d_rhs = 4 * (d - 1), s * (s - 1) * ((s - 1) ** 2 - 4)
        e_ok = e_lhs <= e_rhs
        d_ok = d_lhs <= d_rhs
        witness = [
            ("e_clause", (e_lhs, e_rhs, e_ok)),
            ("d_clause", (d_lhs, d_rhs, d_ok)),
        ]
    else:
        a = e + n - 1
        b = (s - 1) ** 2 - n + 1
        e_ok = a <= 0 or (b >= 0 and (n - 1) * a * a <= b * b)
        d_ok = b >= 0 and (n - 1) * (d - 1) ** 2 <= s * s * b * b
        witness = [
            ("e_plus_n_minus_1", a),
            ("s_margin", b),
            ("e_clause_ok", e_ok),
            ("d_clause_ok", d_ok),
        ]
    status = GateStatus.PASS if (e_ok and d_ok) else GateStatus.FAIL
    return _report("speciality", status, witness)


def gate_ens_exponent(inv: Invariants) -> GateReport:
    """(n-1)(e+n-s)^(n-4) <= (s-1)^(n-2), plus the companion degree bound."""
    n, d, e, s = inv.n, inv.d, inv.e, inv.s
    if n == 4:
        return _not_applicable(
            "ens-exponent", "the (n-4)-th root degenerates at n = 4"
        )
    ens = e + n - s
    rhs = (s - 1) ** (n - 2)
    e_ok = ens <= 0 or (n - 1) * ens ** (n - 4) <= rhs
    d_ok = d <= s or (n - 1) * (d - s) ** (n - 4) <= s ** (n - 4) * rhs
    witness = [
        ("e_plus_n_minus_s", ens),
        ("e_clause_ok", e_ok),
        ("d_minus_s", d - s),
        ("d_clause_ok", d_ok),
    ]
    status = GateStatus.PASS if (e_ok and d_ok) else GateStatus.FAIL
    return _report("ens-exponent", status, witness)


def gate_dms2(inv: Invariants, assume_non_ci: bool = True) -> GateReport:
    """Strict degree bound against M^2 s^2 with M = (n-2)/(n-3)."""
    n, d, s = inv.n, inv.d, inv.s
    if not assume_non_ci:
        return _not_applicable(
            "dms2", "bound applies only under the non-complete-intersection "
            "assumption",
        )
    delta = normalize(inv).delta
    m_den = (n - 3) ** 2
    m_num = (n - 2) ** 2
    if delta <= 0:
        lhs = m_den * d
        rhs = m_num * s * (s - 1) + m_den * s
        ok = lhs < rhs
        witness = [("delta", delta), ("lhs", lhs), ("rhs", rhs)]
    else:
        # d < M^2 s^2 + s M sqrt(Delta): move the algebraic part left and
        # square once, guarding the sign.  Equality after squaring means
        # the original strict inequality fails.
        excess = m_den * d - m_num * s * s
        bound_sq = s * s * m_num * m_den * delta
        ok = excess < 0 or excess * excess < bound_sq
        witness = [("delta", delta), ("excess", excess), ("bound_sq", bound_sq)]
    return _report("dms2", GateStatus.PASS if ok else GateStatus.FAIL, witness)


@lru_cache(maxsize=None)
def _sdelta_elliptic_thresholds(n: int) -> Tuple[mpf, mpf]:
    """((2/pi)(n-3)sqrt(n-1), (2/pi)(2n-4)sqrt(n-1)) at working precision."""
    with working_precision():
        root = sqrt(mpf(n - 1))
        scale = 2 / pi
        return (scale * (n - 3) * root, scale * (2 * n - 4) * root)


def gate_sdelta(inv: Invariants, assume_non_ci: bool = True) -> GateReport:
    """Lower bounds on s-1 and e+n scaled by sqrt(n-1).

    Exact integer comparisons when Delta >= 0; guarded high-precision
    comparisons against the (2/pi)-scaled thresholds when Delta < 0 and
    e+n+1 >= 2s.  The complementary elliptic branch e+n+1 < 2s belongs
    to the hs-elliptic gate.
    """
    n, e, s = inv.n, inv.e, inv.s
    if not assume_non_ci:
        return _not_applicable(
            "sdelta", "bound applies only under the "
            "non-complete-intersection assumption",
        )
    delta = normalize(inv).delta
    if delta >= 0:
        s_ok = (s - 1) ** 2 >= (n - 3) ** 2 * (n - 1)
        en = e + n
        e_ok = en >= 0 and en * en >= (2 * n - 4) ** 2 * (n - 1)
        witness = [
            ("delta", delta),
            ("s_clause", ((s - 1) ** 2, (n - 3) ** 2 * (n - 1), s_ok)),
            ("e_clause", (en, e_ok)),
        ]
        status = GateStatus.PASS if (s_ok and e_ok) else GateStatus.FAIL
        return _report("sdelta", status, witness)
    if e + n + 1 < 2 * s:
        return _not_applicable(
            "sdelta", "negative discriminant with e+n+1 < 2s is covered by "
            "the hs-elliptic gate", delta=delta,
        )
    thr_s, thr_e = _sdelta_elliptic_thresholds(n)
    with working_precision():
        s_ok = guarded_nonnegative((s - 1) - thr_s, "sdelta s-clause")
        e_ok = guarded_nonnegative((e + n) - thr_e, "sdelta e-clause")
    witness = [
        ("delta", delta),
        ("s_threshold", thr_s),
        ("e_threshold", thr_e),
        ("s_ok", s_ok),
        ("e_ok", e_ok),
    ]
    status = GateStatus.PASS if (s_ok and e_ok) else GateStatus.FAIL
    return _report("sdelta", status, witness)


def gate_hs_elliptic(inv: Invariants) -> GateReport:
    """2s >= e_min + n + 1 with e_min from the tabulated speciality bounds."""
    n, e, s = inv.n, inv.e, inv.s
    delta = normalize(inv).delta
    if delta >= 0 or e + n + 1 > 2 * s or n < 6:
        return _not_applicable(
            "hs-elliptic", "applies only for negative discriminant with "
            "e+n+1 <= 2s and n >= 6", delta=delta,
        )
    e_min = elliptic_e_lower(n)
    required = e_min + n + 1
    ok = 2 * s >= required
    witness = [
        ("delta", delta),
        ("two_s", 2 * s),
        ("e_lower_bound", e_min),
        ("required_two_s", required),
    ]
    return _report("hs-elliptic", GateStatus.PASS if ok else GateStatus.FAIL, witness)


@lru_cache(maxsize=None)
def _m_lower(n: int) -> mpf:
    """m(n-3), cached per ambient dimension."""
    return minimize_m(n - 3).m_value


def gate_m_alpha(inv: Invariants) -> GateReport:
    """s-1 >= (sqrt(-Delta)/2) m(n-3) in the negative-discriminant regime."""
    n, s = inv.n, inv.s
    delta = normalize(inv).delta
    if delta >= 0 or n < 5:
        return _not_applicable(
            "m-alpha", "applies only for negative discriminant with n >= 5",
            delta=delta,
        )
    m_value = _m_lower(n)
    with working_precision():
        threshold = sqrt(mpf(-delta)) / 2 * m_value
        ok = guarded_nonnegative((s - 1) - threshold, "m-alpha bound")
    witness = [
        ("delta", delta),
        ("m_n_minus_3", m_value),
        ("threshold", threshold),
        ("s_minus_1", s - 1),
    ]
    return _report("m-alpha", GateStatus.PASS if ok else GateStatus.FAIL, witness)


def gate_qr_claim(inv: Invariants) -> GateReport:
    """Square-mod-p claim on the normalized discriminant (non-split only)."""
    nc = normalize(inv)
    if nc.is_square_discriminant():
        return _not_applicable(
            "qr-claim", "discriminant is a perfect square: the Chern "
            "polynomial splits over Z and the condition is vacuous",
            delta=nc.delta,
        )
    return qr_claim_check(inv.n, nc.delta)


def gate_schwarzenberger(inv: Invariants) -> GateReport:
    """Trace integrality at the normalized Chern pair (non-split only)."""
    nc = normalize(inv)
    if nc.is_square_discriminant():
        return _not_applicable(
            "schwarzenberger", "discriminant is a perfect square: binom(r+k, n) "
            "with integer roots r is trivially integral", delta=nc.delta,
        )
    return schwarzenberger_check(inv.n, nc.c1, nc.c2)


_GATE_FUNCTIONS = {
    "z-lower": gate_z_lower,
    "u-positivity": gate_u_positivity,
    "speciality": gate_speciality,
    "ens-exponent": gate_ens_exponent,
    "dms2": gate_dms2,
    "sdelta": gate_sdelta,
    "hs-elliptic": gate_hs_elliptic,
    "m-alpha": gate_m_alpha,
    "qr-claim": gate_qr_claim,
    "schwarzenberger": gate_schwarzenberger,
}

#: Gates that invoke the non-complete-intersection assumption.
_NON_CI_GATES = frozenset({"z-lower", "speciality", "dms2", "sdelta"})


@dataclass(frozen=True)
class GateSet:
    """Ordered gate reports with the aggregated verdict.

    errors collects (gate_id, message) for gates that aborted (for
    example PrecisionExhausted); such gates appear as NotApplicable in
    reports and never decide the overall verdict.
    """

    reports: tuple
    overall: Verdict
    errors: tuple = ()

    def report(self, gate_id: str) -> GateReport:
        for r in self.reports:
            if r.gate_id == gate_id:
                return r
        raise KeyError(gate_id)

    @property
    def first_fail(self) -> Optional[str]:
        for r in self.reports:
            if r.status is GateStatus.FAIL:
                return r.gate_id
        return None

    def to_dict(self) -> dict:
        return {
            "overall": self.overall.value,
            "first_fail": self.first_fail,
            "reports": [r.to_dict() for r in self.reports],
            "errors": [{"gate_id": g, "message": m} for g, m in self.errors],
        }


def gate_composite(
    inv: Invariants,
    assume_non_ci: bool = True,
    gates: Optional[Iterable[str]] = None,
) -> GateSet:
    """Run the gate pipeline in its documented order and aggregate.

    z = 0 short-circuits to Degenerate: the tuple is consistent with a
    complete intersection and no exclusion argument applies.  Otherwise
    every requested gate runs; per-gate errors are recorded and the
    remaining gates still execute.  Excluded iff at least one Fail.
    """
    selected = GATE_ORDER if gates is None else tuple(gates)
    unknown = [g for g in selected if g not in _GATE_FUNCTIONS]
    if unknown:
        raise ValueError(f"unknown gate ids: {', '.join(unknown)}")
    if inv.z == 0:
        report = _not_applicable(
            "z-lower", "z = 0: complete-intersection-consistent, no gate "
            "excludes the tuple", z=0,
        )
        return GateSet((report,), Verdict.DEGENERATE)
    reports = []
    errors = []
    for gate_id in GATE_ORDER:
        if gate_id not in selected:
            continue
        fn = _GATE_FUNCTIONS[gate_id]
        try:
            if gate_id in _NON_CI_GATES:
                reports.append(fn(inv, assume_non_ci=assume_non_ci))
            else:
                reports.append(fn(inv))
        except Codim2Error as exc:
            errors.append((gate_id, str(exc)))
            reports.append(
                _report(gate_id, GateStatus.NOT_APPLICABLE, [("error", str(exc))])
            )
    failed = any(r.status is GateStatus.FAIL for r in reports)
    overall = Verdict.EXCLUDED if failed else Verdict.ADMISSIBLE
    return GateSet(tuple(reports), overall, tuple(errors))
