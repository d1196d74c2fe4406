"""Exact-arithmetic necessary-condition gates for candidate invariants
of smooth codimension-two subvarieties of projective n-space.

A candidate is an integer tuple (n, d, e, s); the package decides which
known necessary conditions it satisfies, with exact big-integer and
rational arithmetic wherever possible and guarded high-precision reals
for the few genuinely transcendental comparisons.  A box scanner and a
reference-number suite sit on top, reachable through the `codim2`
command-line entry point.
"""

from .arithmetic import (
    DeltaSearchResult,
    QuadRing,
    canonical_pair,
    delta_min_search,
    negative_discriminants,
    primes_below,
    qr_claim_check,
    schwarzenberger_check,
)
from .errors import (
    CapExceeded,
    Codim2Error,
    DegenerateZ,
    DomainError,
    IdentityViolation,
    NonPositiveC2,
    NotFoundWithinLimit,
    PrecisionExhausted,
    RootOrderViolated,
)
from .gates import (
    GATE_ORDER,
    GateSet,
    Verdict,
    gate_composite,
    gate_dms2,
    gate_ens_exponent,
    gate_hs_elliptic,
    gate_m_alpha,
    gate_qr_claim,
    gate_schwarzenberger,
    gate_sdelta,
    gate_speciality,
    gate_u_positivity,
    gate_z_lower,
)
from .genus5 import (
    P5Candidate,
    binom3,
    chi_fractional,
    chi_fractional_from_mu,
    chi_oracle,
    discrepancy_table,
    genus_interval,
    mu,
    mu_gate,
)
from .invariants import (
    GateReport,
    GateStatus,
    Invariants,
    NormalizedChern,
    Regime,
    SpectralData,
    normalize,
    spectral,
)
from .series import (
    TruncatedSeries,
    USequence,
    USource,
    positivity_series,
    segre_closed_form,
    u_closed_form,
    u_recurrence,
    u_sequence,
)
from .transcendental import (
    AlphaSolution,
    MinimizerResult,
    m_table,
    minimize_m,
    solve_alpha,
    verify_panoplie,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaSolution",
    "CapExceeded",
    "Codim2Error",
    "DegenerateZ",
    "DeltaSearchResult",
    "DomainError",
    "GATE_ORDER",
    "GateReport",
    "GateSet",
    "GateStatus",
    "IdentityViolation",
    "Invariants",
    "MinimizerResult",
    "NonPositiveC2",
    "NormalizedChern",
    "NotFoundWithinLimit",
    "P5Candidate",
    "PrecisionExhausted",
    "QuadRing",
    "Regime",
    "RootOrderViolated",
    "SpectralData",
    "TruncatedSeries",
    "USequence",
    "USource",
    "Verdict",
    "binom3",
    "canonical_pair",
    "chi_fractional",
    "chi_fractional_from_mu",
    "chi_oracle",
    "delta_min_search",
    "discrepancy_table",
    "gate_composite",
    "gate_dms2",
    "gate_ens_exponent",
    "gate_hs_elliptic",
    "gate_m_alpha",
    "gate_qr_claim",
    "gate_schwarzenberger",
    "gate_sdelta",
    "gate_speciality",
    "gate_u_positivity",
    "gate_z_lower",
    "genus_interval",
    "m_table",
    "minimize_m",
    "mu",
    "mu_gate",
    "negative_discriminants",
    "normalize",
    "positivity_series",
    "primes_below",
    "qr_claim_check",
    "schwarzenberger_check",
    "segre_closed_form",
    "solve_alpha",
    "spectral",
    "u_closed_form",
    "u_recurrence",
    "u_sequence",
    "verify_panoplie",
]
