"""Number-theoretic gates over the quadratic ring Z[X]/(X^2 - c1 X + c2).

A rank-two bundle on projective n-space with Chern classes (c1, c2) has
integral twisted Euler characteristics; concretely the trace of
binom(xi + k, n) over the ring R = Z[X]/(X^2 - c1 X + c2) must be an
integer for every integer k.  Checking k = 0..n suffices: the trace is a
degree-n rational polynomial in k, and a polynomial of degree at most n
that takes integer values on n+1 consecutive integers takes integer
values on all of Z (binomial-coefficient basis argument).

A cheap necessary consequence: for every prime p < n the discriminant
Delta = c1^2 - 4 c2 must be a square (possibly 0) mod p, because
Tr(xi (xi+1) ... (xi+p)) reduces to a power of Delta mod p.  The search
for the least admissible |Delta| uses that residue test as a screen in
front of the full trace test; both rejection flavors are logged.

All trace arithmetic is over exact rationals; integrality is a literal
denominator-equals-one test after reduction.  No modular shortcuts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .errors import NotFoundWithinLimit
from .invariants import GateReport, GateStatus

Element = Tuple[Fraction, Fraction]


class QuadRing:
    """Z[X]/(X^2 - c1 X + c2) with elements a + b*xi as (a, b) pairs."""

    __slots__ = ("c1", "c2")

    def __init__(self, c1: int, c2: int):
        self.c1 = c1
        self.c2 = c2

    @property
    def discriminant(self) -> int:
        return self.c1 * self.c1 - 4 * self.c2

    def one(self) -> Element:
        return (Fraction(1), Fraction(0))

    def xi(self) -> Element:
        return (Fraction(0), Fraction(1))

    def element(self, a, b=0) -> Element:
        return (Fraction(a), Fraction(b))

    def add(self, x: Element, y: Element) -> Element:
        return (x[0] + y[0], x[1] + y[1])

    def mul(self, x: Element, y: Element) -> Element:
        a, b = x
        ap, bp = y
        return (a * ap - b * bp * self.c2, a * bp + ap * b + b * bp * self.c1)

    def scale(self, x: Element, r) -> Element:
        r = Fraction(r)
        return (x[0] * r, x[1] * r)

    def trace(self, x: Element) -> Fraction:
        return 2 * x[0] + x[1] * self.c1

    def binomial_xi_plus(self, k: int, n: int) -> Element:
        """binom(xi + k, n) = (xi+k)(xi+k-1)...(xi+k-n+1) / n!."""
        if n < 0:
            raise ValueError(f"n must be >= 0, got {n}")
        acc = self.one()
        for j in range(n):
            acc = self.mul(acc, self.element(k - j, 1))
        return self.scale(acc, Fraction(1, math.factorial(n)))


def primes_below(n: int) -> List[int]:
    """All primes p < n by trial division (n stays tiny here)."""
    out = []
    for p in range(2, n):
        if all(p % q for q in out):
            out.append(p)
    return out


def _is_square_mod(value: int, p: int) -> bool:
    r = value % p
    return any((x * x) % p == r for x in range(p))


SCHWARZENBERGER_CITATION = (
    "integrality of Tr binom(xi+k, n) over Z[X]/(X^2 - c1 X + c2) for all "
    "integers k; k = 0..n checked, which suffices by the integer-valued "
    "polynomial argument"
)

QR_CITATION = (
    "the discriminant c1^2 - 4 c2 must be a square or 0 mod every prime "
    "p < n, since Tr(xi (xi+1) ... (xi+p)) reduces to a power of the "
    "discriminant mod p"
)


def schwarzenberger_check(n: int, c1: int, c2: int) -> GateReport:
    """Trace-integrality test for binom(xi+k, n), k = 0..n.

    Pass iff all n+1 traces reduce to denominator 1.  The witness list
    carries every trace; a failure additionally names the first failing
    k and its fractional trace.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    ring = QuadRing(c1, c2)
    traces = []
    failing = None
    for k in range(n + 1):
        tr = ring.trace(ring.binomial_xi_plus(k, n))
        traces.append(tr)
        if failing is None and tr.denominator != 1:
            failing = (k, tr)
    witness = [
        ("c1", c1),
        ("c2", c2),
        ("delta", ring.discriminant),
        ("traces", tuple(traces)),
    ]
    if failing is None:
        return GateReport(
            "schwarzenberger", GateStatus.PASS, tuple(witness), SCHWARZENBERGER_CITATION
        )
    witness.append(("failing_k", failing[0]))
    witness.append(("failing_trace", failing[1]))
    return GateReport(
        "schwarzenberger", GateStatus.FAIL, tuple(witness), SCHWARZENBERGER_CITATION
    )


def qr_claim_check(n: int, delta: int) -> GateReport:
    """Square-mod-p test of the discriminant for every prime p < n."""
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    primes = primes_below(n)
    witness = [("delta", delta), ("primes", tuple(primes))]
    for p in primes:
        if not _is_square_mod(delta, p):
            witness.append(("failing_prime", p))
            witness.append(("residue", delta % p))
            return GateReport("qr-claim", GateStatus.FAIL, tuple(witness), QR_CITATION)
    return GateReport("qr-claim", GateStatus.PASS, tuple(witness), QR_CITATION)


@dataclass(frozen=True)
class DeltaSearchResult:
    """Least |Delta| < 0 admissible at n, with the full rejection trail."""

    n: int
    delta: int
    candidates_checked: int
    per_candidate_log: tuple

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "delta": self.delta,
            "candidates_checked": self.candidates_checked,
            "rejections": [
                {"delta": d, "reason": reason} for d, reason in self.per_candidate_log
            ],
        }


def negative_discriminants(limit: int):
    """Yield Delta = -3, -4, -7, -8, ... (Delta = 0 or 1 mod 4) up to |limit|."""
    for a in range(3, limit + 1):
        if a % 4 in (0, 3):
            yield -a


def canonical_pair(delta: int) -> Tuple[int, int]:
    """The representative (c1, c2) with c1 in {0, 1} for a discriminant.

    Every (c1, c2) with the same discriminant is a xi -> xi+1 shift of
    this one, and the shift preserves the trace test, so the verdict
    depends on delta alone.
    """
    c1 = abs(delta) % 2
    return c1, (c1 * c1 - delta) // 4


def delta_min_search(n: int, limit: int, qr_screen: bool = True) -> DeltaSearchResult:
    """Scan Delta = -3, -4, -7, ... for the first trace-integral value.

    Each candidate is tested at its canonical (c1, c2) pair.  With
    qr_screen on (default), a square-mod-p failure rejects the candidate
    before any trace work; that is sound because the residue condition
    is implied by trace integrality.  Rejection reasons name the failing
    prime or the failing k.  Raises NotFoundWithinLimit on exhaustion.
    """
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    if limit < 3:
        raise ValueError(f"limit must be >= 3, got {limit}")
    log = []
    checked = 0
    for delta in negative_discriminants(limit):
        checked += 1
        c1, c2 = canonical_pair(delta)
        if qr_screen:
            qr = qr_claim_check(n, delta)
            if qr.status is GateStatus.FAIL:
                p = qr.witness_value("failing_prime")
                log.append(
                    (delta, f"not a square mod p={p} (residue {delta % p})")
                )
                continue
        full = schwarzenberger_check(n, c1, c2)
        if full.status is GateStatus.PASS:
            return DeltaSearchResult(n, delta, checked, tuple(log))
        k = full.witness_value("failing_k")
        tr = full.witness_value("failing_trace")
        log.append((delta, f"trace of binom(xi+{k}, {n}) = {tr} is not an integer"))
    raise NotFoundWithinLimit(
        f"no admissible discriminant with |Delta| <= {limit} at n = {n}"
    )
