"""Batch experiments over curve families.

Three scans live here: quadratic-twist surveys of a base curve, the
constructive A = B - c^2 family with its explicit points, and the
conjecture evidence search over square-free pairs (A, B).  Every row is a
pure function of its configuration, so reruns reproduce byte-identical
output.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import math
from dataclasses import dataclass
from fractions import Fraction

from . import elliptic, witness
from .elliptic import EllCurve, EllPoint, make_curve, quadratic_twist
from .multiquad import TriquadField, WitnessCertificate
from .numtheory import (
    DomainError,
    is_square_int,
    is_squarefree,
    prime_factors,
    squarefree_decompose,
)
from .witness import Index2Target, point_to_witness


def selmer_constant_exact(terms: int) -> Fraction:
    """1 / prod_{j=0}^{terms-1} (1 + 2^-j) as an exact rational."""
    if terms < 1:
        raise DomainError("terms must be >= 1")
    prod = Fraction(1)
    for j in range(terms):
        prod *= 1 + Fraction(1, 2**j)
    return 1 / prod


def selmer_constant(terms: int, digits: int = 15) -> str:
    """Decimal rendering of the exact partial product, rounded to `digits`."""
    if digits < 12:
        raise DomainError("render at least 12 decimal digits")
    q = selmer_constant_exact(terms)
    scale = 10**digits
    n = (2 * q.numerator * scale + q.denominator) // (2 * q.denominator)
    return f"{n // scale}.{n % scale:0{digits}d}"


# ---- shared row shape -------------------------------------------------------


@dataclass(frozen=True)
class ScanRow:
    parameter: str
    torsion: str | None
    outcome: str
    point: EllPoint | None = None
    witness: WitnessCertificate | None = None


def witness_id(cert: WitnessCertificate | None) -> str:
    """Short deterministic identifier for a certificate (12 hex digits)."""
    if cert is None:
        return ""
    data = witness.certificate_to_json(cert)
    blob = json.dumps(data, sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()[:12]


def _format_point(p: EllPoint | None) -> str:
    if p is None:
        return ""
    if p.is_infinity:
        return "infinity"
    return f"({p.x},{p.y})"


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    out = csv.writer(buf)
    out.writerow(["parameter", "torsion", "outcome", "point", "witness-id"])
    for row in rows:
        out.writerow(
            [
                row.parameter,
                row.torsion or "",
                row.outcome,
                _format_point(row.point),
                witness_id(row.witness),
            ]
        )
    return buf.getvalue()


def _is_prime(n: int) -> bool:
    return n >= 2 and prime_factors(n) == [n]


def _complement_prime(g1: int, g2: int) -> int:
    """Smallest prime C making Q(sqrt(g1), sqrt(g2), sqrt(C)) a valid field."""
    for p in range(2, 1000):
        if _is_prime(p):
            try:
                TriquadField(g1, g2, p)
                return p
            except DomainError:
                pass
    raise DomainError(f"no triquadratic field on generators {g1}, {g2}")


def _build_target(big_a: int, big_b: int, a: Fraction, c_gen: int | None) -> Index2Target:
    """Index-2 target sqrt(A) + a sqrt(B) inside Q(sqrt A, sqrt B, sqrt C).

    A and B need not be square-free; the field is built on their square-free
    parts, with C either supplied or the smallest prime that keeps the field
    non-degenerate.
    """
    g1 = squarefree_decompose(big_a).squarefree_part
    g2 = squarefree_decompose(big_b).squarefree_part
    c = c_gen if c_gen is not None else _complement_prime(g1, g2)
    field = TriquadField(g1, g2, c)
    return Index2Target(
        field=field, d1=big_a, d2=big_b, a=Fraction(a), shift=Fraction(0), scale=Fraction(1)
    )


# ---- quadratic twist scan ---------------------------------------------------


@dataclass(frozen=True)
class TwistScanConfig:
    """Base curve (a, A, B), twist range, search height, coprimality modulus."""

    a: Fraction
    big_a: int
    big_b: int
    gamma_max: int
    height_bound: int
    c_gen: int | None = None

    def base_curve(self) -> EllCurve:
        return make_curve(self.a, self.big_a, self.big_b)

    def modulus(self) -> int:
        """D = 8 x (odd primes dividing the integral-model discriminant)."""
        curve = self.base_curve()
        e = math.lcm(curve.r.denominator, curve.s.denominator)
        big_r = curve.r * e * e
        big_s = curve.s * e * e
        disc = int(16 * (big_r * big_s * (big_r - big_s)) ** 2)
        d = 8
        for p in prime_factors(disc):
            if p != 2:
                d *= p
        return d

    def admissible_gammas(self) -> list[int]:
        d = self.modulus()
        return [
            g
            for g in range(1, self.gamma_max + 1)
            if math.gcd(g, d) == 1 and is_squarefree(g)
        ]


@dataclass(frozen=True)
class TwistScanReport:
    rows: list[ScanRow]
    summary: dict


def twist_scan(config: TwistScanConfig) -> TwistScanReport:
    """Torsion plus point search for each admissible square-free twist.

    Every row with a usable point (found by search, or a rational 3-torsion
    point when the search exhausts) carries a verified degree-2 witness for
    sqrt(gamma A) + a sqrt(gamma B).  The summary reports the fraction of
    (Z2xZ2, ExhaustedBound) rows next to the partial-product constant; the
    two are printed together only for orientation, never as an estimate of
    one by the other.
    """
    base = config.base_curve()
    rows = []
    z2z2_exhausted = 0
    z2z6_count = 0
    found = 0
    for gamma in config.admissible_gammas():
        curve = quadratic_twist(base, gamma)
        torsion = elliptic.torsion_class(curve)
        if torsion.kind == "Z2xZ6":
            z2z6_count += 1
        search = elliptic.point_search(curve, config.height_bound)
        point = search.point
        outcome = "FoundPoint" if search.found else "ExhaustedBound"
        if not search.found and torsion.kind == "Z2xZ6":
            three = elliptic.three_torsion_points(curve)
            if three:
                point = three[0]
        cert = None
        if point is not None:
            target = _build_target(
                gamma * config.big_a, gamma * config.big_b, config.a, config.c_gen
            )
            cert = point_to_witness(target, point)
        if search.found:
            found += 1
        elif torsion.kind == "Z2xZ2":
            z2z2_exhausted += 1
        rows.append(ScanRow(str(gamma), torsion.kind, outcome, point, cert))
    total = len(rows)
    fraction = Fraction(z2z2_exhausted, total) if total else Fraction(0)
    summary = {
        "rows": total,
        "found_point": found,
        "z2z2_exhausted": z2z2_exhausted,
        "z2z6_rows": z2z6_count,
        "height_bound": config.height_bound,
        "z2z2_exhausted_fraction": str(fraction),
        "z2z2_exhausted_fraction_decimal": float(fraction),
        "selmer_constant_reference": selmer_constant(60),
        "caveat": (
            "empirical, bound-limited: the exhausted fraction depends on the "
            "search height and is not an estimate of the Selmer-theoretic bound"
        ),
    }
    return TwistScanReport(rows, summary)


# ---- explicit-point family --------------------------------------------------


def corollary_ab(big_a: int, big_b: int, m: int, n: int) -> tuple[Fraction, Fraction]:
    """(a, b) with a^2 - 1 = (B - A) b^2 from a parametrizing pair (m, n).

    Requires B - A = c^2 for an integer c; then a = (m^2+n^2)/(m^2-n^2) and
    b = 2mn / (c (m^2 - n^2)).
    """
    diff = big_b - big_a
    if diff <= 0 or not is_square_int(diff):
        raise DomainError("B - A must be a positive perfect square")
    c = math.isqrt(diff)
    denom = m * m - n * n
    if denom == 0 or m * n == 0:
        raise DomainError("need m, n nonzero with m^2 != n^2")
    a = Fraction(m * m + n * n, denom)
    b = Fraction(2 * m * n, c * denom)
    return a, b


def family55_row(
    big_a: int, big_b: int, a, b, c_gen: int | None = None
) -> ScanRow:
    """One verified-witness row for sqrt(A) + a sqrt(B) from the explicit point.

    Raises if a^2 - 1 = (B - A) b^2 fails; the certificate is checked exactly
    before the row is emitted, so every returned row is WitnessFound.
    """
    point = elliptic.theorem55_point(big_a, big_b, a, b)
    target = _build_target(big_a, big_b, Fraction(a), c_gen)
    cert = point_to_witness(target, point)
    curve = make_curve(Fraction(a), big_a, big_b)
    torsion = elliptic.torsion_class(curve)
    if not cert.verified:
        raise DomainError(
            f"certificate failed verification for (A, B) = ({big_a}, {big_b})"
        )  # pragma: no cover - point_to_witness already checks
    return ScanRow(f"A={big_a},B={big_b},a={Fraction(a)}", torsion.kind, "WitnessFound", point, cert)


def family55_scan(
    b_values,
    offset: int = 2,
    ab: tuple = (3, 2),
    mn: tuple | None = None,
    c_gen: int | None = None,
) -> list[ScanRow]:
    """Witness rows over a B-range with the rule A = B - offset.

    With `mn` given, (a, b) is derived per row from the parametrization
    (requires the offset to be a perfect square); otherwise the fixed pair
    `ab` is used for every row.
    """
    rows = []
    for big_b in b_values:
        big_a = big_b - offset
        if big_a == 0:
            raise DomainError("rule gives A = 0")
        if mn is not None:
            a, b = corollary_ab(big_a, big_b, *mn)
        else:
            a, b = Fraction(ab[0]), Fraction(ab[1])
        rows.append(family55_row(big_a, big_b, a, b, c_gen))
    return rows


def squarefree_family_range(lo: int, hi: int, offset: int = 2) -> list[int]:
    """B in [lo, hi] with B and A = B - offset square-free field generators.

    A = 1 is dropped (it is square-free but not a radical generator, so the
    field Q(sqrt A, sqrt B, sqrt C) would collapse), as are pairs with AB a
    square.
    """
    out = []
    for b in range(lo, hi + 1):
        a = b - offset
        if a in (0, 1) or a == b:
            continue
        if not (is_squarefree(b) and is_squarefree(a)):
            continue
        if is_square_int(a * b):
            continue
        out.append(b)
    return out


# ---- conjecture evidence scan -----------------------------------------------


def default_candidates() -> list[Fraction]:
    """Integers 1..10 followed by the halves 1/2, 3/2, ..., 19/2."""
    return [Fraction(k) for k in range(1, 11)] + [
        Fraction(2 * k - 1, 2) for k in range(1, 11)
    ]


def conjecture_scan(
    a_max: int,
    b_max: int,
    candidates=None,
    height_bound: int = 1000,
) -> list[ScanRow]:
    """Per square-free pair (A, B): first candidate a with only negative evidence.

    A candidate qualifies when the (a, A, B) curve has torsion Z2xZ2 and the
    point search exhausts the height bound, i.e. nothing in sight certifies
    degree 2 for sqrt(A) + a sqrt(B).  That is evidence, never proof.
    """
    if candidates is None:
        candidates = default_candidates()
    candidates = [Fraction(c) for c in candidates]
    if not candidates or any(c == 0 for c in candidates):
        raise DomainError("candidate set must be nonempty and nonzero")
    rows = []
    for big_a in range(2, a_max + 1):
        if not is_squarefree(big_a):
            continue
        for big_b in range(2, b_max + 1):
            if big_b == big_a or not is_squarefree(big_b):
                continue
            if is_square_int(big_a * big_b):
                continue
            best = None
            for a in candidates:
                if a * a * big_b == big_a:
                    continue  # singular curve
                curve = make_curve(a, big_a, big_b)
                torsion = elliptic.torsion_class(curve)
                if torsion.kind != "Z2xZ2":
                    continue
                search = elliptic.point_search(curve, height_bound)
                if not search.found:
                    best = a
                    break
            if best is not None:
                rows.append(
                    ScanRow(
                        f"A={big_a},B={big_b}",
                        "Z2xZ2",
                        f"evidence: a={best}, ExhaustedBound(H={height_bound})",
                    )
                )
            else:
                rows.append(
                    ScanRow(f"A={big_a},B={big_b}", None, "no candidate under bound")
                )
    return rows
