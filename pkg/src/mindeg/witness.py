"""Bridge from rational points on Y^2 = X(X - a^2 B)(X - (a^2 B - A)) to
degree-2 witness certificates for targets of the shape sqrt(D1) + a sqrt(D2)
in a triquadratic field, plus the combined decision procedure.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from . import elliptic
from .elliptic import EllCurve, EllPoint, SearchOutcome, TorsionClass, make_curve
from .multiquad import (
    TriquadElement,
    TriquadField,
    WitnessCertificate,
    element_from_json,
    evaluate_poly,
    is_primitive,
    parse_element,
    pretty_print,
    subfield_index,
)
from .numtheory import DomainError, format_rational, parse_rational, squarefree_decompose


class UnsupportedTargetError(DomainError):
    """Index-2 target with three radical terms; no known curve reduction."""


@dataclass(frozen=True)
class Index2Target:
    """v = shift + scale * (sqrt(d1) + a * sqrt(d2)) with d1*d2 non-square."""

    field: TriquadField
    d1: int
    d2: int
    a: Fraction
    shift: Fraction
    scale: Fraction

    def normalized_element(self) -> TriquadElement:
        return self.field.sqrt_of(self.d1) + self.field.sqrt_of(self.d2) * self.a

    def original_element(self) -> TriquadElement:
        return self.normalized_element() * self.scale + self.field.from_rational(
            self.shift
        )

    def complement_generator(self) -> int:
        """The field generator not consumed by d1, d2 (modulo squares)."""
        span = {1}
        for d in (self.d1, self.d2):
            span |= {squarefree_decompose(d * x).squarefree_part for x in span}
        for g in self.field.gens:
            if g not in span:
                return g
        raise DomainError("no complement generator")  # pragma: no cover


def normalize_index2_target(field: TriquadField, v: TriquadElement) -> Index2Target:
    """Reduce an index-2 element to the sqrt(D1) + a*sqrt(D2) shape.

    Requires exactly two nonzero non-constant coordinates; three-radical
    index-2 targets are rejected as unsupported.
    """
    if v.field != field:
        raise DomainError("element does not belong to the given field")
    if subfield_index(v) != 2:
        raise DomainError("element does not lie in an index-2 subfield")
    nonzero = [i for i in range(1, 8) if v.coords[i]]
    if len(nonzero) != 2:
        raise UnsupportedTargetError(
            "index-2 targets with three radical terms are not supported"
        )
    terms = []
    for i in nonzero:
        dec = squarefree_decompose(field.radicands[i])
        terms.append((dec.squarefree_part, v.coords[i] * dec.square_root_part))
    terms.sort(key=lambda t: (abs(t[0]), t[0] < 0))
    (d1, c1), (d2, c2) = terms
    return Index2Target(
        field=field,
        d1=d1,
        d2=d2,
        a=c2 / c1,
        shift=v.coords[0],
        scale=c1,
    )


def target_curve(target: Index2Target) -> EllCurve:
    return make_curve(target.a, target.d1, target.d2)


def point_to_witness(
    target: Index2Target, point: EllPoint, b0=Fraction(1)
) -> WitnessCertificate:
    """Build the degree-2 certificate from a non-2-torsion curve point.

    The primitive element is alpha = b0 + b3 sqrt(C) + sqrt(AC)
    + b6 sqrt(BC) + b7 sqrt(ABC) with A = D1, B = D2 and C the complement
    generator; coefficients come from the coordinate change
    w = aBX - (a^3 B^2 - aAB), b6 = AX/w, b7 = Y/w, b3 = -AX/Y.
    The final identity a2 alpha^2 + a1 alpha + a0 = sqrt(A) + a sqrt(B) is
    checked exactly; if it fails the construction retries with -Y.
    """
    field = target.field
    a = target.a
    big_a, big_b = target.d1, target.d2
    big_c = target.complement_generator()
    curve = target_curve(target)
    if point.is_infinity or point.y == 0:
        raise DomainError("point is 2-torsion; it yields no primitive element")
    elliptic._require_on_curve(point, curve)
    if point.x in curve.two_torsion_x():
        raise DomainError("point is 2-torsion; it yields no primitive element")
    b0 = Fraction(b0)
    normalized = target.normalized_element()

    last_error = None
    for y in (point.y, -point.y):
        x = point.x
        w = a * big_b * x - (a**3 * big_b**2 - a * big_a * big_b)
        if w == 0:
            raise DomainError("point is 2-torsion; it yields no primitive element")
        b5 = Fraction(1)
        b6 = big_a * x / w
        b7 = y / w
        b3 = -big_a * x / y
        denom2 = 2 * big_b * big_c * b7 * b6 + 2 * big_c * b3 * b5
        if denom2 == 0:
            last_error = "degenerate system"
            continue
        a2 = 1 / denom2
        # theorem-level identity from the third line of the system
        assert (2 * big_a * big_c * b7 * b5 + 2 * big_c * b3 * b6) * a2 == a
        a0 = -a2 * (
            big_a * big_b * big_c * b7**2
            + big_b * big_c * b6**2
            + big_a * big_c * b5**2
            + big_c * b3**2
            - b0**2
        )
        a1 = -2 * b0 * a2
        alpha = (
            field.from_rational(b0)
            + field.sqrt_of(big_c) * b3
            + field.sqrt_of(big_a * big_c) * b5
            + field.sqrt_of(big_b * big_c) * b6
            + field.sqrt_of(big_a * big_b * big_c) * b7
        )
        if evaluate_poly([a0, a1, a2], alpha) != normalized:
            last_error = "verification failed"
            continue
        # map back through the affine data: v = shift + scale * normalized
        coeffs = [
            target.scale * a0 + target.shift,
            target.scale * a1,
            target.scale * a2,
        ]
        v = target.original_element()
        verified = is_primitive(alpha) and evaluate_poly(coeffs, alpha) == v
        return WitnessCertificate(alpha, coeffs, v, verified)
    raise DomainError(
        f"witness construction failed for both Y signs ({last_error})"
    )  # pragma: no cover - theorem-level identity


@dataclass(frozen=True)
class MinDeg2Outcome:
    """Either a verified witness (with its source) or exhaustion evidence."""

    certificate: WitnessCertificate | None
    source: str | None  # "rank-point" | "3-torsion"
    point: EllPoint | None
    height_bound: int | None = None
    torsion: TorsionClass | None = None

    @property
    def found(self) -> bool:
        return self.certificate is not None


def mindeg2_decide(
    field: TriquadField, v: TriquadElement, height_bound: int
) -> MinDeg2Outcome:
    """Decide whether v = shift + scale (sqrt(D1) + a sqrt(D2)) has a
    degree-2 witness: try rational 3-torsion first, then a bounded point
    search; otherwise report exhaustion with the Z2xZ2 classification.
    """
    target = normalize_index2_target(field, v)
    curve = target_curve(target)
    torsion = elliptic.torsion_class(curve)
    three = elliptic.three_torsion_points(curve)
    if three:
        cert = point_to_witness(target, three[0])
        return MinDeg2Outcome(cert, "3-torsion", three[0], torsion=torsion)
    outcome = elliptic.point_search(curve, height_bound)
    if outcome.found:
        cert = point_to_witness(target, outcome.point)
        return MinDeg2Outcome(cert, "rank-point", outcome.point, torsion=torsion)
    assert torsion.kind == "Z2xZ2"  # else a 3-torsion point would exist
    return MinDeg2Outcome(
        None, None, None, height_bound=height_bound, torsion=torsion
    )


# ---- certificate serialization ---------------------------------------------


def certificate_to_json(
    cert: WitnessCertificate,
    source: str | None = None,
    point: EllPoint | None = None,
) -> dict:
    return {
        "field": list(cert.alpha.field.gens),
        "target": [format_rational(c) for c in cert.target.coords],
        "target_text": pretty_print(cert.target),
        "alpha": [format_rational(c) for c in cert.alpha.coords],
        "poly": [format_rational(c) for c in cert.poly_coeffs],
        "source": source,
        "point": elliptic.point_to_json(point) if point is not None else None,
        "verified": cert.verified,
    }


def certificate_from_json(data: dict) -> WitnessCertificate:
    field = TriquadField(*data["field"])
    alpha = field.element([parse_rational(c) for c in data["alpha"]])
    target = field.element([parse_rational(c) for c in data["target"]])
    coeffs = [parse_rational(c) for c in data["poly"]]
    cert = WitnessCertificate(alpha, coeffs, target, bool(data.get("verified")))
    return cert


def verify_certificate_json(data: dict) -> bool:
    """Re-check a serialized certificate by exact re-evaluation."""
    try:
        cert = certificate_from_json(data)
    except (KeyError, DomainError, ValueError, TypeError):
        return False
    return cert.check()


def load_certificate(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)
