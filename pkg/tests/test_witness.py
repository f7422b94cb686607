import json
from fractions import Fraction

import pytest

from mindeg.elliptic import EllPoint
from mindeg.multiquad import TriquadField, evaluate_poly, parse_element
from mindeg.numtheory import DomainError
from mindeg.witness import (
    UnsupportedTargetError,
    certificate_from_json,
    certificate_to_json,
    mindeg2_decide,
    normalize_index2_target,
    point_to_witness,
    target_curve,
    verify_certificate_json,
)

F235 = TriquadField(2, 3, 5)


def test_normalize_orders_by_radicand():
    v = parse_element(F235, "sqrt(2)+2*sqrt(3)")
    t = normalize_index2_target(F235, v)
    assert (t.d1, t.d2, t.a) == (2, 3, Fraction(2))
    assert (t.shift, t.scale) == (0, 1)
    assert t.complement_generator() == 5
    assert t.original_element() == v


def test_normalize_affine_data():
    v = parse_element(F235, "7 - 3*sqrt(3) - 6*sqrt(5)")
    t = normalize_index2_target(F235, v)
    assert (t.d1, t.d2) == (3, 5)
    assert t.shift == 7 and t.scale == -3 and t.a == 2
    assert t.original_element() == v


def test_normalize_rejections():
    with pytest.raises(DomainError):
        normalize_index2_target(F235, parse_element(F235, "sqrt(2)"))  # index 4
    with pytest.raises(UnsupportedTargetError):
        normalize_index2_target(
            F235, parse_element(F235, "sqrt(2)+sqrt(3)+sqrt(6)")
        )  # three radical terms, still index 2


def test_reference_worked_example_exact():
    """Point (8,8) on Y^2 = X(X-12)(X-10) reproduces the reference witness."""
    v = parse_element(F235, "sqrt(2)+2*sqrt(3)")
    t = normalize_index2_target(F235, v)
    curve = target_curve(t)
    assert (curve.c2, curve.c4) == (-22, 120)
    cert = point_to_witness(t, EllPoint(Fraction(8), Fraction(8)))
    assert cert.verified and cert.check()
    expected_alpha = parse_element(
        F235, "1 - 2*sqrt(5) + sqrt(10) - (4/3)*sqrt(15) - (2/3)*sqrt(30)"
    )
    assert cert.alpha == expected_alpha
    assert cert.poly_coeffs == [
        Fraction(-207, 20),
        Fraction(-3, 10),
        Fraction(3, 20),
    ]
    assert evaluate_poly(cert.poly_coeffs, cert.alpha) == v


def test_point_to_witness_rejects_two_torsion():
    v = parse_element(F235, "sqrt(2)+2*sqrt(3)")
    t = normalize_index2_target(F235, v)
    with pytest.raises(DomainError):
        point_to_witness(t, EllPoint(Fraction(12), Fraction(0)))
    with pytest.raises(DomainError):
        point_to_witness(t, EllPoint.infinity())
    with pytest.raises(DomainError):
        point_to_witness(t, EllPoint(Fraction(1), Fraction(1)))  # off curve


def test_three_torsion_route():
    field = TriquadField(5, 7, 11)
    v = parse_element(field, "sqrt(11)+5*sqrt(35)")
    outcome = mindeg2_decide(field, v, 100)
    assert outcome.found and outcome.source == "3-torsion"
    assert outcome.point == EllPoint(Fraction(900), Fraction(900))
    cert = outcome.certificate
    expected_alpha = parse_element(
        field, "1 - 11*sqrt(5) + (55/7)*sqrt(7) + sqrt(55) + (5/7)*sqrt(77)"
    )
    assert cert.alpha == expected_alpha
    assert cert.poly_coeffs == [
        Fraction(7913, 220),
        Fraction(7, 110),
        Fraction(-7, 220),
    ]
    assert cert.verified


def test_rank_point_route_and_exhaustion():
    v = parse_element(F235, "sqrt(2)+2*sqrt(3)")
    outcome = mindeg2_decide(F235, v, 100)
    assert outcome.found and outcome.source == "rank-point"
    assert outcome.certificate.verified
    assert outcome.certificate.degree == 2

    hard = parse_element(F235, "sqrt(2)+sqrt(3)")
    out2 = mindeg2_decide(F235, hard, 200)
    assert not out2.found
    assert out2.torsion.kind == "Z2xZ2"
    assert out2.height_bound == 200


def test_scaled_and_shifted_target():
    v = parse_element(F235, "5 - 3*sqrt(2) - 6*sqrt(3)")
    outcome = mindeg2_decide(F235, v, 100)
    assert outcome.found
    cert = outcome.certificate
    assert cert.verified
    assert evaluate_poly(cert.poly_coeffs, cert.alpha) == v


def test_certificate_json_roundtrip(tmp_path):
    v = parse_element(F235, "sqrt(2)+2*sqrt(3)")
    outcome = mindeg2_decide(F235, v, 100)
    data = certificate_to_json(
        outcome.certificate, source=outcome.source, point=outcome.point
    )
    assert verify_certificate_json(data)
    again = certificate_from_json(json.loads(json.dumps(data)))
    assert again.alpha == outcome.certificate.alpha
    assert again.poly_coeffs == outcome.certificate.poly_coeffs
    # tampering is caught
    bad = dict(data)
    bad["poly"] = ["1", "0", "1"]
    assert not verify_certificate_json(bad)
    worse = dict(data)
    del worse["alpha"]
    assert not verify_certificate_json(worse)
