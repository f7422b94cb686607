import random
from fractions import Fraction

import pytest

from mindeg.elliptic import (
    EllPoint,
    add,
    congruent_curve,
    congruent_evidence,
    curve_from_json,
    curve_to_json,
    is_two_torsion,
    make_curve,
    negate,
    point_from_json,
    point_search,
    point_to_json,
    quadratic_twist,
    scalar_multiply,
    theorem55_point,
    three_torsion_points,
    torsion_class,
    z2z6_family,
)
from mindeg.numtheory import DomainError


def test_make_curve_and_validation():
    curve = make_curve(2, 2, 3)
    assert curve.r == 12 and curve.s == 10
    assert curve.c2 == -22 and curve.c4 == 120
    with pytest.raises(DomainError):
        make_curve(0, 2, 3)
    with pytest.raises(DomainError):
        make_curve(1, 3, 3)  # a^2 B = A is singular
    with pytest.raises(DomainError):
        make_curve(1, 2, 0)


def _sample_points(curve, seed):
    """Multiples of a found point plus the 2-torsion points."""
    base = point_search(curve, 200).point
    assert base is not None
    pts = [EllPoint.infinity()]
    for k in range(-4, 5):
        pts.append(scalar_multiply(k, base, curve))
    for x in curve.two_torsion_x():
        pts.append(EllPoint(Fraction(x), Fraction(0)))
    rng = random.Random(seed)
    rng.shuffle(pts)
    return pts


def test_group_law_axioms():
    curve = make_curve(2, 2, 3)
    pts = _sample_points(curve, 7)
    o = EllPoint.infinity()
    for p in pts:
        assert add(p, o, curve) == p
        assert add(p, negate(p, curve), curve) == o
        for q in pts:
            assert add(p, q, curve) == add(q, p, curve)
            for r in pts[:6]:
                assert add(add(p, q, curve), r, curve) == add(
                    p, add(q, r, curve), curve
                )


def test_add_rejects_off_curve_points():
    curve = make_curve(2, 2, 3)
    with pytest.raises(DomainError):
        add(EllPoint(Fraction(1), Fraction(1)), EllPoint.infinity(), curve)


def test_torsion_reference_example():
    curve = make_curve(5, 11, 35)
    t = torsion_class(curve)
    assert t.kind == "Z2xZ6"
    assert t.certificate == (-5, 6)
    pts = three_torsion_points(curve)
    assert EllPoint(Fraction(900), Fraction(900)) in pts
    for p in pts:
        assert scalar_multiply(3, p, curve).is_infinity
        assert not scalar_multiply(1, p, curve).is_infinity


def test_torsion_z2z2_example():
    curve = make_curve(1, 2, 3)
    assert torsion_class(curve).kind == "Z2xZ2"
    assert three_torsion_points(curve) == []


def test_torsion_vs_division_polynomial_oracle():
    """Classifier agrees with the 3-division polynomial on random curves."""
    rng = random.Random(11)
    checked = 0
    while checked < 60:
        a = rng.randint(1, 3)
        big_b = rng.choice([b for b in range(-22, 23) if b])
        if abs(a * a * big_b) > 200:
            continue
        big_a = rng.choice([x for x in range(-20, 21) if x and x != a * a * big_b])
        curve = make_curve(a, big_a, big_b)
        kind = torsion_class(curve).kind
        oracle = "Z2xZ6" if three_torsion_points(curve) else "Z2xZ2"
        assert kind == oracle, (a, big_a, big_b)
        checked += 1


def test_z2z6_family_members_classify_correctly():
    seen = 0
    for p in range(-6, 7):
        for member in z2z6_family(p):
            curve = make_curve(member.a, member.big_a, member.a**2 * member.big_b)
            # value = a^2 B by construction
            assert member.value == member.a**2 * member.big_b
            assert torsion_class(make_curve(1, member.big_a, member.value)).kind == "Z2xZ6"
            seen += 1
    assert seen >= 6


def test_point_search_known_values():
    assert point_search(make_curve(2, 2, 3), 100).point == EllPoint(
        Fraction(6), Fraction(12)
    )
    outcome = point_search(make_curve(1, 2, 3), 400)
    assert not outcome.found and outcome.height_bound == 400
    with pytest.raises(DomainError):
        point_search(make_curve(2, 2, 3), 0)


def test_point_search_never_returns_two_torsion():
    rng = random.Random(13)
    for _ in range(25):
        a = rng.randint(1, 3)
        big_b = rng.choice([b for b in range(-12, 13) if b])
        big_a = rng.choice([x for x in range(-12, 13) if x and x != a * a * big_b])
        curve = make_curve(a, big_a, big_b)
        outcome = point_search(curve, 60)
        if outcome.found:
            p = outcome.point
            assert curve.contains(p.x, p.y)
            assert not is_two_torsion(p, curve)
            assert p.y > 0


def test_congruent_numbers():
    for b in (5, 6, 7):
        assert congruent_evidence(b, 100).found
    for b in (1, 2, 3):
        assert not congruent_evidence(b, 500).found
    with pytest.raises(DomainError):
        congruent_curve(8)
    with pytest.raises(DomainError):
        congruent_curve(-5)


def test_quadratic_twist():
    base = make_curve(1, 2, 3)
    tw = quadratic_twist(base, 5)
    assert tw.r == 15 and tw.s == 5
    assert tw.provenance == (Fraction(1), 10, 15)
    with pytest.raises(DomainError):
        quadratic_twist(base, 4)
    with pytest.raises(DomainError):
        quadratic_twist(base, 0)


def test_theorem55_point_branches():
    # non-square B b^2 + 1
    p = theorem55_point(3, 5, 3, 2)
    curve = make_curve(3, 3, 5)
    assert curve.contains(p.x, p.y) and not is_two_torsion(p, curve)
    # square case: B = 6, b = 2 gives B b^2 + 1 = 25
    p6 = theorem55_point(4, 6, 3, 2)
    assert p6 == EllPoint(Fraction(18), Fraction(-144))
    curve6 = make_curve(3, 4, 6)
    assert curve6.contains(p6.x, p6.y) and not is_two_torsion(p6, curve6)
    with pytest.raises(DomainError):
        theorem55_point(3, 5, 2, 2)  # identity fails
    with pytest.raises(DomainError):
        theorem55_point(3, 5, 1, 0)


def test_theorem55_points_are_non_torsion():
    # doubling a few times never hits infinity for the family points
    for big_b in (5, 7, 13):
        curve = make_curve(3, big_b - 2, big_b)
        p = theorem55_point(big_b - 2, big_b, 3, 2)
        q = p
        for _ in range(5):
            q = add(q, p, curve)
            assert not q.is_infinity


def test_serialization_roundtrip():
    curve = make_curve(Fraction(5, 3), 3, 7)
    assert curve_from_json(curve_to_json(curve)) == curve
    p = EllPoint(Fraction(925, 36), Fraction(925, 24))
    assert point_from_json(point_to_json(p)) == p
    inf = EllPoint.infinity()
    assert point_from_json(point_to_json(inf)).is_infinity
