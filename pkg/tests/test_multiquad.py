import random
from fractions import Fraction

import pytest

from mindeg.multiquad import (
    ALL_CHARACTERS,
    TriquadField,
    conjugate,
    deg_alpha,
    degree_over_Q,
    element_from_json,
    element_to_json,
    evaluate_poly,
    index4_witness,
    index4_witness_general,
    is_primitive,
    parse_element,
    pretty_print,
    subfield_index,
)
from mindeg.numtheory import DomainError

FIELD = TriquadField(2, 3, 5)


def random_element(rng, field=FIELD, span=6):
    return field.element(
        [Fraction(rng.randint(-span, span), rng.randint(1, 3)) for _ in range(8)]
    )


def test_field_validation():
    with pytest.raises(DomainError):
        TriquadField(4, 3, 5)  # not square-free
    with pytest.raises(DomainError):
        TriquadField(2, 3, 6)  # 2*3*6 is a square
    with pytest.raises(DomainError):
        TriquadField(2, 2, 5)
    with pytest.raises(DomainError):
        TriquadField(0, 3, 5)
    TriquadField(-1, 2, 3)  # imaginary generators are fine


def test_ring_axioms_random():
    rng = random.Random(1)
    for _ in range(1100):
        x = random_element(rng)
        y = random_element(rng)
        z = random_element(rng)
        assert x + y == y + x
        assert x * y == y * x
        assert (x + y) * z == x * z + y * z
        assert (x * y) * z == x * (y * z)
        assert x + FIELD.zero() == x
        assert x * FIELD.one() == x
        assert x - x == FIELD.zero()


def test_inverse():
    rng = random.Random(2)
    for _ in range(50):
        x = random_element(rng)
        if not x:
            continue
        assert x * x.inverse() == FIELD.one()
        assert x / x == FIELD.one()
    with pytest.raises(DomainError):
        FIELD.zero().inverse()


def test_characters_are_automorphisms():
    rng = random.Random(3)
    assert len(ALL_CHARACTERS) == 8
    for _ in range(1100):
        x = random_element(rng)
        y = random_element(rng)
        chi = rng.choice(ALL_CHARACTERS)
        assert conjugate(x + y, chi) == conjugate(x, chi) + conjugate(y, chi)
        assert conjugate(x * y, chi) == conjugate(x, chi) * conjugate(y, chi)


def test_degrees():
    assert degree_over_Q(FIELD.from_rational(7)) == 1
    assert degree_over_Q(FIELD.sqrt_of(2)) == 2
    assert degree_over_Q(FIELD.sqrt_of(2) + FIELD.sqrt_of(3)) == 4
    v = FIELD.sqrt_of(2) + FIELD.sqrt_of(3) + FIELD.sqrt_of(5)
    assert degree_over_Q(v) == 8 and is_primitive(v)
    assert subfield_index(FIELD.sqrt_of(30)) == 4


def test_sqrt_of_composites():
    # sqrt(12) = 2 sqrt(3), sqrt(45) = 3 sqrt(5)
    assert FIELD.sqrt_of(12) == FIELD.sqrt_of(3) * 2
    assert FIELD.sqrt_of(45) * FIELD.sqrt_of(45) == FIELD.from_rational(45)
    with pytest.raises(DomainError):
        FIELD.sqrt_of(7)


def test_deg_alpha_basic():
    alpha = FIELD.sqrt_of(2) + FIELD.sqrt_of(3) + FIELD.sqrt_of(5)
    assert deg_alpha(FIELD.from_rational(3), alpha) == 0
    assert deg_alpha(alpha, alpha) == 1
    assert deg_alpha(alpha * alpha + alpha * 2, alpha) == 2
    # sqrt(2) needs the full degree 7 w.r.t. this particular alpha
    assert deg_alpha(FIELD.sqrt_of(2), alpha) >= subfield_index(FIELD.sqrt_of(2))


def test_deg_alpha_affine_invariance():
    rng = random.Random(4)
    alpha = FIELD.sqrt_of(2) + FIELD.sqrt_of(3) + FIELD.sqrt_of(5)
    for _ in range(40):
        v = random_element(rng)
        q = Fraction(rng.randint(1, 5), rng.randint(1, 4))
        r = Fraction(rng.randint(-5, 5))
        assert deg_alpha(v, alpha) == deg_alpha(v * q + r, alpha)


def test_deg_alpha_rejects_nonrepresentable():
    with pytest.raises(DomainError):
        deg_alpha(FIELD.sqrt_of(2), FIELD.sqrt_of(3))


def test_index4_witness_verifies_for_all_radicands():
    for d in FIELD.sf_radicands():
        cert = index4_witness(FIELD, d)
        assert cert.verified and cert.check()
        assert cert.degree == 4
        assert is_primitive(cert.alpha)
        assert evaluate_poly(cert.poly_coeffs, cert.alpha) == FIELD.sqrt_of(d)


def test_index4_witness_general_affine():
    v = FIELD.sqrt_of(45) * Fraction(2, 3) + 7  # 2 sqrt(5) + 7
    cert = index4_witness_general(FIELD, v)
    assert cert.verified and cert.degree == 4
    with pytest.raises(DomainError):
        index4_witness_general(FIELD, FIELD.sqrt_of(2) + FIELD.sqrt_of(3))


def test_parse_and_pretty_roundtrip():
    rng = random.Random(5)
    for _ in range(60):
        v = random_element(rng)
        assert parse_element(FIELD, pretty_print(v)) == v


def test_parse_grammar():
    assert parse_element(FIELD, "sqrt(2)+2*sqrt(3)") == FIELD.sqrt_of(2) + FIELD.sqrt_of(3) * 2
    assert parse_element(FIELD, "√2 + 2√3") == FIELD.sqrt_of(2) + FIELD.sqrt_of(3) * 2
    assert parse_element(FIELD, "-3/2 + (1/2)√30") == FIELD.sqrt_of(30) / 2 - Fraction(3, 2)
    assert parse_element(FIELD, "5") == FIELD.from_rational(5)
    with pytest.raises(DomainError):
        parse_element(FIELD, "sqrt(7)")
    with pytest.raises(DomainError):
        parse_element(FIELD, "bogus")


def test_json_roundtrip():
    rng = random.Random(6)
    for _ in range(20):
        v = random_element(rng)
        assert element_from_json(element_to_json(v)) == v
