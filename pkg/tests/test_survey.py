from fractions import Fraction

import mpmath
import pytest

from mindeg.numtheory import DomainError
from mindeg.survey import (
    ScanRow,
    TwistScanConfig,
    conjecture_scan,
    corollary_ab,
    default_candidates,
    family55_row,
    family55_scan,
    rows_to_csv,
    selmer_constant,
    selmer_constant_exact,
    squarefree_family_range,
    twist_scan,
    witness_id,
)


def test_selmer_constant_small_values():
    assert selmer_constant_exact(1) == Fraction(1, 2)
    assert selmer_constant_exact(2) == Fraction(1, 3)
    assert selmer_constant(1).startswith("0.5000000000000")
    assert selmer_constant(2).startswith("0.3333333333333")
    with pytest.raises(DomainError):
        selmer_constant_exact(0)
    with pytest.raises(DomainError):
        selmer_constant(60, digits=6)


def test_selmer_constant_against_mpmath_oracle():
    mpmath.mp.dps = 60
    prod = mpmath.mpf(1)
    for j in range(60):
        prod *= 1 + mpmath.mpf(2) ** (-j)
    oracle = 1 / prod
    ours = mpmath.mpf(selmer_constant(60, digits=20))
    assert abs(ours - oracle) < mpmath.mpf(10) ** (-18)


def test_selmer_constant_monotone_and_convergent():
    values = [selmer_constant_exact(t) for t in range(1, 61)]
    for a, b in zip(values, values[1:]):
        assert b < a
    assert values[59] - values[58] > -Fraction(1, 10**15)
    assert abs(values[59] - values[58]) < Fraction(1, 10**15)


def test_twist_config_modulus_and_gammas():
    config = TwistScanConfig(Fraction(1), 2, 3, gamma_max=50, height_bound=500)
    assert config.modulus() == 24
    gammas = config.admissible_gammas()
    assert gammas[0] == 1  # gcd(1, D) = 1: gamma = 1 is admissible
    assert 5 in gammas and 7 in gammas and 35 in gammas
    assert all(g % 2 and g % 3 for g in gammas)
    assert TwistScanConfig(Fraction(1), 2, 3, 0, 10).admissible_gammas() == []


def test_twist_scan_report():
    config = TwistScanConfig(Fraction(1), 2, 3, gamma_max=50, height_bound=500)
    report = twist_scan(config)
    assert len(report.rows) == len(config.admissible_gammas())
    assert 0 <= Fraction(report.summary["z2z2_exhausted_fraction"]) <= 1
    for row in report.rows:
        assert row.torsion in ("Z2xZ2", "Z2xZ6")
        if row.outcome == "FoundPoint":
            assert row.witness is not None and row.witness.verified
    # determinism
    report2 = twist_scan(config)
    assert rows_to_csv(report.rows) == rows_to_csv(report2.rows)


def test_twist_fraction_non_increasing_in_height():
    lo = twist_scan(TwistScanConfig(Fraction(1), 2, 3, 30, 50))
    hi = twist_scan(TwistScanConfig(Fraction(1), 2, 3, 30, 500))
    assert Fraction(hi.summary["z2z2_exhausted_fraction"]) <= Fraction(
        lo.summary["z2z2_exhausted_fraction"]
    )


def test_twist_scan_empty():
    report = twist_scan(TwistScanConfig(Fraction(1), 2, 3, 0, 100))
    assert report.rows == [] and report.summary["rows"] == 0


def test_corollary_ab():
    assert corollary_ab(3, 7, 2, 1) == (Fraction(5, 3), Fraction(2, 3))
    a, b = corollary_ab(3, 7, 2, 1)
    assert a * a - 1 == (7 - 3) * b * b
    with pytest.raises(DomainError):
        corollary_ab(3, 5, 2, 1)  # B - A not a square
    with pytest.raises(DomainError):
        corollary_ab(3, 7, 1, 1)


def test_family55_row_and_errors():
    row = family55_row(3, 7, Fraction(5, 3), Fraction(2, 3))
    assert row.outcome == "WitnessFound" and row.witness.verified
    with pytest.raises(DomainError):
        family55_row(3, 5, 3, 3)  # identity a^2-1 = (B-A) b^2 fails


def test_family55_scan_all_witnesses():
    bs = squarefree_family_range(3, 40)
    rows = family55_scan(bs)
    assert len(rows) == len(bs)
    for row in rows:
        assert row.outcome == "WitnessFound"
        assert row.witness is not None and row.witness.verified
        assert row.witness.degree == 2


def test_family55_scan_mn_mode():
    # offset 4 = 2^2 allows deriving (a, b) from (m, n)
    rows = family55_scan([7, 11], offset=4, mn=(2, 1))
    for row in rows:
        assert row.outcome == "WitnessFound" and row.witness.verified


def test_squarefree_family_range_excludes_degenerate():
    bs = squarefree_family_range(3, 100)
    assert 3 not in bs  # A = 1 collapses the field
    assert 6 not in bs  # A = 4 is not square-free
    assert 5 in bs and 7 in bs and 15 in bs
    for b in bs:
        assert b - 2 >= 2


def test_conjecture_scan_example_pair():
    rows = conjecture_scan(2, 3, height_bound=10**4)
    assert len(rows) == 1
    assert rows[0].parameter == "A=2,B=3"
    assert rows[0].outcome == "evidence: a=1, ExhaustedBound(H=10000)"


def test_conjecture_scan_small_block():
    rows = conjecture_scan(5, 5, height_bound=300)
    assert rows  # ordered, deterministic
    assert rows == conjecture_scan(5, 5, height_bound=300)
    for row in rows:
        assert row.outcome.startswith("evidence") or row.outcome == (
            "no candidate under bound"
        )


def test_conjecture_scan_validation():
    assert len(default_candidates()) == 20
    with pytest.raises(DomainError):
        conjecture_scan(3, 3, candidates=[0])
    with pytest.raises(DomainError):
        conjecture_scan(3, 3, candidates=[])


def test_csv_shape():
    text = rows_to_csv([ScanRow("A=2,B=3", "Z2xZ2", "ExhaustedBound")])
    lines = text.strip().splitlines()
    assert lines[0] == "parameter,torsion,outcome,point,witness-id"
    assert lines[1] == "\"A=2,B=3\",Z2xZ2,ExhaustedBound,,"
    assert witness_id(None) == ""
