"""Elliptic curves Y^2 = X(X-r)(X-s) over Q with exact rational arithmetic.

Covers the chord-tangent group law, the integer (p, q) torsion classifier,
rational 3-torsion extraction, bounded rational point search, quadratic
twists, and the explicit point families used by the survey scans.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .numtheory import (
    DomainError,
    is_square,
    is_square_int,
    is_squarefree,
    squarefree_decompose,
)


@dataclass(frozen=True)
class EllCurve:
    """Y^2 = X(X-r)(X-s); provenance (a, A, B) means r = a^2 B, s = a^2 B - A."""

    r: Fraction
    s: Fraction
    provenance: tuple[Fraction, int, int] | None = None

    def __post_init__(self):
        if self.r == 0 or self.s == 0 or self.r == self.s:
            raise DomainError("singular curve: roots 0, r, s must be distinct")

    # y^2 = x^3 + c2 x^2 + c4 x
    @property
    def c2(self) -> Fraction:
        return -(self.r + self.s)

    @property
    def c4(self) -> Fraction:
        return self.r * self.s

    def rhs(self, x: Fraction) -> Fraction:
        return x * (x - self.r) * (x - self.s)

    def contains(self, x: Fraction, y: Fraction) -> bool:
        return y * y == self.rhs(x)

    def two_torsion_x(self) -> tuple[Fraction, Fraction, Fraction]:
        return (Fraction(0), self.r, self.s)

    def discriminant(self) -> Fraction:
        # of the cubic x(x-r)(x-s): 16 (rs)^2 (r-s)^2
        return 16 * (self.r * self.s * (self.r - self.s)) ** 2


_INFINITY = "infinity"


@dataclass(frozen=True)
class EllPoint:
    """Affine rational point or the point at infinity."""

    x: Fraction | None = None
    y: Fraction | None = None

    @classmethod
    def infinity(cls) -> "EllPoint":
        return cls(None, None)

    @classmethod
    def affine(cls, x, y) -> "EllPoint":
        return cls(Fraction(x), Fraction(y))

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __repr__(self):
        if self.is_infinity:
            return "EllPoint(infinity)"
        return f"EllPoint({self.x}, {self.y})"


def make_curve(a, big_a: int, big_b: int) -> EllCurve:
    """E: Y^2 = X(X - a^2 B)(X - (a^2 B - A)) with provenance (a, A, B)."""
    a = Fraction(a)
    if a == 0:
        raise DomainError("a must be nonzero")
    if big_a == 0 or big_b == 0:
        raise DomainError("A and B must be nonzero")
    r = a * a * big_b
    s = r - big_a
    if s == 0:
        raise DomainError(f"singular curve: a^2 B = A for (a, A, B) = ({a}, {big_a}, {big_b})")
    return EllCurve(r, s, provenance=(a, big_a, big_b))


def _require_on_curve(p: EllPoint, curve: EllCurve):
    if not p.is_infinity and not curve.contains(p.x, p.y):
        raise DomainError(f"point {p!r} is not on the curve")


def negate(p: EllPoint, curve: EllCurve) -> EllPoint:
    _require_on_curve(p, curve)
    if p.is_infinity:
        return p
    return EllPoint(p.x, -p.y)


def add(p: EllPoint, q: EllPoint, curve: EllCurve) -> EllPoint:
    """Chord-tangent addition on y^2 = x^3 + c2 x^2 + c4 x."""
    _require_on_curve(p, curve)
    _require_on_curve(q, curve)
    if p.is_infinity:
        return q
    if q.is_infinity:
        return p
    if p.x == q.x:
        if p.y == -q.y:
            return EllPoint.infinity()
        lam = (3 * p.x * p.x + 2 * curve.c2 * p.x + curve.c4) / (2 * p.y)
    else:
        lam = (q.y - p.y) / (q.x - p.x)
    x3 = lam * lam - curve.c2 - p.x - q.x
    y3 = lam * (p.x - x3) - p.y
    return EllPoint(x3, y3)


def double(p: EllPoint, curve: EllCurve) -> EllPoint:
    return add(p, p, curve)


def scalar_multiply(n: int, p: EllPoint, curve: EllCurve) -> EllPoint:
    _require_on_curve(p, curve)
    if n < 0:
        return scalar_multiply(-n, negate(p, curve), curve)
    acc = EllPoint.infinity()
    base = p
    while n:
        if n & 1:
            acc = add(acc, base, curve)
        n >>= 1
        if n:
            base = add(base, base, curve)
    return acc


def is_two_torsion(p: EllPoint, curve: EllCurve) -> bool:
    return p.is_infinity or p.y == 0


@dataclass(frozen=True)
class TorsionClass:
    """Z2xZ2 or Z2xZ6; the latter carries the integer (p, q) certificate."""

    kind: str  # "Z2xZ2" | "Z2xZ6"
    certificate: tuple[int, int] | None = None


def _divisor_cubes(n: int):
    """All integers p (|p| ascending, negative first) with p^3 | n."""
    n = abs(n)
    out = []
    p = 1
    while p**3 <= n:
        if n % p**3 == 0:
            out.extend([-p, p])
        p += 1
    return out


def torsion_class(curve: EllCurve) -> TorsionClass:
    """Classify the torsion subgroup from the curve's (a, A, B) provenance.

    Z2xZ6 exactly when integers p, q solve -a^2 B = p^3 (p + 2q) and
    -a^2 B + A = q^3 (2p + q), after clearing the denominator of a.
    """
    if curve.provenance is None:
        raise DomainError("torsion classification needs (a, A, B) provenance")
    a, big_a, big_b = curve.provenance
    m, n = a.numerator, a.denominator
    lhs1 = -(m * m * big_b)
    lhs2 = lhs1 + n * n * big_a
    for p in _divisor_cubes(lhs1):
        t = lhs1 // p**3  # = p + 2q
        if (t - p) % 2:
            continue
        q = (t - p) // 2
        if q**3 * (2 * p + q) == lhs2:
            return TorsionClass("Z2xZ6", (p, q))
    return TorsionClass("Z2xZ2")


def _rational_roots_int_poly(coeffs: list[int]) -> list[Fraction]:
    """Rational roots of an integer polynomial (constant term first)."""
    while coeffs and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    if not coeffs:
        return []
    roots = []
    shift = 0
    while coeffs[0] == 0:
        coeffs = coeffs[1:]
        shift += 1
    if shift:
        roots.append(Fraction(0))
    c0, cn = abs(coeffs[0]), abs(coeffs[-1])

    def divisors(k):
        out = []
        i = 1
        while i * i <= k:
            if k % i == 0:
                out.append(i)
                out.append(k // i)
            i += 1
        return sorted(set(out))

    def value(x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    for num in divisors(c0):
        for den in divisors(cn):
            if math.gcd(num, den) != 1:
                continue
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if value(cand) == 0 and cand not in roots:
                    roots.append(cand)
    return sorted(roots)


def three_torsion_points(curve: EllCurve) -> list[EllPoint]:
    """All rational points of exact order 3.

    Their x-coordinates are rational roots of the 3-division polynomial
    3x^4 + 4 c2 x^3 + 6 c4 x^2 - c4^2 of y^2 = x^3 + c2 x^2 + c4 x.
    """
    c2, c4 = curve.c2, curve.c4
    den = math.lcm(c2.denominator, c4.denominator)
    # clear denominators with x -> x/den so coefficients are integers
    coeffs = [
        -((c4 * den * den) ** 2),
        Fraction(0),
        6 * c4 * den * den,
        4 * c2 * den,
        Fraction(3),
    ]
    scale = math.lcm(*(c.denominator for c in coeffs))
    int_coeffs = [int(c * scale) for c in coeffs]
    points = []
    for root in _rational_roots_int_poly(int_coeffs):
        x = root / den
        y2 = curve.rhs(x)
        if y2 == 0 or not is_square(y2):
            continue
        y = Fraction(
            math.isqrt(y2.numerator), math.isqrt(y2.denominator)
        )
        for pt in (EllPoint(x, y), EllPoint(x, -y)):
            if scalar_multiply(3, pt, curve).is_infinity:
                points.append(pt)
    points.sort(key=lambda p: (p.x, -p.y))
    return points


@dataclass(frozen=True)
class SearchOutcome:
    """Either a non-2-torsion point found, or exhaustion of the height bound."""

    point: EllPoint | None
    height_bound: int

    @property
    def found(self) -> bool:
        return self.point is not None


def point_search(curve: EllCurve, height_bound: int) -> SearchOutcome:
    """Deterministic scan for a non-2-torsion rational point.

    Candidates X = u / (e^2 w^2) on a cleared-denominator integral model,
    scanned by increasing w <= sqrt(H), then increasing |u| <= H with
    positive u first; the returned point has positive Y.
    """
    if height_bound < 1:
        raise DomainError("height bound must be >= 1")
    e = math.lcm(curve.r.denominator, curve.s.denominator)
    # integral model y^2 = x^3 + C2 x^2 + C4 x via (X, Y) -> (e^2 X, e^3 Y)
    big_c2 = int(curve.c2 * e * e)
    big_c4 = int(curve.c4 * e**4)
    h = height_bound
    isqrt = math.isqrt
    gcd = math.gcd
    for w in range(1, isqrt(h) + 1):
        w2 = w * w
        w4 = w2 * w2
        a2 = big_c2 * w2
        a4 = big_c4 * w4
        for mag in range(1, h + 1):
            for u in (mag, -mag):
                if gcd(u, w) != 1:
                    continue
                t = u * ((u + a2) * u + a4)
                if t <= 0:  # t = 0 is 2-torsion
                    continue
                v = isqrt(t)
                if v * v != t:
                    continue
                x = Fraction(u, e * e * w2)
                y = Fraction(v, e**3 * w2 * w)
                return SearchOutcome(EllPoint(x, y), height_bound)
    return SearchOutcome(None, height_bound)


def quadratic_twist(curve: EllCurve, gamma: int) -> EllCurve:
    """E_gamma: Y^2 = X(X - r*gamma)(X - s*gamma) for square-free gamma."""
    if gamma == 0 or not is_squarefree(gamma):
        raise DomainError("twist parameter must be a nonzero square-free integer")
    prov = None
    if curve.provenance is not None:
        a, big_a, big_b = curve.provenance
        prov = (a, gamma * big_a, gamma * big_b)
    return EllCurve(curve.r * gamma, curve.s * gamma, provenance=prov)


def theorem55_point(big_a: int, big_b: int, a, b) -> EllPoint:
    """Explicit non-2-torsion point on the (a, A, B) curve when a^2 - 1 = (B-A) b^2."""
    a = Fraction(a)
    b = Fraction(b)
    if b == 0:
        raise DomainError("b must be nonzero")
    if a * a - 1 != (big_b - big_a) * b * b:
        raise DomainError("identity a^2 - 1 = (B - A) b^2 fails")
    curve = make_curve(a, big_a, big_b)
    t = big_b * b * b + 1
    if not is_square(t):
        p = EllPoint(a * a / (b * b) * t, a * a / (b**3) * t)
    else:
        p = EllPoint(
            Fraction(big_b - big_a) * a * a,
            -big_a * (big_b - big_a) * a * a * b,
        )
    if not curve.contains(p.x, p.y):
        raise DomainError("constructed point fails the curve equation")
    if is_two_torsion(p, curve):
        raise DomainError("constructed point is 2-torsion")
    return p


def congruent_curve(big_b: int) -> EllCurve:
    """Y^2 = X(X - B)(X + B); rank > 0 iff B is a congruent number."""
    if big_b <= 0 or not is_squarefree(big_b):
        raise DomainError("B must be a positive square-free integer")
    return make_curve(1, 2 * big_b, big_b)  # r = B, s = -B


def congruent_evidence(big_b: int, height_bound: int) -> SearchOutcome:
    return point_search(congruent_curve(big_b), height_bound)


@dataclass(frozen=True)
class FamilyMember:
    """One (A, a^2 B) pair from the 3-torsion family parametrization."""

    branch: str  # "+" or "-"
    big_a: int
    value: int  # a^2 B
    a: int
    big_b: int


def z2z6_family(p: int) -> list[FamilyMember]:
    """Curves with Z2xZ6 torsion from one integer parameter.

    Branch "+": A = 1 + 2p, a^2 B = p^3 (p + 2);
    branch "-": A = 1 - 2p, a^2 B = p^3 (p - 2).
    Branches are dropped when A is not square-free or the curve is singular.
    """
    out = []
    for branch, big_a, value in (
        ("+", 1 + 2 * p, p**3 * (p + 2)),
        ("-", 1 - 2 * p, p**3 * (p - 2)),
    ):
        if value == 0 or big_a == 0 or not is_squarefree(big_a):
            continue
        if value == big_a:  # singular: a^2 B = A
            continue
        dec = squarefree_decompose(value)
        out.append(
            FamilyMember(branch, big_a, value, dec.square_root_part, dec.squarefree_part)
        )
    return out


# ---- serialization ---------------------------------------------------------


def curve_to_json(curve: EllCurve) -> dict:
    data = {"r": str(curve.r), "s": str(curve.s)}
    if curve.provenance is not None:
        a, big_a, big_b = curve.provenance
        data["provenance"] = {"a": str(a), "A": big_a, "B": big_b}
    return data


def curve_from_json(data: dict) -> EllCurve:
    prov = data.get("provenance")
    if prov is not None:
        return make_curve(Fraction(prov["a"]), int(prov["A"]), int(prov["B"]))
    return EllCurve(Fraction(data["r"]), Fraction(data["s"]))


def point_to_json(p: EllPoint):
    if p.is_infinity:
        return _INFINITY
    return {"X": str(p.x), "Y": str(p.y)}


def point_from_json(data) -> EllPoint:
    if data == _INFINITY:
        return EllPoint.infinity()
    return EllPoint(Fraction(data["X"]), Fraction(data["Y"]))
