"""Degree-4 Galois extensions of Q (cyclic C4 and biquadratic V4).

A field is a quotient Q[x]/(p) for a monic integer quartic p that is
irreducible and normal. Construction verifies irreducibility by rational
root and integer quadratic-factor checks, classifies the group through
the resolvent cubic, and confirms normality by counting the roots of p
inside the quotient ring (exact factorization over Q(alpha)).

The witness construction realizes, for every irrational v, a primitive
element alpha with deg_alpha(v) = [L : Q(v)].
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ._linalg import RationalSpan, solve_linear
from .numtheory import DomainError, is_square, squarefree_decompose


def _divisors(n: int):
    n = abs(n)
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            out.append(n // i)
        i += 1
    return sorted(set(out))


def _poly_value(coeffs, x):
    acc = Fraction(0)
    for c in reversed(list(coeffs)):
        acc = acc * x + c
    return acc


def _has_integer_root(coeffs: list[int]) -> bool:
    # monic with integer coefficients: rational roots are integer divisors
    # of the constant term
    if coeffs[0] == 0:
        return True
    for d in _divisors(coeffs[0]):
        if _poly_value(coeffs, d) == 0 or _poly_value(coeffs, -d) == 0:
            return True
    return False


def _has_quadratic_factor(coeffs: list[int]) -> bool:
    # p = (x^2 + a x + b)(x^2 + c x + d) with integer a, b, c, d (Gauss)
    c0, c1, c2, c3, _ = coeffs
    for b in _divisors(c0):
        for b_signed in (b, -b):
            if c0 % b_signed != 0:
                continue
            d = c0 // b_signed
            # a + c = c3, ac = c2 - b - d -> roots of t^2 - c3 t + (c2-b-d)
            disc = c3 * c3 - 4 * (c2 - b_signed - d)
            if disc < 0 or math.isqrt(disc) ** 2 != disc:
                continue
            sq = math.isqrt(disc)
            for a2 in ((c3 + sq), (c3 - sq)):
                if a2 % 2:
                    continue
                a = a2 // 2
                c = c3 - a
                if a * d + b_signed * c == c1:
                    return True
    return False


def _resolvent_cubic(coeffs: list[int]) -> list[int]:
    # for x^4 + a x^3 + b x^2 + c x + d:
    # y^3 - b y^2 + (ac - 4d) y - (a^2 d - 4 b d + c^2), constant first
    d, c, b, a, _ = coeffs
    return [-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, 1]


def _integer_roots(coeffs: list[int]) -> list[int]:
    # monic with integer coefficients, so rational roots are integers
    roots = []
    while coeffs[0] == 0:
        if 0 not in roots:
            roots.append(0)
        coeffs = coeffs[1:]
    for d in _divisors(coeffs[0]):
        for r in (d, -d):
            if _poly_value(coeffs, r) == 0 and r not in roots:
                roots.append(r)
    return sorted(roots)


def _cubic_discriminant(coeffs: list[int]) -> int:
    r, q, p, _ = coeffs  # y^3 + p y^2 + q y + r
    return (
        18 * p * q * r - 4 * p**3 * r + p * p * q * q - 4 * q**3 - 27 * r * r
    )


def _is_square_in_quadratic(delta: int, disc: int) -> bool:
    # delta in Q is a square in Q(sqrt(disc)) iff delta, or delta*disc, is
    # a rational square (disc non-square)
    return delta == 0 or is_square(delta) or is_square(delta * disc)


def _roots_in_quotient(coeffs: list[int]) -> list[tuple[Fraction, ...]]:
    """All roots of p inside Q[x]/(p) as coordinate vectors (exact).

    Uses factorization over the algebraic extension Q(alpha); sympy's
    number-field factorization keeps everything in exact rationals.
    """
    from sympy import CRootOf, Poly, Rational, factor_list, symbols

    x, y = symbols("x y")
    px = sum(int(c) * x**k for k, c in enumerate(coeffs))
    py = sum(int(c) * y**k for k, c in enumerate(coeffs))
    theta = CRootOf(py, 0)
    # CRootOf may canonicalize to a rational multiple of a root of a scaled
    # polynomial (e.g. the root of x^4+12x^2+784 becomes 2*CRootOf(...)).
    # Extract coordinates in powers of that atom, then rescale to theta.
    atom = next(iter(theta.atoms(CRootOf)))
    scale = Rational(theta / atom)
    _, factors = factor_list(px, x, extension=theta)
    roots = []
    for f, _mult in factors:
        pf = Poly(f, x)
        if pf.degree() != 1:
            continue
        lead, const = pf.all_coeffs()
        root_expr = -Rational(1) * const / lead
        cs = Poly(root_expr, atom).all_coeffs()[::-1]
        vec = [Fraction(0)] * 4
        for k, c in enumerate(cs):
            c = Rational(c)
            vec[k] = Fraction(int(c.p), int(c.q)) / Fraction(
                int(scale.p), int(scale.q)
            ) ** k
        roots.append(tuple(vec))
    return roots


class QuarticField:
    """Q[x]/(p) for a monic, irreducible, normal integer quartic p."""

    def __init__(self, coeffs, group_type, roots):
        self.coeffs = tuple(coeffs)  # constant term first, monic
        self.group_type = group_type  # "C4" | "V4"
        self.roots = [self.element(r) for r in roots]
        self._reduction = self._build_reduction()
        # recompute root powers with reduction available
        self._subfields = None

    def _build_reduction(self):
        # x^4 = -(c3 x^3 + c2 x^2 + c1 x + c0); tabulate x^4, x^5, x^6
        red = []
        top = [Fraction(-c) for c in self.coeffs[:4]]
        red.append(tuple(top))
        for _ in range(2):
            shifted = [Fraction(0)] + list(red[-1][:3])
            overflow = red[-1][3]
            nxt = [s + overflow * t for s, t in zip(shifted, red[0])]
            red.append(tuple(nxt))
        return red

    def element(self, coords) -> "QuarticElement":
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != 4:
            raise DomainError("an element needs exactly 4 coordinates")
        return QuarticElement(self, coords)

    def from_rational(self, q) -> "QuarticElement":
        return self.element([Fraction(q), 0, 0, 0])

    def zero(self) -> "QuarticElement":
        return self.element([0, 0, 0, 0])

    def one(self) -> "QuarticElement":
        return self.from_rational(1)

    def generator(self) -> "QuarticElement":
        return self.element([0, 1, 0, 0])

    def automorphisms(self):
        """The 4 automorphisms, each as the image of the generator."""
        return list(self.roots)

    def apply_automorphism(self, root: "QuarticElement", v: "QuarticElement"):
        acc = self.zero()
        power = self.one()
        for k, c in enumerate(v.coords):
            if k:
                power = power * root
            if c:
                acc = acc + power * c
        return acc

    def quadratic_subfields(self):
        """[(d, sqrt_d element)] for each quadratic subfield Q(sqrt(d)).

        One entry for C4, three for V4; d square-free, sorted by (|d|, sign).
        Derived from the fixed spaces of the order-2 automorphisms.
        """
        if self._subfields is None:
            found = {}
            for root in self.roots:
                sigma2 = self.apply_automorphism(root, root)
                if sigma2 != self.generator() or root == self.generator():
                    continue  # not an order-2 automorphism
                w = self._fixed_irrational(root)
                d, sqrt_d = _pure_radical(w)
                found[d] = sqrt_d
            self._subfields = sorted(
                found.items(), key=lambda kv: (abs(kv[0]), kv[0] < 0)
            )
        return list(self._subfields)

    def _fixed_irrational(self, root: "QuarticElement") -> "QuarticElement":
        # basis image of sigma: columns are sigma(alpha^k)
        images = []
        power = self.one()
        for k in range(4):
            if k:
                power = power * self.generator()
            images.append(self.apply_automorphism(root, power).coords)
        for cand in _fixed_space_basis(images):
            el = self.element(cand)
            if not el.is_rational():
                return el
        raise DomainError("no irrational fixed element")  # pragma: no cover

    def __eq__(self, other):
        return isinstance(other, QuarticField) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"QuarticField({list(self.coeffs)}, {self.group_type})"


def _fixed_space_basis(images):
    """Basis of the kernel of (sigma - id) from sigma's basis images."""
    # rows of (M - I)^T as a homogeneous system; brute force via RREF
    m = [[images[j][i] - (1 if i == j else 0) for j in range(4)] for i in range(4)]
    # RREF of m, then read nullspace
    rows = [list(map(Fraction, row)) for row in m]
    pivots = []
    r = 0
    for c in range(4):
        sel = next((i for i in range(r, 4) if rows[i][c]), None)
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(4):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    basis = []
    free = [c for c in range(4) if c not in pivots]
    for fc in free:
        vec = [Fraction(0)] * 4
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -rows[i][fc]
        basis.append(tuple(vec))
    return basis


def _pure_radical(w):
    """Given irrational w of degree 2, return (d, sqrt_d) with sqrt_d^2 = d."""
    field = w.field
    w2 = w * w
    sol = solve_linear([field.one().coords, w.coords], w2.coords)
    assert sol is not None
    c0, c1 = sol  # w^2 = c0 + c1 w
    u = w - field.from_rational(c1 / 2)
    rho = c0 + c1 * c1 / 4  # u^2 = rho, rational
    assert (u * u).is_rational() and (u * u).coords[0] == rho
    dec = squarefree_decompose(rho.numerator * rho.denominator)
    d = dec.squarefree_part
    k = Fraction(dec.square_root_part, rho.denominator)
    sqrt_d = u * (1 / k)
    assert (sqrt_d * sqrt_d) == field.from_rational(d)
    return d, sqrt_d


class QuarticElement:
    """Residue in Q[x]/(p) with canonical degree-<4 representative."""

    __slots__ = ("field", "coords")

    def __init__(self, field: QuarticField, coords):
        self.field = field
        self.coords = tuple(coords)

    def _coerce(self, other):
        if isinstance(other, QuarticElement):
            if other.field != self.field:
                raise DomainError("elements lie in different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuarticElement(
            self.field, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return QuarticElement(
            self.field, tuple(a - b for a, b in zip(self.coords, other.coords))
        )

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return QuarticElement(self.field, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return QuarticElement(self.field, tuple(q * a for a in self.coords))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        raw = [Fraction(0)] * 7
        for i, a in enumerate(self.coords):
            if not a:
                continue
            for j, b in enumerate(other.coords):
                if b:
                    raw[i + j] += a * b
        out = raw[:4]
        for k in range(4, 7):
            if raw[k]:
                red = self.field._reduction[k - 4]
                out = [o + raw[k] * t for o, t in zip(out, red)]
        return QuarticElement(self.field, tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if q == 0:
                raise DomainError("division by zero")
            return self * (1 / q)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        return (
            isinstance(other, QuarticElement)
            and self.field == other.field
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.field, self.coords))

    def __bool__(self):
        return any(self.coords)

    def __repr__(self):
        return f"QuarticElement{self.coords}"

    def is_rational(self):
        return not any(self.coords[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise DomainError("element is irrational")
        return self.coords[0]

    def inverse(self) -> "QuarticElement":
        if not self:
            raise DomainError("inverse of zero")
        sol = solve_linear(
            [(self * self.field.element(_unit(k))).coords for k in range(4)],
            self.field.one().coords,
        )
        assert sol is not None
        return self.field.element(sol)


def _unit(k):
    v = [0, 0, 0, 0]
    v[k] = 1
    return v


def element_degree(v: QuarticElement) -> int:
    """[Q(v) : Q] in {1, 2, 4} via the span of powers of v."""
    span = RationalSpan()
    power = v.field.one()
    span.add(power.coords)
    for m in range(1, 5):
        power = power * v
        if not span.add(power.coords):
            return m
    raise DomainError("impossible degree")  # pragma: no cover


def make_quartic_field(coeffs) -> QuarticField:
    """Validate and classify a monic integer quartic (constant term first).

    Raises on reducible or non-normal input. Classification: 3 rational
    resolvent-cubic roots -> V4; exactly one rational root -> C4 or D4,
    separated by the quadratic-splitting criterion over Q(sqrt(disc));
    D4/S4/A4 are rejected as not Galois. The C4/V4 verdict is confirmed by
    counting roots of p in Q[x]/(p): normal iff all 4 roots lie there.
    """
    coeffs = [int(c) for c in coeffs]
    if len(coeffs) != 5 or coeffs[4] != 1:
        raise DomainError("expected a monic degree-4 integer polynomial")
    if _has_integer_root(coeffs) or _has_quadratic_factor(coeffs):
        raise DomainError("polynomial is reducible over Q")
    res = _resolvent_cubic(coeffs)
    res_roots = _integer_roots(res)
    disc = _cubic_discriminant(res)  # equals disc of the quartic
    if len(res_roots) == 3:
        group = "V4"
    elif len(res_roots) == 1:
        beta = res_roots[0]
        d, c, b, a, _ = coeffs
        delta1 = beta * beta - 4 * d
        delta2 = a * a - 4 * (b - beta)
        if _is_square_in_quadratic(delta1, disc) and _is_square_in_quadratic(
            delta2, disc
        ):
            group = "C4"
        else:
            raise DomainError("polynomial is not Galois (group D4)")
    else:
        raise DomainError("polynomial is not Galois (group S4 or A4)")
    roots = _roots_in_quotient(coeffs)
    if len(roots) != 4:
        raise DomainError(
            "polynomial is not Galois: fewer than 4 roots in Q[x]/(p)"
        )
    return QuarticField(coeffs, group, roots)


def make_v4_field(a: int, b: int) -> QuarticField:
    """Q(sqrt(a), sqrt(b)) as the quartic field of sqrt(a) + sqrt(b)."""
    for g in (a, b, a * b):
        if g == 0 or is_square(g):
            raise DomainError("generators must be non-square and independent")
    # minimal polynomial x^4 - 2(a+b) x^2 + (a-b)^2
    return make_quartic_field([(a - b) ** 2, 0, -2 * (a + b), 0, 1])


@dataclass
class RelativeMinPoly:
    """x^2 + f1 x + f0 over Q(v) with alpha as a root."""

    f1: QuarticElement
    f0: QuarticElement


def relative_minpoly(
    alpha: QuarticElement, v: QuarticElement
) -> RelativeMinPoly:
    """Exact f1, f0 in Q(v) with alpha^2 + f1 alpha + f0 = 0."""
    field = alpha.field
    if element_degree(alpha) != 4:
        raise DomainError("alpha must be primitive")
    if element_degree(v) != 2:
        raise DomainError("v must generate a quadratic subfield")
    one = field.one()
    cols = [
        (alpha).coords,
        (v * alpha).coords,
        one.coords,
        v.coords,
    ]
    sol = solve_linear(cols, (-(alpha * alpha)).coords)
    if sol is None:
        raise DomainError("relative minimal polynomial solve failed")
    u0, u1, w0, w1 = sol
    return RelativeMinPoly(f1=one * u0 + v * u1, f0=one * w0 + v * w1)


@dataclass
class QuarticWitness:
    """Certificate deg_alpha(v) = [L : Q(v)]; degree 0 means v rational."""

    alpha: QuarticElement | None
    poly_coeffs: list[Fraction]
    target: QuarticElement
    verified: bool

    @property
    def degree(self) -> int:
        d = len(self.poly_coeffs) - 1
        while d > 0 and self.poly_coeffs[d] == 0:
            d -= 1
        return d


def _evaluate(coeffs, alpha: QuarticElement) -> QuarticElement:
    acc = alpha.field.zero()
    for c in reversed(list(coeffs)):
        acc = acc * alpha + alpha.field.from_rational(c)
    return acc


def _first_primitive(field: QuarticField) -> QuarticElement:
    x = field.generator()
    for cand in (x, x + 1, x - 1, x * 2 + 1):
        if element_degree(cand) == 4:
            return cand
    raise DomainError("no primitive element found")  # pragma: no cover


def quartic_witness(field: QuarticField, v: QuarticElement) -> QuarticWitness:
    """Primitive alpha and polynomial f with f(alpha) = v, deg f = [L:Q(v)].

    Rational v gets a degree-0 outcome (constant polynomial, no alpha).
    """
    if v.field != field:
        raise DomainError("element does not belong to the given field")
    if v.is_rational():
        return QuarticWitness(None, [v.rational_value()], v, True)
    deg = element_degree(v)
    if deg == 4:
        cert = QuarticWitness(v, [Fraction(0), Fraction(1)], v, True)
        return cert
    assert deg == 2
    if field.group_type == "C4":
        alpha0 = _first_primitive(field)
        rel = relative_minpoly(alpha0, v)
        beta = alpha0 + rel.f1 * Fraction(1, 2)
        g = rel.f0 - rel.f1 * rel.f1 * Fraction(1, 4)  # in Q(v), irrational
        sol = solve_linear([field.one().coords, v.coords], g.coords)
        if sol is None:
            raise DomainError("completion of square left Q(v)")
        a0, a1 = sol
        if a1 == 0:
            raise DomainError("degenerate completion of square")
        coeffs = [-a0 / a1, Fraction(0), -1 / a1]
        alpha = beta
    else:
        # normalize v to a pure radical of one quadratic subfield
        d, sqrt_d = _pure_radical(v)
        sol = solve_linear([field.one().coords, sqrt_d.coords], v.coords)
        assert sol is not None
        shift, scale = sol  # v = shift + scale * sqrt(d)
        others = [(e, s) for e, s in field.quadratic_subfields() if e != d]
        b, sqrt_b = others[0]
        alpha = sqrt_b + sqrt_d * sqrt_b
        # alpha^2 = b + d*b + 2b sqrt(d)
        coeffs = [
            shift - scale * Fraction(b + d * b, 2 * b),
            Fraction(0),
            scale / (2 * b),
        ]
    verified = element_degree(alpha) == 4 and _evaluate(coeffs, alpha) == v
    return QuarticWitness(alpha, coeffs, v, verified)
