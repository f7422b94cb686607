"""Exact arithmetic in triquadratic fields Q(sqrt(A), sqrt(B), sqrt(C)).

Elements carry 8 rational coordinates over the ordered basis
(1, sqrt(A), sqrt(B), sqrt(C), sqrt(AB), sqrt(AC), sqrt(BC), sqrt(ABC)).
Basis radicands are the raw generator-subset products (possibly not
square-free, e.g. sqrt(BC) for B=35, C=5); radical reduction happens only
when printing.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction

from ._linalg import RationalSpan
from .numtheory import (
    DomainError,
    format_rational,
    is_square,
    is_squarefree,
    parse_rational,
    squarefree_decompose,
)

# basis order (1, A, B, C, AB, AC, BC, ABC) as generator bitmasks (bit0=A)
_BASIS_MASKS = (0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111)
_INDEX_OF_MASK = {m: i for i, m in enumerate(_BASIS_MASKS)}


@dataclass(frozen=True)
class GaloisCharacter:
    """Sign pattern on (sqrt(A), sqrt(B), sqrt(C)); one of the 8 automorphisms."""

    eps_a: int
    eps_b: int
    eps_c: int

    def __post_init__(self):
        if {abs(self.eps_a), abs(self.eps_b), abs(self.eps_c)} != {1}:
            raise DomainError("character signs must be +1 or -1")

    def sign_on_basis(self, index: int) -> int:
        mask = _BASIS_MASKS[index]
        sign = 1
        if mask & 1:
            sign *= self.eps_a
        if mask & 2:
            sign *= self.eps_b
        if mask & 4:
            sign *= self.eps_c
        return sign

    def compose(self, other: "GaloisCharacter") -> "GaloisCharacter":
        return GaloisCharacter(
            self.eps_a * other.eps_a,
            self.eps_b * other.eps_b,
            self.eps_c * other.eps_c,
        )

    @property
    def is_identity(self) -> bool:
        return self.eps_a == self.eps_b == self.eps_c == 1


ALL_CHARACTERS = tuple(
    GaloisCharacter(*signs) for signs in itertools.product((1, -1), repeat=3)
)


class TriquadField:
    """Q(sqrt(A), sqrt(B), sqrt(C)) with [L:Q] = 8.

    Validity is stricter than "A, B, C distinct and square-free": every
    nonempty subset product must be a non-square, otherwise the degree
    silently collapses below 8.
    """

    def __init__(self, a: int, b: int, c: int):
        gens = (a, b, c)
        for g in gens:
            if g == 0:
                raise DomainError("generators must be nonzero")
            if not is_squarefree(g):
                raise DomainError(f"generator {g} is not square-free")
        if len(set(gens)) != 3:
            raise DomainError(f"duplicate generator in {gens}")
        for mask in range(1, 8):
            prod = self._subset_product(gens, mask)
            if is_square(prod):
                raise DomainError(
                    f"subset product {prod} is a perfect square; "
                    f"{gens} do not generate a degree-8 field"
                )
        self.gens = gens
        # raw radicand under each basis element
        self.radicands = tuple(
            self._subset_product(gens, m) for m in _BASIS_MASKS
        )
        # square-free part -> (basis index, square scale g) with rad = sf * g^2
        self._sf_index: dict[int, tuple[int, int]] = {}
        for i in range(1, 8):
            dec = squarefree_decompose(self.radicands[i])
            self._sf_index[dec.squarefree_part] = (i, dec.square_root_part)
        self._mul_table = self._build_mul_table(gens)

    @staticmethod
    def _subset_product(gens, mask: int) -> int:
        prod = 1
        for bit in range(3):
            if mask & (1 << bit):
                prod *= gens[bit]
        return prod

    @staticmethod
    def _build_mul_table(gens):
        # e_i * e_j = c * e_k with k = mask_i XOR mask_j and
        # c = product of generators shared by both masks
        table = []
        for mi in _BASIS_MASKS:
            row = []
            for mj in _BASIS_MASKS:
                common = mi & mj
                c = 1
                for bit in range(3):
                    if common & (1 << bit):
                        c *= gens[bit]
                row.append((_INDEX_OF_MASK[mi ^ mj], c))
            table.append(tuple(row))
        return tuple(table)

    def __eq__(self, other):
        return isinstance(other, TriquadField) and self.gens == other.gens

    def __hash__(self):
        return hash(self.gens)

    def __repr__(self):
        return f"TriquadField{self.gens}"

    # ---- element construction -------------------------------------------

    def element(self, coords) -> "TriquadElement":
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != 8:
            raise DomainError("an element needs exactly 8 coordinates")
        return TriquadElement(self, coords)

    def zero(self) -> "TriquadElement":
        return self.element([0] * 8)

    def one(self) -> "TriquadElement":
        return self.from_rational(1)

    def from_rational(self, q) -> "TriquadElement":
        coords = [Fraction(0)] * 8
        coords[0] = Fraction(q)
        return self.element(coords)

    def sqrt_of(self, d: int) -> "TriquadElement":
        """The square root of the integer d as a field element.

        d need not be square-free: sqrt(12) in (2,3,5) is 2*sqrt(3).
        """
        if d == 0:
            return self.zero()
        dec = squarefree_decompose(d)
        if dec.squarefree_part == 1:
            return self.from_rational(dec.square_root_part)
        hit = self._sf_index.get(dec.squarefree_part)
        if hit is None:
            raise DomainError(f"sqrt({d}) does not lie in {self!r}")
        index, g = hit
        coords = [Fraction(0)] * 8
        coords[index] = Fraction(dec.square_root_part, g)
        return self.element(coords)

    def sf_radicands(self) -> tuple[int, ...]:
        """The 7 square-free radicands, ascending by |.|, positive first."""
        return tuple(
            sorted(self._sf_index, key=lambda d: (abs(d), d < 0))
        )

    def contains_sqrt(self, d: int) -> bool:
        dec = squarefree_decompose(d)
        return dec.squarefree_part == 1 or dec.squarefree_part in self._sf_index


class TriquadElement:
    """Immutable element of a TriquadField; equality is coordinate-wise."""

    __slots__ = ("field", "coords")

    def __init__(self, field: TriquadField, coords: tuple[Fraction, ...]):
        self.field = field
        self.coords = coords

    def _check_same_field(self, other: "TriquadElement"):
        if self.field != other.field:
            raise DomainError("elements lie in different fields")

    def _coerce(self, other):
        if isinstance(other, TriquadElement):
            self._check_same_field(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return TriquadElement(
            self.field, tuple(x + y for x, y in zip(self.coords, other.coords))
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return TriquadElement(
            self.field, tuple(x - y for x, y in zip(self.coords, other.coords))
        )

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return TriquadElement(self.field, tuple(-x for x in self.coords))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return TriquadElement(self.field, tuple(q * x for x in self.coords))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        table = self.field._mul_table
        out = [Fraction(0)] * 8
        for i, xi in enumerate(self.coords):
            if not xi:
                continue
            row = table[i]
            for j, yj in enumerate(other.coords):
                if not yj:
                    continue
                k, c = row[j]
                out[k] += xi * yj * c
        return TriquadElement(self.field, tuple(out))

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
            isinstance(other, TriquadElement)
            and self.field == other.field
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.field, self.coords))

    def __bool__(self):
        return any(self.coords)

    def __repr__(self):
        return f"<{pretty_print(self)} in {self.field!r}>"

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise DomainError("element is irrational")
        return self.coords[0]

    def inverse(self) -> "TriquadElement":
        """1/v via the product of the 7 nontrivial conjugates over the norm."""
        if not self:
            raise DomainError("inverse of zero")
        prod = None
        for chi in ALL_CHARACTERS:
            if chi.is_identity:
                continue
            conj = conjugate(self, chi)
            prod = conj if prod is None else prod * conj
        norm = self * prod
        assert norm.is_rational()
        return prod * (1 / norm.rational_value())


def conjugate(v: TriquadElement, chi: GaloisCharacter) -> TriquadElement:
    return TriquadElement(
        v.field,
        tuple(c * chi.sign_on_basis(i) for i, c in enumerate(v.coords)),
    )


def degree_over_Q(v: TriquadElement) -> int:
    """Number of distinct Galois conjugates of v: 1, 2, 4, or 8."""
    stabilizer = sum(1 for chi in ALL_CHARACTERS if conjugate(v, chi) == v)
    return 8 // stabilizer


def subfield_index(v: TriquadElement) -> int:
    return 8 // degree_over_Q(v)


def is_primitive(v: TriquadElement) -> bool:
    return degree_over_Q(v) == 8


def deg_alpha(v: TriquadElement, alpha: TriquadElement) -> int:
    """Minimal m with v in the Q-span of {1, alpha, ..., alpha^m}.

    Exact Gaussian elimination on the 8-coordinate vectors of powers of
    alpha; raises if alpha is not primitive and v lies outside Q(alpha).
    """
    v._check_same_field(alpha)
    span = RationalSpan()
    power = alpha.field.one()
    for m in range(8):
        if m > 0:
            power = power * alpha
        grew = span.add(power.coords)
        if span.contains(v.coords):
            return m
        if not grew:
            raise DomainError(
                "target is not representable in powers of the given element"
            )
    raise DomainError("target is not representable")  # pragma: no cover


@dataclass
class WitnessCertificate:
    """alpha, polynomial f (constant term first) and target v with f(alpha) = v."""

    alpha: TriquadElement
    poly_coeffs: list[Fraction]
    target: TriquadElement
    verified: bool

    @property
    def degree(self) -> int:
        d = len(self.poly_coeffs) - 1
        while d > 0 and self.poly_coeffs[d] == 0:
            d -= 1
        return d

    def check(self) -> bool:
        """Re-verify f(alpha) = target exactly and alpha primitive."""
        return (
            is_primitive(self.alpha)
            and evaluate_poly(self.poly_coeffs, self.alpha) == self.target
        )


def evaluate_poly(coeffs, alpha: TriquadElement) -> TriquadElement:
    acc = alpha.field.zero()
    for c in reversed(list(coeffs)):
        acc = acc * alpha + alpha.field.from_rational(c)
    return acc


def _relabel_generators(field: TriquadField, d: int) -> tuple[int, int]:
    """Pick (E, F): the first radicand pair multiplicatively independent of d.

    Radicands are scanned ascending by absolute value (positive first);
    this reproduces the reference degree-4 witnesses including signs.
    """
    rads = [r for r in field.sf_radicands() if r != d]
    for e, f in itertools.combinations(rads, 2):
        if not is_square(d * e * f):
            return e, f
    raise DomainError("no independent generator pair found")  # pragma: no cover


def index4_witness(field: TriquadField, d: int) -> WitnessCertificate:
    """Degree-4 witness for sqrt(d), d one of the 7 square-free radicands.

    Relabels generators to (d, E, F), takes the primitive element
    alpha = sqrt(E) + E sqrt(F) - F sqrt(dE) + sqrt(dF) and returns the
    quartic polynomial carrying alpha to sqrt(d).
    """
    if d not in field.sf_radicands():
        raise DomainError(
            f"{d} is not a square-free radicand of {field!r}"
        )
    e, f = _relabel_generators(field, d)
    alpha = (
        field.sqrt_of(e)
        + field.sqrt_of(f) * e
        - field.sqrt_of(d * e) * f
        + field.sqrt_of(d * f)
    )
    # coefficient data for (a,b,c,d) = (1, E, -F, 1) in the relabeled field
    x_val = e + e * e * f + d * e * f * f + d * f
    z_val = 2 * e - 2 * d * f
    w_val = 2 - 2 * e * f
    denom = 2 * e * f * z_val * w_val
    if denom == 0:  # pragma: no cover - excluded by field validity
        raise DomainError("degenerate witness denominator")
    const = x_val * x_val - e * f * z_val**2 - d * e * f * w_val**2
    coeffs = [
        Fraction(const, denom),
        Fraction(0),
        Fraction(-2 * x_val, denom),
        Fraction(0),
        Fraction(1, denom),
    ]
    target = field.sqrt_of(d)
    verified = (
        is_primitive(alpha) and evaluate_poly(coeffs, alpha) == target
    )
    return WitnessCertificate(alpha, coeffs, target, verified)


def index4_witness_general(
    field: TriquadField, v: TriquadElement
) -> WitnessCertificate:
    """Witness for any v with subfield index 4, i.e. v = r0 + r1 sqrt(D)."""
    if subfield_index(v) != 4:
        raise DomainError("element does not lie in an index-4 subfield")
    nonzero = [i for i in range(1, 8) if v.coords[i]]
    assert len(nonzero) == 1
    i = nonzero[0]
    dec = squarefree_decompose(field.radicands[i])
    r0 = v.coords[0]
    r1 = v.coords[i] * dec.square_root_part
    base = index4_witness(field, dec.squarefree_part)
    coeffs = [r1 * c for c in base.poly_coeffs]
    coeffs[0] += r0
    verified = (
        base.verified and evaluate_poly(coeffs, base.alpha) == v
    )
    return WitnessCertificate(base.alpha, coeffs, v, verified)


# ---- text and JSON forms --------------------------------------------------


def _format_term(coef: Fraction, radicand: int | None) -> str:
    if radicand is None:
        return format_rational(coef)
    if coef == 1:
        head = ""
    elif coef == -1:
        head = "-"
    elif coef.denominator == 1:
        head = str(coef.numerator)
    else:
        head = f"({format_rational(coef)})"
    return f"{head}√{radicand}"


def pretty_print(v: TriquadElement) -> str:
    """Render with reduced radicals; round-trips through parse_element."""
    terms = []
    for i, b in enumerate(v.coords):
        if not b:
            continue
        if i == 0:
            terms.append((b, None))
        else:
            dec = squarefree_decompose(v.field.radicands[i])
            terms.append((b * dec.square_root_part, dec.squarefree_part))
    if not terms:
        return "0"
    parts = []
    for k, (coef, rad) in enumerate(terms):
        text = _format_term(abs(coef) if k else coef, rad)
        if k == 0:
            parts.append(text)
        else:
            parts.append("- " + text if coef < 0 else "+ " + text)
    return " ".join(parts)


_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:\(\s*(?P<pcoef>-?\d+(?:\s*/\s*\d+)?)\s*\)|(?P<coef>\d+(?:\s*/\s*\d+)?))?
        \s*\*?\s*
        (?:√\s*(?P<rad1>-?\d+)|sqrt\s*\(\s*(?P<rad2>-?\d+)\s*\))?
    """,
    re.X,
)


def parse_element(field: TriquadField, text: str) -> TriquadElement:
    """Parse signed terms "r√d" / "r*sqrt(d)"; whitespace-insensitive."""
    s = text.replace("−", "-").rstrip()
    if not s.strip():
        raise DomainError("empty element text")
    pos = 0
    total = field.zero()
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise DomainError(f"parse error at position {pos} in {text!r}")
        coef_text = m.group("pcoef") or m.group("coef")
        rad_text = m.group("rad1") or m.group("rad2")
        if coef_text is None and rad_text is None:
            raise DomainError(f"parse error at position {pos} in {text!r}")
        if not first and m.group("sign") is None:
            raise DomainError(f"missing sign at position {pos} in {text!r}")
        coef = (
            parse_rational(coef_text.replace(" ", ""))
            if coef_text
            else Fraction(1)
        )
        if m.group("sign") == "-":
            coef = -coef
        if rad_text is not None:
            term = field.sqrt_of(int(rad_text)) * coef
        else:
            term = field.from_rational(coef)
        total = total + term
        pos = m.end()
        first = False
    return total


def element_to_json(v: TriquadElement) -> dict:
    return {
        "field": list(v.field.gens),
        "coords": [format_rational(c) for c in v.coords],
    }


def element_from_json(data: dict) -> TriquadElement:
    field = TriquadField(*data["field"])
    return field.element([parse_rational(c) for c in data["coords"]])
