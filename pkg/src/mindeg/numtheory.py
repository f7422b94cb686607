"""Exact integer and rational foundations.

All scalars in this package are ``fractions.Fraction`` values, which are
always stored in canonical reduced form (gcd(|num|, den) = 1, den >= 1).
This module adds the few integer helpers the rest of the package needs:
square-free decomposition, squareness tests, and the "p/q" text form.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction


class DomainError(ValueError):
    """Input outside an operation's mathematical domain."""


@dataclass(frozen=True)
class SquarefreeDecomposition:
    """n = squarefree_part * square_root_part**2, sign on the squarefree part."""

    squarefree_part: int
    square_root_part: int

    def recompose(self) -> int:
        return self.squarefree_part * self.square_root_part**2


def squarefree_decompose(n: int) -> SquarefreeDecomposition:
    """Split a nonzero integer into square-free part times a square.

    Trial division up to the square root; inputs here are desk-scale.
    """
    if n == 0:
        raise DomainError("0 has no square-free decomposition")
    sign = -1 if n < 0 else 1
    n = abs(n)
    square_free = 1
    root = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            root *= d ** (e // 2)
            if e % 2:
                square_free *= d
        d += 1 if d == 2 else 2
    square_free *= n
    return SquarefreeDecomposition(sign * square_free, root)


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of a nonzero integer, ascending."""
    if n == 0:
        raise DomainError("0 has no prime factorization")
    n = abs(n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def is_squarefree(n: int) -> bool:
    return n != 0 and squarefree_decompose(n).square_root_part == 1


def is_square_int(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def is_square(q: Fraction | int) -> bool:
    """True iff q is the square of a rational number."""
    q = Fraction(q)
    if q < 0:
        return False
    # canonical form: numerator and denominator must both be squares
    return is_square_int(q.numerator) and is_square_int(q.denominator)


_RATIONAL_RE = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" (decimal integers, optional leading minus)."""
    m = _RATIONAL_RE.match(text)
    if not m:
        raise DomainError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise DomainError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))
