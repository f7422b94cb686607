"""Exact Gaussian elimination helpers over Fraction vectors."""

from __future__ import annotations

from fractions import Fraction


class RationalSpan:
    """Incrementally built row space of exact rational vectors."""

    def __init__(self):
        self._pivots: dict[int, tuple[Fraction, ...]] = {}

    def _reduce(self, vec):
        vec = list(vec)
        for piv, row in self._pivots.items():
            if vec[piv]:
                f = vec[piv]
                vec = [x - f * y for x, y in zip(vec, row)]
        return vec

    def add(self, vec) -> bool:
        """Insert a vector; returns True if it enlarged the span."""
        vec = self._reduce(vec)
        for i, x in enumerate(vec):
            if x:
                self._pivots[i] = tuple(v / x for v in vec)
                return True
        return False

    def contains(self, vec) -> bool:
        return not any(self._reduce(vec))

    @property
    def dimension(self) -> int:
        return len(self._pivots)


def solve_linear(columns, target):
    """Solve sum_i c_i * columns[i] = target exactly.

    Returns the coefficient list, or None if the system is inconsistent.
    Assumes the columns are linearly independent.
    """
    n = len(columns)
    rows = len(target)
    aug = [
        [Fraction(columns[j][i]) for j in range(n)] + [Fraction(target[i])]
        for i in range(rows)
    ]
    pivots = []
    row = 0
    for col in range(n):
        sel = next((r for r in range(row, rows) if aug[r][col]), None)
        if sel is None:
            return None  # dependent columns
        aug[row], aug[sel] = aug[sel], aug[row]
        inv = 1 / aug[row][col]
        aug[row] = [x * inv for x in aug[row]]
        for r in range(rows):
            if r != row and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
        if row == rows:
            break
    # consistency of the remaining rows
    for r in range(row, rows):
        if aug[r][n]:
            return None
    sol = [Fraction(0)] * n
    for r, col in enumerate(pivots):
        sol[col] = aug[r][n]
    return sol
