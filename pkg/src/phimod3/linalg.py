"""Small exact linear algebra over the rationals.

All subspaces that occur are spanned by a handful of length-3 vectors, so
plain Gaussian elimination over Fraction is both exact and fast.
"""

from __future__ import annotations

from fractions import Fraction

Vec = tuple[Fraction, ...]


def _as_rows(vectors) -> list[list[Fraction]]:
    return [[Fraction(c) for c in v] for v in vectors]


def rref(vectors) -> list[list[Fraction]]:
    """Reduced row echelon form; zero rows removed."""
    rows = _as_rows(vectors)
    if not rows:
        return []
    ncols = len(rows[0])
    pivot_row = 0
    for col in range(ncols):
        pivot = None
        for r in range(pivot_row, len(rows)):
            if rows[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        rows[pivot_row], rows[pivot] = rows[pivot], rows[pivot_row]
        inv = 1 / rows[pivot_row][col]
        rows[pivot_row] = [x * inv for x in rows[pivot_row]]
        for r in range(len(rows)):
            if r != pivot_row and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
        if pivot_row == len(rows):
            break
    return [row for row in rows if any(x != 0 for x in row)]


def rank(vectors) -> int:
    return len(rref(vectors))


def span_contains(vectors, v) -> bool:
    base = rank(vectors)
    return rank(list(vectors) + [v]) == base


def spans_equal(a, b) -> bool:
    ra, rb = rref(a), rref(b)
    return ra == rb


def intersection_dim(a, b) -> int:
    """dim(span a ∩ span b) = dim a + dim b - dim(a + b)."""
    return rank(a) + rank(b) - rank(list(a) + list(b))


def nullspace(vectors) -> list[Vec]:
    """Basis of {c : row · c = 0 for every row}."""
    rows = rref(vectors)
    if not rows:
        ncols = len(vectors[0]) if len(vectors) else 0
        return [tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)]
    ncols = len(rows[0])
    pivots = []
    for row in rows:
        for col in range(ncols):
            if row[col] != 0:
                pivots.append(col)
                break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for row, pc in zip(rows, pivots):
            vec[pc] = -row[fc]
        basis.append(tuple(vec))
    return basis
