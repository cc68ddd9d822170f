"""Nilpotent operators compatible with a diagonal Frobenius.

An operator N on the rank-3 module must satisfy N P = p P phi(N), where P
is the diagonal Frobenius matrix.  Entrywise this decouples: the entry at
(row r, column c) obeys a scalar recurrence whose cyclic consistency
forces Nm(p_c) = p^f Nm(p_r).  With pairwise distinct eigenvalue norms at
most two positions can be eligible, they never share a row, column or
diagonal, and any resulting operator is automatically nilpotent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coeff import Scalar
from .modules import FrobeniusData
from .tauvec import (
    Matrix,
    TauVector,
    mat_mul,
    mat_scale,
    mat_shift,
    matrix_norm,
    norm,
)


class MonodromyError(ValueError):
    pass


class IneligiblePositionError(MonodromyError):
    """The eigenvalue norms rule out a nonzero entry at this position."""


class ShapeError(MonodromyError):
    """Requested positions cannot form a valid nilpotent operator."""


OFF_DIAGONAL = tuple(
    (r, c) for r in range(3) for c in range(3) if r != c
)


def position_eligible(frob: FrobeniusData, r: int, c: int) -> bool:
    """True iff a nonzero entry can sit at (row r, column c)."""
    vecs = frob.vectors
    return norm(vecs[c]) == Fraction(frob.p) ** frob.f * norm(vecs[r])


def admissible_positions(frob: FrobeniusData) -> tuple[tuple[int, int], ...]:
    return tuple(
        (r, c) for (r, c) in OFF_DIAGONAL if position_eligible(frob, r, c)
    )


def entry_profile(frob: FrobeniusData, r: int, c: int) -> TauVector | None:
    """The solution of the entry recurrence normalized to 1 at embedding
    0; every solution is a scalar multiple.  None if ineligible."""
    if not position_eligible(frob, r, c):
        return None
    row_vec = frob.vectors[r]
    col_vec = frob.vectors[c]
    vals = [Fraction(1)]
    for i in range(frob.f - 1):
        vals.append(vals[-1] * col_vec[i] / (frob.p * row_vec[i]))
    return TauVector(tuple(vals))


@dataclass(frozen=True)
class MonodromySolution:
    positions: tuple[tuple[int, int], ...]
    matrix: Matrix


def build_monodromy(
    frob: FrobeniusData, scales: dict[tuple[int, int], Scalar]
) -> Matrix:
    """Assemble the operator with the given nonzero entry scalings.

    Each key is an eligible off-diagonal position; its profile is scaled
    by the given nonzero constant.  Raises on diagonal positions,
    symmetric pairs, more than two entries, or ineligible positions."""
    positions = sorted(scales)
    if len(positions) > 2:
        raise ShapeError("more than two nonzero entries")
    for r, c in positions:
        if r == c:
            raise ShapeError(f"diagonal position ({r}, {c})")
        if (c, r) in scales:
            raise ShapeError(f"symmetric pair ({r}, {c}) / ({c}, {r})")
        if Fraction(scales[(r, c)]) == 0:
            raise ShapeError(f"zero scaling at ({r}, {c})")
    f = frob.f
    rows = [[TauVector.zero(f) for _ in range(3)] for _ in range(3)]
    for r, c in positions:
        profile = entry_profile(frob, r, c)
        if profile is None:
            raise IneligiblePositionError(f"position ({r}, {c})")
        rows[r][c] = profile * Fraction(scales[(r, c)])
    return tuple(tuple(row) for row in rows)


def enumerate_monodromies(frob: FrobeniusData) -> tuple[MonodromySolution, ...]:
    """All maximal solutions: one per nonempty subset of eligible
    positions, with unit scalings."""
    elig = admissible_positions(frob)
    out = []
    for mask in range(1, 1 << len(elig)):
        chosen = tuple(p for idx, p in enumerate(elig) if mask >> idx & 1)
        scales = {pos: Fraction(1) for pos in chosen}
        out.append(MonodromySolution(chosen, build_monodromy(frob, scales)))
    return tuple(out)


def _is_zero_matrix(A: Matrix) -> bool:
    return all(e.is_zero() for row in A for e in row)


def validate_monodromy(frob: FrobeniusData, N: Matrix) -> bool:
    """Definitional check: commutation with Frobenius, commutation of the
    f-fold norm, nilpotency, and entry shape."""
    P = frob.matrix()
    if mat_mul(N, P) != mat_scale(Fraction(frob.p), mat_mul(P, mat_shift(N))):
        return False
    Q = matrix_norm(P)
    lhs = mat_mul(N, Q)
    rhs = mat_scale(Fraction(frob.p) ** frob.f, mat_mul(Q, N))
    if lhs != rhs:
        return False
    if not _is_zero_matrix(mat_mul(N, mat_mul(N, N))):
        return False
    for r in range(3):
        if not N[r][r].is_zero():
            return False
        for c in range(3):
            entry = N[r][c]
            if r != c and not entry.is_zero():
                # a nonzero entry must be nonzero at every embedding
                if not entry.all_nonzero():
                    return False
                if not position_eligible(frob, r, c):
                    return False
    return True
