"""The product ring of f coefficient-field copies, one per embedding.

A TauVector is an f-tuple of scalars with componentwise ring operations.
The cyclic coordinate shift plays the role of the Frobenius automorphism;
the norm of a vector is the product of its coordinates, and the norm of a
matrix is the ordered product of its f successive shifts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coeff import Scalar, vp


@dataclass(frozen=True)
class TauVector:
    coords: tuple[Scalar, ...]

    def __post_init__(self):
        if len(self.coords) < 1:
            raise ValueError("empty coordinate vector")
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    @property
    def f(self) -> int:
        return len(self.coords)

    @staticmethod
    def constant(value, f: int) -> "TauVector":
        return TauVector((Fraction(value),) * f)

    @staticmethod
    def ones(f: int) -> "TauVector":
        return TauVector.constant(1, f)

    @staticmethod
    def zero(f: int) -> "TauVector":
        return TauVector.constant(0, f)

    def __getitem__(self, i: int) -> Scalar:
        return self.coords[i % len(self.coords)]

    def _check(self, other: "TauVector"):
        if self.f != other.f:
            raise ValueError("length mismatch")

    def __add__(self, other: "TauVector") -> "TauVector":
        self._check(other)
        return TauVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "TauVector") -> "TauVector":
        self._check(other)
        return TauVector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __mul__(self, other) -> "TauVector":
        if isinstance(other, TauVector):
            self._check(other)
            return TauVector(tuple(a * b for a, b in zip(self.coords, other.coords)))
        return TauVector(tuple(a * Fraction(other) for a in self.coords))

    __rmul__ = __mul__

    def __neg__(self) -> "TauVector":
        return TauVector(tuple(-a for a in self.coords))

    def inverse(self) -> "TauVector":
        if not self.all_nonzero():
            raise ZeroDivisionError("vector has a zero coordinate")
        return TauVector(tuple(1 / a for a in self.coords))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def all_nonzero(self) -> bool:
        return all(c != 0 for c in self.coords)


def frobenius_shift(x: TauVector) -> TauVector:
    """(x_0, x_1, ..., x_{f-1}) -> (x_1, ..., x_{f-1}, x_0)."""
    c = x.coords
    return TauVector(c[1:] + c[:1])


def norm(x: TauVector) -> Scalar:
    """Product of all coordinates (the shift-invariant scalar)."""
    prod = Fraction(1)
    for c in x.coords:
        prod *= c
    return prod


def norm_valuation(x: TauVector, p: int):
    return vp(norm(x), p)


Matrix = tuple[tuple[TauVector, ...], ...]


def mat_from_rows(rows) -> Matrix:
    return tuple(tuple(row) for row in rows)


def mat_identity(n: int, f: int) -> Matrix:
    return tuple(
        tuple(TauVector.ones(f) if i == j else TauVector.zero(f) for j in range(n))
        for i in range(n)
    )


def mat_diag(*vecs: TauVector) -> Matrix:
    f = vecs[0].f
    n = len(vecs)
    return tuple(
        tuple(vecs[i] if i == j else TauVector.zero(f) for j in range(n))
        for i in range(n)
    )


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    n, k, m = len(A), len(B), len(B[0])
    if len(A[0]) != k:
        raise ValueError("dimension mismatch")
    f = A[0][0].f
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = TauVector.zero(f)
            for t in range(k):
                acc = acc + A[i][t] * B[t][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_shift(A: Matrix) -> Matrix:
    return tuple(tuple(frobenius_shift(e) for e in row) for row in A)


def mat_scale(s, A: Matrix) -> Matrix:
    return tuple(tuple(e * s for e in row) for row in A)


def mat_equal(A: Matrix, B: Matrix) -> bool:
    return A == B


def matrix_norm(A: Matrix) -> Matrix:
    """Ordered product of A and its f-1 successive entrywise shifts."""
    if len(A) != len(A[0]):
        raise ValueError("matrix must be square")
    f = A[0][0].f
    result = A
    shifted = A
    for _ in range(f - 1):
        shifted = mat_shift(shifted)
        result = mat_mul(result, shifted)
    return result
