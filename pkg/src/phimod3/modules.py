"""Central data model: diagonal Frobenius with distinct eigenvalue norms
plus one filtration normal form per embedding.

The four per-embedding filtration shapes are:

* F0 -- three distinct weights 0 < k1 < k2; a plane with parameters
  (x2, x2p) for degrees 1..k1 and a line with slope x1 for k1+1..k2.
* F1 -- repeated weight, plane-only shape: the plane (x2, x2p) for 1..k.
* F2 -- repeated weight, line-only shape: the line (x1, x2pp) for 1..k.
* F3 -- trivial filtration.

In F0 the derived line parameter x2pp = x2 + x1*x2p is recomputed, never
stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .coeff import Scalar, is_odd_prime
from .tauvec import Matrix, TauVector, mat_diag, matrix_norm, norm, norm_valuation


class InvalidModuleError(ValueError):
    """A construction invariant failed; carries the invariant name."""

    def __init__(self, invariant: str, detail: str = ""):
        self.invariant = invariant
        super().__init__(f"{invariant}: {detail}" if detail else invariant)


def _check_bit(name, value):
    if value not in (0, 1):
        raise InvalidModuleError("bit_parameter", f"{name} must be 0 or 1, got {value!r}")


@dataclass(frozen=True)
class F0:
    k1: int
    k2: int
    x1: Scalar
    x2: int
    x2p: int

    def __post_init__(self):
        if not (0 < self.k1 < self.k2):
            raise InvalidModuleError("weights", f"need 0 < k1 < k2, got {self.k1}, {self.k2}")
        _check_bit("x2", self.x2)
        _check_bit("x2p", self.x2p)
        object.__setattr__(self, "x1", Fraction(self.x1))

    @property
    def x2pp(self) -> Scalar:
        return self.x2 + self.x1 * self.x2p


@dataclass(frozen=True)
class F1:
    k: int
    x2: int
    x2p: int

    def __post_init__(self):
        if self.k < 1:
            raise InvalidModuleError("weights", f"need k >= 1, got {self.k}")
        _check_bit("x2", self.x2)
        _check_bit("x2p", self.x2p)


@dataclass(frozen=True)
class F2:
    k: int
    x1: int
    x2pp: int

    def __post_init__(self):
        if self.k < 1:
            raise InvalidModuleError("weights", f"need k >= 1, got {self.k}")
        _check_bit("x1", self.x1)
        _check_bit("x2pp", self.x2pp)


@dataclass(frozen=True)
class F3:
    pass


Filtration = F0 | F1 | F2 | F3


@dataclass(frozen=True)
class FrobeniusData:
    p: int
    f: int
    a: TauVector
    b: TauVector
    c: TauVector

    def __post_init__(self):
        if not is_odd_prime(self.p):
            raise InvalidModuleError("odd_prime", f"p = {self.p}")
        if self.f < 1:
            raise InvalidModuleError("embedding_count", f"f = {self.f}")
        for name, vec in (("a", self.a), ("b", self.b), ("c", self.c)):
            if vec.f != self.f:
                raise InvalidModuleError("vector_length", f"{name} has length {vec.f}, expected {self.f}")
            if not vec.all_nonzero():
                raise InvalidModuleError("nonzero_coordinates", f"{name} has a zero coordinate")
        norms = [norm(self.a), norm(self.b), norm(self.c)]
        if len(set(norms)) != 3:
            raise InvalidModuleError("distinct_norms", f"norms {norms}")

    @property
    def vectors(self) -> tuple[TauVector, TauVector, TauVector]:
        return (self.a, self.b, self.c)

    def matrix(self) -> Matrix:
        return mat_diag(self.a, self.b, self.c)

    def valuations(self) -> tuple:
        return tuple(norm_valuation(v, self.p) for v in self.vectors)


@dataclass(frozen=True)
class PhiModule:
    frobenius: FrobeniusData
    filt: tuple[Filtration, ...]

    def __post_init__(self):
        object.__setattr__(self, "filt", tuple(self.filt))
        if len(self.filt) != self.frobenius.f:
            raise InvalidModuleError(
                "filtration_length",
                f"{len(self.filt)} filtrations for f = {self.frobenius.f}",
            )

    @property
    def f(self) -> int:
        return self.frobenius.f

    @property
    def p(self) -> int:
        return self.frobenius.p


class SubmoduleId(Enum):
    """The seven coordinate subspaces stable under a diagonal Frobenius."""

    D0 = (0,)
    D1 = (1,)
    D2 = (2,)
    D01 = (0, 1)
    D02 = (0, 2)
    D12 = (1, 2)
    FULL = (0, 1, 2)

    @property
    def slots(self) -> tuple[int, ...]:
        return self.value


PROPER_SUBMODULES = (
    SubmoduleId.D0,
    SubmoduleId.D1,
    SubmoduleId.D2,
    SubmoduleId.D01,
    SubmoduleId.D02,
    SubmoduleId.D12,
)


def weights(m: PhiModule, i: int):
    """Labeled weight multiset at embedding i (smallest normalized to 0)."""
    filt = m.filt[i]
    if isinstance(filt, F0):
        return (0, filt.k1, filt.k2)
    if isinstance(filt, F1):
        # plane step: dims 3,2,0 so the nonzero weight repeats
        return (0, filt.k, filt.k)
    if isinstance(filt, F2):
        # line step: dims 3,1,0 so zero repeats
        return (0, 0, filt.k)
    return (0, 0, 0)


def classify_embeddings(m: PhiModule):
    """Partition embedding indices by filtration shape: (I1, I2, I3, trivial)."""
    i1, i2, i3, triv = [], [], [], []
    for i, filt in enumerate(m.filt):
        if isinstance(filt, F0):
            i1.append(i)
        elif isinstance(filt, F1):
            i2.append(i)
        elif isinstance(filt, F2):
            i3.append(i)
        else:
            triv.append(i)
    return tuple(i1), tuple(i2), tuple(i3), tuple(triv)


def newton_invariant(m: PhiModule, s: SubmoduleId):
    """Sum of norm valuations of the eigen-vectors spanning s."""
    vecs = m.frobenius.vectors
    return sum(norm_valuation(vecs[slot], m.p) for slot in s.slots)


def _hodge_f0(filt: F0, s: SubmoduleId) -> int:
    k1, k2 = filt.k1, filt.k2
    x1, x2, x2p = filt.x1, filt.x2, filt.x2p
    x2pp = filt.x2pp
    if s is SubmoduleId.FULL:
        return k1 + k2
    if s is SubmoduleId.D0:
        if x2 != 0:
            return 0
        return k1 if x1 != 0 else k2
    if s is SubmoduleId.D1:
        return 0 if x2p == 1 else k1
    if s is SubmoduleId.D2:
        return 0
    if s is SubmoduleId.D01:
        if x2pp != 0:
            return k1
        if x2p == 1:
            return k2
        return k1 + k2  # x2pp = 0 and x2p = 0 force x2 = 0
    if s is SubmoduleId.D02:
        return k1 if x1 != 0 else k2
    return k1  # D12


def _hodge_f1(filt: F1, s: SubmoduleId) -> int:
    k, x2, x2p = filt.k, filt.x2, filt.x2p
    if s is SubmoduleId.FULL:
        return 2 * k
    if s is SubmoduleId.D0:
        return 0 if x2 == 1 else k
    if s is SubmoduleId.D1:
        return 0 if x2p == 1 else k
    if s is SubmoduleId.D2:
        return 0
    if s is SubmoduleId.D01:
        return 2 * k if x2 == 0 and x2p == 0 else k
    return k  # D02, D12


def _hodge_f2(filt: F2, s: SubmoduleId) -> int:
    k, x1, x2pp = filt.k, filt.x1, filt.x2pp
    if s is SubmoduleId.FULL:
        return k
    if s is SubmoduleId.D0:
        return k if x1 == 0 and x2pp == 0 else 0
    if s is SubmoduleId.D01:
        return 0 if x2pp == 1 else k
    if s is SubmoduleId.D02:
        return 0 if x1 == 1 else k
    return 0  # D1, D2, D12


def embedding_hodge(filt: Filtration, s: SubmoduleId) -> int:
    """Closed-form filtration invariant of one embedding's piece of s."""
    if isinstance(filt, F0):
        return _hodge_f0(filt, s)
    if isinstance(filt, F1):
        return _hodge_f1(filt, s)
    if isinstance(filt, F2):
        return _hodge_f2(filt, s)
    return 0


def hodge_invariant(m: PhiModule, s: SubmoduleId) -> int:
    return sum(embedding_hodge(filt, s) for filt in m.filt)


def has_distinct_eigenvalues(P: Matrix) -> bool:
    """True iff the f-fold norm of P is diagonal with three distinct
    constant-vector diagonal entries."""
    Q = matrix_norm(P)
    n = len(Q)
    consts = []
    for i in range(n):
        for j in range(n):
            if i != j and not Q[i][j].is_zero():
                return False
        diag = Q[i][i].coords
        if any(c != diag[0] for c in diag):
            return False
        consts.append(diag[0])
    return len(set(consts)) == n
