"""Filtration materialization and reduction of raw filtration data.

Two directions live here:

* materialize: turn a per-embedding filtration normal form into explicit
  subspace generators for every degree (used by the definitional checkers).
* normalize: take arbitrary per-embedding subspace data and search for a
  basis permutation plus diagonal rescaling that brings every embedding
  into one of the four normal-form shapes, rewriting the Frobenius
  eigen-vectors along the way.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .coeff import Scalar
from .linalg import rank, rref, spans_equal
from .modules import F0, F1, F2, F3, Filtration, FrobeniusData, PhiModule
from .tauvec import TauVector, frobenius_shift

Vec3 = tuple[Scalar, Scalar, Scalar]


class DegenerateInputError(ValueError):
    """Raw filtration data that does not describe a valid flag."""


class NotRepresentableError(ValueError):
    """No coordinate permutation brings the raw data into normal form."""


def plane_generators(x2, x2p) -> list[Vec3]:
    return [
        (Fraction(1), Fraction(0), Fraction(x2)),
        (Fraction(0), Fraction(1), Fraction(x2p)),
    ]


def line_generator(x1, x2pp) -> list[Vec3]:
    return [(Fraction(1), Fraction(x1), Fraction(x2pp))]


FULL_BASIS: list[Vec3] = [
    (Fraction(1), Fraction(0), Fraction(0)),
    (Fraction(0), Fraction(1), Fraction(0)),
    (Fraction(0), Fraction(0), Fraction(1)),
]


def max_jump(filt: Filtration) -> int:
    if isinstance(filt, F0):
        return filt.k2
    if isinstance(filt, (F1, F2)):
        return filt.k
    return 0


def filtration_step(filt: Filtration, j: int) -> list[Vec3]:
    """Generators of the degree-j subspace at one embedding."""
    if j <= 0:
        return list(FULL_BASIS)
    if isinstance(filt, F0):
        if j <= filt.k1:
            return plane_generators(filt.x2, filt.x2p)
        if j <= filt.k2:
            return line_generator(filt.x1, filt.x2pp)
        return []
    if isinstance(filt, F1):
        return plane_generators(filt.x2, filt.x2p) if j <= filt.k else []
    if isinstance(filt, F2):
        return line_generator(filt.x1, filt.x2pp) if j <= filt.k else []
    return []


@dataclass(frozen=True)
class RawEmbedding:
    """One embedding's filtration as explicit vectors.

    k1 <= k2 are the jump degrees (either may be 0).  Whenever k2 >= 1 the
    spanning vectors u, v must be present; the plane span(u, v) is the
    subspace for degrees 1..k1, and for degrees k1+1..k2 the subspace is
    the line through lam*u + mu*v.
    """

    k1: int
    k2: int
    u: Vec3 | None = None
    v: Vec3 | None = None
    lam: Scalar | None = None
    mu: Scalar | None = None

    def __post_init__(self):
        if not (0 <= self.k1 <= self.k2):
            raise DegenerateInputError(f"need 0 <= k1 <= k2, got {self.k1}, {self.k2}")
        if self.k2 >= 1:
            if self.u is None or self.v is None:
                raise DegenerateInputError("spanning vectors required when k2 >= 1")
            object.__setattr__(self, "u", tuple(Fraction(c) for c in self.u))
            object.__setattr__(self, "v", tuple(Fraction(c) for c in self.v))
            if self.k1 >= 1 and rank([self.u, self.v]) != 2:
                raise DegenerateInputError("plane generators are dependent")
        if self.k2 > self.k1:
            if self.lam is None or self.mu is None:
                raise DegenerateInputError("line coefficients required when k2 > k1")
            object.__setattr__(self, "lam", Fraction(self.lam))
            object.__setattr__(self, "mu", Fraction(self.mu))
            if self.lam == 0 and self.mu == 0:
                raise DegenerateInputError("line coefficients are both zero")
            if all(c == 0 for c in self.line()):
                raise DegenerateInputError("selected line vector is zero")

    def line(self) -> Vec3:
        return tuple(self.lam * a + self.mu * b for a, b in zip(self.u, self.v))

    def step(self, j: int) -> list[Vec3]:
        if j <= 0:
            return list(FULL_BASIS)
        if j <= self.k1:
            return [self.u, self.v]
        if j <= self.k2:
            return [self.line()]
        return []


@dataclass(frozen=True)
class RawFiltration:
    embeddings: tuple[RawEmbedding, ...]

    def __post_init__(self):
        object.__setattr__(self, "embeddings", tuple(self.embeddings))
        if not self.embeddings:
            raise DegenerateInputError("no embeddings")


@dataclass(frozen=True)
class NormalizeResult:
    """Normalized module plus the change of basis that produced it.

    permutation maps new coordinate slots to old ones: new slot j carries
    old coordinate permutation[j].  rescale holds one nonzero scaling
    vector per new slot; a raw vector w becomes, at embedding i,
    new_j = w[permutation[j]] / rescale[j][i].
    """

    module: PhiModule
    permutation: tuple[int, int, int]
    rescale: tuple[TauVector, TauVector, TauVector]

    def transform_vector(self, w: Vec3, i: int) -> Vec3:
        return tuple(
            Fraction(w[self.permutation[j]]) / self.rescale[j][i] for j in range(3)
        )


def _plane_params(u: Vec3, v: Vec3):
    """Write span(u, v) as span((1,0,x2), (0,1,x2p)), or None."""
    det = u[0] * v[1] - u[1] * v[0]
    if det == 0:
        return None
    x2 = (u[2] * v[1] - u[1] * v[2]) / det
    x2p = (u[0] * v[2] - v[0] * u[2]) / det
    return x2, x2p


def _line_params(ell: Vec3):
    """Write the line through ell as span((1, x1, x2pp)), or None."""
    if ell[0] == 0:
        return None
    return ell[1] / ell[0], ell[2] / ell[0]


def _try_permutation(raw: RawFiltration, perm):
    """Per-embedding normal-form parameters in permuted coordinates,
    before rescaling.  Returns None if some embedding is incompatible."""
    out = []
    for emb in raw.embeddings:
        profile = (emb.k1, emb.k2)
        plane = line = None
        if emb.k1 >= 1:
            u = tuple(emb.u[perm[j]] for j in range(3))
            v = tuple(emb.v[perm[j]] for j in range(3))
            plane = _plane_params(u, v)
            if plane is None:
                return None
        if emb.k2 > emb.k1:
            ell = tuple(emb.line()[perm[j]] for j in range(3))
            line = _line_params(ell)
            if line is None:
                return None
        out.append((profile, plane, line))
    return out


def _rescale_for(profile, plane, line):
    """Choose diagonal scalars (d0, d1, d2) for one embedding so the
    rescaled parameters land in their normal-form ranges, and return the
    scalars together with the finished Filtration piece."""
    k1, k2 = profile
    one = Fraction(1)
    if k2 == 0:
        return (one, one, one), F3()
    if k1 == 0:
        # line-only shape: both parameters become bits
        x1, x2pp = line
        d0 = one
        d1 = x1 if x1 != 0 else one
        d2 = x2pp if x2pp != 0 else one
        return (d0, d1, d2), F2(k=k2, x1=int(x1 != 0), x2pp=int(x2pp != 0))
    x2, x2p = plane
    d1 = one
    d2 = x2p if x2p != 0 else one
    new_x2p = int(x2p != 0)
    d0 = d2 / x2 if x2 != 0 else one
    new_x2 = int(x2 != 0)
    if k2 == k1:
        return (d0, d1, d2), F1(k=k1, x2=new_x2, x2p=new_x2p)
    x1 = line[0] * d0 / d1
    return (d0, d1, d2), F0(k1=k1, k2=k2, x1=x1, x2=new_x2, x2p=new_x2p)


def _verify(result: NormalizeResult, raw: RawFiltration) -> bool:
    for i, emb in enumerate(raw.embeddings):
        top = max(max_jump(result.module.filt[i]), emb.k2)
        for j in range(0, top + 2):
            image = [result.transform_vector(w, i) for w in emb.step(j)]
            target = filtration_step(result.module.filt[i], j)
            if not spans_equal(image, target):
                return False
    return True


def normalize(frob: FrobeniusData, raw: RawFiltration) -> NormalizeResult:
    """Search the six coordinate permutations for one that represents every
    embedding, rescale parameters into normal form, and rewrite the
    Frobenius eigen-vectors through the same change of basis."""
    if len(raw.embeddings) != frob.f:
        raise DegenerateInputError(
            f"{len(raw.embeddings)} embeddings for f = {frob.f}"
        )
    vecs = frob.vectors
    for perm in itertools.permutations(range(3)):
        params = _try_permutation(raw, perm)
        if params is None:
            continue
        scales = []
        filts = []
        for profile, plane, line in params:
            d, filt = _rescale_for(profile, plane, line)
            scales.append(d)
            filts.append(filt)
        rescale = tuple(
            TauVector(tuple(scales[i][j] for i in range(frob.f)))
            for j in range(3)
        )
        # slot j now carries old eigen-vector perm[j], twisted by d_j
        new_vecs = [
            vecs[perm[j]] * frobenius_shift(rescale[j]) * rescale[j].inverse()
            for j in range(3)
        ]
        new_frob = FrobeniusData(frob.p, frob.f, new_vecs[0], new_vecs[1], new_vecs[2])
        result = NormalizeResult(
            module=PhiModule(new_frob, tuple(filts)),
            permutation=perm,
            rescale=rescale,
        )
        if not _verify(result, raw):
            raise AssertionError("normalization verification failed")
        return result
    raise NotRepresentableError(
        "no coordinate permutation represents every embedding"
    )
