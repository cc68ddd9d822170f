"""Weak admissibility and irreducibility.

The closed-form checker compares, for each of the six proper stable
coordinate subspaces, an explicit filtration-invariant formula against the
slope of the Frobenius eigen-vectors.  The oracle recomputes the same
filtration invariant from first principles by intersecting materialized
subspaces degree by degree, so the two paths share no formulas.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import intersection_dim
from .modules import (
    F1,
    PROPER_SUBMODULES,
    PhiModule,
    SubmoduleId,
    embedding_hodge,
    hodge_invariant,
    newton_invariant,
)
from .normalform import filtration_step, max_jump


@dataclass(frozen=True)
class SubmoduleDiagnostic:
    submodule: SubmoduleId
    newton: int
    hodge: int

    @property
    def slack(self) -> int:
        return self.newton - self.hodge

    @property
    def satisfied(self) -> bool:
        return self.newton >= self.hodge

    @property
    def equality(self) -> bool:
        return self.newton == self.hodge


@dataclass(frozen=True)
class AdmissibilityReport:
    full_newton: int
    full_hodge: int
    diagnostics: tuple[SubmoduleDiagnostic, ...]

    @property
    def admissible(self) -> bool:
        return self.full_newton == self.full_hodge and all(
            d.satisfied for d in self.diagnostics
        )

    @property
    def equalities(self) -> tuple[bool, ...]:
        """Equality flags for D0, D1, D2, D01, D02, D12 in that order.

        Under admissibility, equality at a stable subspace means the
        induced submodule is itself admissible."""
        return tuple(d.equality for d in self.diagnostics)

    @property
    def irreducible(self) -> bool:
        return self.admissible and not any(d.equality for d in self.diagnostics)

    def diagnostic(self, s: SubmoduleId) -> SubmoduleDiagnostic:
        for d in self.diagnostics:
            if d.submodule is s:
                return d
        raise KeyError(s)


def _hodge_literal(m: PhiModule, s: SubmoduleId) -> int:
    """Variant of the closed-form invariant with a transcription slip
    baked in: the plane-only shape's first-axis term reads a line
    parameter that shape does not have, treating it as 0, so the weight
    is counted unconditionally.  Kept for cross-checking against the
    oracle, which exposes the error."""
    total = 0
    for filt in m.filt:
        if s is SubmoduleId.D0 and isinstance(filt, F1):
            total += filt.k
        else:
            total += embedding_hodge(filt, s)
    return total


def check_weak_admissibility(m: PhiModule, literal: bool = False) -> AdmissibilityReport:
    hodge = _hodge_literal if literal else hodge_invariant
    diags = tuple(
        SubmoduleDiagnostic(s, newton_invariant(m, s), hodge(m, s))
        for s in PROPER_SUBMODULES
    )
    return AdmissibilityReport(
        full_newton=newton_invariant(m, SubmoduleId.FULL),
        full_hodge=hodge(m, SubmoduleId.FULL),
        diagnostics=diags,
    )


def is_weakly_admissible(m: PhiModule) -> bool:
    return check_weak_admissibility(m).admissible


def is_irreducible(m: PhiModule) -> bool:
    return check_weak_admissibility(m).irreducible


def oracle_hodge_invariant(m: PhiModule, s: SubmoduleId) -> int:
    """Definitional filtration invariant of the induced filtration on s.

    Uses sum over degrees j >= 1 of dim(Fil^j intersect S), which equals
    the weighted sum of graded dimensions, computed with exact rank
    arithmetic on materialized generators."""
    basis = [tuple(int(t == slot) for t in range(3)) for slot in s.slots]
    total = 0
    for filt in m.filt:
        for j in range(1, max_jump(filt) + 1):
            step = filtration_step(filt, j)
            if step:
                total += intersection_dim(step, basis)
    return total


def oracle_weak_admissibility(m: PhiModule) -> bool:
    if newton_invariant(m, SubmoduleId.FULL) != oracle_hodge_invariant(
        m, SubmoduleId.FULL
    ):
        return False
    return all(
        newton_invariant(m, s) >= oracle_hodge_invariant(m, s)
        for s in PROPER_SUBMODULES
    )


def oracle_is_irreducible(m: PhiModule) -> bool:
    if not oracle_weak_admissibility(m):
        return False
    return all(
        newton_invariant(m, s) > oracle_hodge_invariant(m, s)
        for s in PROPER_SUBMODULES
    )
