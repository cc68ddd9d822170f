"""Seeded random instances and the oracle-equivalence selftest.

Generation is deliberately constructive where a target is requested: for
admissible targets the eigenvalue valuations are chosen to hit the total
filtration invariant exactly, then the remaining inequalities are settled
by bounded rejection.  Isomorphic pairs are built by pushing a module
through an explicit slot permutation and scaling, then renormalizing the
image subspaces, so their ground truth does not depend on any formula
under test.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .admissibility import (
    check_weak_admissibility,
    oracle_hodge_invariant,
    oracle_is_irreducible,
    oracle_weak_admissibility,
)
from .isomorphism import (
    CASE_SIGMA,
    are_isomorphic,
    find_witness,
    validate_witness,
)
from .jsonio import module_to_obj
from .modules import (
    F0,
    F1,
    F2,
    F3,
    PROPER_SUBMODULES,
    SubmoduleId,
    FrobeniusData,
    InvalidModuleError,
    PhiModule,
    hodge_invariant,
)
from .monodromy import enumerate_monodromies, validate_monodromy
from .normalform import (
    NotRepresentableError,
    RawEmbedding,
    RawFiltration,
    filtration_step,
    max_jump,
    normalize,
)
from .tauvec import TauVector


class TargetUnreachable(RuntimeError):
    pass


@dataclass(frozen=True)
class GeneratorConfig:
    seed: int = 0
    primes: tuple[int, ...] = (3, 5, 7)
    f_max: int = 3
    weight_max: int = 4
    val_min: int = -4
    val_max: int = 4


X1_PALETTE = tuple(
    Fraction(x) for x in (0, 1, -1, 2, "1/2", "-1/2", 3, "2/3")
)


def _unit(rng: random.Random, p: int) -> Fraction:
    """A rational with zero p-adic valuation."""
    while True:
        num = rng.randint(1, 9)
        den = rng.randint(1, 9)
        if num % p and den % p:
            break
    sign = rng.choice((1, -1))
    return Fraction(sign * num, den)


def _coord(rng: random.Random, p: int, e: int) -> Fraction:
    return Fraction(p) ** e * _unit(rng, p)


def random_filtration(rng: random.Random, cfg: GeneratorConfig):
    kind = rng.choice(("F0", "F0", "F1", "F2", "F3"))
    if kind == "F0":
        k1 = rng.randint(1, cfg.weight_max - 1)
        k2 = rng.randint(k1 + 1, cfg.weight_max)
        return F0(
            k1=k1,
            k2=k2,
            x1=rng.choice(X1_PALETTE),
            x2=rng.randint(0, 1),
            x2p=rng.randint(0, 1),
        )
    if kind == "F1":
        return F1(k=rng.randint(1, cfg.weight_max), x2=rng.randint(0, 1), x2p=rng.randint(0, 1))
    if kind == "F2":
        return F2(k=rng.randint(1, cfg.weight_max), x1=rng.randint(0, 1), x2pp=rng.randint(0, 1))
    return F3()


def _vector_with_valuation(rng: random.Random, p: int, f: int, total: int) -> TauVector:
    exps = [rng.randint(-1, 2) for _ in range(f - 1)]
    exps.append(total - sum(exps))
    return TauVector(tuple(_coord(rng, p, e) for e in exps))


def random_frobenius(
    rng: random.Random, cfg: GeneratorConfig, p: int, f: int, valuations=None
) -> FrobeniusData:
    for _ in range(200):
        if valuations is None:
            vals = [rng.randint(cfg.val_min, cfg.val_max) for _ in range(3)]
        else:
            vals = list(valuations)
        try:
            return FrobeniusData(
                p,
                f,
                _vector_with_valuation(rng, p, f, vals[0]),
                _vector_with_valuation(rng, p, f, vals[1]),
                _vector_with_valuation(rng, p, f, vals[2]),
            )
        except InvalidModuleError:
            continue
    raise TargetUnreachable("could not sample Frobenius data with distinct norms")


def random_module(rng: random.Random, cfg: GeneratorConfig) -> PhiModule:
    p = rng.choice(cfg.primes)
    f = rng.randint(1, cfg.f_max)
    filt = tuple(random_filtration(rng, cfg) for _ in range(f))
    return PhiModule(random_frobenius(rng, cfg, p, f), filt)


def generate(cfg: GeneratorConfig, target: str = "any", max_tries: int = 2000) -> PhiModule:
    rng = random.Random(cfg.seed)
    if target == "any":
        return random_module(rng, cfg)
    if target not in ("admissible", "irreducible"):
        raise ValueError(f"unknown target {target!r}")
    for _ in range(max_tries):
        p = rng.choice(cfg.primes)
        f = rng.randint(1, cfg.f_max)
        filt = tuple(random_filtration(rng, cfg) for _ in range(f))
        total = hodge_invariant(PhiModule(random_frobenius(rng, cfg, p, f), filt), SubmoduleId.FULL)
        # split the required total valuation across the three slots
        v0 = rng.randint(0, max(total, 1))
        v1 = rng.randint(0, max(total - v0, 1))
        v2 = total - v0 - v1
        try:
            frob = random_frobenius(rng, cfg, p, f, (v0, v1, v2))
        except TargetUnreachable:
            continue
        m = PhiModule(frob, filt)
        report = check_weak_admissibility(m)
        if target == "admissible" and report.admissible:
            return m
        if target == "irreducible" and report.irreducible:
            return m
    raise TargetUnreachable(f"no {target} instance found in {max_tries} tries")


def random_monodromy_frobenius(rng: random.Random, cfg: GeneratorConfig) -> FrobeniusData:
    """Frobenius data with one or two eligible operator positions.

    Built by chaining eigen-vectors with exact norm ratio p^f: the next
    vector is p times the previous one twisted by a norm-1 unit, which
    keeps all coordinates nonzero and the three norms distinct."""
    from .tauvec import frobenius_shift

    p = rng.choice(cfg.primes)
    f = rng.randint(1, cfg.f_max)

    def twist():
        u = TauVector(tuple(Fraction(rng.choice((1, 2, 3, -1, -2))) for _ in range(f)))
        return frobenius_shift(u) * u.inverse()

    base = _vector_with_valuation(rng, p, f, rng.randint(-2, 2))
    chain = rng.randint(1, 2)
    vecs = [base]
    for _ in range(chain):
        vecs.append(vecs[-1] * Fraction(p) * twist())
    while len(vecs) < 3:
        # pad with a slot outside the chain, retrying until norms differ
        for _ in range(100):
            extra = _vector_with_valuation(rng, p, f, rng.randint(-3, 3))
            try:
                order = vecs + [extra]
                rng.shuffle(order)
                return FrobeniusData(p, f, order[0], order[1], order[2])
            except InvalidModuleError:
                continue
        raise TargetUnreachable("could not pad monodromy Frobenius data")
    rng.shuffle(vecs)
    return FrobeniusData(p, f, vecs[0], vecs[1], vecs[2])


def random_raw_embedding(rng: random.Random, cfg: GeneratorConfig) -> RawEmbedding:
    profile = rng.choice(("none", "plane", "line", "flag"))
    if profile == "none":
        return RawEmbedding(k1=0, k2=0)

    def vec():
        return tuple(Fraction(rng.randint(-3, 3)) for _ in range(3))

    if profile == "line":
        k = rng.randint(1, cfg.weight_max)
        while True:
            u, v = vec(), vec()
            lam, mu = Fraction(rng.randint(-2, 2)), Fraction(rng.randint(-2, 2))
            if (lam, mu) != (0, 0) and any(
                lam * a + mu * b != 0 for a, b in zip(u, v)
            ):
                return RawEmbedding(k1=0, k2=k, u=u, v=v, lam=lam, mu=mu)
    while True:
        u, v = vec(), vec()
        from .linalg import rank

        if rank([u, v]) != 2:
            continue
        if profile == "plane":
            k = rng.randint(1, cfg.weight_max)
            return RawEmbedding(k1=k, k2=k, u=u, v=v)
        k1 = rng.randint(1, cfg.weight_max - 1)
        k2 = rng.randint(k1 + 1, cfg.weight_max)
        lam, mu = Fraction(rng.randint(-2, 2)), Fraction(rng.randint(-2, 2))
        if (lam, mu) == (0, 0):
            lam = Fraction(1)
        return RawEmbedding(k1=k1, k2=k2, u=u, v=v, lam=lam, mu=mu)


def random_raw(rng: random.Random, cfg: GeneratorConfig, f: int) -> RawFiltration:
    return RawFiltration(tuple(random_raw_embedding(rng, cfg) for _ in range(f)))


def _raw_hodge_full(raw: RawFiltration) -> int:
    return sum(2 * emb.k1 + (emb.k2 - emb.k1) for emb in raw.embeddings)


def make_isomorphic_pair(rng: random.Random, cfg: GeneratorConfig):
    """A module plus an independently constructed isomorphic image.

    The image is obtained by permuting slots, scaling each slot by a
    random everywhere-nonzero vector, and renormalizing the transported
    filtration subspaces, so isomorphism holds by construction."""
    for _ in range(100):
        m1 = random_module(rng, cfg)
        sigma = CASE_SIGMA[rng.randint(1, 6)]
        f = m1.f
        h = [
            TauVector(
                tuple(
                    Fraction(rng.choice((1, -1, 2, 3))) / rng.choice((1, 2))
                    for _ in range(f)
                )
            )
            for _ in range(3)
        ]
        src = m1.frobenius.vectors
        # eigen-vector transport: target slot sigma[t] gets p_t * h_t / shift(h_t)
        new_vecs = [None, None, None]
        for t in range(3):
            from .tauvec import frobenius_shift

            new_vecs[sigma[t]] = src[t] * h[t] * frobenius_shift(h[t]).inverse()
        frob2 = FrobeniusData(m1.p, f, new_vecs[0], new_vecs[1], new_vecs[2])

        def image(g, i):
            out = [Fraction(0)] * 3
            for t in range(3):
                out[sigma[t]] = Fraction(g[t]) * h[t][i]
            return tuple(out)

        embs = []
        for i, filt in enumerate(m1.filt):
            if isinstance(filt, F3):
                embs.append(RawEmbedding(k1=0, k2=0))
                continue
            if isinstance(filt, F1):
                gens = filtration_step(filt, 1)
                embs.append(
                    RawEmbedding(
                        k1=filt.k,
                        k2=filt.k,
                        u=image(gens[0], i),
                        v=image(gens[1], i),
                    )
                )
                continue
            if isinstance(filt, F2):
                ell = filtration_step(filt, 1)[0]
                embs.append(
                    RawEmbedding(
                        k1=0,
                        k2=filt.k,
                        u=image(ell, i),
                        v=image((Fraction(0), Fraction(1), Fraction(0)), i),
                        lam=Fraction(1),
                        mu=Fraction(0),
                    )
                )
                continue
            gens = filtration_step(filt, 1)
            # the line generator equals plane_u + x1 * plane_v
            embs.append(
                RawEmbedding(
                    k1=filt.k1,
                    k2=filt.k2,
                    u=image(gens[0], i),
                    v=image(gens[1], i),
                    lam=Fraction(1),
                    mu=filt.x1,
                )
            )
        try:
            result = normalize(frob2, RawFiltration(tuple(embs)))
        except NotRepresentableError:
            continue
        return m1, result.module
    raise TargetUnreachable("could not build an isomorphic pair")


def mutate_module(rng: random.Random, m: PhiModule) -> PhiModule:
    """Perturb one filtration parameter, keeping the Frobenius data."""
    filts = list(m.filt)
    order = list(range(len(filts)))
    rng.shuffle(order)
    for i in order:
        filt = filts[i]
        if isinstance(filt, F0):
            choice = rng.randint(0, 2)
            if choice == 0:
                filts[i] = F0(filt.k1, filt.k2, filt.x1 + 1, filt.x2, filt.x2p)
            elif choice == 1:
                filts[i] = F0(filt.k1, filt.k2, filt.x1, 1 - filt.x2, filt.x2p)
            else:
                filts[i] = F0(filt.k1, filt.k2, filt.x1, filt.x2, 1 - filt.x2p)
            return PhiModule(m.frobenius, tuple(filts))
        if isinstance(filt, F1):
            if rng.randint(0, 1):
                filts[i] = F1(filt.k, 1 - filt.x2, filt.x2p)
            else:
                filts[i] = F1(filt.k, filt.x2, 1 - filt.x2p)
            return PhiModule(m.frobenius, tuple(filts))
        if isinstance(filt, F2):
            if rng.randint(0, 1):
                filts[i] = F2(filt.k, 1 - filt.x1, filt.x2pp)
            else:
                filts[i] = F2(filt.k, filt.x1, 1 - filt.x2pp)
            return PhiModule(m.frobenius, tuple(filts))
    return m


@dataclass
class SelftestFailure(Exception):
    kind: str
    payload: dict

    def __str__(self):
        return f"{self.kind}: {self.payload}"


def _module_predicate_disagrees(m: PhiModule) -> str | None:
    report = check_weak_admissibility(m)
    if report.admissible != oracle_weak_admissibility(m):
        return "weak_admissibility"
    if report.irreducible != oracle_is_irreducible(m):
        return "irreducibility"
    for s in list(PROPER_SUBMODULES) + [SubmoduleId.FULL]:
        if hodge_invariant(m, s) != oracle_hodge_invariant(m, s):
            return f"hodge_{s.name}"
    return None


def _shrink_module(m: PhiModule, disagrees) -> PhiModule:
    """Greedy minimization keeping the disagreement alive."""

    def candidates(cur: PhiModule):
        f = cur.f
        if f > 1:
            for drop in range(f):
                keep = [i for i in range(f) if i != drop]
                try:
                    frob = FrobeniusData(
                        cur.p,
                        f - 1,
                        TauVector(tuple(cur.frobenius.a[i] for i in keep)),
                        TauVector(tuple(cur.frobenius.b[i] for i in keep)),
                        TauVector(tuple(cur.frobenius.c[i] for i in keep)),
                    )
                    yield PhiModule(frob, tuple(cur.filt[i] for i in keep))
                except InvalidModuleError:
                    continue
        for i, filt in enumerate(cur.filt):
            simpler = []
            if isinstance(filt, F0):
                if filt.x1 not in (0, 1):
                    simpler.append(F0(filt.k1, filt.k2, Fraction(1), filt.x2, filt.x2p))
                    simpler.append(F0(filt.k1, filt.k2, Fraction(0), filt.x2, filt.x2p))
                if (filt.k1, filt.k2) != (1, 2):
                    simpler.append(F0(1, 2, filt.x1, filt.x2, filt.x2p))
            elif isinstance(filt, (F1, F2)) and filt.k != 1:
                simpler.append(type(filt)(1, *(
                    (filt.x2, filt.x2p) if isinstance(filt, F1) else (filt.x1, filt.x2pp)
                )))
            if not isinstance(filt, F3):
                simpler.append(F3())
            for s in simpler:
                new = list(cur.filt)
                new[i] = s
                yield PhiModule(cur.frobenius, tuple(new))

    changed = True
    while changed:
        changed = False
        for cand in candidates(m):
            if disagrees(cand):
                m = cand
                changed = True
                break
    return m


def selftest(seed: int = 0, n: int = 200) -> dict:
    """Cross-check every closed form against its oracle on random data.

    Raises SelftestFailure with a minimized counterexample on the first
    disagreement."""
    rng = random.Random(seed)
    cfg = GeneratorConfig(seed=seed)
    counts = {
        "modules": 0,
        "iso_pairs": 0,
        "iso_mutations": 0,
        "monodromies": 0,
        "normalizations": 0,
        "not_representable": 0,
    }
    for step in range(n):
        m = random_module(rng, cfg)
        counts["modules"] += 1
        kind = _module_predicate_disagrees(m)
        if kind is not None:
            small = _shrink_module(
                m, lambda c: _module_predicate_disagrees(c) == kind
            )
            raise SelftestFailure(kind, module_to_obj(small))

        if step % 2 == 0:
            m1, m2 = make_isomorphic_pair(rng, cfg)
            counts["iso_pairs"] += 1
            closed = are_isomorphic(m1, m2)
            witness = find_witness(m1, m2)
            if not closed or witness is None:
                raise SelftestFailure(
                    "isomorphism_missed",
                    {"left": module_to_obj(m1), "right": module_to_obj(m2)},
                )
            if not validate_witness(m1, m2, witness):
                raise SelftestFailure(
                    "witness_invalid",
                    {"left": module_to_obj(m1), "right": module_to_obj(m2)},
                )
            m2x = mutate_module(rng, m2)
            counts["iso_mutations"] += 1
            if are_isomorphic(m1, m2x) != (find_witness(m1, m2x) is not None):
                raise SelftestFailure(
                    "isomorphism_disagreement",
                    {"left": module_to_obj(m1), "right": module_to_obj(m2x)},
                )

        if step % 3 == 0:
            frob = random_monodromy_frobenius(rng, cfg)
            solutions = enumerate_monodromies(frob)
            if not solutions:
                raise SelftestFailure(
                    "monodromy_missing",
                    {"p": frob.p, "f": frob.f},
                )
            for sol in solutions:
                counts["monodromies"] += 1
                if not validate_monodromy(frob, sol.matrix):
                    raise SelftestFailure(
                        "monodromy_invalid",
                        {"positions": list(sol.positions)},
                    )

        if step % 2 == 1:
            raw = random_raw(rng, cfg, m.f)
            try:
                result = normalize(m.frobenius, raw)
            except NotRepresentableError:
                counts["not_representable"] += 1
                continue
            counts["normalizations"] += 1
            got = hodge_invariant(result.module, SubmoduleId.FULL)
            if got != _raw_hodge_full(raw):
                raise SelftestFailure(
                    "normalization_invariant",
                    {"module": module_to_obj(result.module)},
                )
    return counts
