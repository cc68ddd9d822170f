import random
from fractions import Fraction

import pytest

from phimod3.admissibility import oracle_hodge_invariant
from phimod3.generator import GeneratorConfig, random_module
from phimod3.modules import (
    F0,
    F1,
    F2,
    F3,
    PROPER_SUBMODULES,
    FrobeniusData,
    InvalidModuleError,
    PhiModule,
    SubmoduleId,
    classify_embeddings,
    has_distinct_eigenvalues,
    hodge_invariant,
    newton_invariant,
    weights,
)
from phimod3.tauvec import TauVector


def frob1(p=3, vals=(2, 1, 0)):
    return FrobeniusData(
        p,
        1,
        TauVector((Fraction(p) ** vals[0],)),
        TauVector((Fraction(p) ** vals[1] * 2,)),
        TauVector((Fraction(p) ** vals[2] * 5,)),
    )


def all_filtrations():
    for x1 in (Fraction(0), Fraction(1), Fraction(2), Fraction(-1, 2)):
        for x2 in (0, 1):
            for x2p in (0, 1):
                yield F0(k1=1, k2=2, x1=x1, x2=x2, x2p=x2p)
                yield F0(k1=2, k2=5, x1=x1, x2=x2, x2p=x2p)
    for x2 in (0, 1):
        for x2p in (0, 1):
            yield F1(k=3, x2=x2, x2p=x2p)
    for x1 in (0, 1):
        for x2pp in (0, 1):
            yield F2(k=2, x1=x1, x2pp=x2pp)
    yield F3()


def test_construction_invariants():
    with pytest.raises(InvalidModuleError):
        FrobeniusData(4, 1, *(TauVector((Fraction(k),)) for k in (1, 2, 3)))
    with pytest.raises(InvalidModuleError):
        FrobeniusData(3, 1, *(TauVector((Fraction(k),)) for k in (0, 2, 3)))
    with pytest.raises(InvalidModuleError):
        # equal norms
        FrobeniusData(3, 1, *(TauVector((Fraction(k),)) for k in (2, 2, 3)))
    with pytest.raises(InvalidModuleError):
        F0(k1=2, k2=2, x1=Fraction(1), x2=0, x2p=0)
    with pytest.raises(InvalidModuleError):
        F1(k=0, x2=0, x2p=0)
    with pytest.raises(InvalidModuleError):
        F2(k=1, x1=2, x2pp=0)


def test_weights_and_classification():
    frob = FrobeniusData(
        3,
        4,
        TauVector((Fraction(9), Fraction(1), Fraction(1), Fraction(1))),
        TauVector((Fraction(3), Fraction(1), Fraction(1), Fraction(1))),
        TauVector((Fraction(5), Fraction(1), Fraction(1), Fraction(1))),
    )
    m = PhiModule(
        frob,
        (
            F0(k1=1, k2=3, x1=Fraction(1), x2=0, x2p=1),
            F1(k=2, x2=1, x2p=0),
            F2(k=4, x1=0, x2pp=1),
            F3(),
        ),
    )
    assert weights(m, 0) == (0, 1, 3)
    assert weights(m, 1) == (0, 2, 2)
    assert weights(m, 2) == (0, 0, 4)
    assert weights(m, 3) == (0, 0, 0)
    assert classify_embeddings(m) == ((0,), (1,), (2,), (3,))
    # the weight total across embeddings matches the top filtration invariant
    assert sum(sum(weights(m, i)) for i in range(4)) == hodge_invariant(
        m, SubmoduleId.FULL
    )


def test_hodge_tables_match_oracle_exhaustively():
    frob = frob1()
    for filt in all_filtrations():
        m = PhiModule(frob, (filt,))
        for s in list(PROPER_SUBMODULES) + [SubmoduleId.FULL]:
            assert hodge_invariant(m, s) == oracle_hodge_invariant(m, s), (filt, s)


def test_newton_invariant():
    m = PhiModule(frob1(vals=(2, 1, 0)), (F3(),))
    assert newton_invariant(m, SubmoduleId.D0) == 2
    assert newton_invariant(m, SubmoduleId.D12) == 1
    assert newton_invariant(m, SubmoduleId.FULL) == 3


def test_distinct_eigenvalues_on_random_frobenius():
    rng = random.Random(11)
    cfg = GeneratorConfig(seed=11)
    for _ in range(25):
        m = random_module(rng, cfg)
        assert has_distinct_eigenvalues(m.frobenius.matrix())
