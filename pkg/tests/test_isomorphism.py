import random
from fractions import Fraction

from phimod3.generator import (
    GeneratorConfig,
    make_isomorphic_pair,
    mutate_module,
    random_module,
)
from phimod3.isomorphism import (
    are_isomorphic,
    find_witness,
    match_sigma,
    oracle_isomorphic,
    validate_witness,
)
from phimod3.modules import F0, FrobeniusData, PhiModule, weights
from phimod3.tauvec import TauVector, norm


def f1_module(vals, filt, p=3, units=(1, 2, 5)):
    frob = FrobeniusData(
        p,
        1,
        TauVector((Fraction(p) ** vals[0] * units[0],)),
        TauVector((Fraction(p) ** vals[1] * units[1],)),
        TauVector((Fraction(p) ** vals[2] * units[2],)),
    )
    return PhiModule(frob, (filt,))


def test_reflexivity():
    rng = random.Random(3)
    cfg = GeneratorConfig(seed=3)
    for _ in range(30):
        m = random_module(rng, cfg)
        assert are_isomorphic(m, m)
        w = find_witness(m, m)
        assert w is not None and validate_witness(m, m, w)


def test_identity_case_equal_parameters():
    x = F0(k1=1, k2=2, x1=Fraction(5), x2=1, x2p=1)
    m1 = f1_module((0, 1, 2), x)
    m2 = f1_module((0, 1, 2), F0(k1=1, k2=2, x1=Fraction(5), x2=1, x2p=1))
    assert are_isomorphic(m1, m2)
    assert oracle_isomorphic(m1, m2)


def test_identity_case_distinct_slope_is_negative():
    m1 = f1_module((0, 1, 2), F0(k1=1, k2=2, x1=Fraction(5), x2=1, x2p=1))
    m2 = f1_module((0, 1, 2), F0(k1=1, k2=2, x1=Fraction(7), x2=1, x2p=1))
    assert not are_isomorphic(m1, m2)
    assert not oracle_isomorphic(m1, m2)


def test_reversal_case_reciprocal_condition():
    # norms matched in reverse order force the slot-reversing shape;
    # with all bits 1 the slopes must satisfy (y1+1)(x1+1) = 1
    m1 = f1_module((0, 1, 2), F0(k1=1, k2=2, x1=Fraction(1), x2=1, x2p=1))
    m2 = f1_module(
        (2, 1, 0),
        F0(k1=1, k2=2, x1=Fraction(-1, 2), x2=1, x2p=1),
        units=(5, 2, 1),
    )
    assert match_sigma(m1, m2) == (2, 1, 0)
    assert are_isomorphic(m1, m2)
    assert oracle_isomorphic(m1, m2)
    w = find_witness(m1, m2)
    assert validate_witness(m1, m2, w)
    # perturbing the slope breaks the reciprocal relation
    m2b = f1_module(
        (2, 1, 0),
        F0(k1=1, k2=2, x1=Fraction(-1, 3), x2=1, x2p=1),
        units=(5, 2, 1),
    )
    assert not are_isomorphic(m1, m2b)
    assert not oracle_isomorphic(m1, m2b)


def test_swap_case_product_condition():
    # swapping the first two slots with all bits 1 requires x1 * y1 = 1
    m1 = f1_module((0, 1, 2), F0(k1=1, k2=2, x1=Fraction(2), x2=1, x2p=1))
    m2 = f1_module(
        (1, 0, 2),
        F0(k1=1, k2=2, x1=Fraction(1, 2), x2=1, x2p=1),
        units=(2, 1, 5),
    )
    assert match_sigma(m1, m2) == (1, 0, 2)
    assert are_isomorphic(m1, m2)
    assert oracle_isomorphic(m1, m2)


def test_constructed_pairs_and_witnesses():
    rng = random.Random(9)
    cfg = GeneratorConfig(seed=9)
    for _ in range(40):
        m1, m2 = make_isomorphic_pair(rng, cfg)
        assert are_isomorphic(m1, m2)
        w = find_witness(m1, m2)
        assert w is not None and validate_witness(m1, m2, w)
        assert are_isomorphic(m2, m1)


def test_mutations_agree_with_oracle():
    rng = random.Random(13)
    cfg = GeneratorConfig(seed=13)
    for _ in range(40):
        m1, m2 = make_isomorphic_pair(rng, cfg)
        m2x = mutate_module(rng, m2)
        assert are_isomorphic(m1, m2x) == oracle_isomorphic(m1, m2x)


def test_transitivity_on_chains():
    rng = random.Random(17)
    cfg = GeneratorConfig(seed=17)
    for _ in range(15):
        m1, m2 = make_isomorphic_pair(rng, cfg)
        _, m3 = make_isomorphic_pair_from(rng, m2)
        assert are_isomorphic(m1, m3)


def make_isomorphic_pair_from(rng, m):
    # reuse the pair constructor's machinery by temporarily seeding its
    # module choice
    from phimod3 import generator as gen

    original = gen.random_module
    gen.random_module = lambda *_: m
    try:
        return gen.make_isomorphic_pair(rng, GeneratorConfig())
    finally:
        gen.random_module = original


def test_invariants_of_positive_decisions():
    rng = random.Random(21)
    cfg = GeneratorConfig(seed=21)
    for _ in range(25):
        m1, m2 = make_isomorphic_pair(rng, cfg)
        n1 = sorted(norm(v) for v in m1.frobenius.vectors)
        n2 = sorted(norm(v) for v in m2.frobenius.vectors)
        assert n1 == n2
        for i in range(m1.f):
            assert weights(m1, i) == weights(m2, i)


def test_structural_mismatch_is_no():
    m1 = f1_module((0, 1, 2), F0(k1=1, k2=2, x1=Fraction(1), x2=0, x2p=0))
    frob = FrobeniusData(
        5,
        1,
        TauVector((Fraction(1),)),
        TauVector((Fraction(5),)),
        TauVector((Fraction(25),)),
    )
    m2 = PhiModule(frob, (F0(k1=1, k2=2, x1=Fraction(1), x2=0, x2p=0),))
    assert not are_isomorphic(m1, m2)
    assert not oracle_isomorphic(m1, m2)
