import random

import pytest

from phimod3.generator import GeneratorConfig, random_module
from phimod3.jsonio import (
    InputFormatError,
    dumps,
    instance_from_obj,
    loads,
    module_to_obj,
)


def test_module_round_trip():
    rng = random.Random(61)
    cfg = GeneratorConfig(seed=61)
    for _ in range(30):
        m = random_module(rng, cfg)
        obj = module_to_obj(m)
        back = instance_from_obj(loads(dumps(obj))).module
        assert back == m


def test_serialization_is_deterministic():
    rng = random.Random(67)
    m = random_module(rng, GeneratorConfig(seed=67))
    obj = module_to_obj(m)
    assert dumps(obj) == dumps(module_to_obj(m))
    assert dumps(obj, pretty=True) == dumps(module_to_obj(m), pretty=True)


def test_bad_inputs_rejected():
    good = {
        "p": 3,
        "f": 1,
        "a": ["1"],
        "b": ["2"],
        "c": ["3"],
        "filt": [{"type": "F3"}],
    }
    assert instance_from_obj(good).module is not None
    for mutate in (
        lambda o: o.pop("p"),
        lambda o: o.__setitem__("f", 0),
        lambda o: o.__setitem__("a", ["1", "2"]),
        lambda o: o.__setitem__("filt", [{"type": "F9"}]),
        lambda o: o.__setitem__("filt", [{"type": "F1", "k": 1, "x2": 2, "x2p": 0}]),
        lambda o: o.__setitem__("a", ["1/0"]),
    ):
        bad = {k: (v.copy() if isinstance(v, list) else v) for k, v in good.items()}
        mutate(bad)
        with pytest.raises(ValueError):
            instance_from_obj(bad)
