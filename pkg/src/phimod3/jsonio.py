"""JSON encoding of module instances.

Scalars travel as reduced "n" or "n/d" strings so every value round-trips
exactly.  Serialized output is byte-deterministic: keys sorted, compact
separators (or a fixed pretty layout on request).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .coeff import format_scalar, parse_scalar
from .modules import F0, F1, F2, F3, Filtration, FrobeniusData, PhiModule
from .normalform import RawEmbedding, RawFiltration
from .tauvec import Matrix, TauVector


class InputFormatError(ValueError):
    pass


def _scalar(obj) -> Fraction:
    if isinstance(obj, str):
        return parse_scalar(obj)
    if isinstance(obj, int):
        return Fraction(obj)
    raise InputFormatError(f"bad scalar {obj!r}")


def _bit(obj) -> int:
    if obj in (0, 1):
        return int(obj)
    raise InputFormatError(f"expected 0 or 1, got {obj!r}")


def _int(obj) -> int:
    if isinstance(obj, int) and not isinstance(obj, bool):
        return obj
    raise InputFormatError(f"expected integer, got {obj!r}")


def _vector(obj, f: int) -> TauVector:
    if not isinstance(obj, list) or len(obj) != f:
        raise InputFormatError(f"expected list of {f} scalars, got {obj!r}")
    return TauVector(tuple(_scalar(c) for c in obj))


def _require(obj: dict, key: str):
    if key not in obj:
        raise InputFormatError(f"missing key {key!r}")
    return obj[key]


def filtration_from_obj(obj) -> Filtration:
    if not isinstance(obj, dict):
        raise InputFormatError(f"filtration entry must be an object, got {obj!r}")
    kind = _require(obj, "type")
    if kind == "F0":
        return F0(
            k1=_int(_require(obj, "k1")),
            k2=_int(_require(obj, "k2")),
            x1=_scalar(_require(obj, "x1")),
            x2=_bit(_require(obj, "x2")),
            x2p=_bit(_require(obj, "x2p")),
        )
    if kind == "F1":
        return F1(
            k=_int(_require(obj, "k")),
            x2=_bit(_require(obj, "x2")),
            x2p=_bit(_require(obj, "x2p")),
        )
    if kind == "F2":
        return F2(
            k=_int(_require(obj, "k")),
            x1=_bit(_require(obj, "x1")),
            x2pp=_bit(_require(obj, "x2pp")),
        )
    if kind == "F3":
        return F3()
    raise InputFormatError(f"unknown filtration type {kind!r}")


def filtration_to_obj(filt: Filtration) -> dict:
    if isinstance(filt, F0):
        return {
            "type": "F0",
            "k1": filt.k1,
            "k2": filt.k2,
            "x1": format_scalar(filt.x1),
            "x2": filt.x2,
            "x2p": filt.x2p,
        }
    if isinstance(filt, F1):
        return {"type": "F1", "k": filt.k, "x2": filt.x2, "x2p": filt.x2p}
    if isinstance(filt, F2):
        return {"type": "F2", "k": filt.k, "x1": filt.x1, "x2pp": filt.x2pp}
    return {"type": "F3"}


def _raw_embedding_from_obj(obj) -> RawEmbedding:
    if not isinstance(obj, dict):
        raise InputFormatError(f"raw filtration entry must be an object, got {obj!r}")
    k1 = _int(_require(obj, "k1"))
    k2 = _int(_require(obj, "k2"))
    u = v = None
    if "u" in obj:
        uo = obj["u"]
        if not isinstance(uo, list) or len(uo) != 3:
            raise InputFormatError("u must be a list of 3 scalars")
        u = tuple(_scalar(c) for c in uo)
    if "v" in obj:
        vo = obj["v"]
        if not isinstance(vo, list) or len(vo) != 3:
            raise InputFormatError("v must be a list of 3 scalars")
        v = tuple(_scalar(c) for c in vo)
    lam = _scalar(obj["lam"]) if "lam" in obj else None
    mu = _scalar(obj["mu"]) if "mu" in obj else None
    return RawEmbedding(k1=k1, k2=k2, u=u, v=v, lam=lam, mu=mu)


def raw_embedding_to_obj(emb: RawEmbedding) -> dict:
    out = {"k1": emb.k1, "k2": emb.k2}
    if emb.u is not None:
        out["u"] = [format_scalar(c) for c in emb.u]
        out["v"] = [format_scalar(c) for c in emb.v]
    if emb.lam is not None:
        out["lam"] = format_scalar(emb.lam)
        out["mu"] = format_scalar(emb.mu)
    return out


@dataclass(frozen=True)
class Instance:
    frobenius: FrobeniusData
    module: PhiModule | None
    raw: RawFiltration | None
    monodromy_scales: dict | None


def instance_from_obj(obj) -> Instance:
    if not isinstance(obj, dict):
        raise InputFormatError("top level must be an object")
    p = _int(_require(obj, "p"))
    f = _int(_require(obj, "f"))
    if f < 1:
        raise InputFormatError(f"f must be positive, got {f}")
    frob = FrobeniusData(
        p=p,
        f=f,
        a=_vector(_require(obj, "a"), f),
        b=_vector(_require(obj, "b"), f),
        c=_vector(_require(obj, "c"), f),
    )
    module = None
    if "filt" in obj:
        filt_obj = obj["filt"]
        if not isinstance(filt_obj, list) or len(filt_obj) != f:
            raise InputFormatError(f"filt must be a list of {f} entries")
        module = PhiModule(frob, tuple(filtration_from_obj(e) for e in filt_obj))
    raw = None
    if "raw_filtration" in obj:
        raw_obj = obj["raw_filtration"]
        if not isinstance(raw_obj, list) or len(raw_obj) != f:
            raise InputFormatError(f"raw_filtration must be a list of {f} entries")
        raw = RawFiltration(tuple(_raw_embedding_from_obj(e) for e in raw_obj))
    scales = None
    if "monodromy" in obj:
        mono = obj["monodromy"]
        if not isinstance(mono, dict) or not isinstance(mono.get("entries"), list):
            raise InputFormatError("monodromy must be an object with an entries list")
        scales = {}
        for entry in mono["entries"]:
            r = _int(_require(entry, "row"))
            c = _int(_require(entry, "col"))
            if not (0 <= r < 3 and 0 <= c < 3):
                raise InputFormatError(f"entry position ({r}, {c}) out of range")
            scales[(r, c)] = _scalar(entry.get("scale", 1))
    return Instance(frobenius=frob, module=module, raw=raw, monodromy_scales=scales)


def vector_to_obj(vec: TauVector) -> list:
    return [format_scalar(c) for c in vec.coords]


def module_to_obj(m: PhiModule) -> dict:
    return {
        "p": m.p,
        "f": m.f,
        "a": vector_to_obj(m.frobenius.a),
        "b": vector_to_obj(m.frobenius.b),
        "c": vector_to_obj(m.frobenius.c),
        "filt": [filtration_to_obj(filt) for filt in m.filt],
    }


def matrix_to_obj(A: Matrix) -> list:
    return [[vector_to_obj(e) for e in row] for row in A]


def dumps(obj, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(obj, sort_keys=True, indent=2) + "\n"
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"bad JSON: {exc}") from exc
