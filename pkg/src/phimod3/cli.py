"""Command line interface.

Exit codes: 0 success, 1 invalid or unrepresentable input, 2 property
violation (a cross-check or validation that should hold failed).  All
output is deterministic JSON on stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import sys

from .admissibility import (
    check_weak_admissibility,
    oracle_hodge_invariant,
    oracle_is_irreducible,
    oracle_weak_admissibility,
)
from .generator import (
    GeneratorConfig,
    SelftestFailure,
    TargetUnreachable,
    generate,
    selftest,
)
from .isomorphism import are_isomorphic, find_witness, validate_witness
from .jsonio import (
    InputFormatError,
    dumps,
    instance_from_obj,
    loads,
    matrix_to_obj,
    module_to_obj,
    vector_to_obj,
)
from .modules import (
    PROPER_SUBMODULES,
    InvalidModuleError,
    SubmoduleId,
    hodge_invariant,
    newton_invariant,
)
from .monodromy import (
    MonodromyError,
    admissible_positions,
    build_monodromy,
    entry_profile,
    validate_monodromy,
)
from .normalform import (
    DegenerateInputError,
    NotRepresentableError,
    normalize,
)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_VIOLATION = 2


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _load_instance(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = loads(fh.read())
        return instance_from_obj(obj)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_INVALID)
    except (InputFormatError, InvalidModuleError, DegenerateInputError) as exc:
        raise CliError(f"invalid input {path}: {exc}", EXIT_INVALID)


def _require_module(inst, path: str):
    if inst.module is None:
        raise CliError(f"{path} has no filt section", EXIT_INVALID)
    return inst.module


def _emit(args, obj):
    sys.stdout.write(dumps(obj, pretty=args.pretty))


def cmd_validate(args):
    inst = _load_instance(args.infile)
    _emit(
        args,
        {
            "valid": True,
            "p": inst.frobenius.p,
            "f": inst.frobenius.f,
            "has_filtration": inst.module is not None,
            "has_raw_filtration": inst.raw is not None,
            "has_monodromy": inst.monodromy_scales is not None,
        },
    )
    return EXIT_OK


def cmd_check_wa(args):
    inst = _load_instance(args.infile)
    m = _require_module(inst, args.infile)
    report = check_weak_admissibility(m)
    out = {
        "admissible": report.admissible,
        "irreducible": report.irreducible,
        "newton_full": report.full_newton,
        "hodge_full": report.full_hodge,
        "submodules": {
            d.submodule.name: {
                "newton": d.newton,
                "hodge": d.hodge,
                "slack": d.slack,
                "equality": d.equality,
            }
            for d in report.diagnostics
        },
    }
    if args.oracle:
        mismatches = []
        if report.admissible != oracle_weak_admissibility(m):
            mismatches.append("weak_admissibility")
        if report.irreducible != oracle_is_irreducible(m):
            mismatches.append("irreducibility")
        for s in list(PROPER_SUBMODULES) + [SubmoduleId.FULL]:
            if hodge_invariant(m, s) != oracle_hodge_invariant(m, s):
                mismatches.append(f"hodge_{s.name}")
        out["oracle_agrees"] = not mismatches
        if mismatches:
            out["oracle_mismatches"] = mismatches
            _emit(args, out)
            return EXIT_VIOLATION
    _emit(args, out)
    return EXIT_OK


def cmd_iso(args):
    left = _require_module(_load_instance(args.left), args.left)
    right = _require_module(_load_instance(args.right), args.right)
    closed = are_isomorphic(left, right)
    out = {"isomorphic": closed}
    code = EXIT_OK
    witness = None
    if args.oracle or args.witness:
        witness = find_witness(left, right)
    if args.oracle:
        oracle = witness is not None
        out["oracle_agrees"] = oracle == closed
        if oracle != closed:
            code = EXIT_VIOLATION
    if args.witness:
        if witness is None:
            out["witness"] = None
        else:
            out["witness"] = {
                "sigma": list(witness.sigma),
                "h": [vector_to_obj(v) for v in witness.h],
            }
            if not validate_witness(left, right, witness):
                out["witness_valid"] = False
                code = EXIT_VIOLATION
            else:
                out["witness_valid"] = True
    _emit(args, out)
    return code


def cmd_normalize(args):
    inst = _load_instance(args.infile)
    if inst.raw is None:
        raise CliError(f"{args.infile} has no raw_filtration section", EXIT_INVALID)
    try:
        result = normalize(inst.frobenius, inst.raw)
    except NotRepresentableError as exc:
        raise CliError(f"not representable: {exc}", EXIT_INVALID)
    except DegenerateInputError as exc:
        raise CliError(f"degenerate input: {exc}", EXIT_INVALID)
    _emit(
        args,
        {
            "module": module_to_obj(result.module),
            "permutation": list(result.permutation),
            "rescale": [vector_to_obj(v) for v in result.rescale],
        },
    )
    return EXIT_OK


def cmd_monodromy(args):
    inst = _load_instance(args.infile)
    frob = inst.frobenius
    positions = admissible_positions(frob)
    out = {
        "positions": [
            {
                "row": r,
                "col": c,
                "profile": vector_to_obj(entry_profile(frob, r, c)),
            }
            for r, c in positions
        ]
    }
    code = EXIT_OK
    if inst.monodromy_scales is not None:
        try:
            N = build_monodromy(frob, inst.monodromy_scales)
        except MonodromyError as exc:
            raise CliError(f"monodromy: {exc}", EXIT_INVALID)
        out["matrix"] = matrix_to_obj(N)
        valid = validate_monodromy(frob, N)
        out["valid"] = valid
        if not valid:
            code = EXIT_VIOLATION
    _emit(args, out)
    return code


def cmd_generate(args):
    out = []
    for idx in range(args.n):
        cfg = GeneratorConfig(seed=args.seed + idx)
        try:
            out.append(module_to_obj(generate(cfg, target=args.target)))
        except TargetUnreachable as exc:
            raise CliError(str(exc), EXIT_INVALID)
    _emit(args, out)
    return EXIT_OK


def cmd_selftest(args):
    try:
        counts = selftest(seed=args.seed, n=args.n)
    except SelftestFailure as failure:
        _emit(args, {"ok": False, "kind": failure.kind, "counterexample": failure.payload})
        return EXIT_VIOLATION
    _emit(args, {"ok": True, "counts": counts})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="phimod3",
        description="Exact arithmetic for rank-3 filtered phi-modules.",
    )
    fmt = parser.add_mutually_exclusive_group()
    fmt.add_argument(
        "--json",
        action="store_false",
        dest="pretty",
        help="compact JSON output (default)",
    )
    fmt.add_argument("--pretty", action="store_true", help="indented JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse and validate an instance file")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("check-wa", help="weak admissibility and irreducibility report")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--oracle", action="store_true", help="cross-check against the definitional oracle")
    p.set_defaults(func=cmd_check_wa)

    p = sub.add_parser("iso", help="decide isomorphism of two instances")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--oracle", action="store_true", help="cross-check against the constraint solver")
    p.add_argument("--witness", action="store_true", help="emit and validate an explicit isomorphism")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("normalize", help="reduce raw filtration data to normal form")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("monodromy", help="admissible monodromy positions and operators")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=cmd_monodromy)

    p = sub.add_parser("generate", help="emit seeded random instances")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=1)
    p.add_argument(
        "--target",
        choices=("any", "admissible", "irreducible"),
        default="any",
    )
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("selftest", help="cross-check closed forms against oracles")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=200)
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
