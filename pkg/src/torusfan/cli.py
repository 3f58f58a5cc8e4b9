"""Command-line interface.

Exit codes: 0 success, 1 validation failure, 2 I/O or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import multifan as mf
from .documents import (
    DocumentError,
    fraction_str,
    multifan_to_dict,
    parse_int_vector,
    parse_multifan,
    parse_vector,
)
from .quasitoric import CharacteristicPair, fixed_point_count, toricity_report, validate_dj
from .simplicial import homology, is_homology_sphere
from .spheremap import homeomorphism_verdict, pythagoras_check, sample_star_points
from .surfaces import ConnectedSum, donaldson_filter, enumerate_admissible, invariants

EXIT_OK, EXIT_INVALID, EXIT_IO = 0, 1, 2


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _load(path: str) -> mf.MultiFan:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}", EXIT_IO) from None
    try:
        return parse_multifan(text)
    except DocumentError as exc:
        raise CliError("\n".join(f"{path}: {e}" for e in exc.errors), EXIT_IO) from None


def _load_valid(path: str) -> mf.MultiFan:
    f = _load(path)
    problems = mf.validate(f)
    if problems:
        raise CliError("\n".join(f"invalid: {p}" for p in problems), EXIT_INVALID)
    return f


def _emit(args, payload: dict, lines: list[str]):
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print("\n".join(lines))


def _report_lines(r: mf.ClassificationReport) -> list[str]:
    return [f"{k}: {str(v).lower() if isinstance(v, bool) else v}" for k, v in r.as_dict().items()]


def cmd_validate(args) -> int:
    f = _load(args.file)
    problems = mf.validate(f)
    _emit(args, {"valid": not problems, "violations": problems},
          ["valid"] if not problems else [f"violation: {p}" for p in problems])
    return EXIT_OK if not problems else EXIT_INVALID


def cmd_todd(args) -> int:
    f = _load_valid(args.file)
    if args.vector is not None:
        try:
            v = parse_vector(args.vector)
        except ValueError as exc:
            raise CliError(str(exc), EXIT_IO) from None
        if len(v) != f.dim:
            raise CliError(f"vector has length {len(v)}, expected {f.dim}", EXIT_INVALID)
        if not mf.is_generic(f, v):
            raise CliError("vector not generic", EXIT_INVALID)
        todd = mf.todd_genus(f, v)
        _emit(args, {"todd": todd, "vector": [fraction_str(x) for x in v]}, [f"todd: {todd}"])
        return EXIT_OK
    res = mf.todd_v_independence(f, args.samples, args.seed)
    _emit(args, {"todd": res.todd, "v_independent": res.v_independent, "samples_used": args.samples},
          [f"todd: {res.todd}", f"v_independent: {str(res.v_independent).lower()}",
           f"samples_used: {args.samples}"])
    return EXIT_OK


def cmd_classify(args) -> int:
    f = _load_valid(args.file)
    r = mf.classify(f, args.samples, args.seed)
    _emit(args, r.as_dict(), _report_lines(r))
    return EXIT_OK


def cmd_restrict(args) -> int:
    f = _load_valid(args.file)
    try:
        g = mf.restrict(f, args.ray)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_INVALID) from None
    print(json.dumps(multifan_to_dict(g), indent=2))
    return EXIT_OK


def cmd_subdivide(args) -> int:
    f = _load_valid(args.file)
    simplex = [s.strip() for s in args.simplex.split(",")]
    try:
        ray = parse_int_vector(args.ray)
        g = mf.stellar_subdivide(f, simplex, ray, new_id=args.new_id)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_INVALID) from None
    print(json.dumps(multifan_to_dict(g), indent=2))
    return EXIT_OK


def cmd_homology(args) -> int:
    f = _load(args.file)
    H = homology(f.complex)
    d = f.complex.dimension
    sphere = is_homology_sphere(f.complex, d)
    _emit(args,
          {"homology": [{"degree": k, "rank": h.rank, "torsion": list(h.torsion)} for k, h in enumerate(H)],
           "homology_sphere": sphere, "dimension": d},
          [f"H_{k}: {h}" for k, h in enumerate(H)] + [f"homology {d}-sphere: {str(sphere).lower()}"])
    return EXIT_OK


def cmd_spheremap(args) -> int:
    f = _load_valid(args.file)
    points = sample_star_points(f, args.check_pythagoras, args.seed)
    passed = sum(pythagoras_check(f, p) for p in points)
    homeo = homeomorphism_verdict(f, args.samples, args.seed)
    _emit(args, {"checked": len(points), "passed": passed, "homeomorphism": homeo},
          [f"pythagoras: {passed}/{len(points)} exact", f"homeomorphism: {str(homeo).lower()}"])
    return EXIT_OK if passed == len(points) else EXIT_INVALID


def _sum_dict(c: ConnectedSum) -> dict:
    return {"k": c.k, "l": c.l, "m": c.m}


def cmd_surface(args) -> int:
    if args.enumerate is not None:
        found = enumerate_admissible(*args.enumerate)
        _emit(args, {"admissible": [_sum_dict(c) for c in found]},
              [f"({c.k},{c.l},{c.m})  {c}" for c in found] or ["none"])
        return EXIT_OK
    if None in (args.k, args.l, args.m):
        raise CliError("surface needs --k, --l and --m (or --enumerate)", EXIT_IO)
    try:
        c = ConnectedSum(args.k, args.l, args.m)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_INVALID) from None
    inv = invariants(c)
    try:
        res = donaldson_filter(c)
    except ValueError as exc:
        raise CliError(f"{c}: {exc}", EXIT_INVALID) from None
    payload = {
        "surface": _sum_dict(c), "euler": inv.euler, "signature": inv.signature,
        "todd": fraction_str(inv.todd), "admissible": res.admissible,
        "witness": None if res.witness is None else [_sum_dict(y) for y in res.witness],
    }
    lines = [str(c), f"euler: {inv.euler}", f"signature: {inv.signature}",
             f"todd: {fraction_str(inv.todd)}", f"admissible: {str(res.admissible).lower()}"]
    if res.witness:
        lines.append(f"witness: Y1 = {res.witness[0]}, Y2 = {res.witness[1]}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_quasitoric(args) -> int:
    f = _load(args.file)
    try:
        pair = CharacteristicPair.from_multifan(f)
    except ValueError as exc:
        raise CliError(f"invalid characteristic pair: {exc}", EXIT_INVALID) from None
    if not validate_dj(pair):
        _emit(args, {"valid": False, "verdict": None},
              ["rays at some vertex do not form a lattice basis"])
        return EXIT_INVALID
    t = toricity_report(pair, args.samples, args.seed)
    payload = dict(t.report.as_dict(), verdict=t.verdict, fixed_points=fixed_point_count(pair))
    _emit(args, payload, _report_lines(t.report) + [f"fixed_points: {fixed_point_count(pair)}",
                                                    f"verdict: {t.verdict}"])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sampling = argparse.ArgumentParser(add_help=False)
    sampling.add_argument("--samples", type=int, default=mf.DEFAULT_SAMPLES)
    sampling.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="torusfan", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", parents=[common])
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("todd", parents=[common, sampling])
    s.add_argument("file")
    s.add_argument("--vector", help="comma-separated integers or p/q rationals")
    s.set_defaults(func=cmd_todd)

    s = sub.add_parser("classify", parents=[common, sampling])
    s.add_argument("file")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("restrict", parents=[common])
    s.add_argument("file")
    s.add_argument("--ray", required=True, help="vertex id")
    s.set_defaults(func=cmd_restrict)

    s = sub.add_parser("subdivide", parents=[common])
    s.add_argument("file")
    s.add_argument("--simplex", required=True, help="comma-separated vertex ids")
    s.add_argument("--ray", required=True, help="comma-separated integers")
    s.add_argument("--new-id", default=None)
    s.set_defaults(func=cmd_subdivide)

    s = sub.add_parser("homology", parents=[common])
    s.add_argument("file")
    s.set_defaults(func=cmd_homology)

    s = sub.add_parser("spheremap", parents=[common, sampling])
    s.add_argument("file")
    s.add_argument("--check-pythagoras", type=int, required=True, metavar="N")
    s.set_defaults(func=cmd_spheremap)

    s = sub.add_parser("surface", parents=[common])
    s.add_argument("--k", type=int)
    s.add_argument("--l", type=int)
    s.add_argument("--m", type=int)
    s.add_argument("--enumerate", type=int, nargs=3, metavar=("KMAX", "LMAX", "MMAX"))
    s.set_defaults(func=cmd_surface)

    s = sub.add_parser("quasitoric", parents=[common, sampling])
    s.add_argument("file")
    s.set_defaults(func=cmd_quasitoric)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_IO if exc.code else EXIT_OK
    try:
        return args.func(args)
    except CliError as exc:
        print(str(exc), file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
