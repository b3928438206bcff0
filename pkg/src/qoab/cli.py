"""Command-line front end.

Exit codes: 0 success, 1 a checked property was violated, 2 the input could
not be parsed, 3 the input parsed but is semantically invalid.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Optional, Sequence

from .cone import Cone
from .divis import divides, parse_element
from .exactlin import DimensionError
from .fgab import PresentationMismatch
from .freemonad.adjunction import check_monad_laws, check_triangle_identities
from .freemonad.classify import NotFreeError, free_iso_class, is_free_qobject, shape
from .freemonad.em import (EmAlgebra, EmError, check_em_laws, em_to_qab, em_violations,
                           qab_to_em, roundtrip_em, roundtrip_qab)
from .freemonad.setm import SetmError, SetmObject
from .qab import QoGroup, antisymmetrize, check_antisym_triangles, is_po
from .serialize import ObjectFileError, dumps, loads, qogroup_to_dict

EXIT_OK, EXIT_VIOLATED, EXIT_PARSE, EXIT_SEMANTIC = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _load(path: str, kinds: Sequence[type]):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(EXIT_PARSE, f"cannot read {path}: {exc.strerror}") from None
    try:
        obj = loads(text)
    except (ObjectFileError, SetmError) as exc:
        raise CliError(EXIT_PARSE, str(exc)) from None
    if isinstance(obj, Cone) and QoGroup in kinds:
        obj = QoGroup(obj.presentation, obj)
    if not isinstance(obj, tuple(kinds)):
        names = ", ".join(k.__name__ for k in kinds)
        raise CliError(EXIT_SEMANTIC, f"{path}: expected {names}, got {type(obj).__name__}")
    return obj


def _vector(text: str) -> list[int]:
    try:
        v = json.loads(text)
    except json.JSONDecodeError:
        raise CliError(EXIT_PARSE, f"not a JSON integer or array: {text!r}") from None
    if isinstance(v, int) and not isinstance(v, bool):
        return [v]
    if isinstance(v, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in v):
        return v
    raise CliError(EXIT_PARSE, f"not an integer vector: {text!r}")


def cmd_leq(args) -> tuple[int, dict]:
    Q = _load(args.file, [QoGroup])
    a, b = Q.element(_vector(args.a)), Q.element(_vector(args.b))
    cert = Q.cone.contains(b - a, bound=args.bound)
    out = {"a": list(a.coords), "b": list(b.coords), "result": cert.is_member}
    if cert.is_member:
        if not cert.verify(Q.cone):
            raise AssertionError("membership certificate failed re-verification")
        out["certificate"] = cert.to_dict()
    return EXIT_OK, out


def cmd_antisym(args) -> tuple[int, dict]:
    Q = _load(args.file, [QoGroup])
    A, _ = antisymmetrize(Q)
    out = qogroup_to_dict(A)
    out["group"] = A.group.describe()
    out["is_po"] = is_po(A)
    return EXIT_OK, out


def _classify(Q: QoGroup) -> dict:
    if not is_free_qobject(Q):
        return {"free": False, "rank": Q.group.free_rank, "defect": None, "shape": None}
    d, r = free_iso_class(Q)
    return {"free": True, "rank": r, "defect": d, "shape": shape(Q)}


def cmd_classify(args) -> tuple[int, dict]:
    obj = _load(args.file, [QoGroup, SetmObject])
    Q = obj.free if isinstance(obj, SetmObject) else obj
    return EXIT_OK, _classify(Q)


def cmd_free(args) -> tuple[int, dict]:
    i = _load(args.file, [SetmObject])
    out = qogroup_to_dict(i.free)
    out["class"] = _classify(i.free)
    return EXIT_OK, out


def cmd_check_laws(args) -> tuple[int, dict]:
    obj = _load(args.file, [SetmObject, EmAlgebra, QoGroup])
    if isinstance(obj, SetmObject):
        reports = [check_monad_laws(obj, args.seed, args.samples),
                   check_triangle_identities(obj, None, args.seed, args.samples)]
        out = {r.name: r.to_dict() for r in reports}
        passed = all(r.passed for r in reports)
    elif isinstance(obj, EmAlgebra):
        bad = em_violations(obj)
        out = {"table_laws": {"passed": not bad, "violations": bad}}
        if not bad:
            out["em_laws"] = check_em_laws(obj, args.seed, args.samples).to_dict()
        passed = not bad and out["em_laws"]["passed"]
    else:
        bad = check_antisym_triangles(obj, random.Random(args.seed), args.samples)
        out = {"antisym_triangles": {"passed": not bad, "violations": bad}}
        passed = not bad
    out["passed"] = passed
    out["seed"] = args.seed
    out["samples"] = args.samples
    return (EXIT_OK if passed else EXIT_VIOLATED), out


def cmd_divides(args) -> tuple[int, dict]:
    try:
        a = parse_element(args.a, args.ring)
        b = parse_element(args.b, args.ring)
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(EXIT_PARSE, str(exc)) from None
    return EXIT_OK, {"ring": args.ring, "a": str(a), "b": str(b), "result": divides(a, b),
                     "quotient": str(b / a)}


def cmd_em(args) -> tuple[int, dict]:
    obj = _load(args.file, [EmAlgebra, QoGroup])
    if isinstance(obj, QoGroup):
        out = {"em_algebra": qab_to_em(obj).to_dict()}
        if args.roundtrip:
            rt = roundtrip_qab(obj)
            out["roundtrip"] = "identity" if rt["identity"] else "mismatch"
            out["relabeling"] = rt["relabeling"]
        return EXIT_OK, out
    bad = em_violations(obj)
    out = {"em_laws": "fail" if bad else "pass", "violations": bad}
    if bad:
        return EXIT_VIOLATED, out
    Q = em_to_qab(obj)
    out["qogroup"] = qogroup_to_dict(Q)
    out["group"] = Q.group.describe()
    out["is_po"] = is_po(Q)
    if args.roundtrip:
        rt = roundtrip_em(obj)
        out["roundtrip"] = "identity" if rt["identity"] else "mismatch"
        out["relabeling"] = rt["relabeling"]
    return EXIT_OK, out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qoab", description="Quasi-ordered abelian groups.")
    parser.add_argument("--seed", type=int, default=0, help="sampling seed (default 0)")
    parser.add_argument("--samples", type=int, default=256, help="samples per law (default 256)")
    parser.add_argument("--bound", type=int, default=None,
                        help="cap on cone coefficients in membership searches")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("leq", help="decide a <= b in a qogroup")
    p.add_argument("file")
    p.add_argument("a", help="integer or JSON array")
    p.add_argument("b", help="integer or JSON array")
    p.set_defaults(func=cmd_leq)

    p = sub.add_parser("antisym", help="quotient a qogroup by the units of its cone")
    p.add_argument("file")
    p.set_defaults(func=cmd_antisym)

    p = sub.add_parser("classify", help="free-object class of a qogroup or setm file")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("check-laws", help="seeded law checks for setm, em_algebra or qogroup")
    p.add_argument("file")
    p.set_defaults(func=cmd_check_laws)

    p = sub.add_parser("divides", help="divisibility in the fraction field of Z or Z[i]")
    p.add_argument("ring", choices=["Z", "Zi"])
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_divides)

    p = sub.add_parser("em", help="convert between em_algebra tables and finite qogroups")
    p.add_argument("file")
    p.add_argument("--roundtrip", action="store_true")
    p.set_defaults(func=cmd_em)

    p = sub.add_parser("free", help="free qogroup on a setm file")
    p.add_argument("file")
    p.set_defaults(func=cmd_free)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    if args.samples < 0:
        print("error: --samples must be nonnegative", file=sys.stderr)
        return EXIT_PARSE
    try:
        code, out = args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (PresentationMismatch, DimensionError, EmError, NotFreeError, SetmError,
            ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC
    sys.stdout.write(dumps(out) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
