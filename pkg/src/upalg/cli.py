"""Command-line driver.

Exit codes: 0 when every check passes, 1 on a mathematical failure (a
witness is printed), 2 on usage or file errors.
"""
from __future__ import annotations

import argparse
import sys

from . import formats
from .congruence import quotient
from .core import AXIOMS, DERIVED_LAWS, check_axiom, derived_laws, up_ordering
from .errors import (
    AxiomViolation,
    CertificateFailure,
    HomViolation,
    NotAnIdeal,
    OrderOutOfRange,
    ParseError,
    PreconditionViolation,
    UnknownName,
    NotSurjective,
)
from .modelgen import (
    builtin,
    census_index_line,
    enumerate_algebras,
    power_type1,
    power_type2,
    write_census,
)
from .morphism import Morphism, enumerate_homs, is_isomorphic
from .substruct import all_ideals, all_subalgebras, generated_ideal
from .theorems import first_iso, fourth_iso, fundamental, second_iso, third_iso

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _labels(alg, text: str, flag: str):
    items = [s.strip() for s in text.split(",") if s.strip()]
    if len(set(items)) != len(items):
        raise UsageError(f"{flag}: label listed twice in {text!r}")
    try:
        return alg.subset(items)
    except KeyError as exc:
        raise UsageError(f"{flag}: {exc.args[0]}") from None


def _map(src, dst, text: str):
    try:
        return formats.parse_map(src, dst, text)
    except (KeyError, ValueError) as exc:
        raise UsageError(f"--map: {exc.args[0]}") from None


def _emit_certificate(cert, args, out):
    if getattr(args, "report", False):
        print(cert.report(), file=out)
    else:
        print("\n".join(cert.lines()), file=out)
    return OK


def cmd_check(args, out):
    m = formats.read_magma(args.file)
    m = m.normalized()
    status = OK
    for ax in AXIOMS:
        v = check_axiom(m, ax)
        if v is None:
            print(f"PASS {ax}", file=out)
        else:
            print(f"FAIL {v.describe(m.names)}", file=out)
            status = FAILED
    if status != OK:
        return status
    for k, v in derived_laws(m).items():
        if v is None:
            print(f"PASS law{k} {DERIVED_LAWS[k]}", file=out)
        else:
            print(f"FAIL {v.describe(m.names)}", file=out)
            status = FAILED
    return status


def cmd_sets(kind):
    def run(args, out):
        alg = formats.load_algebra(args.file)
        sets = all_ideals(alg) if kind == "ideals" else all_subalgebras(alg)
        for s in sets:
            print(formats.format_set(alg, s), file=out)
        return OK
    return run


def cmd_gen_ideal(args, out):
    alg = formats.load_algebra(args.file)
    seed = _labels(alg, args.seed, "--seed")
    print(formats.format_set(alg, generated_ideal(alg, seed)), file=out)
    return OK


def cmd_quotient(args, out):
    alg = formats.load_algebra(args.file)
    b = _labels(alg, args.ideal, "--ideal")
    if not b:
        raise UsageError("--ideal: empty set")
    q = quotient(alg, b)
    print("# classes " + formats.format_partition(alg, q.partition), file=out)
    out.write(formats.format_algebra(q.algebra))
    return OK


def cmd_homs(args, out):
    src = formats.load_algebra(args.src)
    dst = formats.load_algebra(args.dst)
    homs = enumerate_homs(src, dst)
    for f in homs:
        print(formats.format_morphism(f), file=out)
    print(f"# {len(homs)} homomorphisms", file=out)
    return OK


def cmd_iso(args, out):
    a = formats.load_algebra(args.a)
    b = formats.load_algebra(args.b)
    f = is_isomorphic(a, b)
    if f is None:
        print("not isomorphic", file=out)
        return FAILED
    print(formats.format_morphism(f), file=out)
    return OK


def _morphism(args):
    src = formats.load_algebra(args.src)
    dst = formats.load_algebra(args.dst)
    return Morphism(src, dst, _map(src, dst, args.map))


def cmd_fund(args, out):
    return _emit_certificate(fundamental(_morphism(args)), args, out)


def cmd_iso1(args, out):
    return _emit_certificate(first_iso(_morphism(args)), args, out)


def cmd_iso2(args, out):
    alg = formats.load_algebra(args.file)
    h = _labels(alg, args.sub, "--sub")
    k = _labels(alg, args.ideal, "--ideal")
    return _emit_certificate(second_iso(alg, h, k), args, out)


def cmd_iso3(args, out):
    alg = formats.load_algebra(args.file)
    h = _labels(alg, args.inner, "--inner")
    k = _labels(alg, args.outer, "--outer")
    return _emit_certificate(third_iso(alg, h, k), args, out)


def cmd_iso4(args, out):
    return _emit_certificate(fourth_iso(_morphism(args)), args, out)


def cmd_enumerate(args, out):
    census = enumerate_algebras(args.order, allow_six=args.allow_six)
    if args.out:
        write_census(census, args.out)
    else:
        for alg in census.representatives:
            out.write(formats.format_algebra(alg))
            print(file=out)
    print(census_index_line(census), file=out)
    return OK


def cmd_builtin(args, out):
    out.write(formats.format_algebra(builtin(args.name)))
    return OK


def cmd_powerset(args, out):
    make = power_type1 if args.type == 1 else power_type2
    out.write(formats.format_algebra(make(args.size)))
    return OK


def cmd_poset(args, out):
    alg = formats.load_algebra(args.file)
    if args.dot:
        out.write(formats.export_dot(alg))
        return OK
    poset = up_ordering(alg)
    for x, y in poset.covers():
        print(f"{alg.names[x]} < {alg.names[y]}", file=out)
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="upalg", description="Finite UP-algebra workbench")
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("check", help="axioms and derived laws")
    s.add_argument("file")
    s.set_defaults(run=cmd_check)

    for kind in ("ideals", "subalgebras"):
        s = sub.add_parser(kind, help=f"list all {kind}")
        s.add_argument("file")
        s.set_defaults(run=cmd_sets(kind))

    s = sub.add_parser("gen-ideal", help="ideal generated by a seed set")
    s.add_argument("file")
    s.add_argument("--seed", required=True, help="comma-separated labels (may be empty)")
    s.set_defaults(run=cmd_gen_ideal)

    s = sub.add_parser("quotient", help="quotient by an ideal, in v1 format")
    s.add_argument("file")
    s.add_argument("--ideal", required=True)
    s.set_defaults(run=cmd_quotient)

    s = sub.add_parser("homs", help="enumerate homomorphisms")
    s.add_argument("src")
    s.add_argument("dst")
    s.set_defaults(run=cmd_homs)

    s = sub.add_parser("iso", help="isomorphism test with explicit witness")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(run=cmd_iso)

    for verb, fn in (("fund", cmd_fund), ("iso1", cmd_iso1), ("iso4", cmd_iso4)):
        s = sub.add_parser(verb, help="certificate for a homomorphism")
        s.add_argument("src")
        s.add_argument("dst")
        s.add_argument("--map", required=True,
                       help="x=y pairs, or images listed in source order")
        s.add_argument("--report", action="store_true", help="human-readable output")
        s.set_defaults(run=fn)

    s = sub.add_parser("iso2", help="second isomorphism theorem certificate")
    s.add_argument("file")
    s.add_argument("--sub", required=True)
    s.add_argument("--ideal", required=True)
    s.add_argument("--report", action="store_true")
    s.set_defaults(run=cmd_iso2)

    s = sub.add_parser("iso3", help="third isomorphism theorem certificate")
    s.add_argument("file")
    s.add_argument("--inner", required=True)
    s.add_argument("--outer", required=True)
    s.add_argument("--report", action="store_true")
    s.set_defaults(run=cmd_iso3)

    s = sub.add_parser("enumerate", help="census of UP-algebras of one order")
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--out", help="directory for .tbl files and census-index.txt")
    s.add_argument("--allow-six", action="store_true", help="permit order 6 (slow)")
    s.set_defaults(run=cmd_enumerate)

    s = sub.add_parser("builtin", help="print a built-in example table")
    s.add_argument("name")
    s.set_defaults(run=cmd_builtin)

    s = sub.add_parser("powerset", help="power UP-algebra of type 1 or 2")
    s.add_argument("--type", type=int, choices=(1, 2), required=True)
    s.add_argument("--size", type=int, required=True)
    s.set_defaults(run=cmd_powerset)

    s = sub.add_parser("poset", help="covering pairs of the UP-ordering")
    s.add_argument("file")
    s.add_argument("--dot", action="store_true", help="emit a DOT Hasse diagram")
    s.set_defaults(run=cmd_poset)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.run(args, out)
    except (ParseError, UsageError, UnknownName, OrderOutOfRange) as exc:
        msg = exc.args[0] if isinstance(exc, UnknownName) else str(exc)
        print(f"error: {msg}", file=err)
        return USAGE
    except AxiomViolation as exc:
        for v in exc.violations:
            print(f"FAIL {v.describe(exc.names)}", file=out)
        return FAILED
    except CertificateFailure as exc:
        print("\n".join(exc.certificate.lines()), file=out)
        return FAILED
    except (HomViolation, NotAnIdeal, PreconditionViolation, NotSurjective) as exc:
        print(f"FAIL {exc}", file=out)
        return FAILED


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
