"""Command-line interface.

Exit codes: 0 on success or a true answer, 1 on a false answer or failed
criterion, 2 on usage, parse or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

import jsonschema

from . import schemas
from .errors import CriterionError, NotSymmetricError, ParseError
from .invariants import (
    SymmetricData,
    decompose_symmetric,
    invariant_basis_oracle,
    is_symmetric,
    symmetrize,
    synthesize,
)
from .maps import InnerAuto, decompose_preserving, find_symmetry_witness, is_in_annihilator, preserves_symmetric
from .parser import parse_element
from .render import dumps, element_to_json, render_text
from .verify import Params, run_suites


class UsageError(Exception):
    pass


def _fmt(parser):
    parser.add_argument("--format", choices=("text", "json"), default="text")


def _rank(parser):
    parser.add_argument("-n", type=int, required=True, help="rank of the algebra")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="metaleibniz", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", help="reduce an expression to normal form")
    _rank(p)
    p.add_argument("expr")
    _fmt(p)

    sym = sub.add_parser("sym", help="symmetric polynomials").add_subparsers(dest="action", required=True)
    for name in ("check", "decompose", "symmetrize"):
        p = sym.add_parser(name)
        _rank(p)
        p.add_argument("expr")
        _fmt(p)
    p = sym.add_parser("synth")
    _rank(p)
    p.add_argument("--data", required=True, help="SymmetricData JSON file, '-' for stdin")
    _fmt(p)
    p = sym.add_parser("basis")
    _rank(p)
    p.add_argument("-d", type=int, required=True, help="degree")
    _fmt(p)

    ann = sub.add_parser("ann", help="annihilator").add_subparsers(dest="action", required=True)
    p = ann.add_parser("check")
    _rank(p)
    p.add_argument("expr")
    _fmt(p)

    inner = sub.add_parser("inner", help="inner automorphisms").add_subparsers(dest="action", required=True)
    p = inner.add_parser("apply")
    _rank(p)
    p.add_argument("-u", required=True)
    p.add_argument("-v", required=True)
    _fmt(p)
    for name in ("preserves", "decompose"):
        p = inner.add_parser(name)
        _rank(p)
        p.add_argument("-u", required=True)
        _fmt(p)
        if name == "preserves":
            p.add_argument("--witness", action="store_true", help="print a symmetric element that is broken")

    p = sub.add_parser("verify", help="run the seeded property suites")
    p.add_argument("--suite", choices=("identities", "theorems", "inner", "all"), default="all")
    p.add_argument("--cases", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--max-deg", type=int, default=4)
    p.add_argument("--oracle-deg", type=int, default=5)
    _fmt(p)
    return ap


def _elem(text, n):
    if n < 1:
        raise UsageError("rank must be at least 1")
    return parse_element(text, n)


def _emit_elem(u, fmt, out):
    out.write((dumps(element_to_json(u)) if fmt == "json" else render_text(u)) + "\n")


def _emit_bool(value, fmt, out, key):
    out.write((dumps({key: value}) if fmt == "json" else ("true" if value else "false")) + "\n")
    return 0 if value else 1


def _load_data(path, stdin):
    raw = stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    data = json.loads(raw)
    jsonschema.validate(data, schemas.SYMMETRIC_DATA)
    return SymmetricData.from_json(data)


def _dispatch(args, out, stdin) -> int:
    cmd, fmt = args.command, getattr(args, "format", "text")
    if cmd == "normalize":
        _emit_elem(_elem(args.expr, args.n), fmt, out)
        return 0

    if cmd == "sym":
        if args.action == "check":
            return _emit_bool(is_symmetric(_elem(args.expr, args.n)), fmt, out, "symmetric")
        if args.action == "symmetrize":
            _emit_elem(symmetrize(_elem(args.expr, args.n)), fmt, out)
            return 0
        if args.action == "decompose":
            try:
                d = decompose_symmetric(_elem(args.expr, args.n))
            except NotSymmetricError as exc:
                print(exc, file=sys.stderr)
                out.write("false\n" if fmt == "text" else dumps({"symmetric": False}) + "\n")
                return 1
            if fmt == "json":
                out.write(d.dumps() + "\n")
            else:
                out.write(f"alpha = {d.to_json()['alpha']}\nf = {d.f}\ng = {d.g}\n")
            return 0
        if args.action == "synth":
            d = _load_data(args.data, stdin)
            if d.n != args.n:
                raise UsageError(f"data has n={d.n}, command has n={args.n}")
            _emit_elem(synthesize(d), fmt, out)
            return 0
        if args.action == "basis":
            basis = invariant_basis_oracle(args.n, args.d)
            if fmt == "json":
                doc = {"n": args.n, "d": args.d, "dimension": len(basis),
                       "basis": [element_to_json(u) for u in basis]}
                out.write(dumps(doc) + "\n")
            else:
                out.write(f"dimension {len(basis)}\n")
                for u in basis:
                    out.write(render_text(u) + "\n")
            return 0

    if cmd == "ann":
        return _emit_bool(is_in_annihilator(_elem(args.expr, args.n)), fmt, out, "annihilator")

    if cmd == "inner":
        u = _elem(args.u, args.n)
        psi = InnerAuto(u)
        if args.action == "apply":
            _emit_elem(psi(_elem(args.v, args.n)), fmt, out)
            return 0
        if args.action == "preserves":
            ok = preserves_symmetric(u)
            code = _emit_bool(ok, fmt, out, "preserves")
            if not ok and args.witness:
                s = find_symmetry_witness(u)
                if s is not None:
                    out.write(f"witness: {render_text(s)} -> {render_text(psi(s))}\n")
            return code
        if args.action == "decompose":
            try:
                u_ann, u_sym = decompose_preserving(u)
            except CriterionError as exc:
                print(exc, file=sys.stderr)
                out.write("false\n" if fmt == "text" else dumps({"preserves": False}) + "\n")
                return 1
            if fmt == "json":
                out.write(dumps({"ann": element_to_json(u_ann), "sym": element_to_json(u_sym)}) + "\n")
            else:
                out.write(f"ann: {render_text(u_ann)}\nsym: {render_text(u_sym)}\n")
            return 0

    if cmd == "verify":
        params = Params(args.cases, args.seed, args.max_n, args.max_deg, args.oracle_deg)
        results = run_suites(args.suite, params)
        if fmt == "json":
            rows = [{"suite": r.suite, "check": r.name, "passed": r.passed, "total": r.total,
                     "counterexample": r.counterexample} for r in results]
            out.write(dumps(rows) + "\n")
        else:
            for r in results:
                out.write(r.line() + "\n")
            suites = sorted({r.suite for r in results})
            for s in suites:
                rs = [r for r in results if r.suite == s]
                npass = sum(r.ok for r in rs)
                out.write(f"suite {s}: {npass}/{len(rs)} checks passed\n")
        return 0 if all(r.ok for r in results) else 1

    raise UsageError(f"unknown command {cmd}")


def run_command(argv, out=None, stdin=None) -> int:
    out = sys.stdout if out is None else out
    stdin = sys.stdin if stdin is None else stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _dispatch(args, out, stdin)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (UsageError, ValueError, OSError, jsonschema.ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main(argv=None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
