"""Command-line front end with a JSON document format.

A document holds exactly one payload key plus an optional ``order``::

    {"coeffs": ["1", "-1", "-1"]}            a(0), a(1), ...
    {"ghost": ["-1", "-1", "-1"]}            s_1, s_2, ...
    {"euler": {"1": "-1"}}                   d -> f(d)
    {"cyclo": {"6": "-6"}}                   m -> e(m)
    {"residues": [["2", 0, "1"]]}            (alpha, m, c)
    {"matrix": [[1, 1], [1, 0]]}             adjacency matrix of a shift
    {"quad": {"D": 2, "ghost": [["1", "1"]]}}     entries a + b sqrt(D)
    {"quad": {"D": 5, "euler": {"2": ["0", "1"]}}}

Output numbers are decimal strings and keys are sorted, so identical input
gives identical bytes. Exit codes: 0 success or pass, 1 congruence failure,
2 parse error, 3 domain error, 4 unsupported.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .arith import as_fraction
from .congruence import check_dold_plus, check_dold_tower, check_gauss_mobius, check_s_integral
from .cyclo import cyclo_fit, cyclo_product, ghost_from_cyclo
from .dynamics import doubling_fix, fix_from_matrix, matrix, toral_fix, zeta_from_fix
from .errors import (
    DomainError,
    Indeterminate,
    InvariantViolation,
    NotCyclotomic,
    NotRationalSpectrum,
    Unsupported,
)
from .ghost import (
    GhostSeq,
    coeffs_from_euler,
    euler_from_coeffs,
    euler_from_ghost,
    ghost_from_euler,
    sigma_from_coeffs,
    sigma_inverse,
)
from .ladders import frobenius_ladder_check, progression_zero_check
from .quad import (
    QuadElem,
    ideal_dold_mobius_check,
    norm_descent,
    norm_tower_check,
    splitting_type,
)
from .residues import (
    ResidueData,
    classify,
    ghost_from_residues,
    necklace_exponents,
    power_sums_from_polynomial,
    rational_reconstruct,
)
from .series import DEFAULT_ORDER, TruncSeries, series
from .witt import hadamard, witt_product_series

MAX_ORDER = 4096
PAYLOADS = ("coeffs", "ghost", "euler", "cyclo", "residues", "matrix", "quad")

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_DOMAIN, EXIT_UNSUPPORTED = 0, 1, 2, 3, 4


class ParseError(Exception):
    pass


# -- documents ---------------------------------------------------------------


def _refuse_float(text: str):
    raise ParseError(f"floating-point literal {text} not allowed; write numbers as strings")


def parse_json(text: str):
    try:
        return json.loads(text, parse_float=_refuse_float)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from exc


def read_doc(path: str | None, inline: str | None = None) -> dict:
    if inline is not None:
        text = inline
    elif path in (None, "-"):
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(str(exc)) from exc
    doc = parse_json(text)
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    return doc


def payload_key(doc: dict) -> str:
    keys = [k for k in PAYLOADS if k in doc]
    if len(keys) != 1:
        raise ParseError(f"document needs exactly one of {', '.join(PAYLOADS)}; found {keys or 'none'}")
    return keys[0]


def _num(x) -> Fraction:
    if isinstance(x, (str, int)) and not isinstance(x, bool):
        try:
            return as_fraction(x)
        except DomainError as exc:
            raise ParseError(str(exc)) from exc
    raise ParseError(f"expected a number as string or integer, got {x!r}")


def _int_key(k) -> int:
    try:
        v = int(k)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"expected an integer key, got {k!r}") from exc
    if v < 1:
        raise ParseError(f"index keys must be >= 1, got {v}")
    return v


def _sparse(obj) -> dict:
    if not isinstance(obj, dict):
        raise ParseError("expected an object mapping indices to numbers")
    return {_int_key(k): _num(v) for k, v in obj.items()}


def _list(obj, what: str) -> list:
    if not isinstance(obj, list):
        raise ParseError(f"{what} must be an array")
    return obj


def _quad_entry(x, D: int) -> QuadElem:
    if isinstance(x, list) and len(x) == 2:
        return QuadElem(_num(x[0]), _num(x[1]), D)
    return QuadElem(_num(x), 0, D)


def quad_payload(doc: dict):
    """``(D, ghost)`` from a quad document, building the ghost from exponents if given."""
    body = doc["quad"]
    if not isinstance(body, dict) or "D" not in body:
        raise ParseError("quad payload needs an object with D")
    D = int(_num(body["D"]))
    order = doc_order(doc, None)
    entries = body.get("ghost", body.get("entries"))
    if entries is not None:
        vals = [_quad_entry(x, D) for x in _list(entries, "quad ghost")]
        return D, GhostSeq(tuple(vals[:order]))
    if "euler" in body:
        if not isinstance(body["euler"], dict):
            raise ParseError("quad euler must be an object")
        c = {_int_key(k): _quad_entry(v, D) for k, v in body["euler"].items()}
        n = order or DEFAULT_ORDER
        if not c:
            return D, GhostSeq(tuple(QuadElem(0, 0, D) for _ in range(n)))
        return D, ghost_from_euler(c, n)
    raise ParseError("quad payload needs ghost (or entries) or euler")


def doc_order(doc: dict, default: int | None) -> int | None:
    if "order" in doc:
        return check_order(int(_num(doc["order"])))
    return default


def check_order(n: int) -> int:
    if n < 0:
        raise DomainError("order must be >= 0")
    if n > MAX_ORDER:
        raise DomainError(f"order {n} exceeds the limit {MAX_ORDER}")
    return n


def to_series(doc: dict, order: int) -> TruncSeries:
    key = payload_key(doc)
    if key == "coeffs":
        a = series([_num(c) for c in _list(doc["coeffs"], "coeffs")], order)
        if a[0] != 1:
            raise DomainError("coeffs must start with constant term 1")
        return a
    if key == "euler":
        return coeffs_from_euler(_sparse(doc["euler"]), order)
    if key == "cyclo":
        return cyclo_product(_sparse(doc["cyclo"]), order)
    if key == "matrix":
        return zeta_from_fix(fix_from_matrix(_matrix(doc["matrix"]), order))
    return sigma_inverse(to_ghost(doc, order))


def to_ghost(doc: dict, order: int) -> GhostSeq:
    key = payload_key(doc)
    if key == "ghost":
        vals = [_num(v) for v in _list(doc["ghost"], "ghost")]
        return GhostSeq(tuple(vals[:order]))
    if key == "euler":
        return ghost_from_euler(_sparse(doc["euler"]), order)
    if key == "cyclo":
        return ghost_from_cyclo(_sparse(doc["cyclo"]), order)
    if key == "residues":
        terms = []
        for t in _list(doc["residues"], "residues"):
            if not isinstance(t, list) or len(t) != 3:
                raise ParseError("each residue term is [alpha, m, c]")
            terms.append((_num(t[0]), int(_num(t[1])), _num(t[2])))
        return ghost_from_residues(ResidueData(terms), order)
    if key == "matrix":
        return -fix_from_matrix(_matrix(doc["matrix"]), order)
    if key == "quad":
        raise ParseError("quad payloads are only accepted by quad commands")
    return sigma_from_coeffs(to_series(doc, order))


def _matrix(obj):
    rows = _list(obj, "matrix")
    try:
        return matrix([[_num(v) for v in _list(r, "matrix row")] for r in rows])
    except DomainError as exc:
        raise ParseError(str(exc)) from exc


# -- output --------------------------------------------------------------------


def _plain(x):
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, (int, Fraction)):
        return str(x)
    if isinstance(x, QuadElem):
        return [str(x.a), str(x.b)]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    return x


def emit(obj, out_path: str | None) -> None:
    text = json.dumps(_plain(obj), sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    if out_path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _ghost_doc(s: GhostSeq) -> dict:
    return {"ghost": list(s.values), "order": s.order}


def _series_doc(a: TruncSeries) -> dict:
    return {"coeffs": list(a.coeffs), "order": a.order}


# -- commands ------------------------------------------------------------------


def cmd_ghost(args) -> int:
    doc = read_doc(args.input)
    emit(_ghost_doc(to_ghost(doc, doc_order(doc, args.order))), args.output)
    return EXIT_OK


def cmd_euler(args) -> int:
    doc = read_doc(args.input)
    order = doc_order(doc, args.order)
    if payload_key(doc) == "coeffs":
        a = to_series(doc, order)
        f, order = euler_from_coeffs(a), a.order
    else:
        s = to_ghost(doc, order)
        f, order = euler_from_ghost(s), s.order
    integral = all(v.denominator == 1 for v in f.values())
    emit({"euler": f, "order": order, "integral": integral}, args.output)
    return EXIT_OK


def cmd_invert(args) -> int:
    doc = read_doc(args.input)
    emit(_series_doc(to_series(doc, doc_order(doc, args.order))), args.output)
    return EXIT_OK


def _primes_arg(text: str | None) -> list[int]:
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise ParseError(f"bad prime list {text!r}") from exc


def cmd_check(args) -> int:
    doc = read_doc(args.input)
    order = doc_order(doc, args.order)
    if args.kind in ("ideal-dold", "norm-tower"):
        if payload_key(doc) != "quad":
            raise ParseError(f"check {args.kind} needs a quad document")
        D, s = quad_payload(doc)
        if args.D is not None and args.D != D:
            raise ParseError(f"--D {args.D} disagrees with document D = {D}")
        if args.kind == "ideal-dold":
            report = ideal_dold_mobius_check(s, args.bound or s.order, D)
        else:
            if args.prime is None:
                raise ParseError("check norm-tower needs --prime")
            P = splitting_type(args.prime, D)
            ideals = [P, P.conjugate()] if P.kind == "split" else [P]
            reports = [norm_tower_check(s, I) for I in ideals]
            witnesses = tuple(w for r in reports for w in r.witnesses)
            report = type(reports[0])("norm-tower", s.order, witnesses)
        emit(report.as_dict(), args.output)
        return EXIT_OK if report.passed else EXIT_FAIL
    s = to_ghost(doc, order)
    if args.kind == "dold":
        report = check_dold_tower(s)
    elif args.kind == "dold-plus":
        report = check_dold_plus(s, primes=_primes_arg(args.primes) or None)
    elif args.kind == "gauss":
        report = check_gauss_mobius(s)
    else:
        report = check_s_integral(s, _primes_arg(args.bad_primes))
    emit(report.as_dict(), args.output)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_witt(args) -> int:
    left, right = read_doc(args.left), read_doc(args.right)
    order = min(doc_order(left, args.order), doc_order(right, args.order))
    if args.op == "mul":
        emit(_series_doc(witt_product_series(to_series(left, order), to_series(right, order))), args.output)
    else:
        emit(_ghost_doc(hadamard(to_ghost(left, order), to_ghost(right, order))), args.output)
    return EXIT_OK


def cmd_descend(args) -> int:
    if args.euler is not None:
        if args.D is None:
            raise ParseError("descend --euler needs --D")
        doc = {"quad": {"D": args.D, "euler": parse_json(args.euler)}, "order": args.order}
    else:
        doc = read_doc(args.input)
        if payload_key(doc) != "quad":
            raise ParseError("descend needs a quad document")
        doc.setdefault("order", args.order)
    D, s = quad_payload(doc)
    result = norm_descent(s, D)
    top = max(result.exponents, default=0)
    dense = {d: result.exponents.get(d, 0) for d in range(1, top + 1)}
    u = list(result.norms.values)
    # "ghost" repeats u so the output feeds straight back into other commands
    emit({"u": u, "ghost": u, "cZ": dense, "order": s.order, "indivisible": list(result.indivisible)}, args.output)
    return EXIT_OK


def cmd_zeta(args) -> int:
    order = args.order
    if args.system == "doubling":
        fix = doubling_fix(order)
    else:
        if args.matrix is not None:
            doc = {"matrix": parse_json(args.matrix)}
        else:
            doc = read_doc(args.input)
        order = doc_order(doc, order)
        if args.system == "sft":
            fix = fix_from_matrix(_matrix(doc.get("matrix")), order)
        elif args.system == "toral":
            fix = toral_fix(_matrix(doc.get("matrix")), order)
        else:
            if "ghost" in doc or "fix" in doc:
                fix = GhostSeq(tuple(_num(v) for v in _list(doc.get("fix", doc.get("ghost")), "fix")[:order]))
            else:
                raise ParseError("zeta fix needs a 'fix' array")
    zeta = zeta_from_fix(fix)
    emit({"coeffs": list(zeta.coeffs), "fix": list(fix.values), "order": zeta.order}, args.output)
    return EXIT_OK


def cmd_cyclo(args) -> int:
    doc = read_doc(args.input)
    order = doc_order(doc, args.order)
    if args.op == "build":
        if payload_key(doc) != "cyclo":
            raise ParseError("cyclo build needs a cyclo document")
        e = _sparse(doc["cyclo"])
        a = cyclo_product(e, order)
        emit(_series_doc(a), args.output)
        return EXIT_OK
    s = to_ghost(doc, order)
    period = args.period if args.period is not None else s.order
    try:
        e = cyclo_fit(s, period)
    except NotCyclotomic as exc:
        emit({"verdict": "not-cyclotomic", "reason": exc.reason, "index": exc.index}, args.output)
        return EXIT_FAIL
    emit({"cyclo": e, "order": s.order, "period": period}, args.output)
    return EXIT_OK


def cmd_recip(args) -> int:
    try:
        poly = [_num(x) for x in args.poly.split(",")]
    except AttributeError as exc:
        raise ParseError("--poly needs comma-separated coefficients") from exc
    s = power_sums_from_polynomial(poly, args.order)
    c, kind = necklace_exponents(s)
    emit({"ghost": list(s.values), "necklace": c, "realizability": kind, "order": s.order}, args.output)
    return EXIT_OK


def cmd_ladder(args) -> int:
    doc = read_doc(args.input)
    a = to_series(doc, doc_order(doc, args.order))
    check = progression_zero_check if args.progression else frobenius_ladder_check
    report = check(a, args.p, args.a)
    emit(report.as_dict(), args.output)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_classify(args) -> int:
    doc = read_doc(args.input)
    s = to_ghost(doc, doc_order(doc, args.order))
    out = {"class": classify(s), "order": s.order}
    try:
        r = rational_reconstruct(s)
        out["residues"] = [[a, m, c] for a, m, c in r.terms]
        if r.polynomial_part:
            out["polynomial_part"] = r.polynomial_part
    except NotRationalSpectrum as exc:
        out["residual"] = exc.residual
    except Indeterminate:
        pass
    emit(out, args.output)
    return EXIT_OK


# -- parser ----------------------------------------------------------------------


def default_order() -> int:
    raw = os.environ.get("WG_ORDER")
    if raw is None:
        return DEFAULT_ORDER
    try:
        return int(raw)
    except ValueError as exc:
        raise ParseError(f"WG_ORDER must be an integer, got {raw!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wittghost", description="Exact ghost-map calculus for Euler products.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--in", dest="input", default=None, help="input JSON file (default: stdin)")
    common.add_argument("--out", dest="output", default=None, help="output file (default: stdout)")
    common.add_argument("--order", type=int, default=None, help="truncation order (default: WG_ORDER or 64)")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("ghost", parents=[common], help="ghost sequence of a document").set_defaults(func=cmd_ghost)
    sub.add_parser("euler", parents=[common], help="Euler exponents of a document").set_defaults(func=cmd_euler)
    sub.add_parser("invert", parents=[common], help="power series of a document").set_defaults(func=cmd_invert)
    sub.add_parser("classify", parents=[common], help="rationality class of a ghost").set_defaults(func=cmd_classify)

    p = sub.add_parser("check", parents=[common], help="congruence checks")
    p.add_argument("kind", choices=["dold", "dold-plus", "gauss", "s-integral", "ideal-dold", "norm-tower"])
    p.add_argument("--bad-primes", default=None, help="comma-separated primes skipped by s-integral")
    p.add_argument("--primes", default=None, help="restrict dold-plus to these primes")
    p.add_argument("--D", type=int, default=None)
    p.add_argument("--prime", type=int, default=None, help="rational prime for norm-tower")
    p.add_argument("--bound", type=int, default=None, help="ideal norm bound for ideal-dold")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("witt", parents=[common], help="Witt or Hadamard product of two documents")
    p.add_argument("op", choices=["mul", "hadamard"])
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_witt)

    p = sub.add_parser("descend", parents=[common], help="norm descent of a quadratic ghost")
    p.add_argument("--D", type=int, default=None)
    p.add_argument("--euler", default=None, help='inline exponents, e.g. \'{"2": [0, 1]}\'')
    p.set_defaults(func=cmd_descend)

    p = sub.add_parser("zeta", parents=[common], help="zeta function of a dynamical system")
    p.add_argument("system", choices=["sft", "toral", "doubling", "fix"])
    p.add_argument("--matrix", default=None, help="inline matrix JSON")
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("cyclo", parents=[common], help="cyclotomic fit or build")
    p.add_argument("op", choices=["fit", "build"])
    p.add_argument("--period", type=int, default=None)
    p.set_defaults(func=cmd_cyclo)

    p = sub.add_parser("recip", parents=[common], help="power sums and necklace exponents of a monic polynomial")
    p.add_argument("--poly", required=True, help="coefficients highest degree first, e.g. 1,-1,-1")
    p.set_defaults(func=cmd_recip)

    p = sub.add_parser("ladder", parents=[common], help="Frobenius ladder check")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--progression", action="store_true", help="check progression zeros instead")
    p.set_defaults(func=cmd_ladder)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        args.order = check_order(args.order if args.order is not None else default_order())
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except Unsupported as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (DomainError, Indeterminate, InvariantViolation) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
