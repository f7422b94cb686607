"""Command-line surface.

Every library operation is reachable from here with machine-readable output.
Exit codes: 0 success, 1 usage error, 2 domain error, 3 inconclusive (a
search exhausted its bound without either a witness or a disproof).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import elliptic, survey
from .elliptic import make_curve
from .multiquad import (
    TriquadField,
    index4_witness_general,
    is_primitive,
    parse_element,
    pretty_print,
    subfield_index,
)
from .numtheory import DomainError, parse_rational
from .witness import (
    UnsupportedTargetError,
    certificate_to_json,
    load_certificate,
    mindeg2_decide,
    verify_certificate_json,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_INCONCLUSIVE = 3


def _parse_field(text: str) -> TriquadField:
    parts = text.split(",")
    if len(parts) != 3:
        raise DomainError(f"field must be three comma-separated integers, got {text!r}")
    try:
        gens = [int(p.strip()) for p in parts]
    except ValueError:
        raise DomainError(f"non-integer field generator in {text!r}")
    return TriquadField(*gens)


def _parse_triple(text: str) -> tuple[Fraction, int, int]:
    """Curve data "a,A,B" with a rational and A, B integers."""
    parts = text.split(",")
    if len(parts) != 3:
        raise DomainError(f"expected a,A,B, got {text!r}")
    a = parse_rational(parts[0].strip())
    try:
        big_a, big_b = int(parts[1]), int(parts[2])
    except ValueError:
        raise DomainError(f"A and B must be integers in {text!r}")
    return a, big_a, big_b


def poly_text(coeffs) -> str:
    """Human form of a polynomial, highest power first, constant-first input."""
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = Fraction(coeffs[i])
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if i == 0:
            body = str(c)
        else:
            power = "x" if i == 1 else f"x^{i}"
            if c == 1:
                body = power
            elif c.denominator == 1:
                body = f"{c}{power}"
            else:
                body = f"({c}){power}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first_body = terms[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def _emit(data: dict, text_lines: list[str], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _check_format(args, allowed=("text", "json")) -> None:
    if args.format not in allowed:
        raise _UsageError(
            f"--format {args.format} is not available for this subcommand"
        )


class _UsageError(Exception):
    pass


# ---- subcommands ------------------------------------------------------------


def cmd_mindeg(args) -> int:
    _check_format(args)
    field = _parse_field(args.field)
    v = parse_element(field, args.element)
    if v.is_rational():
        _emit(
            {"min_deg": 0, "element": pretty_print(v)},
            [f"min deg = 0 (rational element {pretty_print(v)})"],
            args.format,
        )
        return EXIT_OK
    if is_primitive(v):
        _emit(
            {"min_deg": 1, "element": pretty_print(v)},
            [f"min deg = 1 (element is primitive: take alpha = {pretty_print(v)}, f = x)"],
            args.format,
        )
        return EXIT_OK
    if subfield_index(v) == 4:
        cert = index4_witness_general(field, v)
        data = certificate_to_json(cert, source="index-4")
        data["min_deg"] = cert.degree
        _emit(
            data,
            [
                f"min deg = {cert.degree}",
                f"alpha = {pretty_print(cert.alpha)}",
                f"f = {poly_text(cert.poly_coeffs)}",
                f"verified = {cert.verified}",
            ],
            args.format,
        )
        return EXIT_OK
    # index 2: curve-backed decision
    outcome = mindeg2_decide(field, v, args.height_bound)
    if outcome.found:
        cert = outcome.certificate
        data = certificate_to_json(cert, source=outcome.source, point=outcome.point)
        data["min_deg"] = cert.degree
        _emit(
            data,
            [
                f"min deg = {cert.degree}",
                f"alpha = {pretty_print(cert.alpha)}",
                f"f = {poly_text(cert.poly_coeffs)}",
                f"source = {outcome.source} at point ({outcome.point.x}, {outcome.point.y})",
                f"verified = {cert.verified}",
            ],
            args.format,
        )
        return EXIT_OK
    message = (
        f"inconclusive: no degree-2 witness up to height bound {outcome.height_bound}; "
        f"torsion {outcome.torsion.kind}; consistent with the associated elliptic "
        "curve having rank 0, in which case the minimal degree exceeds 2"
    )
    _emit(
        {
            "min_deg": None,
            "inconclusive": True,
            "height_bound": outcome.height_bound,
            "torsion": outcome.torsion.kind,
            "message": message,
        },
        [message],
        args.format,
    )
    return EXIT_INCONCLUSIVE


def cmd_witness(args) -> int:
    _check_format(args)
    field = _parse_field(args.field)
    v = parse_element(field, args.element)
    if v.is_rational() or is_primitive(v):
        raise DomainError(
            "element needs no curve or radical witness; use the mindeg subcommand"
        )
    if subfield_index(v) == 4:
        cert = index4_witness_general(field, v)
        data = certificate_to_json(cert, source="index-4")
    else:
        outcome = mindeg2_decide(field, v, args.height_bound)
        if not outcome.found:
            print(
                f"inconclusive: no degree-2 witness up to height bound "
                f"{outcome.height_bound}; torsion {outcome.torsion.kind}"
            )
            return EXIT_INCONCLUSIVE
        cert = outcome.certificate
        data = certificate_to_json(cert, source=outcome.source, point=outcome.point)
    if args.output:
        with open(args.output, "w") as fh:
            json.dump(data, fh, indent=2, sort_keys=True)
            fh.write("\n")
        print(f"certificate written to {args.output}")
    else:
        print(json.dumps(data, indent=2, sort_keys=True))
    return EXIT_OK


def cmd_curve(args) -> int:
    _check_format(args)
    a, big_a, big_b = _parse_triple(args.curve)
    curve = make_curve(a, big_a, big_b)
    data = elliptic.curve_to_json(curve)
    data["discriminant"] = str(curve.discriminant())
    _emit(
        data,
        [
            f"Y^2 = X(X - {curve.r})(X - ({curve.s}))",
            f"c2 = {curve.c2}, c4 = {curve.c4}",
            f"discriminant = {curve.discriminant()}",
        ],
        args.format,
    )
    return EXIT_OK


def cmd_torsion(args) -> int:
    _check_format(args)
    a, big_a, big_b = _parse_triple(args.curve)
    curve = make_curve(a, big_a, big_b)
    torsion = elliptic.torsion_class(curve)
    three = elliptic.three_torsion_points(curve)
    data = {
        "torsion": torsion.kind,
        "certificate": list(torsion.certificate) if torsion.certificate else None,
        "three_torsion": [elliptic.point_to_json(p) for p in three],
    }
    lines = [f"torsion = {torsion.kind}"]
    if torsion.certificate:
        lines.append(f"certificate (p, q) = {torsion.certificate}")
    for p in three:
        lines.append(f"3-torsion point ({p.x}, {p.y})")
    _emit(data, lines, args.format)
    return EXIT_OK


def cmd_search(args) -> int:
    _check_format(args)
    a, big_a, big_b = _parse_triple(args.curve)
    curve = make_curve(a, big_a, big_b)
    outcome = elliptic.point_search(curve, args.height_bound)
    if outcome.found:
        p = outcome.point
        _emit(
            {"found": True, "point": elliptic.point_to_json(p)},
            [f"found point ({p.x}, {p.y})"],
            args.format,
        )
        return EXIT_OK
    _emit(
        {"found": False, "height_bound": outcome.height_bound},
        [f"no non-2-torsion point up to height bound {outcome.height_bound}"],
        args.format,
    )
    return EXIT_INCONCLUSIVE


def cmd_verify(args) -> int:
    data = load_certificate(args.certificate)
    if verify_certificate_json(data):
        print("certificate verifies")
        return EXIT_OK
    print("verification failure: certificate does not check out", file=sys.stderr)
    return EXIT_DOMAIN


def cmd_selmer(args) -> int:
    print(survey.selmer_constant(args.terms, args.digits))
    return EXIT_OK


def _emit_rows(rows, summary: dict | None, fmt: str) -> None:
    if fmt == "csv":
        sys.stdout.write(survey.rows_to_csv(rows))
        if summary is not None:
            sys.stdout.write("# summary: " + json.dumps(summary, sort_keys=True) + "\n")
        return
    if fmt == "json":
        data = {
            "rows": [
                {
                    "parameter": r.parameter,
                    "torsion": r.torsion,
                    "outcome": r.outcome,
                    "point": elliptic.point_to_json(r.point) if r.point else None,
                    "witness_id": survey.witness_id(r.witness),
                }
                for r in rows
            ]
        }
        if summary is not None:
            data["summary"] = summary
        print(json.dumps(data, indent=2, sort_keys=True))
        return
    for r in rows:
        point = f" point=({r.point.x},{r.point.y})" if r.point else ""
        wid = f" witness={survey.witness_id(r.witness)}" if r.witness else ""
        torsion = f" {r.torsion}" if r.torsion else ""
        print(f"{r.parameter}:{torsion} {r.outcome}{point}{wid}")
    if summary is not None:
        for key in sorted(summary):
            print(f"summary.{key} = {summary[key]}")


def cmd_survey_twists(args) -> int:
    a, big_a, big_b = _parse_triple(args.base)
    config = survey.TwistScanConfig(
        a=a,
        big_a=big_a,
        big_b=big_b,
        gamma_max=args.gamma_max,
        height_bound=args.height_bound,
        c_gen=args.c_gen,
    )
    report = survey.twist_scan(config)
    _emit_rows(report.rows, report.summary, args.format)
    return EXIT_OK


def cmd_survey_family55(args) -> int:
    b_values = survey.squarefree_family_range(args.b_min, args.b_max, args.offset)
    mn = None
    ab = (Fraction(3), Fraction(2))
    if args.mn:
        parts = args.mn.split(",")
        if len(parts) != 2:
            raise DomainError(f"--mn expects m,n, got {args.mn!r}")
        mn = (int(parts[0]), int(parts[1]))
    elif args.ab:
        parts = args.ab.split(",")
        if len(parts) != 2:
            raise DomainError(f"--ab expects a,b, got {args.ab!r}")
        ab = (parse_rational(parts[0]), parse_rational(parts[1]))
    rows = survey.family55_scan(b_values, offset=args.offset, ab=ab, mn=mn, c_gen=args.c_gen)
    _emit_rows(rows, {"rows": len(rows), "witness_found": len(rows)}, args.format)
    return EXIT_OK


def cmd_survey_conjecture(args) -> int:
    candidates = None
    if args.candidates:
        candidates = [parse_rational(c) for c in args.candidates.split(",")]
    if args.seed_order is not None:
        candidates = candidates or survey.default_candidates()
        random.Random(args.seed_order).shuffle(candidates)
    rows = survey.conjecture_scan(
        args.a_max, args.b_max, candidates, height_bound=args.height_bound
    )
    evidence = sum(1 for r in rows if r.outcome.startswith("evidence"))
    _emit_rows(rows, {"rows": len(rows), "evidence": evidence}, args.format)
    return EXIT_OK


# ---- parser and dispatch ----------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _add_common(p, height=True):
    p.add_argument(
        "--format", choices=("text", "json", "csv"), default="text",
        help="output format (default text)",
    )
    if height:
        p.add_argument(
            "--height-bound", type=int, default=10000, metavar="H",
            help="point search height bound (default 10000)",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mindeg", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mindeg", help="minimal degree of an element, with certificate")
    p.add_argument("field", help="three comma-separated square-free integers, e.g. 2,3,5")
    p.add_argument("element", help='element text, e.g. "sqrt(2)+2*sqrt(3)"')
    _add_common(p)
    p.set_defaults(func=cmd_mindeg)

    p = sub.add_parser("witness", help="emit a certificate as JSON")
    p.add_argument("field")
    p.add_argument("element")
    p.add_argument("--output", "-o", help="write the certificate to a file")
    _add_common(p)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("curve", help="the curve attached to (a, A, B)")
    p.add_argument("curve", help="a,A,B with a rational")
    _add_common(p, height=False)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("torsion", help="torsion classification of the (a, A, B) curve")
    p.add_argument("curve", help="a,A,B with a rational")
    _add_common(p, height=False)
    p.set_defaults(func=cmd_torsion)

    p = sub.add_parser("search", help="bounded rational point search")
    p.add_argument("curve", help="a,A,B with a rational")
    _add_common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="re-check a serialized certificate")
    p.add_argument("certificate", help="path to a certificate JSON file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("selmer-constant", help="partial product reference constant")
    p.add_argument("terms", type=int)
    p.add_argument("--digits", type=int, default=15)
    p.set_defaults(func=cmd_selmer)

    p = sub.add_parser("survey", help="batch scans")
    ssub = p.add_subparsers(dest="scan", required=True)

    q = ssub.add_parser("twists", help="quadratic twist scan of a base curve")
    q.add_argument("--base", required=True, help="a,A,B of the base curve")
    q.add_argument("--gamma-max", type=int, required=True)
    q.add_argument("--c-gen", type=int, default=None, help="fixed third generator")
    _add_common(q)
    q.set_defaults(func=cmd_survey_twists)

    q = ssub.add_parser("family55", help="explicit-point family A = B - offset")
    q.add_argument("--b-min", type=int, default=3)
    q.add_argument("--b-max", type=int, default=100)
    q.add_argument("--offset", type=int, default=2)
    q.add_argument("--ab", default=None, help="fixed a,b (default 3,2)")
    q.add_argument("--mn", default=None, help="derive (a,b) per row from m,n")
    q.add_argument("--c-gen", type=int, default=None)
    _add_common(q, height=False)
    q.set_defaults(func=cmd_survey_family55)

    q = ssub.add_parser("conjecture", help="evidence scan over square-free pairs")
    q.add_argument("--a-max", type=int, required=True)
    q.add_argument("--b-max", type=int, required=True)
    q.add_argument("--candidates", default=None, help="comma-separated rationals")
    q.add_argument("--seed-order", type=int, default=None,
                   help="deterministically shuffle the candidate order")
    _add_common(q)
    q.set_defaults(func=cmd_survey_conjecture)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnsupportedTargetError as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
