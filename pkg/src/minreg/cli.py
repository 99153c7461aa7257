"""Command line front end.

Subcommands answer the questions the library computes: Gotzmann numbers,
least function and scheme regularities, minimal Hilbert functions, class
membership, minimal Castelnuovo-Mumford regularity (global, at a fixed
function regularity, for a fixed Hilbert function, or inside a fixed
projective space), witness construction, certificate verification, and
the recursion trace table.

Every subcommand takes --json for a machine-readable document with a
top-level "schema" field.  Exit codes: 0 success, 1 domain errors (an
empty class, a linear variety, an ambient space that is too small, a
failed verification), 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .constructions import (certificate_from_dict, verify_witness,
                            witness_min_reg)
from .errors import InputError, MinregError
from .functions import (min_function_regularity, min_scheme_regularity,
                        minimal_function, minimal_function_exact,
                        minimal_scheme_function, parse_hilbert_function)
from .polynomials import parse_polynomial
from .regularity import (min_regularity, min_regularity_at,
                         min_regularity_in_space, min_regularity_of_function)

SCHEMA = 1


def _json_mode(args) -> bool:
    return bool(getattr(args, "json_global", False)
                or getattr(args, "json_sub", False))


def _emit(args, payload: dict, lines):
    if _json_mode(args):
        payload = dict(payload)
        payload["schema"] = SCHEMA
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _trace_payload(report) -> list:
    rows = []
    for row in report.rows:
        rows.append({
            "polynomial": str(row.polynomial),
            "gotzmann_number": row.gotzmann_number,
            "rho": row.min_rho,
            "rho_scheme": row.min_scheme_rho,
            "rho_used": row.rho_used,
            "rho_fit": row.rho_fit,
            "regularity": row.regularity,
        })
    return rows


def cmd_gotzmann(args) -> int:
    p = parse_polynomial(args.polynomial)
    _emit(args, {"command": "gotzmann", "polynomial": str(p),
                 "gotzmann_number": p.gotzmann_number},
          [str(p.gotzmann_number)])
    return 0


def cmd_rho(args) -> int:
    p = parse_polynomial(args.polynomial)
    _emit(args, {"command": "rho", "polynomial": str(p),
                 "rho": min_function_regularity(p)},
          [str(min_function_regularity(p))])
    return 0


def cmd_rho_bar(args) -> int:
    p = parse_polynomial(args.polynomial)
    _emit(args, {"command": "rho-bar", "polynomial": str(p),
                 "rho_bar": min_scheme_regularity(p)},
          [str(min_scheme_regularity(p))])
    return 0


def cmd_minfn(args) -> int:
    p = parse_polynomial(args.polynomial)
    rho = args.rho if args.rho is not None else min_scheme_regularity(p)
    u = (minimal_function_exact(p, rho) if args.g
         else minimal_function(p, rho))
    _emit(args, {"command": "minfn", "polynomial": str(p), "rho": rho,
                 "exact": bool(args.g), "function": str(u)},
          [str(u)])
    return 0


def cmd_exists(args) -> int:
    p = parse_polynomial(args.polynomial)
    u = minimal_scheme_function(p, args.rho)
    payload = {"command": "exists", "polynomial": str(p), "rho": args.rho,
               "exists": u is not None}
    if u is None:
        _emit(args, payload, ["empty"])
        return 1
    payload["minimum"] = str(u)
    _emit(args, payload, [str(u)])
    return 0


def cmd_minreg(args) -> int:
    if args.hf is not None:
        if args.polynomial is not None or args.rho is not None \
                or args.ambient is not None:
            raise InputError("--hf stands alone; it already carries the"
                             " polynomial as its tail")
        u = parse_hilbert_function(args.hf)
        report = min_regularity_of_function(u)
    elif args.polynomial is None:
        raise InputError("give a polynomial or --hf")
    elif args.rho is not None and args.ambient is not None:
        raise InputError("--rho and --ambient are mutually exclusive")
    else:
        p = parse_polynomial(args.polynomial)
        if args.rho is not None:
            report = min_regularity_at(p, args.rho)
        elif args.ambient is not None:
            report = min_regularity_in_space(p, args.ambient)
        else:
            report = min_regularity(p)
    _emit(args, {"command": "minreg", "polynomial": str(report.polynomial),
                 "regularity": report.regularity,
                 "rho_used": report.rho_used,
                 "trace": _trace_payload(report)},
          [str(report.regularity)])
    return 0


def cmd_witness(args) -> int:
    if args.hf is not None:
        u = parse_hilbert_function(args.hf)
        if u.tail is None:
            raise InputError("a witness needs a function with a"
                             " polynomial tail: %s" % u)
        if args.polynomial is not None:
            p = parse_polynomial(args.polynomial)
            if u.tail != p:
                raise InputError("the tail of %s is not %s" % (u, p))
    elif args.polynomial is not None:
        p = parse_polynomial(args.polynomial)
        u = minimal_scheme_function(p, min_scheme_regularity(p))
    else:
        raise InputError("give a polynomial or --hf")
    cert = witness_min_reg(u)
    payload = dict(cert.as_dict())
    payload["schema"] = SCHEMA
    document = json.dumps(payload, indent=2, sort_keys=True)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(document + "\n")
        if not _json_mode(args):
            print("wrote a regularity-%d certificate to %s"
                  % (cert.regularity, args.output))
        else:
            print(document)
    else:
        print(document)
    return 0


def cmd_verify(args) -> int:
    with open(args.certificate, "r", encoding="utf-8") as handle:
        try:
            payload = json.load(handle)
        except json.JSONDecodeError as exc:
            raise InputError("%s is not JSON: %s"
                             % (args.certificate, exc)) from None
    cert = certificate_from_dict(payload)
    report = verify_witness(cert)
    lines = ["%s: %s" % (name, "ok" if passed else "FAILED")
             for name, passed in report.checks]
    lines.append("verification %s" % ("passed" if report.ok else "failed"))
    _emit(args, {"command": "verify", "verified": report.ok,
                 "checks": {name: passed for name, passed in report.checks},
                 "regularity": cert.regularity,
                 "hilbert_function": str(cert.hilbert_function)},
          lines)
    return 0 if report.ok else 1


def cmd_table(args) -> int:
    p = parse_polynomial(args.polynomial)
    report = (min_regularity_at(p, args.rho) if args.rho is not None
              else min_regularity(p))
    _emit(args, {"command": "table", "polynomial": str(p),
                 "regularity": report.regularity,
                 "trace": _trace_payload(report)},
          report.table_lines())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minreg",
        description="Minimal Castelnuovo-Mumford regularity of projective"
                    " schemes with a given Hilbert polynomial, with"
                    " strongly stable witness ideals.")
    parser.add_argument("--json", dest="json_global", action="store_true",
                        help="emit machine-readable JSON")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", dest="json_sub", action="store_true",
                        help="emit machine-readable JSON")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    s = sub.add_parser("gotzmann", parents=[common],
                       help="Gotzmann number of a polynomial")
    s.add_argument("polynomial")
    s.set_defaults(handler=cmd_gotzmann)

    s = sub.add_parser("rho", parents=[common],
                       help="least regularity of an admissible function"
                            " with the given tail")
    s.add_argument("polynomial")
    s.set_defaults(handler=cmd_rho)

    s = sub.add_parser("rho-bar", parents=[common],
                       help="least regularity of a scheme Hilbert function"
                            " with the given tail")
    s.add_argument("polynomial")
    s.set_defaults(handler=cmd_rho_bar)

    s = sub.add_parser("minfn", parents=[common],
                       help="pointwise minimal function with regularity"
                            " at most rho (exactly rho with --g)")
    s.add_argument("polynomial")
    s.add_argument("--rho", type=int, default=None,
                   help="target regularity (default: the least scheme one)")
    s.add_argument("--g", action="store_true",
                   help="force regularity exactly rho by bumping at rho-1")
    s.set_defaults(handler=cmd_minfn)

    s = sub.add_parser("exists", parents=[common],
                       help="is there a scheme function with this tail and"
                            " regularity exactly rho?")
    s.add_argument("polynomial")
    s.add_argument("--rho", type=int, required=True)
    s.set_defaults(handler=cmd_exists)

    s = sub.add_parser("minreg", parents=[common],
                       help="minimal regularity: global, at --rho, for"
                            " --hf, or inside P^n with --ambient")
    s.add_argument("polynomial", nargs="?", default=None)
    s.add_argument("--rho", type=int, default=None)
    s.add_argument("--hf", default=None,
                   help="Hilbert function like '1,5,11 ; 15z-24'")
    s.add_argument("--ambient", type=int, default=None,
                   help="dimension n of the ambient projective space")
    s.set_defaults(handler=cmd_minreg)

    s = sub.add_parser("witness", parents=[common],
                       help="construct and verify a minimal witness ideal,"
                            " emitted as a certificate document")
    s.add_argument("polynomial", nargs="?", default=None)
    s.add_argument("--hf", default=None,
                   help="target Hilbert function (default: the pointwise"
                        " minimum over all schemes with the polynomial)")
    s.add_argument("-o", "--output", default=None,
                   help="write the certificate to this file")
    s.set_defaults(handler=cmd_witness)

    s = sub.add_parser("verify", parents=[common],
                       help="independently check a certificate document")
    s.add_argument("certificate")
    s.set_defaults(handler=cmd_verify)

    s = sub.add_parser("table", parents=[common],
                       help="print the recursion trace table")
    s.add_argument("polynomial")
    s.add_argument("--rho", type=int, default=None)
    s.set_defaults(handler=cmd_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except MinregError as exc:
        if _json_mode(args):
            print(json.dumps({"schema": SCHEMA,
                              "error": {"code": type(exc).__name__,
                                        "message": str(exc)}},
                             indent=2, sort_keys=True))
        else:
            print("error: %s" % exc, file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
