"""Batch command-line front end.

Verbs: check-chordal, gb, count, color, cert, verify-cert, verify-gb,
oracle-count.  JSON output (the stable interface) or a loose text form.
Exit codes: 0 success/true, 1 false or infeasible-as-answer, 2 usage error,
3 computation error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from .certificates import (
    admissible_degrees,
    certificate_from_json_dict,
    certificate_to_json_dict,
    lift_certificate,
    search_certificate,
    verify_certificate,
)
from .chordal import (
    build_groebner_basis,
    count_colorings_chordal,
    extract_coloring,
    quotient_dimension,
)
from .fields import QQ, PrimeField, is_prime
from .graphs import NotChordalError, ParseError, load_graph, perfect_elimination_order
from .ideals import build_ideal, field_from_json, field_to_json, graph_from_json, graph_to_json
from .oracle import (
    OracleBudgetExceeded,
    OracleTooLarge,
    brute_force_colorings,
    buchberger_criterion,
)
from .poly import TermOrder, normal_form, parse_poly, render

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_COMPUTE = 3

JSON_VERSION = 1


class UsageError(Exception):
    pass


def _emit(args, payload: dict, text: str):
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _load(args):
    try:
        return load_graph(args.graph, args.input_format)
    except OSError as exc:
        raise UsageError(f"cannot read {args.graph}: {exc}") from exc
    except ParseError as exc:
        raise UsageError(f"{args.graph}: {exc}") from exc


def _field(args):
    if args.p == "rational":
        return QQ
    try:
        p = int(args.p)
    except ValueError:
        raise UsageError(f"--p must be a prime or 'rational', got {args.p!r}") from None
    if not is_prime(p):
        raise UsageError(f"--p must be prime, got {p}")
    return PrimeField(p)


def _check_command(args, field):
    if args.k < 2:
        raise UsageError("--k must be at least 2")
    if field.char != 0 and math.gcd(field.char, args.k) != 1:
        raise UsageError(f"field characteristic {field.char} and k={args.k} must be coprime")


def _read_json_document(path: str) -> dict:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON: {exc}") from exc


# --- verbs -------------------------------------------------------------------

def cmd_check_chordal(args) -> int:
    g = _load(args)
    peo = perfect_elimination_order(g)
    payload = {
        "version": JSON_VERSION,
        "kind": "chordality",
        "graph": graph_to_json(g),
        "chordal": peo is not None,
        "elimination": None
        if peo is None
        else [{"vertex": r.vertex, "clique": sorted(r.clique)} for r in peo],
    }
    _emit(args, payload, "chordal" if peo is not None else "not chordal")
    return EXIT_OK if peo is not None else EXIT_NEGATIVE


def basis_result_to_json(result, g, k, field) -> dict:
    payload = {
        "version": JSON_VERSION,
        "kind": "groebner_basis",
        "field": field_to_json(field),
        "k": k,
        "graph": graph_to_json(g),
        "chordal": result is not None,
    }
    if result is None:
        payload.update(infeasible=None, basis=None, order=None, elimination=None,
                       dimension=None, coloring=None, witness=None)
        return payload
    if result.infeasible:
        payload.update(
            infeasible=True,
            basis=["1"],
            order=None,
            elimination=None,
            dimension=0,
            coloring=None,
            witness={"vertex": result.witness.vertex, "clique": sorted(result.witness.clique)},
        )
        return payload
    basis = result.basis
    payload.update(
        infeasible=False,
        basis=[render(p, basis.order) for p in basis.polys],
        order={"kind": basis.order.kind,
               "ranks": {str(v): r for v, r in sorted(basis.order.ranks.items())}},
        elimination=[{"vertex": r.vertex, "clique": sorted(r.clique)} for r in basis.peo],
        dimension=quotient_dimension(result, k),
        coloring={str(v): c for v, c in sorted(extract_coloring(result, k).items())},
        witness=None,
    )
    return payload


def cmd_gb(args) -> int:
    field = _field(args)
    _check_command(args, field)
    g = _load(args)
    result = build_groebner_basis(g, args.k, field)
    payload = basis_result_to_json(result, g, args.k, field)
    if result is None:
        _emit(args, payload, "not chordal")
        return EXIT_NEGATIVE
    if args.oracle and not result.infeasible:
        if not buchberger_criterion(result.basis.polys, result.basis.order):
            print("oracle cross-check failed: S-pair criterion", file=sys.stderr)
            return EXIT_COMPUTE
    if result.infeasible:
        _emit(args, payload, f"infeasible: vertex {result.witness.vertex} has "
                             f"{len(result.witness.clique)} clique neighbors (k={args.k})")
        return EXIT_NEGATIVE
    text = "\n".join(
        [f"basis ({len(result.basis.polys)} polynomials):"]
        + [f"  {render(p, result.basis.order)}" for p in result.basis.polys]
        + [f"dimension: {payload['dimension']}"]
    )
    _emit(args, payload, text)
    return EXIT_OK


def cmd_count(args) -> int:
    _check_command(args, QQ)
    g = _load(args)
    try:
        n = count_colorings_chordal(g, args.k)
    except NotChordalError:
        _emit(args, {"version": JSON_VERSION, "kind": "count", "chordal": False,
                     "k": args.k, "colorings": None}, "not chordal")
        return EXIT_NEGATIVE
    if args.oracle:
        check = brute_force_colorings(g, args.k).count
        if check != n:
            print(f"oracle cross-check failed: {n} != brute-force {check}", file=sys.stderr)
            return EXIT_COMPUTE
    _emit(args, {"version": JSON_VERSION, "kind": "count", "chordal": True,
                 "k": args.k, "colorings": n}, str(n))
    return EXIT_OK


def cmd_oracle_count(args) -> int:
    _check_command(args, QQ)
    g = _load(args)
    n = brute_force_colorings(g, args.k).count
    _emit(args, {"version": JSON_VERSION, "kind": "count", "method": "brute-force",
                 "k": args.k, "colorings": n}, str(n))
    return EXIT_OK


def cmd_color(args) -> int:
    _check_command(args, QQ)
    g = _load(args)
    result = build_groebner_basis(g, args.k, QQ)
    if result is None:
        _emit(args, {"version": JSON_VERSION, "kind": "coloring", "k": args.k,
                     "chordal": False, "coloring": None}, "not chordal")
        return EXIT_NEGATIVE
    coloring = extract_coloring(result, args.k)
    payload = {
        "version": JSON_VERSION,
        "kind": "coloring",
        "k": args.k,
        "chordal": True,
        "coloring": None if coloring is None else {str(v): c for v, c in sorted(coloring.items())},
    }
    if coloring is None:
        _emit(args, payload, "no coloring")
        return EXIT_NEGATIVE
    _emit(args, payload, " ".join(f"{v}={coloring[v]}" for v in g.vertices))
    return EXIT_OK


def cmd_cert(args) -> int:
    field = _field(args)
    if not isinstance(field, PrimeField):
        raise UsageError("cert requires a prime field (--p P)")
    _check_command(args, field)
    g = _load(args)
    d_max = args.d_max if args.d_max is not None else 3 * args.k + 1
    cert = search_certificate(
        g, args.k, field, d_max, progress=lambda line: print(line, file=sys.stderr)
    )
    if cert is None:
        payload = {
            "version": JSON_VERSION,
            "kind": "certificate_search",
            "field": field_to_json(field),
            "k": args.k,
            "graph": graph_to_json(g),
            "certificate": None,
            "d_max": d_max,
            "infeasible_degrees": admissible_degrees(args.k, d_max),
        }
        _emit(args, payload, f"no certificate up to degree {d_max} "
                             "(graph may be colorable, or the bound too small)")
        return EXIT_NEGATIVE
    if args.lift:
        cert = lift_certificate(cert, g, args.k)
    payload = certificate_to_json_dict(cert, g)
    _emit(args, payload, f"certificate of degree {cert.degree} "
                         f"(lower degrees infeasible: {list(cert.infeasible_degrees) or 'none'})")
    return EXIT_OK


def cmd_verify_cert(args) -> int:
    data = _read_json_document(args.document)
    try:
        cert, g = certificate_from_json_dict(data)
        ideal = build_ideal(g, cert.k, cert.field)
        ok = verify_certificate(cert, ideal)
    except (ValueError, KeyError) as exc:
        raise UsageError(f"malformed certificate document: {exc}") from exc
    _emit(args, {"version": JSON_VERSION, "kind": "verification", "valid": ok},
          "valid" if ok else "invalid")
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_verify_gb(args) -> int:
    data = _read_json_document(args.document)
    try:
        if data.get("kind") != "groebner_basis":
            raise ValueError("not a groebner_basis document")
        field = field_from_json(data["field"])
        k = int(data["k"])
        g = graph_from_json(data["graph"])
        if not data.get("chordal"):
            raise ValueError("document carries no basis (graph was not chordal)")
        polys = [parse_poly(s, field) for s in data["basis"]]
        if data.get("infeasible"):
            order = TermOrder.natural(g.vertices or (1,), "lex")
        else:
            ranks = {int(v): int(r) for v, r in data["order"]["ranks"].items()}
            order = TermOrder(data["order"]["kind"], ranks)
    except (ValueError, KeyError) as exc:
        raise UsageError(f"malformed basis document: {exc}") from exc
    ok = buchberger_criterion(polys, order)
    if ok:
        ideal = build_ideal(g, k, field)
        for gen in ideal.generators():
            _, r = normal_form(gen, polys, order)
            if not r.is_zero:
                ok = False
                break
    _emit(args, {"version": JSON_VERSION, "kind": "verification", "valid": ok},
          "valid" if ok else "invalid")
    return EXIT_OK if ok else EXIT_NEGATIVE


# --- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chromideal",
        description="Exact algebra for graph k-coloring: chordal Groebner bases, "
                    "coloring counts, and non-colorability certificates over GF(p).",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, graph=True, needs_k=True, field_default=None):
        if graph:
            p.add_argument("graph", help="graph file (DIMACS .col or 'u v' edge list)")
            p.add_argument("--input-format", choices=["auto", "dimacs", "edges"],
                           default="auto", help="graph file format (default: sniffed)")
        if needs_k:
            p.add_argument("--k", type=int, required=True, help="number of colors (>= 2)")
        if field_default is not None:
            p.add_argument("--p", default=field_default,
                           help="prime field modulus, or 'rational'")
        p.add_argument("--format", choices=["json", "text"], default="json",
                       help="output format (json is the stable interface)")
        p.add_argument("--seed", type=int, default=0,
                       help="reserved for sampling extensions; current verbs are deterministic")
        p.add_argument("--threads", type=int,
                       default=int(os.environ.get("CHROMIDEAL_THREADS", "1")),
                       help="worker threads (results never depend on this; "
                            "the current implementation is serial)")

    p = sub.add_parser("check-chordal", help="test chordality, print an elimination order")
    common(p, needs_k=False)
    p.set_defaults(func=cmd_check_chordal)

    p = sub.add_parser("gb", help="Groebner basis of the coloring ideal (chordal graphs)")
    common(p, field_default="rational")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check the basis with the S-pair criterion")
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("count", help="number of proper k-colorings (chordal graphs)")
    common(p)
    p.add_argument("--oracle", action="store_true",
                   help="cross-check against brute-force enumeration")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("color", help="extract one proper k-coloring (chordal graphs)")
    common(p)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("cert", help="search a minimal-degree non-colorability certificate")
    common(p, field_default=None)
    p.add_argument("--p", required=True, help="prime field modulus")
    p.add_argument("--d-max", type=int, default=None,
                   help="degree search bound (default 3k+1)")
    p.add_argument("--lift", action="store_true",
                   help="also emit vertex coefficients for the full-ring identity")
    p.set_defaults(func=cmd_cert)

    p = sub.add_parser("verify-cert", help="check a certificate JSON document")
    p.add_argument("document", help="certificate JSON file, or - for stdin")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_verify_cert)

    p = sub.add_parser("verify-gb", help="check a Groebner-basis JSON document")
    p.add_argument("document", help="basis JSON file, or - for stdin")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_verify_gb)

    p = sub.add_parser("oracle-count", help="brute-force coloring count (any graph)")
    common(p)
    p.set_defaults(func=cmd_oracle_count)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OracleTooLarge, OracleBudgetExceeded) as exc:
        print(f"computation error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry():
    sys.exit(main())
