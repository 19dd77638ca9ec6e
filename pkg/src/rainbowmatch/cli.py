"""Command-line surface.

Commands: solve, check, gen, certify, search, export-dot.  Exit codes:

    0   success (certificate or report on stdout)
    1   a supplied certificate failed verification
    2   hypothesis failure (a k-union is too small)
    3   violation report (falsification channel; never expected)
    64  unreadable or unparseable input, or bad command usage
    65  parameter mismatch (sizes, ranges, emptiness bound)
    66  malformed certificate file

The environment variable RAINBOW_SEED overrides --seed wherever a seed is
taken.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .core import EdgeFamily
from .generators import drisko_family, sharpness_family, staircase_family
from .network import BoundExceeded, build_network
from .regiment import check_structure_lemmas, verify_regimentation
from .search import conjecture_search
from .serialize import (CertificateError, ParseError, dumps_canonical,
                        family_dumps, family_to_json, load_instance,
                        matching_certificate, matching_from_certificate,
                        network_dot, regimentation_from_certificate)
from .solver import HypothesisFailure, ViolationReport, solve_main

EXIT_OK = 0
EXIT_INVALID_CERT = 1
EXIT_HYPOTHESIS = 2
EXIT_VIOLATION = 3
EXIT_PARSE = 64
EXIT_PARAMS = 65
EXIT_MALFORMED_CERT = 66


class _Parser(argparse.ArgumentParser):
    # flag-level mistakes land in the same bucket as unreadable input
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def _load_family(path: str) -> EdgeFamily:
    loaded = load_instance(_read(path))
    if not isinstance(loaded, EdgeFamily):
        raise ParseError(f"{path} does not hold a bipartite instance")
    return loaded


def _seed(args) -> int:
    env = os.environ.get("RAINBOW_SEED")
    if env is not None:
        return int(env)
    return args.seed


def _cmd_solve(args) -> int:
    fam = _load_family(args.input)
    trail: list = []
    try:
        outcome = solve_main(fam.graph, fam, args.k, args.n,
                             mode=args.mode, trail=trail)
    except ValueError as exc:
        print(f"parameter mismatch: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    if isinstance(outcome, HypothesisFailure):
        print(dumps_canonical({"schema": "rainbow/1",
                               "hypothesis_failure": list(outcome.indices)}),
              end="")
        return EXIT_HYPOTHESIS
    if isinstance(outcome, ViolationReport):
        print(dumps_canonical({"schema": "rainbow/1",
                               "violation": outcome.detail,
                               "oracle_size": outcome.oracle_size}), end="")
        return EXIT_VIOLATION
    print(dumps_canonical(matching_certificate(outcome, trail)), end="")
    return EXIT_OK


def _cmd_check(args) -> int:
    from .solver import verify_arrow_statement
    fam = _load_family(args.input)
    try:
        verdict = verify_arrow_statement(args.m, args.k, args.n, args.q, fam)
    except ValueError as exc:
        print(f"parameter mismatch: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    print(verdict.status)
    detail: dict = {"schema": "rainbow/1", "status": verdict.status}
    if verdict.failing_indices is not None:
        detail["failing"] = list(verdict.failing_indices)
    if verdict.oracle_size is not None:
        detail["nu_r"] = verdict.oracle_size
    print(dumps_canonical(detail), end="")
    return EXIT_OK


def _cmd_gen(args) -> int:
    seed = _seed(args)
    if args.family == "sharpness":
        if args.n is None or args.k is None:
            raise ParseError("gen sharpness needs --n and --k")
        _, fam = sharpness_family(args.n, args.k)
    elif args.family == "drisko":
        if args.n is None:
            raise ParseError("gen drisko needs --n")
        fam = drisko_family(args.n, seed)
    else:
        if args.k is None:
            raise ParseError("gen staircase needs --k")
        fam = staircase_family(args.k, seed)
    print(family_dumps(fam), end="")
    return EXIT_OK


def _cmd_certify(args) -> int:
    loaded = load_instance(_read(args.input))
    if isinstance(loaded, EdgeFamily):
        raise ParseError(f"{args.input} must hold a network instance "
                         "(an object with 'inner' and 'sets')")
    nf = loaded
    try:
        cert = regimentation_from_certificate(json.loads(_read(args.regimentation)))
    except json.JSONDecodeError as exc:
        print(f"malformed certificate: {exc}", file=sys.stderr)
        return EXIT_MALFORMED_CERT
    except CertificateError as exc:
        print(f"malformed certificate: {exc}", file=sys.stderr)
        return EXIT_MALFORMED_CERT
    violated = verify_regimentation(nf.network, nf, cert)
    if violated is not None:
        print(f"FAIL condition {violated}")
        return EXIT_INVALID_CERT
    report = check_structure_lemmas(nf.network, nf, cert)
    if not report.hypothesis_met:
        print("PASS (1)(2)(3); structure lemmas skipped: "
              "a rainbow source-target path exists")
        return EXIT_OK
    bits = [f"counting {'OK' if report.counting_ok else 'FAIL'}",
            f"backward {'OK' if report.backward_ok else 'FAIL'}",
            f"only-path {'OK' if report.only_path_ok else 'FAIL'}",
            f"essential-iff-path {'OK' if report.essential_iff_path_ok else 'FAIL'}"]
    print("PASS (1)(2)(3); " + ", ".join(bits))
    return EXIT_OK if report.all_ok else EXIT_INVALID_CERT


def _cmd_search(args) -> int:
    result = conjecture_search(args.conjecture, k=args.k,
                               budget=args.budget, seed=_seed(args),
                               exhaustive=args.exhaustive)
    if result.found:
        print("counterexample")
        print(dumps_canonical({
            "schema": "rainbow/1",
            "conjecture": result.target,
            "oracle_size": result.oracle_size,
            "instance": family_to_json(result.counterexample),
        }), end="")
    else:
        print(f"no counterexample; {result.instances} instances "
              f"({result.hypothesis_passed} passed the hypothesis, "
              f"{'exhaustive' if result.exhaustive else 'sampled'})")
    return EXIT_OK


def _cmd_export_dot(args) -> int:
    fam = _load_family(args.input)
    try:
        rm = matching_from_certificate(json.loads(_read(args.matching)))
    except (json.JSONDecodeError, CertificateError) as exc:
        print(f"malformed certificate: {exc}", file=sys.stderr)
        return EXIT_MALFORMED_CERT
    try:
        net, nf = build_network(fam.graph, fam, rm)
    except ValueError as exc:
        print(f"parameter mismatch: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    reg = None
    if args.regimentation:
        try:
            reg = regimentation_from_certificate(
                json.loads(_read(args.regimentation)))
        except (json.JSONDecodeError, CertificateError) as exc:
            print(f"malformed certificate: {exc}", file=sys.stderr)
            return EXIT_MALFORMED_CERT
    print(network_dot(net, nf, reg), end="")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rainbowmatch",
                     description="Cooperative rainbow matchings: solve, "
                                 "check, generate, certify, search, export.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[], help="grow a size-n rainbow matching")
    p.add_argument("--input", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=("constructive", "oracle", "hybrid"),
                   default="hybrid")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("check", help="evaluate an arrow statement on an instance")
    p.add_argument("--input", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("gen", help="emit a generated instance file")
    p.add_argument("--family", choices=("sharpness", "drisko", "staircase"),
                   required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("certify", help="verify a regimentation certificate")
    p.add_argument("--input", required=True)
    p.add_argument("--regimentation", required=True)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("search", help="hunt for conjecture counterexamples")
    p.add_argument("--conjecture", choices=("c4.1", "c4.3"), required=True)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--budget", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exhaustive", action="store_true")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("export-dot", help="emit the network in DOT form")
    p.add_argument("--input", required=True)
    p.add_argument("--matching", required=True)
    p.add_argument("--regimentation")
    p.set_defaults(func=_cmd_export_dot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CertificateError as exc:
        print(f"malformed certificate: {exc}", file=sys.stderr)
        return EXIT_MALFORMED_CERT
    except BoundExceeded as exc:
        print(f"parameter mismatch: {exc}", file=sys.stderr)
        return EXIT_PARAMS


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
