"""Command-line front end.

Exit codes: 0 success, 1 a verification failed, 2 usage or parameter error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from .branching import askey_wilson, branching_coeffs, compute_mk
from .field import ParameterPoint, ResonantParameterError
from .partitions import as_partition, enumerate_pieri_targets
from .pieri import coefficient_table_json, pieri_coeff
from .verify import DEFAULT_SIZES, SUITES

DEFAULT_PARAMS = "q=1/3,t=1/2,t0=1/5,t1=2/7,t2=1/4,t3=3/8"


class UsageError(Exception):
    pass


def parse_partition(text: str, n: int | None = None) -> tuple:
    text = text.strip()
    parts = [int(p) for p in text.replace(" ", "").split(",") if p] if text else []
    try:
        return as_partition(parts, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _params(args) -> ParameterPoint:
    try:
        return ParameterPoint.parse(args.params)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad --params: {exc}") from exc


def _emit(payload, out: str | None):
    text = json.dumps(payload, indent=2) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_compute(args) -> int:
    lam = parse_partition(args.lam, args.n)
    params = _params(args)
    if args.m is not None and lam and args.m < lam[0]:
        raise UsageError(f"--m {args.m} is smaller than lambda_1 = {lam[0]}")
    poly = compute_mk(lam, params, args.m)
    _emit({"lambda": list(lam), "params": params.to_dict(), "m": args.m,
           "polynomial": poly.to_json()}, args.out)
    return 0


def cmd_branch(args) -> int:
    lam = parse_partition(args.lam)
    if not lam:
        raise UsageError("--lambda needs at least one part")
    mu = parse_partition(args.mu, len(lam) - 1)
    try:
        bc = branching_coeffs(lam, mu, _params(args), args.m)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit(bc.to_json(), args.out)
    return 0


def cmd_pieri_table(args) -> int:
    n = args.n
    lam = parse_partition(args.lam, n)
    n = len(lam)
    if not 0 <= args.r <= n:
        raise UsageError(f"--r must lie in 0..{n}")
    params = _params(args)
    rows = [coefficient_table_json(lam, mu, args.r, n, pieri_coeff(lam, mu, args.r, n, params))
            for mu in enumerate_pieri_targets(lam, n, args.r)]
    _emit(rows, args.out)
    return 0


def cmd_askey_wilson(args) -> int:
    if args.degree < 0:
        raise UsageError("--degree must be nonnegative")
    params = _params(args)
    poly = askey_wilson(args.degree, params)
    _emit({"degree": args.degree, "params": params.to_dict(), "polynomial": poly.to_json()}, args.out)
    return 0


def cmd_verify(args) -> int:
    size = args.max_size if args.max_size is not None else DEFAULT_SIZES[args.check]
    kwargs = {"seed": args.seed}
    if args.points is not None:
        kwargs["points"] = args.points
    reports = SUITES[args.check](size, **kwargs)
    passed = all(r.passed for r in reports)
    for r in reports:
        label = ",".join(f"{k}={v}" for k, v in r.instance.items() if k != "params")
        print(f"{'PASS' if r.passed else 'FAIL'} {r.check} {label}")
    print(f"{args.check}: {sum(r.passed for r in reports)}/{len(reports)} passed")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump({"check": args.check, "max_size": size, "seed": args.seed, "passed": passed,
                       "reports": [r.to_json() for r in reports]}, fh, indent=2)
            fh.write("\n")
    return 0 if passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mkbranch",
                                     description="Macdonald-Koornwinder polynomials via branching.")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    def with_params(p):
        p.add_argument("--params", default=DEFAULT_PARAMS,
                       help="exact rationals, e.g. " + DEFAULT_PARAMS)
        p.add_argument("--out", help="write JSON here instead of stdout")

    p = sub.add_parser("compute", help="build P_lambda")
    p.add_argument("--n", type=int, help="number of variables (pads lambda with zeros)")
    p.add_argument("--lambda", dest="lam", required=True, help="comma separated parts")
    p.add_argument("--m", type=int, help="branching width used at every step (>= lambda_1)")
    with_params(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("branch", help="branching coefficients B^k for lambda over mu")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--m", type=int)
    with_params(p)
    p.set_defaults(func=cmd_branch)

    p = sub.add_parser("pieri-table", help="Pieri coefficients C for E_r * P_lambda")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int, required=True)
    with_params(p)
    p.set_defaults(func=cmd_pieri_table)

    p = sub.add_parser("askey-wilson", help="monic Askey-Wilson polynomial")
    p.add_argument("--degree", type=int, required=True)
    with_params(p)
    p.set_defaults(func=cmd_askey_wilson)

    p = sub.add_parser("verify", help="run an identity check at random rational points")
    p.add_argument("check", choices=sorted(SUITES))
    p.add_argument("--max-size", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--points", type=int, help="number of random parameter points")
    p.add_argument("--json", help="write the full report here")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResonantParameterError as exc:
        print(f"error: {exc}; choose different parameters (or another --seed)", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
