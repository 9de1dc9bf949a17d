"""Command-line front end.

Exit codes: 0 success, 2 malformed input, 3 precondition violation
(non-semisimple or non-symplectic matrix, wrong regime, foreign form).
All configuration is by flags; no environment variables are read.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .errors import (
    CapabilityError,
    DimensionError,
    FormError,
    PreconditionError,
    SupportError,
)
from .exactlin import RationalMatrix, SymplecticSpace, gram_of, is_semisimple, signature
from .momentmap import BlockSpec, sp_complex_membership, sp_membership, sp_witness
from .oracle import OracleConfig, run_suite
from .plancherel import (
    GL,
    SP,
    SpaceSpec,
    build_report,
    format_report,
    harish_chandra_params,
    support_strata,
    theta_parabolic_roots,
)
from .levi import RealFormDescriptor

EXIT_OK = 0
EXIT_MALFORMED = 2
EXIT_PRECONDITION = 3

_PRECONDITION_ERRORS = (PreconditionError, FormError, SupportError, CapabilityError)


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbitstrata",
        description="Moment-map membership, support strata and discrete-series reports",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("report", help="full report for one homogeneous space")
    _add_space_args(p)
    p.add_argument("--bound", type=int, default=None, help="Harish-Chandra bound (default n+1)")
    p.add_argument("--json", type=Path, default=None, help="also write the canonical JSON report")

    p = sub.add_parser("membership", help="membership of a matrix in the moment-map image")
    p.add_argument("--family", choices=["sp"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--matrix", type=Path, required=True, help='JSON {"n": N, "entries": [["p/q", ...], ...]}')

    p = sub.add_parser("witness", help="witness basis for a block spec")
    p.add_argument("--blocks", type=Path, required=True, help="JSON list of tagged blocks")
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("hcparams", help="enumerate Harish-Chandra parameters")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)

    p = sub.add_parser("strata", help="support stratum of one real form")
    _add_space_args(p)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, default=0)
    p.add_argument("--u", type=int, default=0)

    p = sub.add_parser("parabolic", help="nilradical roots of a theta-stable parabolic")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--S", dest="s_set", required=True, help="comma-separated 1-based indices, e.g. 1,3")

    p = sub.add_parser("oracle", help="run brute-force agreement suites")
    p.add_argument("--suite", default="all", choices=["all", "strata", "weyl", "signature"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=200)
    return parser


def _add_space_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=["sp", "gl"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, default=0)


def _load_matrix(path: Path, n: int) -> RationalMatrix:
    data = json.loads(path.read_text())
    if data.get("n") != n:
        raise ValueError(f"matrix file is for n={data.get('n')}, not n={n}")
    entries = data["entries"]
    if len(entries) != 2 * n or any(len(row) != 2 * n for row in entries):
        raise DimensionError("entries must form a 2n x 2n matrix")
    return RationalMatrix.from_rows([[Fraction(x) for x in row] for row in entries])


def run(argv: list[str]) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_MALFORMED if exc.code not in (0, None) else EXIT_OK

    try:
        return _dispatch(args)
    except _PRECONDITION_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "report":
        space = SpaceSpec(args.family, args.n, args.m, args.k)
        report = build_report(space, args.bound)
        sys.stdout.write(format_report(report))
        if args.json is not None:
            args.json.write_text(report.to_json())
        return EXIT_OK

    if args.command == "membership":
        a = _load_matrix(args.matrix, args.n)
        space = SymplecticSpace(args.n)
        g = gram_of(a, space)
        if not is_semisimple(a):
            raise PreconditionError("matrix is not semisimple")
        sig = signature(g)
        real = sp_membership(a, space, args.m)
        cplx = sp_complex_membership(a, args.n, args.m)
        print(f"signature: ({sig.p}, {sig.q})")
        print(f"real_membership: {'true' if real else 'false'}")
        print(f"complex_membership: {'true' if cplx else 'false'}")
        return EXIT_OK

    if args.command == "witness":
        spec = BlockSpec.from_json(args.blocks.read_text())
        w = sp_witness(spec, args.m)
        if w is None:
            print("NOT EXISTS")
        else:
            for v in w.basis:
                print(" ".join(str(x) for x in v))
        return EXIT_OK

    if args.command == "hcparams":
        space = SpaceSpec(SP, args.n, args.m, 0)
        for h in harish_chandra_params(space, args.bound):
            print(" ".join(str(v) for v in h.values))
        return EXIT_OK

    if args.command == "strata":
        space = SpaceSpec(args.family, args.n, args.m, args.k)
        if args.family == SP:
            form = RealFormDescriptor(s=args.s, t=args.t, u=args.u)
        else:
            form = RealFormDescriptor(s=args.s)
        stratum = support_strata(space, form)
        from .plancherel import _region_dict  # canonical region rendering

        print(json.dumps(_region_dict(stratum.region)))
        return EXIT_OK

    if args.command == "parabolic":
        space = SpaceSpec(SP, args.n, args.m, 0)
        s_set = [int(x) for x in args.s_set.split(",") if x != ""]
        for root in theta_parabolic_roots(space, s_set):
            print(str(root))
        return EXIT_OK

    if args.command == "oracle":
        cfg = OracleConfig(seed=args.seed, trials=args.trials)
        result = run_suite(args.suite, cfg)
        print(json.dumps(result, indent=2))
        return EXIT_OK

    raise ValueError(f"unknown command {args.command!r}")


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
