"""Command-line interface: calculators and verification suites.

Exit codes: 0 on success, 1 on validation errors, 2 when any exact
identity check fails (a minimal counterexample is printed).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from pathlib import Path

from .grr import SplitSupercurve, chi_super, rr_oracle
from .modulidim import (
    ModuliParams,
    TargetSpec,
    bosonic_dimension,
    evaluate_request,
    properness_hint,
    vdim_closed,
)
from .superbundle import SuperBundle
from .superscalar import SuperScalar
from .suites import run_identity_suites, run_sgrr_sweep

CSV_COLUMNS = [
    "g",
    "n_ns",
    "n_rr",
    "r",
    "s",
    "d",
    "vdim_body",
    "vdim_soul",
    "bosonic_dim",
    "proper",
]


class CliError(Exception):
    """Validation failure; reported on stderr with exit code 1."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; 2 is reserved for identity failures
    def error(self, message):
        raise CliError(message)


def build_parser() -> _Parser:
    parser = _Parser(prog="supergrr", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    vdim = sub.add_parser("vdim", help="virtual dimension of the supermap moduli")
    vdim.add_argument("--target", choices=["psuper", "custom", "point"], default="psuper")
    vdim.add_argument("--r", type=int, default=1)
    vdim.add_argument("--s", type=int, default=0)
    vdim.add_argument("--d", type=int, default=0)
    vdim.add_argument("--tau", type=Fraction, default=Fraction(0))
    vdim.add_argument("--phi-int", type=Fraction, default=Fraction(0))
    _add_source_flags(vdim)
    vdim.add_argument("--json", action="store_true", help="print only the JSON document")
    vdim.add_argument(
        "--use-paper-dimmod2-sign",
        action="store_true",
        help="use the (s+2) odd-part reading instead of the derived (s-2)",
    )

    chi = sub.add_parser("chi", help="super Euler characteristic of a bundle spec")
    _add_source_flags(chi)
    chi.add_argument(
        "--bundle",
        required=True,
        help="bundle spec as inline JSON or @path to a JSON file",
    )
    chi.add_argument("--json", action="store_true")

    check = sub.add_parser("grr-check", help="randomized Riemann-Roch identity sweep")
    check.add_argument("--seed", type=int, default=0)
    check.add_argument("--cases", type=int, default=1000)
    check.add_argument("--json", action="store_true")

    table = sub.add_parser("table", help="sweep parameter ranges to CSV")
    table.add_argument("--g", default="0..3", help="range, e.g. 0..3 or 0,2")
    table.add_argument("--ns", default="0..4")
    table.add_argument("--rr", default="0,2,4,6")
    table.add_argument("--r", default="1..4")
    table.add_argument("--s", default="0..3")
    table.add_argument("--d", default="0..3")
    table.add_argument("--csv", metavar="PATH", default=None, help="output path (default stdout)")

    ident = sub.add_parser("identities", help="characteristic-class identity suites")
    ident.add_argument("--seed", type=int, default=0)
    ident.add_argument("--cases", type=int, default=500)
    ident.add_argument("--json", action="store_true")

    return parser


def _add_source_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--g", type=int, default=0, help="genus")
    sub.add_argument("--ns", type=int, default=0, help="Neveu-Schwarz punctures")
    sub.add_argument("--rr", type=int, default=0, help="Ramond-Ramond punctures")


def _parse_range(text: str) -> list[int]:
    values: list[int] = []
    for chunk in str(text).split(","):
        chunk = chunk.strip()
        if ".." in chunk:
            lo, hi = chunk.split("..")
            values.extend(range(int(lo), int(hi) + 1))
        elif chunk:
            values.append(int(chunk))
    if not values:
        raise CliError(f"empty range {text!r}")
    return values


def _target_from_args(args) -> TargetSpec:
    if args.target == "psuper":
        return TargetSpec.psuper(args.r, args.s, args.d)
    if args.target == "point":
        return TargetSpec.point()
    return TargetSpec.custom(args.r, args.s, args.tau, args.phi_int)


def _cmd_vdim(args) -> int:
    params = ModuliParams(args.g, args.ns, args.rr)
    target = _target_from_args(args)
    response = evaluate_request(
        {"params": params.to_json(), "target": target.to_json()},
        alternate_odd_sign=args.use_paper_dimmod2_sign,
    )
    closed = SuperScalar.from_json(response["closed"])
    document = json.dumps(response, indent=2)
    if args.json:
        print(document)
    else:
        print(closed)
        print(f"consistency: {response['consistent']}")
        print(document)
    if response["consistent"] is False:
        assembled = SuperScalar.from_json(response["assembled"])
        print("consistency failure: closed formula differs from assembled route", file=sys.stderr)
        print(
            f"  closed with the (s+2) odd-part reading: {closed}"
            if args.use_paper_dimmod2_sign
            else f"  closed with the (s-2) odd-part reading: {closed}",
            file=sys.stderr,
        )
        print(
            f"  assembled route, which forces the (s-2) reading: {assembled}",
            file=sys.stderr,
        )
        print(f"  difference: {closed - assembled}", file=sys.stderr)
        return 2
    return 0


def _load_bundle_spec(text: str) -> dict:
    if text.startswith("@"):
        text = Path(text[1:]).read_text(encoding="utf-8")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"invalid bundle JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise CliError("bundle spec must be a JSON object")
    return obj


def _cmd_chi(args) -> int:
    curve = SplitSupercurve.susy(args.g, args.rr)
    spec = _load_bundle_spec(args.bundle)
    bundle = SuperBundle.from_json(spec, default_model=curve.model)
    if bundle.model != curve.model:
        raise CliError(f"bundle model {bundle.model} does not match curve {curve.model}")
    chi = chi_super(curve, bundle)
    oracle = rr_oracle(curve, bundle)
    match = chi == oracle
    document = json.dumps(
        {
            "genus": args.g,
            "n_rr": args.rr,
            "deg_l": str(curve.deg_l),
            "bundle": bundle.to_json(),
            "chi": chi.value.to_json(),
            "oracle": oracle.value.to_json(),
            "match": match,
        },
        indent=2,
    )
    if args.json:
        print(document)
    else:
        print(chi)
        print(document)
    if not match:
        print(f"identity failure: chi {chi} != oracle {oracle}", file=sys.stderr)
        return 2
    return 0


def _cmd_grr_check(args) -> int:
    result = run_sgrr_sweep(args.seed, args.cases)
    line = (
        f"grr-check: seed={args.seed} cases={result.cases} "
        f"passed={result.passed} failed={len(result.failures)}"
    )
    if args.json:
        print(
            json.dumps(
                {
                    "seed": args.seed,
                    "cases": result.cases,
                    "passed": result.passed,
                    "failures": result.failures[:5],
                }
            )
        )
    else:
        print(line)
    if not result.ok:
        print("minimal counterexample:", file=sys.stderr)
        print("  " + min(result.failures, key=len), file=sys.stderr)
        return 2
    return 0


def _cmd_table(args) -> int:
    rows = []
    for g in _parse_range(args.g):
        for n_ns in _parse_range(args.ns):
            for n_rr in _parse_range(args.rr):
                params = ModuliParams(g, n_ns, n_rr)
                for r in _parse_range(args.r):
                    for s in _parse_range(args.s):
                        for d in _parse_range(args.d):
                            target = TargetSpec.psuper(r, s, d)
                            value = vdim_closed(params, target)
                            rows.append(
                                [
                                    g,
                                    n_ns,
                                    n_rr,
                                    r,
                                    s,
                                    d,
                                    str(value.body),
                                    str(value.soul),
                                    str(bosonic_dimension(params, target)),
                                    properness_hint(target, params).value,
                                ]
                            )

    def write(stream) -> None:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        writer.writerows(rows)

    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as handle:
            write(handle)
        print(f"wrote {len(rows)} rows to {args.csv}")
    else:
        write(sys.stdout)
    return 0


def _cmd_identities(args) -> int:
    results = run_identity_suites(args.seed, args.cases)
    failed = [r for r in results if not r.ok]
    if args.json:
        print(
            json.dumps(
                {
                    "seed": args.seed,
                    "cases": args.cases,
                    "suites": {
                        r.name: {"passed": r.passed, "failures": r.failures[:5]}
                        for r in results
                    },
                }
            )
        )
    else:
        print(f"identities: seed={args.seed} cases-per-suite={args.cases}")
        for result in results:
            print("  " + result.summary())
    if failed:
        worst = failed[0]
        print("minimal counterexample:", file=sys.stderr)
        print("  " + min(worst.failures, key=len), file=sys.stderr)
        return 2
    return 0


_COMMANDS = {
    "vdim": _cmd_vdim,
    "chi": _cmd_chi,
    "grr-check": _cmd_grr_check,
    "table": _cmd_table,
    "identities": _cmd_identities,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.subcommand](args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
