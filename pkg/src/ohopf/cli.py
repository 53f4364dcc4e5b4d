"""Command-line entry point: run verification suites, export leaf samples.

    ohopf verify --suite all --dim 8 --seed 7 --samples 1000 --tol 1e-9 \
                 --backend float --out report.json --format json
    ohopf export-leaf --slope e1 --radius 1.0 -n 1000 --seed 7 --out leaf.csv

Every flag default can be overridden by an environment variable with the
OHOPF_ prefix (OHOPF_SEED, OHOPF_SAMPLES, OHOPF_TOL, ...); explicit flags
win over the environment.  JSON reports are canonical: two runs with the
same configuration and package version are byte-identical (timing is shown
only in the text format).  The exit status is 0 iff every check passed.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

from . import algebra, algebroid, foliation, groupoid, leaves, lie3
from .algebra import from_array
from .report import VerificationReport

SUITES = ("algebra", "leaves", "groupoid", "algebroid", "lie3", "foliation", "all")

SUITE_DIMS = {
    "algebra": (1, 2, 4, 8, 16),
    "leaves": (1, 2, 4, 8),
    "groupoid": (1, 2, 4, 8),
    "algebroid": (8,),
    "lie3": (8,),
    "foliation": (2, 4, 8),
}


def _env(name, fallback):
    return os.environ.get("OHOPF_" + name.upper(), fallback)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ohopf",
        description="verification suites for the singular octonionic Hopf foliation",
        epilog="defaults honor OHOPF_* environment variables (OHOPF_SEED, OHOPF_TOL, ...)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("--suite", choices=SUITES, default=_env("suite", "all"))
    verify.add_argument("--dim", type=int, default=int(_env("dim", "8")))
    verify.add_argument("--seed", type=int, default=int(_env("seed", "0")))
    verify.add_argument("--samples", type=int, default=int(_env("samples", "200")))
    verify.add_argument("--tol", type=float, default=float(_env("tol", "1e-9")))
    verify.add_argument(
        "--backend",
        choices=("exact", "float"),
        default=_env("backend", "float"),
        help="exact restricts a suite to its symbolic checks where meaningful",
    )
    verify.add_argument("--out", default=_env("out", None), help="write the report here")
    verify.add_argument("--format", choices=("json", "text"), default=_env("format", "text"))

    export = sub.add_parser("export-leaf", help="sample a leaf and write CSV")
    export.add_argument(
        "--slope",
        default=_env("slope", "e1"),
        help="'origin', 'inf', 'eK' for a basis slope, or comma-separated coefficients",
    )
    export.add_argument("--radius", type=float, default=float(_env("radius", "1.0")))
    export.add_argument("-n", "--count", type=int, default=int(_env("count", "100")))
    export.add_argument("--seed", type=int, default=int(_env("seed", "0")))
    export.add_argument("--dim", type=int, default=int(_env("dim", "8")))
    export.add_argument("--out", required=True)
    return parser


def _usage_error(message: str):
    print("error: %s" % message, file=sys.stderr)
    print("run 'ohopf verify --help' or 'ohopf export-leaf --help'", file=sys.stderr)
    raise SystemExit(2)


def _parse_slope(text: str, dim: int):
    text = text.strip().lower()
    if text in ("origin", "0-leaf"):
        return leaves.LeafId(leaves.ORIGIN, 0)
    if text in ("inf", "infinity", "oo"):
        return None  # radius applied by caller
    if text.startswith("e") and text[1:].isdigit():
        return from_array([1.0 if i == int(text[1:]) else 0.0 for i in range(dim)])
    try:
        coeffs = [float(p) for p in text.split(",")]
    except ValueError:
        _usage_error("slope %r is not 'origin', 'inf', 'eK', or a coefficient list" % text)
    if len(coeffs) != dim:
        _usage_error("slope needs %d comma-separated coefficients" % dim)
    return from_array(coeffs)


def _check_dim(suite: str, dim: int):
    allowed = SUITE_DIMS[suite]
    if dim not in allowed:
        _usage_error(
            "suite %r runs at dims %s, not %d" % (suite, "/".join(map(str, allowed)), dim)
        )


def run_suite(suite: str, dim: int, seed: int, samples: int, tol: float, backend: str):
    """Dispatch one suite; returns a list of reports."""
    if suite == "all":
        reports = []
        reports.append(algebra.verify_algebra_identities(dim if dim in (1, 2, 4, 8, 16) else 8, seed))
        reports.append(leaves.right_mult_counterexample())
        if dim in SUITE_DIMS["leaves"]:
            reports.append(leaves.verify_leaves(dim, samples, seed, max(tol, 1e-9)))
        if dim in SUITE_DIMS["groupoid"]:
            reports.extend(_groupoid_reports(dim, samples, seed, tol, backend))
        if dim == 8:
            reports.append(algebroid.verify_algebroid(samples, seed, max(tol, 1e-6)))
            reports.append(lie3.verify_lie3("symbolic", samples, seed))
            reports.append(lie3.verify_matrix_vs_transcription())
            reports.append(lie3.generic_ranks(max(samples // 2, 20), seed))
        if dim in SUITE_DIMS["foliation"]:
            reports.append(foliation.verify_foliation(dim, samples, seed, tol))
        return reports
    _check_dim(suite, dim)
    if suite == "algebra":
        return [algebra.verify_algebra_identities(dim, seed), leaves.right_mult_counterexample()]
    if suite == "leaves":
        return [leaves.verify_leaves(dim, samples, seed, max(tol, 1e-9))]
    if suite == "groupoid":
        return _groupoid_reports(dim, samples, seed, tol, backend)
    if suite == "algebroid":
        if backend == "exact":
            return [algebroid.verify_algebroid_symbolic(dim)]
        return [algebroid.verify_algebroid(samples, seed, max(tol, 1e-6), dim)]
    if suite == "lie3":
        reports = [
            lie3.verify_lie3("symbolic", samples, seed),
            lie3.verify_matrix_vs_transcription(),
        ]
        if backend != "exact":
            reports.append(lie3.generic_ranks(max(samples // 2, 20), seed))
        return reports
    if suite == "foliation":
        return [foliation.verify_foliation(dim, samples, seed, tol)]
    raise SystemExit("unknown suite %r" % suite)


def _groupoid_reports(dim, samples, seed, tol, backend):
    reports = [groupoid.verify_structure(dim, samples, seed, tol)]
    if dim in (1, 2, 4, 8):
        reports.append(groupoid.verify_phi_morphism(dim, max(samples // 2, 50), seed, tol))
    if dim == 8 and backend != "exact":
        reports.append(groupoid.verify_g2_equivariance(max(samples // 20, 10), seed, max(tol, 1e-8)))
    return reports


def _merge(reports, suite, config) -> VerificationReport:
    merged = VerificationReport(suite, config)
    for r in reports:
        for c in r.checks:
            c = type(c)(r.suite + "." + c.name, c.law, c.passed, c.info)
            merged.checks.append(c)
        merged.elapsed_s += r.elapsed_s
    return merged


def cmd_verify(args) -> int:
    config = {
        "suite": args.suite,
        "dim": args.dim,
        "seed": args.seed,
        "samples": args.samples,
        "tol": args.tol,
        "backend": args.backend,
    }
    if args.tol <= 0:
        _usage_error("tolerance must be positive")
    try:
        reports = run_suite(args.suite, args.dim, args.seed, args.samples, args.tol, args.backend)
    except ValueError as exc:
        _usage_error(str(exc))
    merged = _merge(reports, args.suite, config)
    rendered = merged.to_json() if args.format == "json" else merged.to_text()
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(rendered)
        except OSError as exc:
            print("cannot write report: %s" % exc, file=sys.stderr)
            return 2
        print("wrote %s (%d checks, %s)" % (
            args.out,
            len(merged.checks),
            "all passed" if merged.passed else "FAILURES",
        ))
    else:
        sys.stdout.write(rendered)
    return 0 if merged.passed else 1


def cmd_export_leaf(args) -> int:
    slope = _parse_slope(args.slope, args.dim)
    r2 = args.radius * args.radius
    if isinstance(slope, leaves.LeafId):
        leaf = slope
    elif slope is None:
        leaf = leaves.LeafId(leaves.INFINITY, r2)
    else:
        leaf = leaves.LeafId(slope, r2)
    pts = leaves.sample_leaf(leaf, args.count, args.seed, dim=args.dim)
    try:
        leaves.export_csv(pts, args.out)
    except OSError as exc:
        print("cannot write CSV: %s" % exc, file=sys.stderr)
        return 2
    worst_sphere = 0.0
    worst_slope = 0.0
    for p in pts:
        worst_sphere = max(
            worst_sphere, abs(float(p.x.norm_sq() + p.y.norm_sq()) - float(leaf.radius_sq))
        )
        if not (leaf.is_origin or leaf.is_infinite_slope):
            res = p.y * p.x.conjugate() - leaf.slope.scale(p.x.norm_sq())
            worst_slope = max(worst_slope, math.sqrt(float(res.norm_sq())))
    print(
        "wrote %d points to %s  (max on-sphere residual %.3g, max slope residual %.3g)"
        % (len(pts), args.out, worst_sphere, worst_slope)
    )
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "verify":
        return cmd_verify(args)
    return cmd_export_leaf(args)


if __name__ == "__main__":
    sys.exit(main())
