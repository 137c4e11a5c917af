"""
Command-line surface.

    volterra-radius radius --theorem t44 --alpha 0
    volterra-radius verify --theorem t41 --alpha 0 --A 2,0 --B -1,0 --mode extremal
    volterra-radius verify --identity --n 25 --seed 42
    volterra-radius verify --lemmas
    volterra-radius sweep --theorem t46 --alpha 0 --k 2:8:2
    volterra-radius estimate --f '{"tag": "Univalent"}'

Exit codes: 0 success, 1 verification failure, 2 usage or configuration error.
"""
import argparse
import json
import logging
import sys

import numpy as np
import pandas as pd

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from pathlib import Path
from Models.errors import VolterraError
from Models.families import ClassSpec, as_analytic, extremal, random_normalized
from Models.grid import GridSpec
from Models.model_types import Types
from Models.radius import RadiusQuery, Theorem, radius_formula
from Models.series import DEFAULT_ORDER
from Models.verify import (CSV_COLUMNS, RadiusReport, TOL_ACCEPT, default_lemma_audits, estimate_convexity_radius,
                           estimate_radius_details, extremal_pair, verify_theorem)
from Models.volterra import identity_residual

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

IDENTITY_TOL = 1e-12
LEMMA_TOL = 1e-8
IDENTITY_COLUMNS = ["pair", "seed", "order_N", "max_residual"]
LEMMA_COLUMNS = ["lemma", "param", "label", "max_violation", "worst_re", "worst_im"]
VALUE_FLAGS = ("--A", "--B", "--alpha", "--gamma", "--beta", "--k")


@dataclass(frozen=True)
class RunConfig:
    seed: int = 42
    order: int = DEFAULT_ORDER
    grid: GridSpec = field(default_factory=GridSpec)
    output: str = "csv"
    out_path: str = None
    workers: int = 1

    @staticmethod
    def from_args(args):
        grid = GridSpec(n_theta=args.ntheta, n_radial=args.nradial, r_cap=args.rcap, tol=args.tol)
        return RunConfig(args.seed, args.order, grid, args.format, args.out, args.workers)


def parse_complex(text):
    """'re,im' or a bare real number."""
    try:
        parts = [float(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected re,im but got {text!r}")
    if len(parts) == 1:
        return complex(parts[0], 0.0)
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected re,im but got {text!r}")
    return complex(parts[0], parts[1])


def parse_range(text):
    """'start:stop:step' (inclusive) or a single number."""
    try:
        parts = [float(part) for part in text.split(":")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed range {text!r}")
    if len(parts) == 1:
        return parts
    if len(parts) != 3 or parts[2] <= 0:
        raise argparse.ArgumentTypeError(f"range must be start:stop:step with step > 0, got {text!r}")
    start, stop, step = parts
    if stop < start:
        return []
    count = int(np.floor((stop - start) / step + 1e-9)) + 1
    return [round(start + i * step, 12) for i in range(count)]


def normalize_argv(argv):
    # '--B -1,0' would read as an option; glue negative values to their flag
    out = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if (token in VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-")
                and len(argv[i + 1]) > 1 and (argv[i + 1][1].isdigit() or argv[i + 1][1] == ".")):
            out.append(f"{token}={argv[i + 1]}")
            i += 2
            continue
        out.append(token)
        i += 1
    return out


def _global_flags():
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--seed", type=int, default=42, help="Base seed for sampled members (default: 42).")
    parent.add_argument("--order", type=int, default=DEFAULT_ORDER, help="Series truncation order N.")
    parent.add_argument("--ntheta", type=int, default=720, help="Angular samples per circle.")
    parent.add_argument("--nradial", type=int, default=512, help="Radial scan steps.")
    parent.add_argument("--rcap", type=float, default=0.99, help="Largest radius tested.")
    parent.add_argument("--tol", type=float, default=1e-6, help="Bisection tolerance in r.")
    parent.add_argument("--out", type=str, default=None, help="Output path (default: stdout).")
    parent.add_argument("--format", choices=["csv", "json", "xlsx"], default="csv", help="Report format.")
    parent.add_argument("--workers", type=int, default=1, help="Processes for the sweep fan-out.")
    parent.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG.")
    return parent


def _theorem_flags(parser, ranges=False):
    value = parse_range if ranges else float
    parser.add_argument("--theorem", required=not ranges, type=str.lower, choices=[t.value for t in Theorem])
    parser.add_argument("--alpha", type=value, default=[0.0] if ranges else 0.0, help="Order alpha in [0, 1).")
    parser.add_argument("--A", dest="A", type=parse_complex, default=None, help="Janowski A as re,im.")
    parser.add_argument("--B", dest="B", type=parse_complex, default=None, help="Janowski B as re,im.")
    parser.add_argument("--gamma", type=value, default=None, help="UL order gamma >= 1.")
    parser.add_argument("--beta", type=value, default=None, help="G(beta) parameter in (0, 1].")
    parser.add_argument("--k", type=value, default=None, help="Boundary rotation bound k >= 2.")


def build_parser():
    parent = _global_flags()
    parser = argparse.ArgumentParser(prog="volterra-radius", description="Radii of convexity of Volterra-type operators.")
    commands = parser.add_subparsers(dest="command", required=True)

    radius = commands.add_parser("radius", parents=[parent], help="Closed-form radius for one theorem.")
    _theorem_flags(radius)

    verify = commands.add_parser("verify", parents=[parent], help="Certify a theorem, the operator identity or the lemmas.")
    verify.add_argument("--theorem", type=str.lower, choices=[t.value for t in Theorem], default=None)
    verify.add_argument("--alpha", type=float, default=0.0)
    verify.add_argument("--A", dest="A", type=parse_complex, default=None)
    verify.add_argument("--B", dest="B", type=parse_complex, default=None)
    verify.add_argument("--gamma", type=float, default=None)
    verify.add_argument("--beta", type=float, default=None)
    verify.add_argument("--k", type=float, default=None)
    verify.add_argument("--mode", choices=["extremal", "sampled"], default="extremal")
    verify.add_argument("--n", type=int, default=20, help="Number of sampled pairs (or identity pairs).")
    verify.add_argument("--identity", action="store_true", help="Check J_g f + T_g f = f g on random pairs.")
    verify.add_argument("--lemmas", action="store_true", help="Audit the distortion lemmas.")

    sweep = commands.add_parser("sweep", parents=[parent], help="Formula and estimate over parameter ranges.")
    _theorem_flags(sweep, ranges=True)
    sweep.add_argument("--formula-only", action="store_true", help="Skip the numeric estimate.")

    estimate = commands.add_parser("estimate", parents=[parent], help="Estimate a radius for given functions.")
    estimate.add_argument("--f", required=True, help="JSON document (series or class spec) or a path to one.")
    estimate.add_argument("--g", default=None, help="Second function; without it the radius of convexity of f.")
    estimate.add_argument("--alpha", type=float, default=0.0)
    return parser


def configure_logging(verbosity):
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(asctime)s %(levelname)s %(name)s: %(message)s")


def write_rows(rows, columns, config, documents=None):
    """Write rows as CSV (default), JSON (documents when given) or an openpyxl workbook."""
    frame = pd.DataFrame(rows, columns=columns)
    if config.output == "json":
        text = json.dumps(documents if documents is not None else frame.to_dict(orient="records"), indent=2)
        if config.out_path:
            Path(config.out_path).write_text(text + "\n")
        else:
            sys.stdout.write(text + "\n")
    elif config.output == "xlsx":
        if not config.out_path:
            raise VolterraError("--format xlsx needs --out")
        frame.to_excel(config.out_path, index=False, engine="openpyxl")
    elif config.out_path:
        frame.to_csv(config.out_path, index=False)
    else:
        frame.to_csv(sys.stdout, index=False)


def _query_from_args(args, **overrides):
    params = {"alpha": args.alpha, "A": args.A, "B": args.B, "gamma": args.gamma, "beta": args.beta, "k": args.k}
    params.update(overrides)
    return RadiusQuery(args.theorem, **params)


def cmd_radius(args, config):
    print(radius_formula(_query_from_args(args)))
    return EXIT_OK


def cmd_verify(args, config):
    if args.identity:
        rows = []
        for i in range(args.n):
            f = random_normalized(config.seed + 2 * i, config.order)
            g = random_normalized(config.seed + 2 * i + 1, config.order)
            rows.append({"pair": i, "seed": config.seed + 2 * i, "order_N": config.order,
                         "max_residual": identity_residual(f, g)})
        write_rows(rows, IDENTITY_COLUMNS, config)
        return EXIT_OK if all(row["max_residual"] <= IDENTITY_TOL for row in rows) else EXIT_FAILED

    if args.lemmas:
        audits = default_lemma_audits(config.grid)
        rows = [{"lemma": audit.lemma.kind.value, "param": audit.lemma.param, "label": audit.label,
                 "max_violation": audit.max_violation, "worst_re": audit.worst_point.real,
                 "worst_im": audit.worst_point.imag} for audit in audits]
        write_rows(rows, LEMMA_COLUMNS, config)
        return EXIT_OK if all(audit.max_violation <= LEMMA_TOL for audit in audits) else EXIT_FAILED

    if args.theorem is None:
        raise VolterraError("verify needs --theorem, --identity or --lemmas")
    reports = verify_theorem(_query_from_args(args), mode=args.mode, n=args.n, seed=config.seed,
                             grid=config.grid, order=config.order)
    write_rows([report.to_row() for report in reports], CSV_COLUMNS, config,
               documents=[report.to_dict() for report in reports])
    return EXIT_OK if all(report.passed for report in reports) else EXIT_FAILED


def _sweep_queries(args):
    if args.theorem is None:
        raise VolterraError("sweep needs --theorem")
    theorem = Theorem(args.theorem)
    name = {Theorem.T42: "gamma", Theorem.T45: "beta", Theorem.T46: "k"}.get(theorem)
    values = getattr(args, name) if name else [None]
    if values is None:
        raise VolterraError(f"{theorem.value} sweep needs --{name}")
    queries = []
    for alpha, value in product(args.alpha, values):
        overrides = {"alpha": alpha}
        if name:
            overrides[name] = value
        params = {"A": args.A, "B": args.B, "gamma": None, "beta": None, "k": None}
        params.update(overrides)
        queries.append(RadiusQuery(theorem, **params))
    return queries


def _sweep_report(job):
    """One sweep report; top level so the process pool can pickle it."""
    query_dict, grid_dict, seed, order, formula_only = job
    query, grid = RadiusQuery.from_dict(query_dict), GridSpec.from_dict(grid_dict)
    r_formula = radius_formula(query).r
    if formula_only:
        return RadiusReport(query, r_formula, None, None, None, "", grid, seed=seed, order_N=order)
    estimate = estimate_radius_details(extremal_pair(query), query.alpha if query.theorem == Theorem.T41 else 0.0, grid)
    return RadiusReport(query, r_formula, estimate.r, estimate.r - min(r_formula, grid.r_cap), estimate.worst_angle,
                        "", grid, estimate.failed_at, seed, order)


def cmd_sweep(args, config):
    jobs = [(query.to_dict(), config.grid.to_dict(), config.seed, config.order, args.formula_only)
            for query in _sweep_queries(args)]
    if config.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            reports = list(pool.map(_sweep_report, jobs))
    else:
        reports = [_sweep_report(job) for job in jobs]
    logger.info("sweep produced %d rows", len(reports))
    write_rows([report.to_row() for report in reports], CSV_COLUMNS, config,
               documents=[report.to_dict() for report in reports])
    failed = [report for report in reports if report.margin is not None and report.margin < -TOL_ACCEPT]
    return EXIT_FAILED if failed else EXIT_OK


def load_function(source):
    """A series document becomes a series-backed function, a class spec its extremal."""
    path = Path(source)
    text = path.read_text() if not source.lstrip().startswith("{") and path.exists() else source
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise VolterraError(f"could not read a JSON document from {source!r}: {e}")
    value = Types.load(document)
    if isinstance(value, ClassSpec):
        return extremal(value)
    return as_analytic(value)


def cmd_estimate(args, config):
    f = load_function(args.f)
    if args.g is None:
        r = estimate_convexity_radius(f, args.alpha, config.grid)
        print(f"r={r:.10g}")
        return EXIT_OK
    estimate = estimate_radius_details((f, load_function(args.g)), args.alpha, config.grid)
    print(f"r={estimate.r:.10g} worst_angle={estimate.worst_angle:.6g}")
    return EXIT_OK


COMMANDS = {"radius": cmd_radius, "verify": cmd_verify, "sweep": cmd_sweep, "estimate": cmd_estimate}


def main(argv=None):
    argv = normalize_argv(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    configure_logging(args.verbose)
    try:
        config = RunConfig.from_args(args)
        return COMMANDS[args.command](args, config)
    except VolterraError as e:
        logger.error("%s", e)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
