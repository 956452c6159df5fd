"""
UlrichForge - Command line
Usage: python cli.py <subcommand> [flags]

Exit codes: 0 every verdict passed, 1 a verdict failed, 2 UNKNOWN or
unsupported, 64 usage or configuration error.
"""
import argparse
import json
import logging
import os
import sys
from typing import List, Optional

from schemas.reports import DimensionReport, VerificationReport
from services import commands
from services.sweep import GridSpec, run_sweep
from utils.canonical import canonical_json
from utils.errors import (
    ConfigError, InternalConsistencyError, SurfaceMismatchError, UlrichError, UnsupportedError,
)
from utils.logs import configure_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 64

DOCS_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "docs")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _triple(text: str) -> tuple:
    parts = [int(p) for p in text.split(",")]
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected m,a,b")
    return tuple(parts)


def _int_list(text: str) -> List[int]:
    return [int(p) for p in text.split(",") if p]


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ulrichforge", description="Exact checks for Ulrich bundles on F_e and X_e.")
    parser.add_argument("--out", help="write the JSON report here instead of stdout")
    parser.add_argument("--log-level", default=None)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def config_flags(p, with_r=True):
        p.add_argument("--e", type=int, required=True)
        p.add_argument("--b", type=int, required=True)
        p.add_argument("--k", type=int, required=True)
        if with_r:
            p.add_argument("--r", type=int, default=2)

    p = sub.add_parser("cohomology", help="h^i of O(aC + bf) on F_e")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)

    config_flags(sub.add_parser("validate-config", help="check the (e, b, k) assumptions"))

    p = sub.add_parser("presentation", help="presentation coefficients, optionally a sampled phi")
    config_flags(p)
    p.add_argument("--seed", type=int)
    p.add_argument("--field")

    p = sub.add_parser("verify", help="sample phi and certify the cokernel")
    config_flags(p)
    p.add_argument("--seed", type=int)
    p.add_argument("--field")
    p.add_argument("--trials", type=int)
    p.add_argument("--no-ext", action="store_true")
    p.add_argument("--scroll", action="store_true", help="also report U_r on X_e")

    p = sub.add_parser("search-lines", help="Ulrich line bundles in a box")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--box", type=int)

    p = sub.add_parser("moduli-dim", help="dimension oracle against the closed forms")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--with-ext", action="store_true")
    p.add_argument("--seed", type=int)
    p.add_argument("--field")

    p = sub.add_parser("scroll", help="the 3-fold side")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--b", type=int)
    p.add_argument("--k", type=int)
    ssub = p.add_subparsers(dest="scroll_command", parser_class=_Parser)
    ssub.required = True
    sp = ssub.add_parser("slope")
    sp.add_argument("--r", type=int, default=2)
    sp = ssub.add_parser("check-a")
    sp.add_argument("--tmax", type=int)
    sp.add_argument("--b-values", type=_int_list)
    sp = ssub.add_parser("chow", help="triple product; classes as m,a,b (use --x=-1,0,2 for negatives)")
    sp.add_argument("--x", type=_triple, required=True)
    sp.add_argument("--y", type=_triple, required=True)
    sp.add_argument("--z", type=_triple, required=True)

    p = sub.add_parser("sweep", help="verify and compare over a grid")
    p.add_argument("--e-values", type=_int_list, default=[0, 1, 2])
    p.add_argument("--b-min-offset", type=int, default=2)
    p.add_argument("--b-max-offset", type=int, default=8)
    p.add_argument("--k-values", type=_int_list)
    p.add_argument("--r-values", type=_int_list, default=[2, 3, 4, 5, 6])
    p.add_argument("--seeds", type=int, default=3)
    p.add_argument("--master-seed", type=int)
    p.add_argument("--field")
    p.add_argument("--workers", type=int)
    p.add_argument("--no-ext", action="store_true")
    p.add_argument("--csv", default="sweep.csv")
    p.add_argument("--reports", help="directory for one JSON report per task")

    sub.add_parser("schema", help="regenerate the JSON schemas under docs/")
    return parser


def _need(args, *names) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError("missing " + ", ".join("--" + n for n in missing))


def _dispatch(args) -> tuple:
    """(payload, exit code)."""
    cmd = args.command
    if cmd == "cohomology":
        return commands.cohomology(args.e, args.a, args.b), EXIT_OK
    if cmd == "validate-config":
        return commands.validate(args.e, args.b, args.k, args.r), EXIT_OK
    if cmd == "presentation":
        return commands.presentation(args.e, args.b, args.k, args.r, args.seed, args.field), EXIT_OK
    if cmd == "verify":
        out = commands.verify(args.e, args.b, args.k, args.r, seed=args.seed, field=args.field,
                              trials=args.trials, with_ext=not args.no_ext, with_scroll=args.scroll)
        report = out["surface"] if isinstance(out, dict) else out
        ok = report.passed and (not isinstance(out, dict) or out["scroll"]["agrees_with_surface"])
        return out, EXIT_OK if ok else EXIT_FAILED
    if cmd == "search-lines":
        res = commands.search_lines(args.e, args.b, args.box)
        return res, EXIT_OK if res.match else EXIT_FAILED
    if cmd == "moduli-dim":
        rep: DimensionReport = commands.moduli_dim(args.r, args.e, args.b, args.k,
                                                   args.with_ext, args.seed, args.field)
        return rep, EXIT_OK if rep.agree else EXIT_FAILED
    if cmd == "scroll":
        return _dispatch_scroll(args)
    if cmd == "sweep":
        grid = GridSpec(
            e_values=args.e_values,
            b_offsets=(args.b_min_offset, args.b_max_offset),
            k_values=args.k_values,
            r_values=args.r_values,
            seeds_per_config=args.seeds,
            with_ext=not args.no_ext,
        )
        field = commands.resolve_field(args.field)
        summary = run_sweep(grid, master_seed=args.master_seed, field=field, workers=args.workers,
                            csv_path=args.csv, reports_dir=args.reports)
        if summary.failed:
            return summary, EXIT_FAILED
        return summary, EXIT_UNKNOWN if summary.unknown else EXIT_OK
    if cmd == "schema":
        return write_schemas(), EXIT_OK
    raise UsageError(f"unknown command {cmd}")


def _dispatch_scroll(args) -> tuple:
    sc = args.scroll_command
    if sc == "check-a":
        rep = commands.scroll_check_a(args.e, args.tmax, args.b_values)
        if rep.contradicted:
            return rep, EXIT_FAILED
        return rep, EXIT_UNKNOWN if rep.unknown else EXIT_OK
    _need(args, "b", "k")
    if sc == "slope":
        rep = commands.scroll_slope(args.e, args.b, args.k, args.r)
        ok = rep.slope_match and rep.c1_matches_printed and rep.special is not False
        return rep, EXIT_OK if ok else EXIT_FAILED
    return commands.scroll_chow(args.e, args.b, args.k, args.x, args.y, args.z), EXIT_OK


def write_schemas(docs_dir: str = DOCS_DIR) -> dict:
    os.makedirs(docs_dir, exist_ok=True)
    written = {}
    for name, model in (("verification_report", VerificationReport), ("dimension_report", DimensionReport)):
        path = os.path.join(docs_dir, f"{name}.schema.json")
        with open(path, "w") as fh:
            fh.write(json.dumps(model.model_json_schema(), indent=2, sort_keys=True) + "\n")
        written[name] = path
    return {"written": written}


def _emit(payload, out: Optional[str]) -> None:
    body = canonical_json(payload)
    if out:
        with open(out, "w") as fh:
            fh.write(body + "\n")
    else:
        sys.stdout.write(body + "\n")


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    configure_logging(args.log_level)
    try:
        payload, code = _dispatch(args)
    except (UsageError, ConfigError, SurfaceMismatchError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except UnsupportedError as exc:
        sys.stderr.write(f"unsupported: {exc}\n")
        return EXIT_UNKNOWN
    except InternalConsistencyError as exc:
        logger.error("[CLI] internal consistency failure: %s", exc)
        sys.stderr.write(f"internal error: {exc}\n")
        return EXIT_FAILED
    except UlrichError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_FAILED
    _emit(payload, args.out)
    return code


if __name__ == "__main__":
    sys.exit(run())
