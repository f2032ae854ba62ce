"""
@file_name: cli.py
@author: frtlab
@date: 2025-07-20
@description: frtlab command line entry point

Exit codes: 0 every check passed, 1 a check failed or a run aborted, 2 configuration or usage error.
"""

import argparse
import json
import sys
from typing import Any, Dict, List, Optional

from src.frt_lab.core.config import SUITE_NAMES
from src.frt_lab.core.config.run_config import RunConfig, load_run_config
from src.frt_lab.core.errors import ConfigError, FrtLabError
from src.frt_lab.core.config.settings import get_logging_settings
from src.frt_lab.core.logging import logger, setup_logger
from src.frt_lab.services import SUITES, SuiteRunner
from src.frt_lab.tools.reports import diff_reports, emit_report, load_report

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

EPILOG = """
examples:
  # every suite with the acceptance configuration
  python -m src.frt_lab --config configs/default.json all --out reports/all.json

  # YBE residuals of the free-fermion family at explicit Γ points
  python -m src.frt_lab ybe check --family free_fermion \\
      --points '[[1,1,2,1,1,3], {"a1":2,"a2":1,"b1":1,"b2":1,"c1":1,"c2":3}]'

  # degree-3 component of the affine bialgebra at three points, as markdown
  python -m src.frt_lab --format markdown frt component --points '["2","5","7/3"]' --degree 3

  # reducibility of W(1)⊗W(2) at chosen ratios
  python -m src.frt_lab slqhat reduce-scan --m 1 --n 2 --points '["27","1/27","5"]'

  # V_x⊗V_y classification and the braiding on U_{x,y}
  python -m src.frt_lab aff classify
  python -m src.frt_lab aff braiding --seed 7

  # verdict changes between two stored reports
  python -m src.frt_lab diff reports/old.json reports/new.json
"""


def _add_global_flags(parser: argparse.ArgumentParser, suppress: bool):
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--config", metavar="PATH", default=default, help="JSON run configuration")
    parser.add_argument("--seed", type=int, default=default, help="seed of every sampler")
    parser.add_argument("--out", metavar="PATH", default=default, help="report path (stdout when absent)")
    parser.add_argument("--format", choices=["json", "markdown"], default=default, help="report format")
    parser.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"], default=default,
                        help="console and file log level")


def _add_verb_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--field", choices=["rational", "gaussian"], help="scalar field")
    parser.add_argument("--q", help="exact q such as 3, 5/2 or i")
    parser.add_argument("--family", help="R-matrix family (affine_sl2, free_fermion, perk_schultz, gamma_ice)")
    parser.add_argument("--samples", type=int, help="sample count of this suite")
    parser.add_argument("--degree-cap", type=int, help="largest graded degree any check may build")
    parser.add_argument("--points", metavar="JSON", help="explicit points (scalars or Γ weight lists)")
    parser.add_argument("--degree", type=int, help="graded degree of `frt component`")
    parser.add_argument("--strike", choices=["A", "B+", "B-", "T"], help="quotient of `frt component`")
    parser.add_argument("--a", help="evaluation parameter")
    parser.add_argument("--r", type=int, help="evaluation degree")
    parser.add_argument("--m", type=int, help="first factor degree of `slqhat reduce-scan`")
    parser.add_argument("--n", type=int, help="second factor degree of `slqhat reduce-scan`")
    parser.add_argument("--max-degree", type=int, help="word length / monomial degree bound of probes")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frtlab",
        description="frtlab - exact verification of parametrized Yang-Baxter solutions and FRT bialgebras",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=EPILOG,
    )
    _add_global_flags(parser, suppress=False)
    verbs = parser.add_subparsers(dest="verb", metavar="VERB")
    verbs.required = True

    common = argparse.ArgumentParser(add_help=False)
    _add_global_flags(common, suppress=True)
    _add_verb_flags(common)

    for name in SUITE_NAMES:
        sub = verbs.add_parser(name, parents=[common], help=f"{name} suite (full run without an action)",
                               formatter_class=argparse.RawDescriptionHelpFormatter)
        sub.add_argument("action", nargs="?", choices=sorted(SUITES[name].actions), help="single action")
    verbs.add_parser("all", parents=[common], help="every configured suite in order")
    diff = verbs.add_parser("diff", help="verdict-level diff of two JSON reports")
    diff.add_argument("before", metavar="BEFORE")
    diff.add_argument("after", metavar="AFTER")
    return parser


def config_overrides(args: argparse.Namespace) -> Dict[str, Any]:
    overrides: Dict[str, Any] = {
        "field": getattr(args, "field", None),
        "q": getattr(args, "q", None),
        "seed": args.seed,
        "family": getattr(args, "family", None),
        "degree_cap": getattr(args, "degree_cap", None),
        "output": args.out,
        "format": args.format,
    }
    samples = getattr(args, "samples", None)
    if samples is not None and args.verb in SUITE_NAMES:
        overrides["samples"] = {args.verb: samples}
    return overrides


def action_params(args: argparse.Namespace) -> Dict[str, Any]:
    keys = ("points", "degree", "strike", "a", "r", "m", "n", "max_degree", "samples")
    return {k: getattr(args, k) for k in keys if getattr(args, k, None) is not None}


def _run_diff(args: argparse.Namespace) -> int:
    result = diff_reports(load_report(args.before), load_report(args.after))
    sys.stdout.write(json.dumps(result, sort_keys=True, indent=2) + "\n")
    return EXIT_OK if not result["changed"] and not result["removed"] else EXIT_FAIL


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    settings = get_logging_settings()
    setup_logger(log_level=args.log_level or settings.log_level, log_dir=settings.log_dir,
                 rotation=settings.log_rotation, retention=settings.log_retention,
                 console=settings.log_console)

    try:
        if args.verb == "diff":
            return _run_diff(args)
        config: RunConfig = load_run_config(args.config, config_overrides(args))
        runner = SuiteRunner(config)
        if args.verb == "all":
            report = runner.run_all()
        else:
            report = runner.run(args.verb, args.action, action_params(args))
        emit_report(report, config.format, config.output)
    except ConfigError as e:
        logger.error(f"configuration error: {e}")
        sys.stderr.write(f"frtlab: {e}\n")
        return EXIT_USAGE
    except FrtLabError as e:
        logger.error(f"run aborted: {e}")
        sys.stderr.write(f"frtlab: {e}\n")
        return EXIT_FAIL

    if not report.passed:
        for record in report.failures():
            logger.warning(f"FAIL {record.id}")
        return EXIT_FAIL
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
