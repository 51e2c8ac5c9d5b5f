"""Command line interface: ``jlkdist run`` and ``jlkdist compare``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import TYPE_CHECKING

from pydantic_core import to_json

from jlkdist._errors import (
    BudgetExceededError,
    ConfigError,
    ContractViolationError,
    MebConvergenceError,
    PointCloudParseError,
)
from jlkdist._experiment import make_config, run, write_diagram_svgs
from jlkdist._experiment._report import CertificateSummary
from jlkdist._persistence import certify_interleaving, diagrams_from_json
from jlkdist._version import __version__

if TYPE_CHECKING:
    from collections.abc import Sequence

_logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_CONVERGENCE = 4
EXIT_CONFIG = 5

# command line flag -> ExperimentConfig field
_RUN_OPTIONS: list[tuple[str, str, dict[str, object]]] = [
    ("--input", "input_path", {"help": "CSV or whitespace separated points."}),
    ("--format", "input_format", {"choices": ["auto", "csv", "whitespace"]}),
    ("--k", "k", {"type": int}),
    ("--epsilon", "epsilon", {"type": float}),
    ("--delta", "delta", {"type": float}),
    (
        "--kind",
        "projector_kind",
        {"choices": ["gaussian", "rademacher", "sparse", "identity"]},
    ),
    ("--seed", "seed", {"type": int}),
    ("--dim", "target_dim", {"help": "auto-jl, auto-gw or an integer."}),
    ("--jl-constant", "jl_constant", {"type": float}),
    ("--filtration", "filtration", {"choices": ["exact-cech", "approx-cech", "rips"]}),
    ("--maxdeg", "max_homology_degree", {"type": int}),
    ("--alpha-max", "alpha_max", {"type": float}),
    ("--budget", "budget", {"type": int}),
    ("--probes", "probes", {"type": int}),
    ("--radius-checks", "radius_checks", {"type": int}),
    ("--radius-max-card", "radius_max_card", {"type": int}),
    ("--width-samples", "width_samples", {"type": int}),
    ("--n-jobs", "n_jobs", {"type": int}),
]


def build_parser() -> argparse.ArgumentParser:
    """Parser of the ``jlkdist`` command."""
    parser = argparse.ArgumentParser(
        prog="jlkdist",
        description="k-distance filtrations under random projections.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="Log debug messages to stderr."
    )
    commands = parser.add_subparsers(dest="command", required=True)
    run_parser = commands.add_parser(
        "run", help="Project a point cloud and audit its k-distance filtration."
    )
    for flag, dest, kwargs in _RUN_OPTIONS:
        run_parser.add_argument(flag, dest=dest, default=argparse.SUPPRESS, **kwargs)
    run_parser.add_argument(
        "--identity",
        action="store_true",
        help="Use the identity map instead of a random projection.",
    )
    run_parser.add_argument("--out", type=Path, required=True, help="Report path.")
    run_parser.add_argument("--svg", type=Path, help="Directory of diagram plots.")
    compare_parser = commands.add_parser(
        "compare", help="Certify the interleaving of two diagram files."
    )
    compare_parser.add_argument("before", type=Path)
    compare_parser.add_argument("after", type=Path)
    compare_parser.add_argument("--epsilon", type=float, required=True)
    compare_parser.add_argument("--cap", type=float)
    compare_parser.add_argument("--out", type=Path, help="Certificate path.")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point of the ``jlkdist`` command.

    Returns
    -------
    code : int
        0 on success (audits may still fail inside the report), 2 if the input
        can not be parsed, 3 if the barycentric cloud exceeds the budget, 4 if a
        weighted minimum enclosing ball does not converge, 5 if the
        configuration is invalid. Errors are written to stderr as a JSON object.
    """
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        if args.command == "run":
            return _run(args)
        return _compare(args)
    except PointCloudParseError as exc:
        return _fail("parse_error", exc, EXIT_PARSE, path=exc.path, line=exc.line)
    except BudgetExceededError as exc:
        return _fail(
            "budget_exceeded",
            exc,
            EXIT_BUDGET,
            n=exc.n,
            k=exc.k,
            count=exc.count,
            budget=exc.budget,
        )
    except MebConvergenceError as exc:
        return _fail(
            "meb_convergence",
            exc,
            EXIT_CONVERGENCE,
            residual=exc.residual,
            simplex=None if exc.simplex is None else list(exc.simplex),
        )
    except (ConfigError, ContractViolationError) as exc:
        return _fail("config_error", exc, EXIT_CONFIG)


def _run(args: argparse.Namespace) -> int:
    values = {
        dest: getattr(args, dest)
        for _, dest, _ in _RUN_OPTIONS
        if hasattr(args, dest)
    }
    if args.identity:
        values["projector_kind"] = "identity"
    config = make_config(**values)
    result = run(config)
    report = result.report
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(report.model_dump_json(indent=2) + "\n", encoding="utf-8")
    if args.svg is not None:
        write_diagram_svgs(
            result.diagrams_before,
            result.diagrams_after,
            args.svg,
            report.interleaving.beta,
            config.alpha_max,
        )
    verdict = "passes" if report.interleaving.passes else "fails"
    sys.stdout.write(
        f"interleaving {verdict}: log bottleneck "
        f"{report.interleaving.log_bottleneck} against "
        f"{report.interleaving.threshold:.6g}\n"
    )
    return EXIT_OK


def _compare(args: argparse.Namespace) -> int:
    diagrams = []
    for path in (args.before, args.after):
        try:
            diagrams.append(diagrams_from_json(path.read_bytes()))
        except (OSError, ContractViolationError) as exc:
            raise PointCloudParseError(f"invalid diagram file ({exc})", path)
    certificate = certify_interleaving(*diagrams, args.epsilon, cap=args.cap)
    summary = CertificateSummary.from_certificate(certificate, args.cap)
    payload = summary.model_dump_json(indent=2) + "\n"
    if args.out is None:
        sys.stdout.write(payload)
    else:
        args.out.write_text(payload, encoding="utf-8")
    return EXIT_OK


def _fail(kind: str, exc: Exception, code: int, **details: object) -> int:
    _logger.debug("Failed with %s.", kind, exc_info=exc)
    error = {"error": kind, "message": str(exc), "exit_code": code, **details}
    sys.stderr.write(to_json(error).decode() + "\n")
    return code
