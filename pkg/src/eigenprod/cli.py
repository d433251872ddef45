"""Command line driver.

Runs section verifications and emits reports, plus thin query commands
over the exact-arithmetic layers.  Exit codes are part of the contract:

    0   every requested section ends with "no identity exists"
    1   a section failed (a decided-false certificate or a survivor)
    2   some decision stayed inconclusive at the precision ceiling
    3   a reproduced table disagrees with the golden baseline
    4   a required external fact is missing from the fixtures
    64  command line usage error

Identical configuration gives byte-identical output files.
"""

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from .exact import dedekind_zeta_neg
from .fixtures import Fixtures, MissingFixtureError
from .hmf_coeffs import verify_sqrt5_identity
from .quadfield import field_descriptor
from .report import (
    VERDICT_INCONCLUSIVE,
    VERDICT_NO_IDENTITY,
    VerificationReport,
    compare_to_golden,
    fraction_str,
    tables_csv,
    tables_markdown,
)
from .verifier import (
    DEFAULT_BASE_PRECISION,
    DEFAULT_D_LIMIT,
    DEFAULT_N_MAX,
    DEFAULT_PRECISION_CEILING,
    SECTION_DEGREE,
    SECTION_EQUAL,
    SECTION_INERT,
    SECTION_NONINERT,
    SECTION_ORDER,
    SECTION_UNEQUAL,
    exact_identity_scan,
    verify_section3_equal,
    verify_section3_unequal,
    verify_section4_inert,
    verify_section4_noninert,
    verify_section5,
)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INCONCLUSIVE = 2
EXIT_TABLE_MISMATCH = 3
EXIT_MISSING_FIXTURE = 4
EXIT_USAGE = 64

_FIXTURE_SECTIONS = (SECTION_INERT, SECTION_NONINERT, SECTION_DEGREE)


@dataclass(frozen=True)
class RunConfig:
    base_precision: int = DEFAULT_BASE_PRECISION
    precision_ceiling: int = DEFAULT_PRECISION_CEILING
    d_limit: int = DEFAULT_D_LIMIT
    n_max: int = DEFAULT_N_MAX
    fixtures_path: Optional[str] = None
    output_format: str = "json"
    out_dir: Optional[str] = None

    def __post_init__(self):
        if self.base_precision < 8:
            raise ValueError("base precision must be at least 8 bits")
        if self.base_precision > self.precision_ceiling:
            raise ValueError("base precision exceeds the precision ceiling")
        if self.d_limit < 41:
            raise ValueError("the discriminant limit must be at least 41")
        if self.n_max < 6:
            raise ValueError("n_max must be at least 6")
        if self.output_format not in ("json", "markdown", "csv"):
            raise ValueError(f"unknown output format: {self.output_format}")


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors, which collides with the
    # inconclusive exit code; use the conventional 64 instead
    def error(self, message):
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> _Parser:
    parser = _Parser(prog="eigenprod", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run section verifications")
    verify.add_argument(
        "section",
        nargs="?",
        default="all",
        choices=("all",) + SECTION_ORDER,
        help="which branch of the case analysis to run",
    )
    verify.add_argument(
        "--precision", type=int, default=DEFAULT_BASE_PRECISION, metavar="BITS"
    )
    verify.add_argument(
        "--precision-ceiling",
        type=int,
        default=DEFAULT_PRECISION_CEILING,
        metavar="BITS",
    )
    verify.add_argument("--d-limit", type=int, default=DEFAULT_D_LIMIT, metavar="D")
    verify.add_argument("--n-max", type=int, default=DEFAULT_N_MAX, metavar="N")
    verify.add_argument("--fixtures", default=None, metavar="PATH")
    verify.add_argument(
        "--format",
        dest="output_format",
        default="json",
        choices=("json", "markdown", "csv"),
    )
    verify.add_argument("--out-dir", default=None, metavar="DIR")

    zeta = sub.add_parser("zeta", help="exact zeta_F(1-k) for fundamental D")
    zeta.add_argument("D", type=int)
    zeta.add_argument("k", type=int)

    fld = sub.add_parser("field", help="invariants of one real quadratic field")
    fld.add_argument("D", type=int)

    scan = sub.add_parser(
        "scan", help="exhaustive exact residual scan for vanishing triples"
    )
    scan.add_argument("d_limit", type=int)
    scan.add_argument("k_limit", type=int)

    demo = sub.add_parser(
        "demo-sqrt5", help="re-check the E4 = 60*E2^2 identity coefficientwise"
    )
    demo.add_argument("trace_bound", type=int)
    return parser


def _run_section(
    section: str, cfg: RunConfig, fixtures: Optional[Fixtures]
) -> VerificationReport:
    if section == SECTION_UNEQUAL:
        return verify_section3_unequal(
            base_precision=cfg.base_precision,
            precision_ceiling=cfg.precision_ceiling,
        )
    if section == SECTION_EQUAL:
        return verify_section3_equal(
            cfg.d_limit, cfg.base_precision, cfg.precision_ceiling
        )
    if section == SECTION_INERT:
        return verify_section4_inert(
            cfg.d_limit, cfg.base_precision, cfg.precision_ceiling, fixtures
        )
    if section == SECTION_NONINERT:
        return verify_section4_noninert(
            cfg.d_limit, cfg.base_precision, cfg.precision_ceiling, fixtures
        )
    if section == SECTION_DEGREE:
        return verify_section5(
            cfg.n_max, cfg.base_precision, cfg.precision_ceiling, fixtures
        )
    raise ValueError(f"unknown section: {section}")


def _emit(report: VerificationReport, cfg: RunConfig) -> None:
    if cfg.out_dir is None:
        if cfg.output_format == "json":
            sys.stdout.write(report.to_json())
        else:
            render = tables_markdown if cfg.output_format == "markdown" else tables_csv
            sys.stdout.write(render(report))
        return
    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / f"report-{report.section}.json").write_text(
        report.to_json(), encoding="utf-8"
    )
    if report.tables and cfg.output_format == "markdown":
        (out / f"tables-{report.section}.md").write_text(
            tables_markdown(report), encoding="utf-8"
        )
    elif report.tables and cfg.output_format == "csv":
        (out / f"tables-{report.section}.csv").write_text(
            tables_csv(report), encoding="utf-8"
        )


def cmd_verify(section: str, cfg: RunConfig) -> int:
    sections = list(SECTION_ORDER) if section == "all" else [section]
    fixtures = None
    if any(s in _FIXTURE_SECTIONS for s in sections):
        try:
            fixtures = Fixtures.load(cfg.fixtures_path)
        except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
            print(f"fixtures error: {exc}", file=sys.stderr)
            return EXIT_MISSING_FIXTURE
    reports = []
    try:
        for s in sections:
            reports.append(_run_section(s, cfg, fixtures))
    except MissingFixtureError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_MISSING_FIXTURE
    mismatches = []
    for rep in reports:
        _emit(rep, cfg)
        mismatches.extend(compare_to_golden(rep))
    if cfg.out_dir is not None:
        for rep in reports:
            print(f"section {rep.section}: {rep.verdict}")
    for line in mismatches:
        print(f"golden mismatch: {line}", file=sys.stderr)
    if mismatches:
        return EXIT_TABLE_MISMATCH
    if any(rep.verdict == VERDICT_INCONCLUSIVE for rep in reports):
        return EXIT_INCONCLUSIVE
    if any(rep.verdict != VERDICT_NO_IDENTITY for rep in reports):
        return EXIT_FAILURE
    return EXIT_OK


def cmd_zeta(D: int, k: int) -> int:
    print(fraction_str(dedekind_zeta_neg(D, k)))
    return EXIT_OK


def cmd_field(D: int) -> int:
    f = field_descriptor(D)
    print(f"discriminant: {f.discriminant}")
    print(f"radicand: {f.radicand}")
    print(f"splitting of 2: {f.two_splitting.value}")
    print(f"narrow class number: {f.narrow_class_number}")
    return EXIT_OK


def cmd_scan(d_limit: int, k_limit: int) -> int:
    for triple in exact_identity_scan(d_limit, k_limit):
        print(triple)
    return EXIT_OK


def cmd_demo_sqrt5(trace_bound: int) -> int:
    rep = verify_sqrt5_identity(trace_bound)
    print(f"scalar from constant terms: {fraction_str(rep.scalar)}")
    print(
        "constant term check: "
        f"{fraction_str(rep.scalar)} * (1/120)^2 = 1/240: "
        f"{'ok' if rep.constant_term_ok else 'FAILED'}"
    )
    print(f"coefficients compared up to trace {rep.trace_bound}: {rep.coefficients_checked}")
    for line in rep.mismatches:
        print(f"mismatch: {line}")
    if rep.passed:
        print("all coefficients verified: E4 = 60*E2^2")
        return EXIT_OK
    print("identity check FAILED")
    return EXIT_FAILURE


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            cfg = RunConfig(
                base_precision=args.precision,
                precision_ceiling=args.precision_ceiling,
                d_limit=args.d_limit,
                n_max=args.n_max,
                fixtures_path=args.fixtures,
                output_format=args.output_format,
                out_dir=args.out_dir,
            )
            return cmd_verify(args.section, cfg)
        if args.command == "zeta":
            return cmd_zeta(args.D, args.k)
        if args.command == "field":
            return cmd_field(args.D)
        if args.command == "scan":
            return cmd_scan(args.d_limit, args.k_limit)
        if args.command == "demo-sqrt5":
            return cmd_demo_sqrt5(args.trace_bound)
    except ValueError as exc:
        print(f"eigenprod: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    raise AssertionError("unreachable: argparse enforces the command set")


def main_entry() -> None:
    sys.exit(main(sys.argv[1:]))
