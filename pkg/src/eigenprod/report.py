"""Deterministic, serializable verification reports.

A report collects everything one verification run established: the
candidate triples with the reason each was eliminated, reproduced tables,
every certified constant with its enclosure, and the external facts that
were consumed.  Serialization is canonical so identical runs produce byte
identical files.
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Optional

from .fixtures import Fixture
from .interval import Decision, Outcome

ENCLOSURE_DIGITS = 30

# candidate statuses
ELIMINATED_BY_BOUND = "EliminatedByBound"
ELIMINATED_BY_EXACT_IDENTITY = "EliminatedByExactIdentity"
ELIMINATED_BY_DIMENSION = "EliminatedByDimension"
ELIMINATED_BY_FIXTURE = "EliminatedByFixture"
SURVIVOR = "Survivor"

VERDICT_NO_IDENTITY = "no identity exists"
VERDICT_INCONCLUSIVE = "inconclusive"
VERDICT_FAILED = "verification failed"


def format_decimal(value, digits: int = ENCLOSURE_DIGITS, rounding: str = "floor") -> str:
    """Exact decimal rendering of a rational, directed at `digits` places.

    rounding 'floor' rounds toward minus infinity and 'ceil' toward plus
    infinity, so a (floor, ceil) pair printed for an interval still
    brackets it.
    """
    fr = Fraction(value)
    scaled = fr * 10**digits
    if rounding == "floor":
        units = scaled.numerator // scaled.denominator
    elif rounding == "ceil":
        units = -((-scaled.numerator) // scaled.denominator)
    else:
        raise ValueError(f"unknown rounding {rounding!r}")
    sign = "-" if units < 0 else ""
    whole, frac = divmod(abs(units), 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def fraction_str(value) -> str:
    fr = Fraction(value)
    if fr.denominator == 1:
        return str(fr.numerator)
    return f"{fr.numerator}/{fr.denominator}"


def certified_real_json(enclosure) -> dict:
    return {
        "lo": format_decimal(enclosure.lo, rounding="floor"),
        "hi": format_decimal(enclosure.hi, rounding="ceil"),
        "precision": enclosure.precision,
    }


@dataclass(frozen=True)
class CheckRecord:
    """One certified comparison: `name` states what the enclosure was
    compared against; the decision carries outcome and diagnostics."""

    name: str
    relation: str
    threshold: Fraction
    decision: Decision

    def to_json(self) -> dict:
        enc = self.decision.enclosure
        return {
            "name": self.name,
            "relation": self.relation,
            "threshold": fraction_str(self.threshold),
            "outcome": self.decision.outcome.value,
            "precision": self.decision.precision_used,
            "enclosure": None if enc is None else certified_real_json(enc),
            "note": self.decision.note,
        }


@dataclass(frozen=True)
class CandidateRecord:
    """A (D, k1, k2) triple, or a symbolic family of them, with the
    elimination that disposed of it."""

    status: str
    detail: str
    d: Optional[int] = None
    k1: Optional[int] = None
    k2: Optional[int] = None
    label: str = ""

    def to_json(self) -> dict:
        return {
            "D": self.d,
            "k1": self.k1,
            "k2": self.k2,
            "label": self.label,
            "status": self.status,
            "detail": self.detail,
        }


@dataclass
class VerificationReport:
    section: str
    verdict: str = VERDICT_FAILED
    candidates: list = field(default_factory=list)
    tables: dict = field(default_factory=dict)
    constants: list = field(default_factory=list)
    fixtures_used: list = field(default_factory=list)
    interpretations: list = field(default_factory=list)

    @property
    def inconclusive(self) -> int:
        return sum(
            1
            for rec in self.constants
            if rec.decision.outcome is Outcome.INCONCLUSIVE
        )

    @property
    def survivors(self) -> list:
        return [c for c in self.candidates if c.status == SURVIVOR]

    def to_json_dict(self) -> dict:
        return {
            "section": self.section,
            "verdict": self.verdict,
            "candidates": [c.to_json() for c in self.candidates],
            "tables": self.tables,
            "constants": [c.to_json() for c in self.constants],
            "fixtures": self.fixtures_used,
            "interpretations": list(self.interpretations),
            "inconclusive": self.inconclusive,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2) + "\n"


def resolve_verdict(report: VerificationReport) -> str:
    """Strict verdict: every recorded constant must be CertifiedTrue and
    every candidate eliminated.  Anything undecided is inconclusive, and a
    decided failure (a false certificate or a surviving candidate) is a
    verification failure, never softened."""
    outcomes = [rec.decision.outcome for rec in report.constants]
    if any(o is Outcome.INCONCLUSIVE for o in outcomes):
        return VERDICT_INCONCLUSIVE
    if any(o is Outcome.CERTIFIED_FALSE for o in outcomes):
        return VERDICT_FAILED
    if report.survivors:
        return VERDICT_FAILED
    return VERDICT_NO_IDENTITY


# ---------------------------------------------------------------------------
# table emitters


def _cell(value) -> str:
    if value is None:
        return "-"
    return str(value)


def tables_markdown(report: VerificationReport) -> str:
    lines = []
    for name in sorted(report.tables):
        table = report.tables[name]
        lines.append(f"## {name}")
        lines.append("")
        columns = table["columns"]
        lines.append("| " + " | ".join(columns) + " |")
        lines.append("| " + " | ".join("---" for _ in columns) + " |")
        for row in table["rows"]:
            lines.append("| " + " | ".join(_cell(v) for v in row) + " |")
        lines.append("")
    return "\n".join(lines)


def tables_csv(report: VerificationReport) -> str:
    lines = []
    for name in sorted(report.tables):
        table = report.tables[name]
        lines.append(name)
        lines.append(",".join(table["columns"]))
        for row in table["rows"]:
            lines.append(",".join("" if v is None else str(v) for v in row))
        lines.append("")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# golden baseline


def golden_tables() -> dict:
    text = (
        resources.files("eigenprod.data")
        .joinpath("golden_tables.json")
        .read_text(encoding="utf-8")
    )
    return json.loads(text)


def compare_to_golden(report: VerificationReport) -> list[str]:
    """Mismatch descriptions for every table of the report that has a
    golden baseline; empty when everything matches."""
    golden = golden_tables()
    mismatches = []
    for name, table in sorted(report.tables.items()):
        if name not in golden:
            continue
        baseline = golden[name]
        if table["columns"] != baseline["columns"]:
            mismatches.append(
                f"{name}: columns {table['columns']} != golden {baseline['columns']}"
            )
            continue
        computed = [list(row) for row in table["rows"]]
        expected = [list(row) for row in baseline["rows"]]
        if computed != expected:
            for row in computed:
                if row not in expected:
                    mismatches.append(f"{name}: computed row {row} not in golden table")
            for row in expected:
                if row not in computed:
                    mismatches.append(f"{name}: golden row {row} not reproduced")
            if not mismatches:
                mismatches.append(f"{name}: row order differs from golden table")
    return mismatches


def echo_fixtures(fixtures: list[Fixture]) -> list[dict]:
    return [f.echo() for f in sorted(fixtures, key=lambda f: f.key)]
