"""Audited external facts.

A handful of verification steps rest on results that cannot be recomputed
here: dimensions of particular cusp form spaces, minimal discriminants of
totally real fields, and an analytic discriminant bound.  Those facts live
in a versioned JSON document, each with a citation string, and every
report that consumes one echoes it back so the run can be audited.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Any, Mapping, Optional


class MissingFixtureError(KeyError):
    """A verification step asked for an external fact that is not on file."""

    def __init__(self, key: str):
        super().__init__(key)
        self.key = key

    def __str__(self) -> str:
        return f"missing fixture fact: {self.key}"


@dataclass(frozen=True)
class Fixture:
    key: str
    statement: str
    source: str
    conditional_on: str
    data: Mapping[str, Any]

    def echo(self) -> dict:
        return {
            "key": self.key,
            "statement": self.statement,
            "source": self.source,
            "conditional_on": self.conditional_on,
        }


class Fixtures:
    """Lookup table of externally computed facts."""

    def __init__(self, facts: Mapping[str, Fixture], origin: str = "builtin"):
        self._facts = dict(facts)
        self.origin = origin

    @classmethod
    def from_document(cls, doc: Mapping, origin: str = "builtin") -> "Fixtures":
        facts = {}
        for key, body in doc.get("facts", {}).items():
            facts[key] = Fixture(
                key=key,
                statement=body.get("statement", ""),
                source=body.get("source", ""),
                conditional_on=body.get("conditional_on", ""),
                data=body.get("data", {}),
            )
        return cls(facts, origin=origin)

    @classmethod
    def load(cls, path: Optional[str] = None) -> "Fixtures":
        if path is None:
            text = (
                resources.files("eigenprod.data")
                .joinpath("fixtures.json")
                .read_text(encoding="utf-8")
            )
            origin = "builtin"
        else:
            with open(path, "r", encoding="utf-8") as handle:
                text = handle.read()
            origin = str(path)
        return cls.from_document(json.loads(text), origin=origin)

    def get(self, key: str) -> Fixture:
        try:
            return self._facts[key]
        except KeyError:
            raise MissingFixtureError(key) from None

    def __contains__(self, key: str) -> bool:
        return key in self._facts

    def keys(self):
        return sorted(self._facts)


# typed accessors; each raises MissingFixtureError if the fact is absent
# and ValueError if the document carries it in a mangled form


def takeuchi_constants(fixtures: Fixtures) -> tuple[Fraction, Fraction]:
    data = fixtures.get("takeuchi_disc_bound").data
    try:
        return Fraction(data["a"]), Fraction(data["b"])
    except (KeyError, ValueError) as exc:
        raise ValueError(f"malformed takeuchi_disc_bound data: {exc}") from None


def voight_min_disc(fixtures: Fixtures, degree: int) -> int:
    data = fixtures.get("voight_min_totally_real_disc").data
    try:
        return int(data[str(degree)])
    except KeyError:
        raise MissingFixtureError(
            f"voight_min_totally_real_disc[{degree}]"
        ) from None


def magma_weight_range(fixtures: Fixtures) -> tuple[int, int, int]:
    """(discriminant, weight_min, weight_max) of the computed dim > 1 range."""
    data = fixtures.get("magma_dim_d8").data
    try:
        return int(data["discriminant"]), int(data["weight_min"]), int(data["weight_max"])
    except (KeyError, ValueError) as exc:
        raise ValueError(f"malformed magma_dim_d8 data: {exc}") from None


def ishikawa_zero_dim_fields(fixtures: Fixtures) -> frozenset[int]:
    data = fixtures.get("ishikawa_weight2_dim").data
    try:
        dims = data["dim_s2"]
        return frozenset(int(d) for d, dim in dims.items() if int(dim) == 0)
    except (KeyError, ValueError) as exc:
        raise ValueError(f"malformed ishikawa_weight2_dim data: {exc}") from None
