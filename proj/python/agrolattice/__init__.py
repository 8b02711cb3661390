"""Closed spatio-temporal triples, their lattice and temporal rules."""

import json
from fractions import Fraction
from typing import NamedTuple

from ._core import (
    AgroError,
    Cube,
    ParseError,
    UnknownLabel,
    build_lattice,
    lattice_dot,
    mine_triples,
    oracle_triples,
    orientations_isomorphic,
)
from ._core import conformance_json as _conformance_json
from ._core import mine_rules as _mine_rules

__all__ = [
    "AgroError",
    "Cube",
    "ParseError",
    "Rule",
    "UnknownLabel",
    "build_lattice",
    "conformance",
    "lattice_dot",
    "mine_rules",
    "mine_triples",
    "oracle_triples",
    "orientations_isomorphic",
]


class Rule(NamedTuple):
    antecedent: list
    consequent: list
    timestamps: list
    support: tuple  # (numerator, denominator), unreduced
    confidence: tuple

    @property
    def support_value(self) -> Fraction:
        return Fraction(*self.support)

    @property
    def confidence_value(self) -> Fraction:
        return Fraction(*self.confidence)


def mine_rules(cube, min_support="0", min_confidence="0", denominator="locations"):
    """Rules meeting both minimums. Thresholds are decimal or p/q strings."""
    return [Rule(*r) for r in _mine_rules(cube, str(min_support), str(min_confidence), denominator)]


def conformance(cube):
    return json.loads(_conformance_json(cube))
