"""Counters for exhaustive law and proposition checks."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable

MAX_WITNESSES = 10


def _plain(obj: Any) -> Any:
    if hasattr(obj, "blocks"):
        return str(obj)
    if isinstance(obj, (list, tuple)):
        return [_plain(o) for o in obj]
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if hasattr(obj, "item"):
        return obj.item()
    return obj


@dataclass
class LawReport:
    """Counts for one algebraic law over an exhaustive instance space.

    ``informational`` entries record known ambiguities; their violations
    are reported but never make a run fail.
    """

    law: str
    k: int | None = None
    pairs_tested: int = 0
    defined_pairs: int = 0
    violations: int = 0
    witnesses: list = field(default_factory=list)
    informational: bool = False
    note: str = ""

    def record(self, defined: bool, ok: bool = True, witness: Any = None) -> None:
        self.pairs_tested += 1
        if not defined:
            return
        self.defined_pairs += 1
        if not ok:
            self.violations += 1
            if len(self.witnesses) < MAX_WITNESSES:
                self.witnesses.append(witness)

    @property
    def passed(self) -> bool:
        return self.informational or self.violations == 0

    def to_dict(self) -> dict:
        out = {
            "law": self.law,
            "k": self.k,
            "pairsTested": self.pairs_tested,
            "definedPairs": self.defined_pairs,
            "violations": self.violations,
            "witnesses": _plain(self.witnesses),
        }
        if self.informational:
            out["informational"] = True
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class PropReport:
    """Hypothesis/conclusion counters for an implication checked on many instances."""

    prop: str
    instances: int = 0
    hypothesis_held: int = 0
    conclusion_held: int = 0
    violations: int = 0
    witnesses: list = field(default_factory=list)
    informational: bool = False
    note: str = ""

    def record(self, hypothesis: bool, conclusion: bool, witness: Any = None) -> None:
        self.instances += 1
        self.hypothesis_held += bool(hypothesis)
        self.conclusion_held += bool(conclusion)
        if hypothesis and not conclusion:
            self.violations += 1
            if len(self.witnesses) < MAX_WITNESSES:
                self.witnesses.append(witness)

    @property
    def vacuous(self) -> int:
        return self.instances - self.hypothesis_held

    @property
    def passed(self) -> bool:
        return self.informational or self.violations == 0

    def to_dict(self) -> dict:
        out = {
            "prop": self.prop,
            "instances": self.instances,
            "hypothesisHeld": self.hypothesis_held,
            "conclusionHeld": self.conclusion_held,
            "violations": self.violations,
            "vacuous": self.vacuous,
            "witnesses": _plain(self.witnesses),
        }
        if self.informational:
            out["informational"] = True
        if self.note:
            out["note"] = self.note
        return out


def all_passed(reports: Iterable[LawReport | PropReport]) -> bool:
    return all(r.passed for r in reports)
