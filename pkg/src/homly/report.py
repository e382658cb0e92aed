"""Check reports: per-axiom verdicts with exact counterexample residuals."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .expr import QTensor

DEFAULT_MAX_COUNTEREXAMPLES = 5


@dataclass(frozen=True)
class Counterexample:
    indices: tuple[int, ...]
    residual: tuple[Fraction, ...]


@dataclass(frozen=True)
class AxiomVerdict:
    axiom_id: str
    passed: bool
    counterexamples: tuple[Counterexample, ...] = ()
    failure_count: int = 0
    checked_tuples: int = 0
    variables: tuple[str, ...] = ()

    @property
    def truncated(self) -> bool:
        return self.failure_count > len(self.counterexamples)


@dataclass(frozen=True)
class CheckReport:
    suite_id: str
    axiom_verdicts: tuple[AxiomVerdict, ...]
    informational: tuple[AxiomVerdict, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.axiom_verdicts)

    @property
    def checked_tuples(self) -> int:
        return sum(v.checked_tuples for v in self.axiom_verdicts)

    def verdict(self, axiom_id: str) -> AxiomVerdict:
        for v in self.axiom_verdicts + self.informational:
            if v.axiom_id == axiom_id:
                return v
        raise KeyError(axiom_id)

    def verdicts(self) -> dict[str, bool]:
        return {v.axiom_id: v.passed for v in self.axiom_verdicts}

    def first_failure(self) -> tuple[str, Counterexample] | None:
        for v in self.axiom_verdicts:
            if not v.passed:
                return v.axiom_id, v.counterexamples[0]
        return None


def verdict_from_residual(
    axiom_id: str,
    variables: tuple[str, ...],
    residual: QTensor,
    max_counterexamples: int = DEFAULT_MAX_COUNTEREXAMPLES,
) -> AxiomVerdict:
    """Turn a residual tensor (variable axes, then output axis) into a verdict.

    Failing tuples come out of ``np.argwhere`` in row-major order, which is the
    lexicographic order on index tuples.
    """
    num = residual.num
    k = len(variables)
    checked = int(np.prod(num.shape[:k], dtype=object)) if k else 1
    if num.size == 0:
        return AxiomVerdict(axiom_id, True, (), 0, checked, variables)
    mask = np.not_equal(num, 0).any(axis=-1)
    bad = np.argwhere(mask)
    examples = []
    for row in bad[:max_counterexamples]:
        idx = tuple(int(i) for i in row)
        vec = tuple(Fraction(int(v), residual.den) for v in num[idx])
        examples.append(Counterexample(idx, vec))
    return AxiomVerdict(axiom_id, len(bad) == 0, tuple(examples), int(len(bad)), checked, variables)


def merge_reports(suite_id: str, reports: list[CheckReport], prefix: bool = True) -> CheckReport:
    verdicts = []
    info = []
    for r in reports:
        for v in r.axiom_verdicts:
            verdicts.append(_prefixed(v, r.suite_id) if prefix else v)
        for v in r.informational:
            info.append(_prefixed(v, r.suite_id) if prefix else v)
    return CheckReport(suite_id, tuple(verdicts), tuple(info))


def _prefixed(v: AxiomVerdict, suite_id: str) -> AxiomVerdict:
    return AxiomVerdict(f"{suite_id}/{v.axiom_id}", v.passed, v.counterexamples,
                        v.failure_count, v.checked_tuples, v.variables)
