"""Axiom reports: named pass/fail items with basis-level witnesses.

Checkers compare both sides of an identity as whole matrices; failing
columns are decoded back into basis labels so a report can say exactly
where an axiom broke, e.g. ``fails at (g, x)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .fields import Field, Scalar
from .linmap import LinMap, Space, tensor_labels

MAX_WITNESSES = 10


def format_combination(field: Field, labels: Sequence[str], vec: Sequence[Scalar]) -> str:
    """Render a coordinate vector as a linear combination of basis labels."""
    terms = []
    for label, x in zip(labels, vec):
        if not x:
            continue
        s = field.format(x)
        terms.append(label if s == "1" else f"{s}*{label}")
    return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class Witness:
    """One failing basis tuple with both sides written out."""

    inputs: tuple[str, ...]
    lhs: str
    rhs: str

    def render(self) -> str:
        where = ", ".join(self.inputs) if self.inputs else "()"
        return f"fails at ({where}): lhs = {self.lhs}, rhs = {self.rhs}"


@dataclass(frozen=True)
class AxiomCheck:
    name: str
    passed: bool
    witnesses: tuple[Witness, ...] = ()
    failure_count: int = 0

    def prefixed(self, prefix: str) -> "AxiomCheck":
        return AxiomCheck(f"{prefix}{self.name}", self.passed, self.witnesses, self.failure_count)


@dataclass(frozen=True)
class AxiomReport:
    items: tuple[AxiomCheck, ...]

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)

    def item(self, name: str) -> AxiomCheck:
        for it in self.items:
            if it.name == name:
                return it
        raise KeyError(name)

    def failing(self) -> tuple[str, ...]:
        return tuple(it.name for it in self.items if not it.passed)

    def render_text(self) -> str:
        lines = []
        for it in self.items:
            if it.passed:
                lines.append(f"[PASS] {it.name}")
            else:
                shown = len(it.witnesses)
                lines.append(f"[FAIL] {it.name}: {it.failure_count} failing basis tuples"
                             f" (showing {shown})")
                for w in it.witnesses:
                    lines.append(f"    {w.render()}")
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "items": [
                {
                    "name": it.name,
                    "passed": it.passed,
                    "failure_count": it.failure_count,
                    "witnesses": [
                        {"inputs": list(w.inputs), "lhs": w.lhs, "rhs": w.rhs}
                        for w in it.witnesses
                    ],
                }
                for it in self.items
            ],
        }


def combine_reports(*parts: AxiomReport | AxiomCheck, prefix: str = "") -> AxiomReport:
    items: list[AxiomCheck] = []
    for part in parts:
        if isinstance(part, AxiomCheck):
            items.append(part.prefixed(prefix))
        else:
            items.extend(it.prefixed(prefix) for it in part.items)
    return AxiomReport(tuple(items))


def _domain_label_tuples(domain: Sequence[Space]) -> list[tuple[str, ...]]:
    if not domain:
        return [()]
    return list(itertools.product(*(s.labels for s in domain)))


def compare_maps(name: str, lhs: LinMap, rhs: LinMap,
                 max_witnesses: int = MAX_WITNESSES) -> AxiomCheck:
    """Entrywise equality of two maps, reported per failing domain basis tuple."""
    if lhs.domain != rhs.domain or lhs.codomain != rhs.codomain:
        raise ValueError(f"{name}: cannot compare maps with different shapes")
    cols = [c for c in range(lhs.dom_dim)
            if any(row[c] != rrow[c] for row, rrow in zip(lhs.matrix, rhs.matrix))]
    if not cols:
        return AxiomCheck(name, True)
    inputs = _domain_label_tuples(lhs.domain)
    cod_labels = tensor_labels(lhs.codomain)
    witnesses = tuple(
        Witness(
            inputs[c],
            format_combination(lhs.field, cod_labels, lhs.column(c)),
            format_combination(lhs.field, cod_labels, rhs.column(c)),
        )
        for c in cols[:max_witnesses]
    )
    return AxiomCheck(name, False, witnesses, len(cols))


def compare_vectors(name: str, field: Field, labels: Sequence[str],
                    lhs: Sequence[Scalar], rhs: Sequence[Scalar],
                    inputs: tuple[str, ...] = ()) -> AxiomCheck:
    """Exact equality of two coordinate vectors as a one-item check."""
    if tuple(lhs) == tuple(rhs):
        return AxiomCheck(name, True)
    witness = Witness(
        inputs,
        format_combination(field, labels, lhs),
        format_combination(field, labels, rhs),
    )
    return AxiomCheck(name, False, (witness,), 1)


class CheckFailedError(Exception):
    """An axiom check that is a precondition of a construction failed."""

    def __init__(self, message: str, report: AxiomReport):
        super().__init__(f"{message}: failing axioms {list(report.failing())}")
        self.report = report


class InternalCheckError(RuntimeError):
    """A self-check that should be impossible to fail did fail (a bug)."""
