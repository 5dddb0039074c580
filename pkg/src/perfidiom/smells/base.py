"""Detection records and helpers shared by the nine smell detectors."""

from __future__ import annotations

import ast
from dataclasses import dataclass
from enum import Enum

from perfidiom.syntax import ScopeInfo, SourceRange, SourceUnit, enclosing_scope, render


class SmellKind(Enum):
    """The nine performance smells, labeled as they appear in detection output."""

    LIST_COMPREHENSION = "List Comprehension"
    SET_COMPREHENSION = "Set Comprehension"
    DICT_COMPREHENSION = "Dict Comprehension"
    CHAIN_COMPARE = "Chain Compare"
    TRUTH_VALUE_TEST = "Truth Value Test"
    FOR_ELSE = "For Else"
    ASSIGN_MULTI_TARGETS = "Assign Multi Targets"
    CALL_STAR = "Call Star"
    FOR_MULTI_TARGETS = "For Multi Targets"

    @classmethod
    def from_label(cls, label: str) -> "SmellKind":
        for kind in cls:
            if kind.value == label:
                return kind
        raise ValueError(f"unknown smell kind {label!r}; valid: {[k.value for k in cls]}")


@dataclass
class Detection:
    """One smell occurrence: where it is, what it says, and the suggested rewrite."""

    file_path: str
    scope: ScopeInfo
    kind: SmellKind
    compli_code: list[str]
    simple_code: list[str]
    ranges: list[SourceRange]
    keyno: None = None

    @property
    def start(self) -> tuple[int, int]:
        return (self.ranges[0].start_line, self.ranges[0].start_col)


def make_detection(
    unit: SourceUnit,
    kind: SmellKind,
    nodes: list[ast.AST],
    rewrite: ast.AST | list[ast.AST],
) -> Detection:
    """Build a Detection from the offending nodes and the synthesized rewrite."""
    ranges = sorted(SourceRange.of(n) for n in nodes)
    rewrites = rewrite if isinstance(rewrite, list) else [rewrite]
    simple: list[str] = []
    for node in rewrites:
        simple.extend(render(node).splitlines())
    return Detection(
        file_path=unit.path,
        scope=enclosing_scope(unit, ranges[0]),
        kind=kind,
        compli_code=unit.slice_lines(ranges),
        simple_code=simple,
        ranges=ranges,
    )


def iter_blocks(unit: SourceUnit):
    """Every statement list in the unit (module body, suites, handlers)."""
    return unit.blocks()


def names_in(node: ast.AST) -> set[str]:
    return {n.id for n in ast.walk(node) if isinstance(n, ast.Name)}


def target_names(target: ast.expr) -> set[str]:
    """Names bound by an assignment/loop target."""
    out: set[str] = set()
    for n in ast.walk(target):
        if isinstance(n, ast.Name):
            out.add(n.id)
    return out


def referenced_after(unit: SourceUnit, after: ast.stmt, names: set[str]) -> bool:
    """Whether any of ``names`` occurs in source positions after ``after`` ends."""
    boundary = (after.end_lineno, after.end_col_offset)
    positions = unit.name_positions()
    return any(
        positions.get(name) and positions[name][-1] >= boundary for name in names
    )


def call_count(node: ast.AST) -> int:
    return sum(1 for n in ast.walk(node) if isinstance(n, ast.Call))
