"""Union driver over the nine detectors."""

from __future__ import annotations

from collections.abc import Iterable

from perfidiom.smells.base import Detection, SmellKind
from perfidiom.smells.comprehensions import (
    detect_dict_comprehension,
    detect_list_comprehension,
    detect_set_comprehension,
)
from perfidiom.smells.conditions import (
    DEFAULT_BOOL_CALL_ALLOWLIST,
    detect_chain_compare,
    detect_truth_value_test,
)
from perfidiom.smells.loops import detect_for_else, detect_for_multi_targets
from perfidiom.smells.statements import detect_assign_multi_targets, detect_call_star
from perfidiom.syntax import SourceUnit

ALL_KINDS = frozenset(SmellKind)


def scan_unit(
    unit: SourceUnit,
    enabled: Iterable[SmellKind] = ALL_KINDS,
    *,
    truth_value_allowlist: tuple[str, ...] = DEFAULT_BOOL_CALL_ALLOWLIST,
    call_star_min_run: int = 2,
) -> list[Detection]:
    """All detections of the enabled kinds, sorted by (line, col, kind label)."""
    enabled = set(enabled)
    detections: list[Detection] = []
    if SmellKind.LIST_COMPREHENSION in enabled:
        detections.extend(detect_list_comprehension(unit))
    if SmellKind.SET_COMPREHENSION in enabled:
        detections.extend(detect_set_comprehension(unit))
    if SmellKind.DICT_COMPREHENSION in enabled:
        detections.extend(detect_dict_comprehension(unit))
    if SmellKind.CHAIN_COMPARE in enabled:
        detections.extend(detect_chain_compare(unit))
    if SmellKind.TRUTH_VALUE_TEST in enabled:
        detections.extend(detect_truth_value_test(unit, truth_value_allowlist))
    if SmellKind.FOR_ELSE in enabled:
        detections.extend(detect_for_else(unit))
    if SmellKind.ASSIGN_MULTI_TARGETS in enabled:
        detections.extend(detect_assign_multi_targets(unit))
    if SmellKind.CALL_STAR in enabled:
        detections.extend(detect_call_star(unit, call_star_min_run))
    if SmellKind.FOR_MULTI_TARGETS in enabled:
        detections.extend(detect_for_multi_targets(unit))
    detections.sort(key=lambda d: (*d.start, d.kind.value))
    return detections


def apply_detections(text: str, detections: list[Detection]) -> str:
    """Splice every suggested rewrite into the source text.

    Each detection's span (first range start to last range end) is replaced
    by its simple_code, re-indented to the span's starting column. When spans
    of different kinds nest (a truth-value fix inside a loop that a
    comprehension rewrite replaces wholesale), the outermost rewrite wins and
    the inner ones are dropped; within one kind, spans never overlap.
    """
    from perfidiom.syntax import _line_offsets

    offsets = _line_offsets(text)

    def span(d: Detection) -> tuple[int, int, int]:
        first, last = d.ranges[0], d.ranges[-1]
        start = offsets[first.start_line - 1] + first.start_col
        end = offsets[last.end_line - 1] + last.end_col
        return start, end, first.start_col

    kept: list[tuple[tuple[int, int, int], Detection]] = []
    for key, d in sorted(
        ((span(d), d) for d in detections), key=lambda x: (x[0][0], -x[0][1])
    ):
        start, end, _ = key
        if all(end <= ks or start >= ke for (ks, ke, _), _ in kept):
            kept.append((key, d))

    out = text
    for (start, end, col), d in sorted(kept, key=lambda x: -x[0][0]):
        indent = " " * col
        replacement = ("\n" + indent).join(d.simple_code)
        out = out[:start] + replacement + out[end:]
    return out
