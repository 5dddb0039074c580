"""The nine performance-smell detectors and their rewrite synthesis."""

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
from perfidiom.smells.engine import ALL_KINDS, apply_detections, scan_unit
from perfidiom.smells.loops import detect_for_else, detect_for_multi_targets
from perfidiom.smells.statements import detect_assign_multi_targets, detect_call_star

DETECTORS = {
    SmellKind.LIST_COMPREHENSION: detect_list_comprehension,
    SmellKind.SET_COMPREHENSION: detect_set_comprehension,
    SmellKind.DICT_COMPREHENSION: detect_dict_comprehension,
    SmellKind.CHAIN_COMPARE: detect_chain_compare,
    SmellKind.TRUTH_VALUE_TEST: detect_truth_value_test,
    SmellKind.FOR_ELSE: detect_for_else,
    SmellKind.ASSIGN_MULTI_TARGETS: detect_assign_multi_targets,
    SmellKind.CALL_STAR: detect_call_star,
    SmellKind.FOR_MULTI_TARGETS: detect_for_multi_targets,
}

__all__ = [
    "ALL_KINDS",
    "DEFAULT_BOOL_CALL_ALLOWLIST",
    "DETECTORS",
    "Detection",
    "SmellKind",
    "apply_detections",
    "scan_unit",
    "detect_list_comprehension",
    "detect_set_comprehension",
    "detect_dict_comprehension",
    "detect_chain_compare",
    "detect_truth_value_test",
    "detect_for_else",
    "detect_assign_multi_targets",
    "detect_call_star",
    "detect_for_multi_targets",
]
