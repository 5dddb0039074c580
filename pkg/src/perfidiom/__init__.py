"""perfidiom: performance-smell detection and idiomatic rewriting for Python code."""

from perfidiom.syntax import (
    ParseError,
    ScopeInfo,
    SourceRange,
    SourceUnit,
    enclosing_scope,
    parse_unit,
    structural_equal,
)
from perfidiom.smells import Detection, SmellKind, scan_unit

__version__ = "0.1.0"

__all__ = [
    "Detection",
    "ParseError",
    "ScopeInfo",
    "SmellKind",
    "SourceRange",
    "SourceUnit",
    "enclosing_scope",
    "parse_unit",
    "scan_unit",
    "structural_equal",
    "__version__",
]
