"""Comparison-shaped detectors: chain compare and truth value test."""

from __future__ import annotations

import ast

from perfidiom.smells.base import Detection, SmellKind, make_detection
from perfidiom.syntax import SourceRange, SourceUnit, is_pure, structural_equal

DEFAULT_BOOL_CALL_ALLOWLIST = ("isinstance", "callable", "hasattr", "issubclass")

_ORDER_OPS = (ast.Lt, ast.LtE, ast.Gt, ast.GtE)


def _simple_compare(node: ast.expr) -> tuple[ast.expr, ast.cmpop, ast.expr] | None:
    if isinstance(node, ast.Compare) and len(node.ops) == 1:
        return node.left, node.ops[0], node.comparators[0]
    return None


def _ascending(left: ast.expr, op: ast.cmpop, right: ast.expr):
    """Orient an ordering comparison as (low, <|<=, high)."""
    if isinstance(op, ast.Lt):
        return left, ast.Lt(), right
    if isinstance(op, ast.LtE):
        return left, ast.LtE(), right
    if isinstance(op, ast.Gt):
        return right, ast.Lt(), left
    if isinstance(op, ast.GtE):
        return right, ast.LtE(), left
    return None


class _Chain:
    """A growing comparison chain: operands o0 op1 o1 op2 o2 ..."""

    def __init__(self, operands, ops):
        self.operands = list(operands)
        self.ops = list(ops)

    def to_compare(self) -> ast.Compare:
        return ast.Compare(
            left=self.operands[0], ops=self.ops, comparators=self.operands[1:]
        )


def _start_chain(c1, c2) -> _Chain | None:
    """Try to fuse two comparisons into a chain around a shared pure operand."""
    p1, p2 = _simple_compare(c1), _simple_compare(c2)
    if p1 is None or p2 is None:
        return None
    ordering1 = isinstance(p1[1], _ORDER_OPS)
    ordering2 = isinstance(p2[1], _ORDER_OPS)
    if ordering1 and ordering2:
        a1, o1, b1 = _ascending(*p1)
        a2, o2, b2 = _ascending(*p2)
        if structural_equal(b1, a2) and is_pure(b1):
            return _Chain([a1, b1, b2], [o1, o2])
        if structural_equal(b2, a1) and is_pure(b2):
            return _Chain([a2, b2, b1], [o2, o1])
        return None
    if isinstance(p1[1], ast.Eq) and isinstance(p2[1], ast.Eq):
        a1, _, b1 = p1
        a2, _, b2 = p2
        for shared, outer1, outer2 in (
            (b1, a1, b2) if structural_equal(b1, a2) else (None, None, None),
            (b1, a1, a2) if structural_equal(b1, b2) else (None, None, None),
            (a1, b1, b2) if structural_equal(a1, a2) else (None, None, None),
            (a1, b1, a2) if structural_equal(a1, b2) else (None, None, None),
        ):
            if shared is not None and is_pure(shared):
                return _Chain([outer1, shared, outer2], [ast.Eq(), ast.Eq()])
    return None


def _extend_chain(chain: _Chain, nxt) -> bool:
    p = _simple_compare(nxt)
    if p is None:
        return False
    tail = chain.operands[-1]
    if isinstance(chain.ops[0], ast.Eq):
        if not isinstance(p[1], ast.Eq):
            return False
        a, _, b = p
        if structural_equal(a, tail) and is_pure(tail):
            chain.operands.append(b)
        elif structural_equal(b, tail) and is_pure(tail):
            chain.operands.append(a)
        else:
            return False
        chain.ops.append(ast.Eq())
        return True
    if not isinstance(p[1], _ORDER_OPS):
        return False
    a, o, b = _ascending(*p)
    if structural_equal(a, tail) and is_pure(tail):
        chain.operands.append(b)
        chain.ops.append(o)
        return True
    return False


def detect_chain_compare(unit: SourceUnit) -> list[Detection]:
    """Adjacent and-ed comparisons sharing a pure operand -> one chained comparison."""
    detections = []
    for node in unit.nodes():
        if not isinstance(node, ast.BoolOp) or not isinstance(node.op, ast.And):
            continue
        values = node.values
        i = 0
        while i < len(values) - 1:
            chain = _start_chain(values[i], values[i + 1])
            if chain is None:
                i += 1
                continue
            last = i + 1
            while last + 1 < len(values) and _extend_chain(chain, values[last + 1]):
                last += 1
            span = SourceRange(
                values[i].lineno,
                values[i].col_offset,
                values[last].end_lineno,
                values[last].end_col_offset,
            )
            det = make_detection(unit, SmellKind.CHAIN_COMPARE, [values[i]], chain.to_compare())
            det.ranges = [span]
            det.compli_code = unit.slice_lines([span])
            detections.append(det)
            i = last + 1
    detections.sort(key=lambda d: d.start)
    return detections


def _int_const(node: ast.expr, value: int) -> bool:
    return (
        isinstance(node, ast.Constant)
        and type(node.value) is int
        and node.value == value
    )


def _bool_const(node: ast.expr) -> bool | None:
    if isinstance(node, ast.Constant) and type(node.value) is bool:
        return node.value
    return None


def _boolean_contexts(unit: SourceUnit):
    """Expression nodes whose value is used only for its truth.

    and/or operands count only when the boolean operation itself sits in a
    boolean context: an operand's value can propagate out of `and`/`or`, and
    the truthiness rewrites do not preserve values, only truth.
    """
    roots = []
    for node in unit.nodes():
        if isinstance(node, (ast.If, ast.While, ast.IfExp, ast.Assert)):
            roots.append(node.test)
        elif isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.Not):
            roots.append(node.operand)
    while roots:
        expr = roots.pop()
        yield expr
        if isinstance(expr, ast.BoolOp):
            roots.extend(expr.values)


def _truthiness_rewrite(expr: ast.expr, allowlist: tuple[str, ...]) -> ast.expr | None:
    """Apply the explicit rewrite table; None when no rule matches."""
    parts = _simple_compare(expr)
    if parts is None:
        return None
    left, op, right = parts
    if isinstance(op, ast.Eq):
        # E % 2 == 1 keeps the remainder itself: it is already 0 or 1.
        if (
            _int_const(right, 1)
            and isinstance(left, ast.BinOp)
            and isinstance(left.op, ast.Mod)
            and _int_const(left.right, 2)
        ):
            return left
        if _int_const(right, 0):
            return ast.UnaryOp(op=ast.Not(), operand=left)
        return None
    if isinstance(op, ast.NotEq):
        if _int_const(right, 0):
            return left
        return None
    if isinstance(op, ast.Is):
        truth = _bool_const(right)
        if truth is None:
            return None
        if not (
            isinstance(left, ast.Call)
            and isinstance(left.func, ast.Name)
            and left.func.id in allowlist
        ):
            return None
        return left if truth else ast.UnaryOp(op=ast.Not(), operand=left)
    return None


def detect_truth_value_test(
    unit: SourceUnit, allowlist: tuple[str, ...] = DEFAULT_BOOL_CALL_ALLOWLIST
) -> list[Detection]:
    """Explicit zero/parity/is-bool comparisons in boolean contexts -> truthiness."""
    detections = []
    seen: set[tuple[int, int, int, int]] = set()
    for ctx in _boolean_contexts(unit):
        rewrite = _truthiness_rewrite(ctx, allowlist)
        if rewrite is None:
            continue
        key = (ctx.lineno, ctx.col_offset, ctx.end_lineno, ctx.end_col_offset)
        if key in seen:
            continue
        seen.add(key)
        detections.append(make_detection(unit, SmellKind.TRUTH_VALUE_TEST, [ctx], rewrite))
    detections.sort(key=lambda d: d.start)
    return detections
