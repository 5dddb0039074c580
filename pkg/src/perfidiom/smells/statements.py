"""Statement-shaped detectors: mergeable assignment runs and star-unpackable calls."""

from __future__ import annotations

import ast

from perfidiom.smells.base import (
    Detection,
    SmellKind,
    iter_blocks,
    make_detection,
    names_in,
    referenced_after,
)
from perfidiom.syntax import SourceRange, SourceUnit, is_pure, structural_equal as same_expr


def _simple_target_assign(stmt: ast.stmt) -> tuple[ast.expr, ast.expr] | None:
    """(target, value) for a one-target assignment to a name/attribute/subscript."""
    if not isinstance(stmt, ast.Assign) or len(stmt.targets) != 1:
        return None
    target = stmt.targets[0]
    if not isinstance(target, (ast.Name, ast.Attribute, ast.Subscript)):
        return None
    if not is_pure(target):
        return None
    return target, stmt.value


def _root_name(target: ast.expr) -> str | None:
    node = target
    while isinstance(node, (ast.Attribute, ast.Subscript)):
        node = node.value
    return node.id if isinstance(node, ast.Name) else None


def _match_swap(unit: SourceUnit, s1: ast.stmt, s2: ast.stmt, s3: ast.stmt):
    """``t = X; X = Y; Y = t`` with t dead afterwards -> ``X, Y = Y, X``."""
    p1 = _simple_target_assign(s1)
    p2 = _simple_target_assign(s2)
    p3 = _simple_target_assign(s3)
    if p1 is None or p2 is None or p3 is None:
        return None
    temp, x_read = p1
    x_store, y_read = p2
    y_store, temp_read = p3
    if not isinstance(temp, ast.Name) or not isinstance(temp_read, ast.Name):
        return None
    if temp_read.id != temp.id:
        return None
    if not same_expr(x_read, x_store) or not same_expr(y_read, y_store):
        return None
    if same_expr(x_store, y_store):
        return None
    # Reordered reads in the tuple form require both sides re-evaluable.
    if not is_pure(x_read) or not is_pure(y_read):
        return None
    if temp.id in names_in(x_read) | names_in(y_read):
        return None
    if referenced_after(unit, s3, {temp.id}):
        return None
    return ast.Assign(
        targets=[ast.Tuple(elts=[x_store, y_store], ctx=ast.Store())],
        value=ast.Tuple(elts=[y_read, x_read], ctx=ast.Load()),
    )


def _merge_run(run: list[tuple[ast.stmt, ast.expr, ast.expr]]) -> ast.Assign:
    return ast.Assign(
        targets=[ast.Tuple(elts=[t for _, t, _ in run], ctx=ast.Store())],
        value=ast.Tuple(elts=[v for _, _, v in run], ctx=ast.Load()),
    )


def detect_assign_multi_targets(unit: SourceUnit) -> list[Detection]:
    """Swap-via-temporary and mergeable assignment runs -> one tuple assignment."""
    detections = []
    for block in iter_blocks(unit):
        run: list[tuple[ast.stmt, ast.expr, ast.expr]] = []
        footprints: set[str] = set()
        target_dumps: set[str] = set()

        def flush():
            nonlocal run, footprints, target_dumps
            if len(run) >= 2:
                detections.append(
                    make_detection(
                        unit,
                        SmellKind.ASSIGN_MULTI_TARGETS,
                        [s for s, _, _ in run],
                        _merge_run(run),
                    )
                )
            run = []
            footprints = set()
            target_dumps = set()

        i = 0
        while i < len(block):
            if i + 2 < len(block):
                swap = _match_swap(unit, block[i], block[i + 1], block[i + 2])
                if swap is not None:
                    flush()
                    detections.append(
                        make_detection(
                            unit, SmellKind.ASSIGN_MULTI_TARGETS, block[i : i + 3], swap
                        )
                    )
                    i += 3
                    continue
            parts = _simple_target_assign(block[i])
            if parts is None:
                flush()
                i += 1
                continue
            target, value = parts
            root = _root_name(target)
            key = ast.dump(target, include_attributes=False)
            joinable = (
                root is not None
                and key not in target_dumps
                and not (names_in(value) & footprints)
            )
            if not joinable:
                flush()
            if root is None:
                i += 1
                continue
            run.append((block[i], target, value))
            footprints.add(root)
            target_dumps.add(key)
            i += 1
        flush()
    detections.sort(key=lambda d: d.start)
    return detections


def _int_literal(node: ast.expr) -> int | None:
    """Integer constants, including negatives written as unary minus."""
    if isinstance(node, ast.Constant) and type(node.value) is int:
        return node.value
    if (
        isinstance(node, ast.UnaryOp)
        and isinstance(node.op, ast.USub)
        and isinstance(node.operand, ast.Constant)
        and type(node.operand.value) is int
    ):
        return -node.operand.value
    return None


def _starrable_run(args: list[ast.expr], start: int, min_run: int):
    """Length of the consecutive-subscript run beginning at ``start`` (0 if < min)."""
    first = args[start]
    if not isinstance(first, ast.Subscript):
        return 0, None, None
    base = first.value
    if not is_pure(base):
        return 0, None, None
    c = _int_literal(first.slice)
    if c is None:
        return 0, None, None
    length = 1
    for arg in args[start + 1 :]:
        if (
            isinstance(arg, ast.Subscript)
            and same_expr(arg.value, base)
            and _int_literal(arg.slice) == c + length
        ):
            length += 1
        else:
            break
    if length < min_run:
        return 0, None, None
    return length, base, c


def _star_rewrite(call: ast.Call, min_run: int) -> ast.Call | None:
    new_args: list[ast.expr] = []
    changed = False
    i = 0
    while i < len(call.args):
        length, base, c = _starrable_run(call.args, i, min_run)
        if length:
            upper = c + length
            new_args.append(
                ast.Starred(
                    value=ast.Subscript(
                        value=base,
                        slice=ast.Slice(
                            lower=ast.Constant(value=c),
                            upper=ast.Constant(value=upper) if upper != 0 else None,
                        ),
                        ctx=ast.Load(),
                    ),
                    ctx=ast.Load(),
                )
            )
            changed = True
            i += length
        else:
            new_args.append(call.args[i])
            i += 1
    if not changed:
        return None
    return ast.Call(func=call.func, args=new_args, keywords=call.keywords)


def detect_call_star(unit: SourceUnit, min_run: int = 2) -> list[Detection]:
    """Consecutive indexed arguments from one pure base -> a starred slice."""
    detections = []
    claimed: list[SourceRange] = []
    # Outermost call wins: a detected call's rewrite covers its whole span, so
    # calls nested inside it are not reported separately.
    calls = sorted(
        (n for n in unit.nodes() if isinstance(n, ast.Call)),
        key=lambda n: (n.lineno, n.col_offset, -(n.end_lineno), -(n.end_col_offset)),
    )
    for call in calls:
        span = SourceRange.of(call)
        if any(outer.contains(span) for outer in claimed):
            continue
        rewrite = _star_rewrite(call, min_run)
        if rewrite is None:
            continue
        claimed.append(span)
        detections.append(make_detection(unit, SmellKind.CALL_STAR, [call], rewrite))
    detections.sort(key=lambda d: d.start)
    return detections
