"""Loop-shaped detectors: flag-checked exits and manual element extraction."""

from __future__ import annotations

import ast
import copy

from perfidiom.smells.base import (
    Detection,
    SmellKind,
    iter_blocks,
    make_detection,
    referenced_after,
)
from perfidiom.syntax import SourceUnit


def _bool_flag_init(stmt: ast.stmt) -> tuple[str, bool] | None:
    if (
        isinstance(stmt, ast.Assign)
        and len(stmt.targets) == 1
        and isinstance(stmt.targets[0], ast.Name)
        and isinstance(stmt.value, ast.Constant)
        and type(stmt.value.value) is bool
    ):
        return stmt.targets[0].id, stmt.value.value
    return None


def _own_level_statements(loop: ast.For):
    """Statements whose ``break`` would exit this loop (no nested loop bodies)."""
    stack = list(loop.body)
    while stack:
        stmt = stack.pop()
        yield stmt
        if isinstance(stmt, (ast.For, ast.AsyncFor, ast.While)):
            continue
        for attr in ("body", "orelse", "finalbody"):
            block = getattr(stmt, attr, None)
            if isinstance(block, list):
                stack.extend(s for s in block if isinstance(s, ast.stmt))
        for handler in getattr(stmt, "handlers", []) or []:
            stack.extend(handler.body)
        for case in getattr(stmt, "cases", []) or []:
            stack.extend(case.body)


def _flag_break_if(stmt: ast.stmt, flag: str, init_value: bool) -> bool:
    """``if C: flag = not init_value; break`` with no else."""
    if not isinstance(stmt, ast.If) or stmt.orelse or len(stmt.body) != 2:
        return False
    assign, brk = stmt.body
    if not isinstance(brk, ast.Break):
        return False
    set_to = _bool_flag_init(assign)
    return set_to is not None and set_to[0] == flag and set_to[1] is (not init_value)


def _flag_test(test: ast.expr, flag: str, init_value: bool) -> bool:
    """Post-loop test that is truthy exactly when the loop never broke."""
    if init_value:
        return isinstance(test, ast.Name) and test.id == flag
    return (
        isinstance(test, ast.UnaryOp)
        and isinstance(test.op, ast.Not)
        and isinstance(test.operand, ast.Name)
        and test.operand.id == flag
    )


def detect_for_else(unit: SourceUnit) -> list[Detection]:
    """Boolean flag tracking loop completion -> ``for ... else`` clause."""
    detections = []
    for block in iter_blocks(unit):
        for init, loop, post in zip(block, block[1:], block[2:]):
            flag_init = _bool_flag_init(init)
            if flag_init is None or not isinstance(loop, ast.For) or loop.orelse:
                continue
            flag, init_value = flag_init
            if not isinstance(post, ast.If) or post.orelse:
                continue
            if not _flag_test(post.test, flag, init_value):
                continue
            own = list(_own_level_statements(loop))
            flag_ifs = [s for s in own if _flag_break_if(s, flag, init_value)]
            if len(flag_ifs) != 1:
                continue
            # Any break outside the flag-setting if would reach the post-loop
            # test with the flag untouched, which for/else cannot express.
            breaks = [s for s in own if isinstance(s, ast.Break)]
            if len(breaks) != 1:
                continue
            if len(unit.name_positions().get(flag, ())) != 3:
                continue

            new_loop = copy.deepcopy(loop)
            for stmt in _own_level_statements(new_loop):
                if _flag_break_if(stmt, flag, init_value):
                    stmt.body = [ast.Break()]
                    break
            new_loop.orelse = copy.deepcopy(post.body)
            detections.append(
                make_detection(unit, SmellKind.FOR_ELSE, [init, loop, post], new_loop)
            )
    detections.sort(key=lambda d: d.start)
    return detections


def _const_index(sub: ast.Subscript) -> int | None:
    if isinstance(sub.slice, ast.Constant) and type(sub.slice.value) is int and sub.slice.value >= 0:
        return sub.slice.value
    return None


def _module_identifiers(unit: SourceUnit) -> set[str]:
    names: set[str] = set()
    for n in unit.nodes():
        if isinstance(n, ast.Name):
            names.add(n.id)
        elif isinstance(n, ast.arg):
            names.add(n.arg)
        elif isinstance(n, (ast.FunctionDef, ast.AsyncFunctionDef, ast.ClassDef)):
            names.add(n.name)
        elif isinstance(n, ast.alias):
            names.add((n.asname or n.name).split(".")[0])
    return names


class _IndexedUseReplacer(ast.NodeTransformer):
    def __init__(self, item: str):
        self.item = item

    def visit_Subscript(self, node: ast.Subscript):
        self.generic_visit(node)
        if (
            isinstance(node.value, ast.Name)
            and node.value.id == self.item
            and isinstance(node.ctx, ast.Load)
        ):
            idx = _const_index(node)
            if idx is not None:
                return ast.Name(id=f"e_{idx}", ctx=ast.Load())
        return node


def detect_for_multi_targets(unit: SourceUnit) -> list[Detection]:
    """Loop bodies that only index the loop variable -> tuple unpacking header."""
    detections = []
    taken = _module_identifiers(unit)
    for loop in unit.nodes():
        if not isinstance(loop, ast.For) or not isinstance(loop.target, ast.Name):
            continue
        item = loop.target.id
        region = loop.body + loop.orelse
        parents = unit.parent_map()
        uses: list[ast.Name] = []
        for stmt in region:
            uses.extend(
                n for n in ast.walk(stmt) if isinstance(n, ast.Name) and n.id == item
            )
        if not uses:
            continue
        indices = set()
        ok = True
        for use in uses:
            parent = parents.get(use)
            if (
                not isinstance(parent, ast.Subscript)
                or parent.value is not use
                or not isinstance(parent.ctx, ast.Load)
            ):
                ok = False
                break
            idx = _const_index(parent)
            if idx is None:
                ok = False
                break
            indices.add(idx)
        if not ok or not indices:
            continue
        k = max(indices)
        fresh = [f"e_{i}" for i in range(k + 1)] + ["e"]
        if any(name in taken for name in fresh):
            continue
        if referenced_after(unit, loop, {item}):
            continue

        new_loop = copy.deepcopy(loop)
        new_loop.target = ast.Tuple(
            elts=[*(ast.Name(id=f"e_{i}", ctx=ast.Store()) for i in range(k + 1)),
                  ast.Starred(value=ast.Name(id="e", ctx=ast.Store()), ctx=ast.Store())],
            ctx=ast.Store(),
        )
        replacer = _IndexedUseReplacer(item)
        new_loop.body = [replacer.visit(s) for s in new_loop.body]
        new_loop.orelse = [replacer.visit(s) for s in new_loop.orelse]
        detections.append(make_detection(unit, SmellKind.FOR_MULTI_TARGETS, [loop], new_loop))
    detections.sort(key=lambda d: d.start)
    return detections
