"""Loop-that-builds-a-container detectors: list, set, and dict comprehensions."""

from __future__ import annotations

import ast

from perfidiom.smells.base import (
    Detection,
    SmellKind,
    iter_blocks,
    make_detection,
    names_in,
    referenced_after,
    target_names,
)
from perfidiom.syntax import SourceUnit


def _empty_list_init(stmt: ast.stmt) -> str | None:
    if (
        isinstance(stmt, ast.Assign)
        and len(stmt.targets) == 1
        and isinstance(stmt.targets[0], ast.Name)
        and isinstance(stmt.value, ast.List)
        and not stmt.value.elts
    ):
        return stmt.targets[0].id
    return None


def _empty_set_init(stmt: ast.stmt) -> str | None:
    if (
        isinstance(stmt, ast.Assign)
        and len(stmt.targets) == 1
        and isinstance(stmt.targets[0], ast.Name)
        and isinstance(stmt.value, ast.Call)
        and isinstance(stmt.value.func, ast.Name)
        and stmt.value.func.id == "set"
        and not stmt.value.args
        and not stmt.value.keywords
    ):
        return stmt.targets[0].id
    return None


def _empty_dict_init(stmt: ast.stmt) -> str | None:
    if (
        isinstance(stmt, ast.Assign)
        and len(stmt.targets) == 1
        and isinstance(stmt.targets[0], ast.Name)
        and isinstance(stmt.value, ast.Dict)
        and not stmt.value.keys
    ):
        return stmt.targets[0].id
    return None


def _loop_payload(loop: ast.For) -> tuple[ast.stmt, ast.expr | None] | None:
    """The single body statement, optionally unwrapped from one guarding if."""
    if loop.orelse or len(loop.body) != 1:
        return None
    stmt = loop.body[0]
    if isinstance(stmt, ast.If):
        if stmt.orelse or len(stmt.body) != 1:
            return None
        return stmt.body[0], stmt.test
    return stmt, None


def _method_call_arg(stmt: ast.stmt, name: str, method: str) -> ast.expr | None:
    """The single argument of ``name.method(arg)`` or None."""
    if not isinstance(stmt, ast.Expr) or not isinstance(stmt.value, ast.Call):
        return None
    call = stmt.value
    if (
        isinstance(call.func, ast.Attribute)
        and call.func.attr == method
        and isinstance(call.func.value, ast.Name)
        and call.func.value.id == name
        and len(call.args) == 1
        and not isinstance(call.args[0], ast.Starred)
        and not call.keywords
    ):
        return call.args[0]
    return None


def _subscript_store(stmt: ast.stmt, name: str) -> tuple[ast.expr, ast.expr] | None:
    """(key, value) of ``name[key] = value`` or None."""
    if (
        isinstance(stmt, ast.Assign)
        and len(stmt.targets) == 1
        and isinstance(stmt.targets[0], ast.Subscript)
        and isinstance(stmt.targets[0].value, ast.Name)
        and stmt.targets[0].value.id == name
    ):
        return stmt.targets[0].slice, stmt.value
    return None


def _rewrite_ok(unit: SourceUnit, name: str, loop: ast.For, payload_parts: list[ast.expr]) -> bool:
    """Behavioral-equivalence gates shared by the three comprehension rewrites."""
    loop_vars = target_names(loop.target)
    if name in loop_vars:
        return False
    # The container must not feed its own construction: once the init line is
    # folded away, any read of it inside the comprehension changes meaning.
    for part in [loop.iter, *payload_parts]:
        if name in names_in(part):
            return False
    # Comprehension variables do not leak, loop variables do.
    if referenced_after(unit, loop, loop_vars):
        return False
    return True


def _detect_container_fill(unit, kind, match_init, build) -> list[Detection]:
    detections = []
    for block in iter_blocks(unit):
        for init, loop in zip(block, block[1:]):
            name = match_init(init)
            if name is None or not isinstance(loop, ast.For):
                continue
            payload = _loop_payload(loop)
            if payload is None:
                continue
            stmt, guard = payload
            built = build(name, stmt, guard, loop)
            if built is None:
                continue
            parts, rewrite_value = built
            if not _rewrite_ok(unit, name, loop, parts + ([guard] if guard else [])):
                continue
            rewrite = ast.Assign(
                targets=[ast.Name(id=name, ctx=ast.Store())], value=rewrite_value
            )
            detections.append(make_detection(unit, kind, [init, loop], rewrite))
    return detections


def _generator(loop: ast.For, guard: ast.expr | None) -> ast.comprehension:
    return ast.comprehension(
        target=loop.target, iter=loop.iter, ifs=[guard] if guard else [], is_async=0
    )


def detect_list_comprehension(unit: SourceUnit) -> list[Detection]:
    """``N = []`` + ``for ...: N.append(E)`` (single optional if) -> list comprehension."""

    def build(name, stmt, guard, loop):
        elt = _method_call_arg(stmt, name, "append")
        if elt is None:
            return None
        return [elt], ast.ListComp(elt=elt, generators=[_generator(loop, guard)])

    return _detect_container_fill(unit, SmellKind.LIST_COMPREHENSION, _empty_list_init, build)


def detect_set_comprehension(unit: SourceUnit) -> list[Detection]:
    """``N = set()`` + ``for ...: N.add(E)`` -> set comprehension."""

    def build(name, stmt, guard, loop):
        elt = _method_call_arg(stmt, name, "add")
        if elt is None:
            return None
        return [elt], ast.SetComp(elt=elt, generators=[_generator(loop, guard)])

    return _detect_container_fill(unit, SmellKind.SET_COMPREHENSION, _empty_set_init, build)


def detect_dict_comprehension(unit: SourceUnit) -> list[Detection]:
    """``N = {}`` + ``for ...: N[K] = V`` -> dict comprehension ``{K: V ...}``."""

    def build(name, stmt, guard, loop):
        kv = _subscript_store(stmt, name)
        if kv is None:
            return None
        key, value = kv
        return [key, value], ast.DictComp(
            key=key, value=value, generators=[_generator(loop, guard)]
        )

    return _detect_container_fill(unit, SmellKind.DICT_COMPREHENSION, _empty_dict_init, build)
