from __future__ import annotations

import contextlib
import io

import pytest

from perfidiom import parse_unit
from perfidiom.smells import DETECTORS, apply_detections


def unit_of(src: str, path: str = "fixture.py"):
    return parse_unit(path, src)


def detect(kind, src: str):
    return DETECTORS[kind](unit_of(src))


_COMPARABLE = (int, float, str, bool, bytes, type(None), list, tuple, dict, set, frozenset)


def run_snippet(src: str) -> tuple[str, dict]:
    """Execute a snippet; return (stdout, comparable final bindings)."""
    namespace: dict = {"__name__": "__main__"}
    buffer = io.StringIO()
    with contextlib.redirect_stdout(buffer):
        exec(compile(src, "<snippet>", "exec"), namespace)
    bindings = {
        name: value
        for name, value in namespace.items()
        if not name.startswith("__") and isinstance(value, _COMPARABLE)
    }
    return buffer.getvalue(), bindings


def _names_of(src: str) -> set[str]:
    import ast

    return {n.id for n in ast.walk(ast.parse(src)) if isinstance(n, ast.Name)}


def assert_equivalent_rewrite(src: str, detections) -> str:
    """Original and rewrite must agree on stdout and final bindings.

    Rewrites may drop dead helper names (loop vars, flags, temporaries) and
    introduce fresh ones; a binding may differ in presence only when its name
    does not occur at all in the other version's source.
    """
    rewritten = apply_detections(src, detections)
    out_before, bind_before = run_snippet(src)
    out_after, bind_after = run_snippet(rewritten)
    assert out_after == out_before, f"stdout diverged:\n--- original\n{src}\n--- rewritten\n{rewritten}"
    common = bind_before.keys() & bind_after.keys()
    for name in common:
        assert bind_after[name] == bind_before[name], f"{name!r} diverged in:\n{rewritten}"
    # Dropped bindings are dead helpers (loop vars, flags, temporaries): the
    # detector guards prove they are never read afterwards. Fresh names must
    # not collide with anything the original program mentions.
    for name in bind_after.keys() - bind_before.keys():
        assert name not in _names_of(src), f"{name!r} invented by rewrite:\n{rewritten}"
    return rewritten


@pytest.fixture
def tmp_tree(tmp_path):
    """Write a mapping of relative paths -> contents under a temp dir."""

    def build(files: dict[str, str]):
        for rel, content in files.items():
            target = tmp_path / rel
            target.parent.mkdir(parents=True, exist_ok=True)
            target.write_text(content, encoding="utf-8")
        return tmp_path

    return build
