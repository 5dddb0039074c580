"""Differential execution of the snippet corpus: rewrites must be invisible."""

import pytest

from perfidiom import parse_unit
from perfidiom.smells import DETECTORS, SmellKind

from conftest import assert_equivalent_rewrite
from snippets import SNIPPETS


@pytest.mark.parametrize("name,kinds,src", SNIPPETS, ids=[s[0] for s in SNIPPETS])
def test_snippet_detections_match_expectation(name, kinds, src):
    unit = parse_unit(f"{name}.py", src)
    observed = {}
    for kind in SmellKind:
        dets = DETECTORS[kind](unit)
        if dets:
            observed[kind] = len(dets)
    assert observed == kinds


@pytest.mark.parametrize("name,kinds,src", SNIPPETS, ids=[s[0] for s in SNIPPETS])
def test_snippet_rewrites_preserve_behavior(name, kinds, src):
    unit = parse_unit(f"{name}.py", src)
    for kind in kinds or {None: 0}:
        if kind is None:
            assert_equivalent_rewrite(src, [])
            continue
        dets = DETECTORS[kind](unit)
        assert dets, f"{name}: expected {kind} detections"
        assert_equivalent_rewrite(src, dets)


def test_corpus_is_large_enough_and_covers_every_kind():
    assert len(SNIPPETS) >= 30
    covered = set()
    for _, kinds, _ in SNIPPETS:
        covered.update(kinds)
    assert covered == set(SmellKind)
