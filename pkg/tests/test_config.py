import datetime as dt
import json

import pytest

from perfidiom.config import ToolConfig
from perfidiom.smells import SmellKind


def test_defaults_are_paper_faithful():
    config = ToolConfig()
    assert config.kinds == set(SmellKind)
    assert config.classifier_threshold == 0.9
    assert config.call_star_min_run == 2
    assert config.loc_mode == "physical-nonblank"
    assert tuple(config.truth_value_allowlist) == (
        "isinstance", "callable", "hasattr", "issubclass",
    )
    criteria = config.filter_criteria()
    assert (criteria.min_stars, criteria.min_forks) == (1, 1)
    assert criteria.min_source_files == 5
    assert criteria.min_history_days == 30
    assert criteria.activity_cutoff == dt.date(2023, 1, 1)
    assert criteria.ml_imports == "require"
    assert criteria.ml_library_list == ("tensorflow", "keras", "torch", "sklearn")


def test_load_from_file_with_overrides(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({
        "enabled_kinds": ["For Else", "Call Star"],
        "call_star_min_run": 3,
        "filter_overrides": {"activity_cutoff": "2024-06-01", "ml_imports": "forbid"},
    }), encoding="utf-8")
    config = ToolConfig.load(path, loc_mode="exclude-comments")
    assert config.kinds == {SmellKind.FOR_ELSE, SmellKind.CALL_STAR}
    assert config.call_star_min_run == 3
    assert config.loc_mode == "exclude-comments"
    criteria = config.filter_criteria()
    assert criteria.activity_cutoff == dt.date(2024, 6, 1)
    assert criteria.ml_imports == "forbid"


def test_unknown_fields_rejected(tmp_path):
    path = tmp_path / "config.json"
    path.write_text('{"no_such_field": 1}', encoding="utf-8")
    with pytest.raises(ValueError):
        ToolConfig.load(path)


def test_invalid_values_rejected(tmp_path):
    path = tmp_path / "config.json"
    path.write_text('{"enabled_kinds": ["Bogus Smell"]}', encoding="utf-8")
    with pytest.raises(ValueError):
        ToolConfig.load(path)
    path.write_text('{"classifier_threshold": 1.5}', encoding="utf-8")
    with pytest.raises(ValueError):
        ToolConfig.load(path)
    path.write_text('{"filter_overrides": {"bogus": 1}}', encoding="utf-8")
    with pytest.raises(ValueError):
        ToolConfig.load(path).filter_criteria()


def test_config_round_trips_through_json():
    config = ToolConfig()
    doc = json.loads(json.dumps(config.to_json()))
    assert doc["classifier_threshold"] == 0.9
    assert sorted(doc["enabled_kinds"]) == sorted(k.value for k in SmellKind)
