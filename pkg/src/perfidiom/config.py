"""Tool configuration: defaults reproduce the documented per-module behavior."""

from __future__ import annotations

import datetime as dt
import json
from dataclasses import dataclass, field, asdict
from pathlib import Path

from perfidiom.mining import DEFAULT_ML_LIBRARIES, FilterCriteria
from perfidiom.smells import DEFAULT_BOOL_CALL_ALLOWLIST, SmellKind


@dataclass
class ToolConfig:
    enabled_kinds: list[str] = field(default_factory=lambda: [k.value for k in SmellKind])
    truth_value_allowlist: list[str] = field(
        default_factory=lambda: list(DEFAULT_BOOL_CALL_ALLOWLIST)
    )
    call_star_min_run: int = 2
    loc_mode: str = "physical-nonblank"
    source_glob: str = "**/*.py"
    classifier_threshold: float = 0.9
    keyword_config: str | None = None
    adapter_endpoint: str | None = None
    adapter_timeout: float = 10.0
    filter_overrides: dict = field(default_factory=dict)

    @property
    def kinds(self) -> set[SmellKind]:
        return {SmellKind.from_label(label) for label in self.enabled_kinds}

    def filter_criteria(self) -> FilterCriteria:
        criteria = FilterCriteria()
        for key, value in self.filter_overrides.items():
            if not hasattr(criteria, key):
                raise ValueError(f"unknown filter criterion field {key!r}")
            if key == "activity_cutoff":
                value = dt.date.fromisoformat(value)
            elif key == "ml_library_list":
                value = tuple(value)
            setattr(criteria, key, value)
        return criteria

    def to_json(self) -> dict:
        return asdict(self)

    @classmethod
    def load(cls, path: str | Path | None = None, **overrides) -> "ToolConfig":
        config = cls()
        if path is not None:
            doc = json.loads(Path(path).read_text(encoding="utf-8"))
            for key, value in doc.items():
                if not hasattr(config, key):
                    raise ValueError(f"unknown config field {key!r}")
                setattr(config, key, value)
        for key, value in overrides.items():
            if value is not None:
                setattr(config, key, value)
        for label in config.enabled_kinds:
            SmellKind.from_label(label)
        if config.loc_mode not in ("physical-nonblank", "exclude-comments"):
            raise ValueError(f"unknown loc_mode {config.loc_mode!r}")
        if not 0.0 < config.classifier_threshold <= 1.0:
            raise ValueError("classifier_threshold must be in (0, 1]")
        return config


DEFAULT_ML_LIBRARY_LIST = DEFAULT_ML_LIBRARIES
