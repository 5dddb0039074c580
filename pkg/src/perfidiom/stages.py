"""Hybrid ML-pipeline stage tagging: semantic scores first, keywords as fallback.

A stage is assigned when its semantic confidence is at or above the
threshold; for every stage scoring below it (or unscored), keyword matching
decides; files matching nothing are Unknown.
"""

from __future__ import annotations

import ast
import json
import re
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from pathlib import Path

from perfidiom.report import ScanReport
from perfidiom.smells import SmellKind

DEFAULT_THRESHOLD = 0.9


class StageLabel(Enum):
    DATA_COLLECTION = "Data Collection"
    DATA_PROCESSING = "Data Processing"
    MODEL_TRAINING = "Model Training"
    MODEL_EVALUATION = "Model Evaluation"
    MODEL_DEPLOYMENT = "Model Deployment"
    UNKNOWN = "unknown"

    @classmethod
    def real_stages(cls) -> list["StageLabel"]:
        return [s for s in cls if s is not cls.UNKNOWN]

    @classmethod
    def from_label(cls, label: str) -> "StageLabel":
        for stage in cls:
            if stage.value == label:
                return stage
        raise ValueError(f"unknown stage label {label!r}")


class InvalidScore(Exception):
    def __init__(self, stage: str, value: float):
        self.stage = stage
        self.value = value
        super().__init__(f"score for {stage!r} outside [0, 1]: {value}")


class UnassignedFile(Exception):
    def __init__(self, path: str):
        self.path = path
        super().__init__(f"detection file has no stage assignment: {path}")


class FileSetMismatch(Exception):
    pass


@dataclass
class KeywordMap:
    patterns: dict[StageLabel, list[str]]
    compiled: dict[StageLabel, list[re.Pattern]] = field(init=False)

    def __post_init__(self):
        if self.patterns.get(StageLabel.UNKNOWN):
            raise ValueError("Unknown carries no keywords")
        self.compiled = {
            stage: [re.compile(p) for p in pats] for stage, pats in self.patterns.items()
        }

    def first_match(self, stage: StageLabel, text: str) -> str | None:
        for pattern in self.compiled.get(stage, []):
            if pattern.search(text):
                return pattern.pattern
        return None


@dataclass
class StageDescriptions:
    descriptions: dict[StageLabel, str]

    def render_prompt(self) -> str:
        pairs = "".join(
            f"{stage.value}: {description}"
            for stage, description in self.descriptions.items()
        )
        return "This code is about:" + ", " + pairs


def _load_stage_config(doc: dict) -> tuple[KeywordMap, StageDescriptions]:
    keywords = {
        StageLabel.from_label(name): list(pats)
        for name, pats in doc.get("keywords", {}).items()
    }
    descriptions = {
        StageLabel.from_label(name): text
        for name, text in doc.get("descriptions", {}).items()
    }
    return KeywordMap(patterns=keywords), StageDescriptions(descriptions=descriptions)


def load_stage_config(path: str | Path | None = None) -> tuple[KeywordMap, StageDescriptions]:
    """Load keywords and stage descriptions, from the bundled defaults if no path."""
    if path is None:
        text = resources.files("perfidiom.data").joinpath("stage_keywords.json").read_text("utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    return _load_stage_config(json.loads(text))


@dataclass
class StageAssignment:
    file: str
    stages: set[StageLabel]
    provenance: dict[StageLabel, str] = field(default_factory=dict)


def _strict_search_space(text: str) -> str:
    """Import statements and call expressions only, for strict keyword matching."""
    try:
        tree = ast.parse(text)
    except SyntaxError:
        return text
    segments = []
    for node in ast.walk(tree):
        if isinstance(node, (ast.Import, ast.ImportFrom, ast.Call)):
            segment = ast.get_source_segment(text, node)
            if segment:
                segments.append(segment)
    return "\n".join(segments)


def classify_file(
    text: str,
    keywords: KeywordMap,
    scores: dict[StageLabel, float] | None = None,
    threshold: float = DEFAULT_THRESHOLD,
    strict: bool = False,
    file: str = "",
) -> StageAssignment:
    """Assign pipeline stages: semantic score >= threshold wins, else keywords."""
    if scores:
        for stage, value in scores.items():
            if not 0.0 <= value <= 1.0:
                raise InvalidScore(stage.value, value)
    stages: set[StageLabel] = set()
    provenance: dict[StageLabel, str] = {}
    search_text = _strict_search_space(text) if strict else text
    for stage in StageLabel.real_stages():
        score = scores.get(stage) if scores else None
        if score is not None and score >= threshold:
            stages.add(stage)
            provenance[stage] = f"semantic({score})"
            continue
        hit = keywords.first_match(stage, search_text)
        if hit is not None:
            stages.add(stage)
            provenance[stage] = f"keyword({hit})"
    if not stages:
        stages = {StageLabel.UNKNOWN}
        provenance = {StageLabel.UNKNOWN: "unknown"}
    return StageAssignment(file=file, stages=stages, provenance=provenance)


def mono_label_subset(assignments: list[StageAssignment]) -> list[StageAssignment]:
    """Assignments carrying exactly one real stage."""
    return [
        a
        for a in assignments
        if len(a.stages) == 1 and a.stages != {StageLabel.UNKNOWN}
    ]


def smell_stage_distribution(
    assignments: list[StageAssignment], report: ScanReport, mode: str = "multi"
) -> dict[StageLabel, dict[SmellKind, float]]:
    """cell(s, k): % of files assigned to stage s containing >= 1 detection of k."""
    if mode not in ("multi", "mono"):
        raise ValueError(f"unknown mode {mode!r}")
    by_file = {a.file: a for a in assignments}
    for d in report.detections:
        if d.file_path not in by_file:
            raise UnassignedFile(d.file_path)
    pool = mono_label_subset(assignments) if mode == "mono" else assignments

    kinds_by_file: dict[str, set[SmellKind]] = {}
    for d in report.detections:
        kinds_by_file.setdefault(d.file_path, set()).add(d.kind)

    matrix: dict[StageLabel, dict[SmellKind, float]] = {}
    for stage in StageLabel:
        members = [a for a in pool if stage in a.stages]
        row = {}
        for kind in SmellKind:
            if not members:
                row[kind] = 0.0
            else:
                hits = sum(1 for a in members if kind in kinds_by_file.get(a.file, set()))
                row[kind] = 100.0 * hits / len(members)
        matrix[stage] = row
    return matrix


@dataclass
class StageMetrics:
    precision: float
    recall: float
    f1: float
    accuracy: float


def evaluate_classifier(
    predicted: list[StageAssignment], truth: list[StageAssignment]
) -> dict[str, StageMetrics]:
    """One-vs-rest metrics per real stage plus an unweighted macro average."""
    pred_by_file = {a.file: a.stages for a in predicted}
    truth_by_file = {a.file: a.stages for a in truth}
    if set(pred_by_file) != set(truth_by_file):
        raise FileSetMismatch("predicted and truth cover different file sets")
    n = len(truth_by_file)
    out: dict[str, StageMetrics] = {}
    sums = [0.0, 0.0, 0.0, 0.0]
    for stage in StageLabel.real_stages():
        tp = fp = fn = tn = 0
        for file, truth_stages in truth_by_file.items():
            in_pred = stage in pred_by_file[file]
            in_truth = stage in truth_stages
            if in_pred and in_truth:
                tp += 1
            elif in_pred:
                fp += 1
            elif in_truth:
                fn += 1
            else:
                tn += 1
        precision = tp / (tp + fp) if tp + fp else 0.0
        recall = tp / (tp + fn) if tp + fn else 0.0
        f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
        accuracy = (tp + tn) / n if n else 0.0
        out[stage.value] = StageMetrics(precision, recall, f1, accuracy)
        for i, v in enumerate((precision, recall, f1, accuracy)):
            sums[i] += v
    k = len(StageLabel.real_stages())
    out["Average"] = StageMetrics(*(s / k for s in sums))
    return out
