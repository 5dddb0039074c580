"""Tag source files with ML pipeline stages and cross them with smells.

Uses keyword-only classification (no sidecar needed); point
``AdapterClient`` at a running adapter to add semantic scores.

Run: python demos/03_stage_tagging.py
"""

from perfidiom import parse_unit
from perfidiom.report import ScanReport
from perfidiom.smells import scan_unit
from perfidiom.stages import (
    classify_file,
    load_stage_config,
    mono_label_subset,
    smell_stage_distribution,
)

FILES = {
    "ingest.py": (
        "from sklearn.datasets import fetch_california_housing\n"
        "data = fetch_california_housing()\n"
    ),
    "prep.py": (
        "from sklearn.preprocessing import StandardScaler\n"
        "rows = []\n"
        "for r in raw:\n"
        "    rows.append(StandardScaler().fit_transform(r))\n"
    ),
    "fit.py": (
        "for epoch in range(10):\n"
        "    loss = criterion(model(x), y)\n"
        "    loss.backward()\n"
        "    optimizer.step()\n"
    ),
    "mystery.py": "def helper(a, b):\n    return a - b\n",
}

keywords, descriptions = load_stage_config()
print("prompt used by the semantic side:")
print(" ", descriptions.render_prompt()[:120], "...\n")

assignments = []
detections = []
for name, text in FILES.items():
    assignment = classify_file(text, keywords, scores=None, file=name)
    assignments.append(assignment)
    detections.extend(scan_unit(parse_unit(name, text)))
    stages = ", ".join(sorted(s.value for s in assignment.stages))
    print(f"{name:<12} -> {stages}")
    for stage, why in assignment.provenance.items():
        print(f"{'':<15}{stage.value}: {why}")

report = ScanReport("demo", len(FILES), detections=detections)
matrix = smell_stage_distribution(assignments, report, mode="multi")

print("\n% of stage-assigned files containing each smell (multi-label):")
for stage, row in matrix.items():
    cells = {k.value: v for k, v in row.items() if v}
    if cells:
        print(f"  {stage.value}: {cells}")

mono = mono_label_subset(assignments)
print("\nmono-labeled files:", [a.file for a in mono])
