"""Compare smell densities between two synthetic corpora, end to end.

Builds per-project metrics from scan reports, runs the per-kind two-sided
tests under both normalizations, and prints plot-ready distribution data.

Run: python demos/02_corpus_statistics.py
"""

import random

from perfidiom.report import ScanReport
from perfidiom.smells import Detection, SmellKind
from perfidiom.stats import compare_corpora, plot_data, project_metrics
from perfidiom.syntax import ScopeInfo, SourceRange

rng = random.Random(7)


def synthetic_project(name: str, smell_rate: float) -> ScanReport:
    """A fake project: 20 files, ~smell_rate detections per 100 lines."""
    detections = []
    loc_by_file = {}
    for i in range(20):
        path = f"{name}/f{i}.py"
        loc_by_file[path] = rng.randint(50, 300)
        expected = loc_by_file[path] * smell_rate / 100
        for _ in range(int(expected) + (1 if rng.random() < expected % 1 else 0)):
            kind = rng.choice(list(SmellKind))
            detections.append(
                Detection(path, ScopeInfo(), kind, ["..."], ["..."],
                          [SourceRange(1, 0, 1, 3)])
            )
    return ScanReport("demo", 20, detections=detections, loc_by_file=loc_by_file)


heavy = [synthetic_project(f"heavy{i}", smell_rate=0.8) for i in range(12)]
light = [synthetic_project(f"light{i}", smell_rate=0.2) for i in range(12)]

metrics_heavy = [project_metrics(r, r.loc_by_file, f"heavy{i}") for i, r in enumerate(heavy)]
metrics_light = [project_metrics(r, r.loc_by_file, f"light{i}") for i, r in enumerate(light)]

for normalization in ("kloc", "smelly-file"):
    print(f"\n=== normalization: {normalization} ===")
    rows = compare_corpora(metrics_heavy, metrics_light, normalization=normalization)
    for kind, row in rows.items():
        flag = " *" if row.significant else ""
        print(
            f"{kind.value:<22} mean_a={row.mean_a:8.4f} mean_b={row.mean_b:8.4f} "
            f"p={row.test.p_value:.4g} r={row.test.rank_biserial:+.3f}{flag}"
        )

print("\n=== distribution data (total smells/KLOC) ===")
data = plot_data(
    [m.total_density_per_kloc for m in metrics_heavy],
    [m.total_density_per_kloc for m in metrics_light],
    bins=6,
)
print("five-number summary heavy:", data.summary_a)
print("five-number summary light:", data.summary_b)
print("bins:", [round(e, 2) for e in data.bin_edges])
print("counts heavy:", data.counts_a)
print("counts light:", data.counts_b)
