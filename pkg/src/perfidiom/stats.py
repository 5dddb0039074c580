"""Corpus metrics and the nonparametric test battery.

Mann-Whitney U uses exact enumeration for small tie-free samples and the
tie-corrected, continuity-corrected normal approximation otherwise.
Shapiro-Wilk follows the Royston (1995) approximation (AS R94 constants).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from statistics import NormalDist

import numpy as np

from perfidiom.report import ScanReport
from perfidiom.smells import SmellKind


class EmptySample(Exception):
    pass


class EmptyCorpus(Exception):
    pass


class SampleSizeOutOfRange(Exception):
    pass


class DegenerateSample(Exception):
    pass


class LengthMismatch(Exception):
    pass


class MissingLoc(Exception):
    def __init__(self, path: str):
        self.path = path
        super().__init__(f"no line count recorded for {path}")


LOC_MODES = ("physical-nonblank", "exclude-comments")


def count_loc(text: str, mode: str = "physical-nonblank") -> int:
    """Counted source lines; exclude-comments also drops leading-# lines."""
    if mode not in LOC_MODES:
        raise ValueError(f"unknown LOC mode {mode!r}; expected one of {LOC_MODES}")
    count = 0
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped:
            continue
        if mode == "exclude-comments" and stripped.startswith("#"):
            continue
        count += 1
    return count


@dataclass
class ProjectMetrics:
    project_id: str
    loc: int
    smelly_files: int
    counts_by_kind: dict[SmellKind, int]
    density_per_kloc_by_kind: dict[SmellKind, float]
    per_smelly_file_by_kind: dict[SmellKind, float] = field(default_factory=dict)

    def normalized(self, normalization: str) -> dict[SmellKind, float]:
        if normalization == "kloc":
            return self.density_per_kloc_by_kind
        if normalization == "smelly-file":
            return {k: self.per_smelly_file_by_kind.get(k, 0.0) for k in SmellKind}
        raise ValueError(f"unknown normalization {normalization!r}")

    @property
    def total_density_per_kloc(self) -> float:
        return sum(self.density_per_kloc_by_kind.values())


def project_metrics(
    report: ScanReport, loc_by_file: dict[str, int], project_id: str = ""
) -> ProjectMetrics:
    """Aggregate a scan report into per-project counts and densities."""
    for d in report.detections:
        if d.file_path not in loc_by_file:
            raise MissingLoc(d.file_path)
    loc = sum(loc_by_file.values())
    smelly = {d.file_path for d in report.detections}
    counts = {kind: 0 for kind in SmellKind}
    for d in report.detections:
        counts[d.kind] += 1
    density = {
        kind: (count * 1000.0 / loc if loc > 0 else 0.0) for kind, count in counts.items()
    }
    per_file = (
        {kind: count / len(smelly) for kind, count in counts.items()} if smelly else {}
    )
    return ProjectMetrics(
        project_id=project_id,
        loc=loc,
        smelly_files=len(smelly),
        counts_by_kind=counts,
        density_per_kloc_by_kind=density,
        per_smelly_file_by_kind=per_file,
    )


@dataclass
class DescriptiveStats:
    mean: float
    std: float
    min: float
    q1: float
    median: float
    q3: float
    max: float


def descriptive(sample: list[float]) -> DescriptiveStats:
    """Mean, sample (n-1) std, and linear-interpolation quartiles."""
    if not sample:
        raise EmptySample("descriptive statistics need at least one value")
    arr = np.asarray(sample, dtype=float)
    q1, q2, q3 = np.percentile(arr, [25, 50, 75], method="linear")
    std = float(arr.std(ddof=1)) if arr.size > 1 else 0.0
    return DescriptiveStats(
        mean=float(arr.mean()),
        std=std,
        min=float(arr.min()),
        q1=float(q1),
        median=float(q2),
        q3=float(q3),
        max=float(arr.max()),
    )


@dataclass
class MWUResult:
    u: float
    p_value: float
    rank_biserial: float
    method: str = "asymptotic"


def _rankdata(values: list[float]) -> list[float]:
    """Fractional ranks: ties share the mean of the ranks they occupy."""
    order = sorted(range(len(values)), key=lambda i: values[i])
    ranks = [0.0] * len(values)
    i = 0
    while i < len(values):
        j = i
        while j + 1 < len(values) and values[order[j + 1]] == values[order[i]]:
            j += 1
        mean_rank = (i + j) / 2.0 + 1.0
        for k in range(i, j + 1):
            ranks[order[k]] = mean_rank
        i = j + 1
    return ranks


def _exact_min_u_tail(n1: int, n2: int, u_min: float) -> float:
    """P(min(U, n1*n2 - U) <= u_min) over all tie-free rank arrangements.

    Counts subsets of {1..n1+n2} of size n1 by rank sum with a DP, then sums
    the frequencies of every U whose two-sided image falls in the tail.
    """
    n = n1 + n2
    base = n1 * (n1 + 1) // 2
    # ways[k][s]: number of k-subsets of 1..n summing to s
    max_sum = n1 * n + 1
    ways = [[0] * max_sum for _ in range(n1 + 1)]
    ways[0][0] = 1
    for item in range(1, n + 1):
        for k in range(min(item, n1), 0, -1):
            row, prev = ways[k], ways[k - 1]
            for s in range(max_sum - 1, item - 1, -1):
                if prev[s - item]:
                    row[s] += prev[s - item]
    total = math.comb(n, n1)
    hits = 0
    for s, freq in enumerate(ways[n1]):
        if freq:
            u = s - base
            if min(u, n1 * n2 - u) <= u_min + 1e-12:
                hits += freq
    return hits / total


def _norm_sf(z: float) -> float:
    return 0.5 * math.erfc(z / math.sqrt(2.0))


def mann_whitney_u(a: list[float], b: list[float]) -> MWUResult:
    """Two-sided Mann-Whitney U test; u and rank_biserial are for sample a."""
    if not a or not b:
        raise EmptySample("both samples must be non-empty")
    n1, n2 = len(a), len(b)
    pooled = list(a) + list(b)
    ranks = _rankdata(pooled)
    r_a = sum(ranks[:n1])
    u_a = r_a - n1 * (n1 + 1) / 2.0
    u_b = n1 * n2 - u_a
    rank_biserial = 2.0 * u_a / (n1 * n2) - 1.0

    has_ties = len(set(pooled)) != len(pooled)
    if not has_ties and n1 <= 8 and n2 <= 8:
        p = _exact_min_u_tail(n1, n2, min(u_a, u_b))
        return MWUResult(u=u_a, p_value=min(1.0, p), rank_biserial=rank_biserial, method="exact")

    n = n1 + n2
    tie_term = 0.0
    if has_ties and n > 1:
        counts: dict[float, int] = {}
        for v in pooled:
            counts[v] = counts.get(v, 0) + 1
        tie_term = sum(t**3 - t for t in counts.values()) / (n * (n - 1))
    sigma2 = n1 * n2 / 12.0 * ((n + 1) - tie_term)
    if sigma2 <= 0:
        return MWUResult(u=u_a, p_value=1.0, rank_biserial=rank_biserial)
    z = (abs(u_a - n1 * n2 / 2.0) - 0.5) / math.sqrt(sigma2)
    p = min(1.0, 2.0 * _norm_sf(z))
    return MWUResult(u=u_a, p_value=p, rank_biserial=rank_biserial)


@dataclass
class SWResult:
    w: float
    p_value: float


# AS R94 polynomial constants (highest degree first).
_SW_C1 = (-2.706056, 4.434685, -2.07119, -0.147981, 0.221157, 0.0)
_SW_C2 = (-3.582633, 5.682633, -1.752461, -0.293762, 0.042981, 0.0)
_SW_C3 = (-0.0006714, 0.025054, -0.39978, 0.544)
_SW_C4 = (-0.0020322, 0.062767, -0.77857, 1.3822)
_SW_C5 = (0.0038915, -0.083751, -0.31082, -1.5861)
_SW_C6 = (0.0030302, -0.082676, -0.4803)
_SW_G = (0.459, -2.273)


def _polyval(coeffs, x: float) -> float:
    out = 0.0
    for c in coeffs:
        out = out * x + c
    return out


def shapiro_wilk(sample: list[float]) -> SWResult:
    """Shapiro-Wilk W and p via the Royston approximation; valid for 3 <= n <= 5000."""
    n = len(sample)
    if n < 3 or n > 5000:
        raise SampleSizeOutOfRange(f"Shapiro-Wilk needs 3 <= n <= 5000, got {n}")
    x = np.sort(np.asarray(sample, dtype=float))
    if x[-1] - x[0] < 1e-19:
        raise DegenerateSample("sample has zero range")

    nd = NormalDist()
    m = np.array([nd.inv_cdf((i - 0.375) / (n + 0.25)) for i in range(1, n + 1)])
    ssq_m = float(m @ m)
    c = m / math.sqrt(ssq_m)
    a = np.array(c)
    if n == 3:
        a = np.array([-math.sqrt(0.5), 0.0, math.sqrt(0.5)])
    else:
        rsn = 1.0 / math.sqrt(n)
        a_n = _polyval(_SW_C1, rsn) + c[-1]
        if n > 5:
            a_n1 = _polyval(_SW_C2, rsn) + c[-2]
            phi = (ssq_m - 2 * m[-1] ** 2 - 2 * m[-2] ** 2) / (1 - 2 * a_n**2 - 2 * a_n1**2)
            a = m / math.sqrt(phi)
            a[-2], a[1] = a_n1, -a_n1
        else:
            phi = (ssq_m - 2 * m[-1] ** 2) / (1 - 2 * a_n**2)
            a = m / math.sqrt(phi)
        a[-1], a[0] = a_n, -a_n

    w = float((a @ x) ** 2 / ((x - x.mean()) @ (x - x.mean())))
    w = min(w, 1.0)

    if n == 3:
        p = 1.909859 * (math.asin(math.sqrt(w)) - 1.047198)
        return SWResult(w=w, p_value=min(1.0, max(0.0, p)))
    y = math.log(1.0 - w) if w < 1.0 else -math.inf
    if n <= 11:
        gamma = _polyval(_SW_G, float(n))
        if y >= gamma:
            return SWResult(w=w, p_value=1e-19)
        y = -math.log(gamma - y)
        mu = _polyval(_SW_C3, float(n))
        sigma = math.exp(_polyval(_SW_C4, float(n)))
    else:
        log_n = math.log(n)
        mu = _polyval(_SW_C5, log_n)
        sigma = math.exp(_polyval(_SW_C6, log_n))
    p = _norm_sf((y - mu) / sigma)
    return SWResult(w=w, p_value=p)


@dataclass
class KappaResult:
    kappa: float
    observed_agreement: float
    expected_agreement: float


def cohens_kappa(labels_a: list, labels_b: list) -> KappaResult:
    """Chance-corrected agreement between two equal-length label vectors."""
    if len(labels_a) != len(labels_b):
        raise LengthMismatch(f"label vectors differ in length: {len(labels_a)} vs {len(labels_b)}")
    if not labels_a:
        raise LengthMismatch("label vectors are empty")
    n = len(labels_a)
    po = sum(1 for x, y in zip(labels_a, labels_b) if x == y) / n
    categories = set(labels_a) | set(labels_b)
    pe = sum(
        (labels_a.count(c) / n) * (labels_b.count(c) / n) for c in categories
    )
    if pe >= 1.0:
        kappa = 1.0 if po == 1.0 else 0.0
    else:
        kappa = (po - pe) / (1.0 - pe)
    return KappaResult(kappa=kappa, observed_agreement=po, expected_agreement=pe)


@dataclass
class CompareRow:
    kind: SmellKind
    mean_a: float
    mean_b: float
    test: MWUResult
    significant: bool


def compare_corpora(
    metrics_a: list[ProjectMetrics],
    metrics_b: list[ProjectMetrics],
    normalization: str = "kloc",
    alpha: float = 0.05,
) -> dict[SmellKind, CompareRow]:
    """Per-kind means and two-sided tests under the chosen normalization."""
    if not metrics_a or not metrics_b:
        raise EmptyCorpus("both corpora must contain at least one project")
    rows = {}
    for kind in SmellKind:
        sample_a = [m.normalized(normalization).get(kind, 0.0) for m in metrics_a]
        sample_b = [m.normalized(normalization).get(kind, 0.0) for m in metrics_b]
        test = mann_whitney_u(sample_a, sample_b)
        rows[kind] = CompareRow(
            kind=kind,
            mean_a=float(np.mean(sample_a)),
            mean_b=float(np.mean(sample_b)),
            test=test,
            significant=test.p_value < alpha,
        )
    return rows


@dataclass
class PlotData:
    summary_a: DescriptiveStats
    summary_b: DescriptiveStats
    bin_edges: list[float]
    counts_a: list[int]
    counts_b: list[int]


def plot_data(sample_a: list[float], sample_b: list[float], bins: int) -> PlotData:
    """Boxplot five-number summaries plus shared-range histogram counts."""
    if bins < 1:
        raise ValueError("bins must be >= 1")
    if not sample_a or not sample_b:
        raise EmptySample("both samples must be non-empty")
    pooled = list(sample_a) + list(sample_b)
    lo, hi = min(pooled), max(pooled)
    counts_a, edges = np.histogram(sample_a, bins=bins, range=(lo, hi))
    counts_b, _ = np.histogram(sample_b, bins=bins, range=(lo, hi))
    return PlotData(
        summary_a=descriptive(sample_a),
        summary_b=descriptive(sample_b),
        bin_edges=[float(e) for e in edges],
        counts_a=[int(c) for c in counts_a],
        counts_b=[int(c) for c in counts_b],
    )
