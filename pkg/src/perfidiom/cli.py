"""Command-line entry point: scan, compare, classify, mine, kappa, plot-data."""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict
from pathlib import Path

from perfidiom import __version__
from perfidiom.adapter import AdapterClient
from perfidiom.config import ToolConfig
from perfidiom.mining import (
    ApiAuthError,
    ApiRateLimited,
    GitHubClient,
    append_manifest_snapshot,
    apply_filters,
    hydrate_metadata,
    search_repos,
)
from perfidiom.report import ScanReport, dumps_report, read_report, write_report
from perfidiom.smells import SmellKind, scan_unit
from perfidiom.stages import (
    classify_file,
    load_stage_config,
    mono_label_subset,
    smell_stage_distribution,
)
from perfidiom.stats import (
    cohens_kappa,
    compare_corpora,
    count_loc,
    plot_data,
    project_metrics,
)
from perfidiom.syntax import ParseError, parse_unit


def _discover(paths: list[str], pattern: str) -> list[Path]:
    files: set[Path] = set()
    for raw in paths:
        path = Path(raw)
        if not path.exists():
            raise FileNotFoundError(f"path does not exist: {raw}")
        if path.is_file():
            files.add(path)
        else:
            files.update(p for p in path.glob(pattern) if p.is_file())
    return sorted(files)


def _scan_one(path: Path, config: ToolConfig):
    # utf-8-sig: files with a BOM are common in mined corpora.
    text = path.read_text(encoding="utf-8-sig", errors="replace")
    loc = count_loc(text, config.loc_mode)
    try:
        unit = parse_unit(str(path), text)
    except ParseError as e:
        return str(path), loc, None, f"{e.line}:{e.col}: {e.message}"
    detections = scan_unit(
        unit,
        config.kinds,
        truth_value_allowlist=tuple(config.truth_value_allowlist),
        call_star_min_run=config.call_star_min_run,
    )
    return str(path), loc, detections, None


def run_scan(paths: list[str], config: ToolConfig, jobs: int = 1) -> ScanReport:
    """Scan files in parallel; output is merged in path order, so the report
    is byte-identical at any parallelism degree."""
    files = _discover(paths, config.source_glob)
    results = {}
    if jobs <= 1:
        for path in files:
            results[str(path)] = _scan_one(path, config)
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            for outcome in pool.map(lambda p: _scan_one(p, config), files):
                results[outcome[0]] = outcome
    report = ScanReport(
        tool_version=__version__,
        scanned_files=len(files),
        config=config.to_json(),
    )
    for key in sorted(results):
        path, loc, detections, error = results[key]
        report.loc_by_file[path] = loc
        if error is not None:
            report.parse_errors.append((path, error))
        else:
            report.detections.extend(detections)
    return report


def cmd_scan(args) -> int:
    config = ToolConfig.load(
        args.config,
        enabled_kinds=args.kinds,
        loc_mode=args.loc_mode,
        source_glob=args.glob,
    )
    report = run_scan(args.paths, config, jobs=args.jobs)
    if args.out:
        write_report(report, args.out)
    else:
        sys.stdout.write(dumps_report(report))
    for path, message in report.parse_errors:
        print(f"parse error: {path}: {message}", file=sys.stderr)
    if args.fail_on_smell and report.detections:
        return 1
    return 0


def _load_corpus(paths: list[str]) -> list:
    reports = []
    for raw in paths:
        path = Path(raw)
        candidates = sorted(path.glob("*.json")) if path.is_dir() else [path]
        for file in candidates:
            report = read_report(file)
            reports.append(project_metrics(report, report.loc_by_file, project_id=file.stem))
    return reports


def _compare_table(rows, normalization: str) -> str:
    header = f"{'Smell Type':<22} {'Mean A':>12} {'Mean B':>12} {'U':>10} {'p-value':>12}  sig"
    lines = [f"normalization: {normalization}", header, "-" * len(header)]
    for kind in SmellKind:
        row = rows[kind]
        flag = "*" if row.significant else ""
        lines.append(
            f"{kind.value:<22} {row.mean_a:>12.6g} {row.mean_b:>12.6g}"
            f" {row.test.u:>10.6g} {row.test.p_value:>12.6g}  {flag}"
        )
    return "\n".join(lines)


def cmd_compare(args) -> int:
    config = ToolConfig.load(args.config)
    corpus_a = _load_corpus(args.corpus_a)
    corpus_b = _load_corpus(args.corpus_b)
    rows = compare_corpora(corpus_a, corpus_b, normalization=args.normalize, alpha=args.alpha)
    print(_compare_table(rows, args.normalize))
    doc = {
        "normalization": args.normalize,
        "alpha": args.alpha,
        "config": config.to_json(),
        "rows": {
            kind.value: {
                "mean_a": row.mean_a,
                "mean_b": row.mean_b,
                "u": row.test.u,
                "p_value": row.test.p_value,
                "rank_biserial": row.test.rank_biserial,
                "significant": row.significant,
            }
            for kind, row in rows.items()
        },
    }
    if args.json:
        Path(args.json).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n", "utf-8")
    return 0


def cmd_classify(args) -> int:
    config = ToolConfig.load(
        args.config,
        keyword_config=args.keywords,
        adapter_endpoint=args.adapter,
        classifier_threshold=args.threshold,
        source_glob=args.glob,
    )
    keywords, descriptions = load_stage_config(config.keyword_config)
    client = None
    if config.adapter_endpoint:
        client = AdapterClient(config.adapter_endpoint, timeout=config.adapter_timeout)
    files = _discover(args.paths, config.source_glob)
    assignments = []
    for path in files:
        text = path.read_text(encoding="utf-8-sig", errors="replace")
        scores = client.score(text, descriptions) if client else None
        assignments.append(
            classify_file(
                text,
                keywords,
                scores=scores,
                threshold=config.classifier_threshold,
                strict=args.strict,
                file=str(path),
            )
        )
    doc = {
        "config": config.to_json(),
        "assignments": [
            {
                "file": a.file,
                "stages": sorted(s.value for s in a.stages),
                "provenance": {s.value: p for s, p in a.provenance.items()},
            }
            for a in assignments
        ],
    }
    if args.report:
        report = read_report(args.report)
        doc["distribution_multi"] = _matrix_json(
            smell_stage_distribution(assignments, report, mode="multi")
        )
        doc["distribution_mono"] = _matrix_json(
            smell_stage_distribution(assignments, report, mode="mono")
        )
        doc["mono_label_files"] = sorted(a.file for a in mono_label_subset(assignments))
    payload = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if args.out:
        Path(args.out).write_text(payload, encoding="utf-8")
    else:
        sys.stdout.write(payload)
    return 0


def _matrix_json(matrix) -> dict:
    return {
        stage.value: {kind.value: cell for kind, cell in row.items()}
        for stage, row in matrix.items()
    }


def cmd_mine(args) -> int:
    config = ToolConfig.load(args.config)
    token = os.environ.get("GITHUB_TOKEN", "")
    client = GitHubClient(token)
    repos = search_repos(args.keywords, args.top_n, suffix=args.suffix, client=client)
    criteria = config.filter_criteria()
    if args.ml_imports:
        criteria.ml_imports = args.ml_imports
    if args.hydrate:
        workdir = Path(args.workdir)
        workdir.mkdir(parents=True, exist_ok=True)
        for repo in repos:
            hydrate_metadata(repo, client, workdir, criteria.ml_library_list)
    queries = [f"{kw} {args.suffix}".strip() if args.suffix else kw for kw in args.keywords]
    manifest = apply_filters(repos, criteria, queries=queries)
    append_manifest_snapshot(Path(args.out), manifest, config=config.to_json())
    accepted = len(manifest.accepted)
    print(f"{accepted}/{len(manifest.entries)} repositories accepted -> {args.out}")
    return 0


def _read_labels(path: str) -> dict[str, str]:
    p = Path(path)
    if p.suffix == ".json":
        doc = json.loads(p.read_text(encoding="utf-8"))
        return {str(k): str(v) for k, v in doc.items()}
    with open(p, newline="", encoding="utf-8") as f:
        reader = csv.DictReader(f)
        if not reader.fieldnames or "id" not in reader.fieldnames or "label" not in reader.fieldnames:
            raise ValueError(f"{path}: expected CSV columns 'id' and 'label'")
        return {row["id"]: row["label"] for row in reader}


def cmd_kappa(args) -> int:
    labels_a = _read_labels(args.labels_a)
    labels_b = _read_labels(args.labels_b)
    missing = sorted(set(labels_a) ^ set(labels_b))
    if missing:
        raise ValueError(f"id(s) present in only one file: {', '.join(missing)}")
    ids = sorted(labels_a)
    result = cohens_kappa([labels_a[i] for i in ids], [labels_b[i] for i in ids])
    print(f"kappa: {result.kappa:.6g}")
    print(f"observed_agreement: {result.observed_agreement:.6g}")
    print(f"expected_agreement: {result.expected_agreement:.6g}")
    return 0


def cmd_plot_data(args) -> int:
    config = ToolConfig.load(args.config)
    sample_a = json.loads(Path(args.sample_a).read_text(encoding="utf-8"))
    sample_b = json.loads(Path(args.sample_b).read_text(encoding="utf-8"))
    data = plot_data(sample_a, sample_b, args.bins)
    doc = {
        "config": config.to_json(),
        "summary_a": asdict(data.summary_a),
        "summary_b": asdict(data.summary_b),
        "histogram": {
            "bin_edges": data.bin_edges,
            "counts_a": data.counts_a,
            "counts_b": data.counts_b,
        },
    }
    payload = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if args.out:
        Path(args.out).write_text(payload, encoding="utf-8")
    else:
        sys.stdout.write(payload)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="perfidiom",
        description="Detect Python performance smells, suggest idiomatic rewrites, "
        "and analyze smell densities across corpora.",
    )
    parser.add_argument("--version", action="version", version=f"perfidiom {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    scan = sub.add_parser("scan", help="scan files or directories for performance smells")
    scan.add_argument("paths", nargs="+")
    scan.add_argument("--config", default=None, help="JSON config file")
    scan.add_argument("--out", default=None, help="write the report here (default: stdout)")
    scan.add_argument("--jobs", type=int, default=1, help="parallel file scans")
    scan.add_argument("--kinds", nargs="+", default=None, metavar="LABEL",
                      help="smell kinds to enable (default: all nine)")
    scan.add_argument("--loc-mode", choices=["physical-nonblank", "exclude-comments"], default=None)
    scan.add_argument("--glob", default=None, help="source discovery pattern (default **/*.py)")
    scan.add_argument("--fail-on-smell", action="store_true",
                      help="exit nonzero when any smell is detected")
    scan.set_defaults(func=cmd_scan)

    compare = sub.add_parser("compare", help="compare smell prevalence between two corpora")
    compare.add_argument("--corpus-a", nargs="+", required=True,
                         help="report files or directories (one report per project)")
    compare.add_argument("--corpus-b", nargs="+", required=True)
    compare.add_argument("--normalize", choices=["kloc", "smelly-file"], default="kloc")
    compare.add_argument("--alpha", type=float, default=0.05)
    compare.add_argument("--config", default=None)
    compare.add_argument("--json", default=None, help="also write results as JSON")
    compare.set_defaults(func=cmd_compare)

    classify = sub.add_parser("classify", help="assign ML pipeline stages to source files")
    classify.add_argument("paths", nargs="+")
    classify.add_argument("--keywords", default=None, help="stage keyword config JSON")
    classify.add_argument("--adapter", default=None, help="semantic adapter base URL")
    classify.add_argument("--threshold", type=float, default=None)
    classify.add_argument("--strict", action="store_true",
                          help="match keywords only in imports and call sites")
    classify.add_argument("--report", default=None,
                          help="scan report for smell-stage distribution matrices")
    classify.add_argument("--glob", default=None)
    classify.add_argument("--config", default=None)
    classify.add_argument("--out", default=None)
    classify.set_defaults(func=cmd_classify)

    mine = sub.add_parser("mine", help="search and filter candidate repositories")
    mine.add_argument("--keywords", nargs="+", required=True)
    mine.add_argument("--suffix", default=None, help='query suffix, e.g. "machine learning"')
    mine.add_argument("--top-n", type=int, default=50)
    mine.add_argument("--ml-imports", choices=["require", "forbid", "ignore"], default=None)
    mine.add_argument("--hydrate", action="store_true",
                      help="shallow-clone repos to count files and scan imports")
    mine.add_argument("--workdir", default="./mined-repos")
    mine.add_argument("--config", default=None)
    mine.add_argument("--out", default="corpus-manifest.json")
    mine.set_defaults(func=cmd_mine)

    kappa = sub.add_parser("kappa", help="Cohen's kappa between two label files")
    kappa.add_argument("labels_a", help="CSV with id,label columns (or JSON id->label)")
    kappa.add_argument("labels_b")
    kappa.set_defaults(func=cmd_kappa)

    plot = sub.add_parser("plot-data", help="five-number summaries and histogram bins")
    plot.add_argument("sample_a", help="JSON array of numbers")
    plot.add_argument("sample_b")
    plot.add_argument("--bins", type=int, default=10)
    plot.add_argument("--config", default=None)
    plot.add_argument("--out", default=None)
    plot.set_defaults(func=cmd_plot_data)
    return parser


def main(argv: list[str] | None = None) -> int:
    from perfidiom.report import SchemaError
    from perfidiom.stages import FileSetMismatch, UnassignedFile
    from perfidiom.stats import EmptyCorpus, EmptySample, LengthMismatch, MissingLoc

    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (
        ApiAuthError,
        ApiRateLimited,
        EmptyCorpus,
        EmptySample,
        FileNotFoundError,
        FileSetMismatch,
        LengthMismatch,
        MissingLoc,
        SchemaError,
        UnassignedFile,
        ValueError,
    ) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
