"""Repository discovery and the six-criterion corpus filter.

Candidate repositories come from the code-hosting search API in best-match
order, one query per domain keyword (optionally suffixed, e.g. "audio
machine learning"). Filtering records every failed criterion, not just the
first, so manifests stay auditable.
"""

from __future__ import annotations

import ast
import datetime as dt
import json
import subprocess
import time
from dataclasses import dataclass, field, asdict
from pathlib import Path
from typing import Iterable

import requests

DEFAULT_ML_LIBRARIES = ("tensorflow", "keras", "torch", "sklearn")
SEARCH_API = "https://api.github.com/search/repositories"
REPOS_API = "https://api.github.com/repos"


class ApiAuthError(Exception):
    pass


class ApiRateLimited(Exception):
    def __init__(self, reset_at: float | None = None):
        self.reset_at = reset_at
        hint = f"; resets at epoch {reset_at:.0f}" if reset_at else ""
        super().__init__(f"search API rate limit exhausted{hint}")


@dataclass
class RepoMetadata:
    full_name: str
    is_fork: bool = False
    stars: int = 0
    forks: int = 0
    source_file_count: int = 0
    first_commit: dt.date | None = None
    last_commit: dt.date | None = None
    imports_ml_libs: bool = False

    def to_json(self) -> dict:
        doc = asdict(self)
        doc["first_commit"] = self.first_commit.isoformat() if self.first_commit else None
        doc["last_commit"] = self.last_commit.isoformat() if self.last_commit else None
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "RepoMetadata":
        def parse_date(v):
            return dt.date.fromisoformat(v) if v else None

        return cls(
            full_name=doc["full_name"],
            is_fork=doc.get("is_fork", False),
            stars=doc.get("stars", 0),
            forks=doc.get("forks", 0),
            source_file_count=doc.get("source_file_count", 0),
            first_commit=parse_date(doc.get("first_commit")),
            last_commit=parse_date(doc.get("last_commit")),
            imports_ml_libs=doc.get("imports_ml_libs", False),
        )


@dataclass
class FilterCriteria:
    require_not_fork: bool = True
    min_stars: int = 1
    min_forks: int = 1
    min_source_files: int = 5
    min_history_days: int = 30
    activity_cutoff: dt.date = dt.date(2023, 1, 1)
    ml_imports: str = "require"  # require | forbid | ignore
    ml_library_list: tuple[str, ...] = DEFAULT_ML_LIBRARIES


@dataclass
class ManifestEntry:
    repo: RepoMetadata
    accepted: bool
    rejection_reasons: list[str] = field(default_factory=list)


@dataclass
class CorpusManifest:
    queries: list[str]
    retrieved_at: str
    entries: list[ManifestEntry] = field(default_factory=list)

    @property
    def accepted(self) -> list[RepoMetadata]:
        return [e.repo for e in self.entries if e.accepted]

    def to_json(self) -> dict:
        return {
            "queries": self.queries,
            "retrieved_at": self.retrieved_at,
            "entries": [
                {
                    "repo": e.repo.to_json(),
                    "accepted": e.accepted,
                    "rejection_reasons": e.rejection_reasons,
                }
                for e in self.entries
            ],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "CorpusManifest":
        return cls(
            queries=list(doc["queries"]),
            retrieved_at=doc["retrieved_at"],
            entries=[
                ManifestEntry(
                    repo=RepoMetadata.from_json(e["repo"]),
                    accepted=e["accepted"],
                    rejection_reasons=list(e["rejection_reasons"]),
                )
                for e in doc["entries"]
            ],
        )


def evaluate_criteria(repo: RepoMetadata, criteria: FilterCriteria) -> list[str]:
    """All failed criterion codes for one repository (empty means accepted)."""
    reasons = []
    if criteria.require_not_fork and repo.is_fork:
        reasons.append("C1")
    if repo.stars < criteria.min_stars or repo.forks < criteria.min_forks:
        reasons.append("C2")
    if repo.source_file_count < criteria.min_source_files:
        reasons.append("C3")
    if (
        repo.first_commit is None
        or repo.last_commit is None
        or (repo.last_commit - repo.first_commit).days < criteria.min_history_days
    ):
        reasons.append("C4")
    if repo.last_commit is None or repo.last_commit < criteria.activity_cutoff:
        reasons.append("C5")
    if criteria.ml_imports == "require" and not repo.imports_ml_libs:
        reasons.append("C6")
    elif criteria.ml_imports == "forbid" and repo.imports_ml_libs:
        reasons.append("C6-inverted")
    return reasons


def apply_filters(
    repos: list[RepoMetadata],
    criteria: FilterCriteria,
    queries: list[str] | None = None,
) -> CorpusManifest:
    """Evaluate every repo against every enabled criterion."""
    entries = []
    for repo in repos:
        reasons = evaluate_criteria(repo, criteria)
        entries.append(ManifestEntry(repo=repo, accepted=not reasons, rejection_reasons=reasons))
    return CorpusManifest(
        queries=list(queries or []),
        retrieved_at=dt.datetime.now(dt.timezone.utc).isoformat(),
        entries=entries,
    )


def detect_ml_imports(
    repo_files: Iterable[str], libs: Iterable[str] = DEFAULT_ML_LIBRARIES
) -> bool:
    """True iff any file has an import whose top-level module is a listed library."""
    libset = set(libs)
    for text in repo_files:
        try:
            tree = ast.parse(text)
        except (SyntaxError, ValueError):
            continue
        for node in ast.walk(tree):
            if isinstance(node, ast.Import):
                if any(alias.name.split(".")[0] in libset for alias in node.names):
                    return True
            elif isinstance(node, ast.ImportFrom):
                if node.level == 0 and node.module and node.module.split(".")[0] in libset:
                    return True
    return False


class GitHubClient:
    """Minimal search/metadata client with rate-limit backoff."""

    def __init__(self, token: str, session: requests.Session | None = None, max_retries: int = 3):
        if not token:
            raise ApiAuthError("no API token configured (set GITHUB_TOKEN)")
        self.session = session or requests.Session()
        self.session.headers.update(
            {"Authorization": f"token {token}", "Accept": "application/vnd.github+json"}
        )
        self.max_retries = max_retries

    def _get(self, url: str, params: dict | None = None) -> requests.Response:
        for attempt in range(self.max_retries + 1):
            resp = self.session.get(url, params=params, timeout=30)
            if resp.status_code == 401:
                raise ApiAuthError("API rejected the token (401)")
            if resp.status_code in (403, 429) and resp.headers.get("X-RateLimit-Remaining") == "0":
                reset = float(resp.headers.get("X-RateLimit-Reset", 0)) or None
                if attempt == self.max_retries:
                    raise ApiRateLimited(reset)
                wait = max(1.0, (reset - time.time()) if reset else 2.0 ** (attempt + 1))
                time.sleep(min(wait, 60.0))
                continue
            resp.raise_for_status()
            return resp
        raise ApiRateLimited(None)

    def search_repositories(self, query: str, top_n: int) -> list[dict]:
        """Up to top_n raw search results in the API's best-match order."""
        results: list[dict] = []
        page = 1
        while len(results) < top_n:
            per_page = min(100, top_n - len(results))
            resp = self._get(SEARCH_API, {"q": query, "per_page": per_page, "page": page})
            items = resp.json().get("items", [])
            results.extend(items)
            if len(items) < per_page:
                break
            page += 1
        return results[:top_n]

    def commit_date_range(self, full_name: str) -> tuple[dt.date | None, dt.date | None]:
        """(first, last) commit dates from the commits listing."""
        resp = self._get(f"{REPOS_API}/{full_name}/commits", {"per_page": 1})
        items = resp.json()
        if not items:
            return None, None
        last = _commit_date(items[0])
        link = resp.links.get("last", {}).get("url")
        if link:
            resp = self._get(link)
            items = resp.json()
        first = _commit_date(items[-1]) if items else last
        return first, last


def _commit_date(item: dict) -> dt.date | None:
    try:
        stamp = item["commit"]["committer"]["date"]
        return dt.datetime.fromisoformat(stamp.replace("Z", "+00:00")).date()
    except (KeyError, TypeError, ValueError):
        return None


def _metadata_from_search_item(item: dict) -> RepoMetadata:
    def parse_stamp(v):
        if not v:
            return None
        return dt.datetime.fromisoformat(v.replace("Z", "+00:00")).date()

    return RepoMetadata(
        full_name=item["full_name"],
        is_fork=bool(item.get("fork", False)),
        stars=int(item.get("stargazers_count", 0)),
        forks=int(item.get("forks_count", 0)),
        first_commit=parse_stamp(item.get("created_at")),
        last_commit=parse_stamp(item.get("pushed_at")),
    )


def search_repos(
    domain_keywords: list[str],
    top_n: int,
    suffix: str | None = None,
    client: GitHubClient | None = None,
) -> list[RepoMetadata]:
    """One best-match query per keyword, deduplicated across queries.

    Commit dates are provisional (repo created/pushed timestamps) until
    hydrate_metadata refines them from the commit history.
    """
    if client is None:
        raise ApiAuthError("an authenticated client is required")
    if top_n < 1:
        raise ValueError("top_n must be >= 1")
    seen: dict[str, RepoMetadata] = {}
    for keyword in domain_keywords:
        query = f"{keyword} {suffix}".strip() if suffix else keyword
        for item in client.search_repositories(query, top_n):
            meta = _metadata_from_search_item(item)
            seen.setdefault(meta.full_name, meta)
    return list(seen.values())


def shallow_clone(full_name: str, dest: Path) -> Path:
    """Depth-1 clone used for file counting and import scanning."""
    target = dest / full_name.replace("/", "__")
    subprocess.run(
        ["git", "clone", "--depth", "1", f"https://github.com/{full_name}.git", str(target)],
        check=True,
        capture_output=True,
    )
    return target


def scan_local_tree(
    root: Path, libs: Iterable[str] = DEFAULT_ML_LIBRARIES
) -> tuple[int, bool]:
    """(.py file count, imports-ML flag) for a checked-out tree."""
    count = 0
    texts = []
    for path in sorted(root.rglob("*.py")):
        count += 1
        try:
            texts.append(path.read_text(encoding="utf-8", errors="replace"))
        except OSError:
            continue
    return count, detect_ml_imports(texts, libs)


def hydrate_metadata(
    repo: RepoMetadata,
    client: GitHubClient,
    workdir: Path,
    libs: Iterable[str] = DEFAULT_ML_LIBRARIES,
) -> RepoMetadata:
    """Fill commit dates from history and file facts from a shallow clone."""
    first, last = client.commit_date_range(repo.full_name)
    if first:
        repo.first_commit = first
    if last:
        repo.last_commit = last
    clone = shallow_clone(repo.full_name, workdir)
    repo.source_file_count, repo.imports_ml_libs = scan_local_tree(clone, libs)
    return repo


def append_manifest_snapshot(
    path: Path, manifest: CorpusManifest, config: dict | None = None
) -> None:
    """Persist a manifest; re-runs append a new timestamped snapshot."""
    doc = {"snapshots": []}
    if path.exists():
        doc = json.loads(path.read_text(encoding="utf-8"))
    snapshot = manifest.to_json()
    if config is not None:
        snapshot["config"] = config
    doc.setdefault("snapshots", []).append(snapshot)
    path.write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def load_manifest_snapshots(path: Path) -> list[CorpusManifest]:
    doc = json.loads(Path(path).read_text(encoding="utf-8"))
    return [CorpusManifest.from_json(snap) for snap in doc.get("snapshots", [])]
