"""Client for the semantic scoring sidecar.

Wire contract: POST {endpoint}/classify with {"file_text": ..., "stages":
[{"name": ..., "description": ...}]} returns {"scores": {name: score},
"model_id": ...}. GET {endpoint}/health returns {"model_id": ...}. The
primary tool must keep working when no sidecar is reachable, so every
failure degrades to None (keyword-only classification) rather than raising.
"""

from __future__ import annotations

import logging

import requests

from perfidiom.stages import StageDescriptions, StageLabel

log = logging.getLogger(__name__)

DEFAULT_TIMEOUT = 10.0


class AdapterClient:
    def __init__(self, endpoint: str, timeout: float = DEFAULT_TIMEOUT, retries: int = 1):
        self.endpoint = endpoint.rstrip("/")
        self.timeout = timeout
        self.retries = retries
        self.session = requests.Session()
        self._warned = False

    def health(self) -> str | None:
        try:
            resp = self.session.get(f"{self.endpoint}/health", timeout=self.timeout)
            resp.raise_for_status()
            return resp.json().get("model_id")
        except requests.RequestException:
            return None

    def score(
        self, file_text: str, descriptions: StageDescriptions
    ) -> dict[StageLabel, float] | None:
        """Per-stage confidence scores, or None when the sidecar is unreachable."""
        payload = {
            "file_text": file_text,
            "stages": [
                {"name": stage.value, "description": text}
                for stage, text in descriptions.descriptions.items()
            ],
        }
        last_error: Exception | None = None
        for _ in range(self.retries + 1):
            try:
                resp = self.session.post(
                    f"{self.endpoint}/classify", json=payload, timeout=self.timeout
                )
                resp.raise_for_status()
                raw = resp.json()["scores"]
                return {StageLabel.from_label(name): float(v) for name, v in raw.items()}
            except (requests.RequestException, KeyError, ValueError) as e:
                last_error = e
        if not self._warned:
            log.warning(
                "semantic adapter at %s unavailable (%s); continuing keyword-only",
                self.endpoint,
                last_error,
            )
            self._warned = True
        return None
