"""Runtime configuration: one JSON file plus environment overrides."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from pathlib import Path

ENV_OVERRIDES = {
    "FAIRREG_PORT": ("port", int),
    "FAIRREG_STORE_PATH": ("store_path", str),
    "FAIRREG_SNAPSHOT_PATH": ("snapshot_path", str),
}


@dataclass
class AppConfig:
    host: str = "127.0.0.1"
    port: int = 8000
    store_path: str | None = None
    snapshot_path: str | None = None
    thesaurus_path: str | None = None
    corpus_path: str | None = None
    ontology_paths: list[str] = field(default_factory=list)
    vocab_dir: str | None = None
    static_dir: str | None = None
    ui_origin: str = "*"
    admin_emails: list[str] = field(default_factory=list)
    curator_emails: list[str] = field(default_factory=list)
    highlight_url_template: str = "/ontology/{term_id}"
    min_count: int = 5
    max_len: int = 3
    tau: float = 0.7
    window: int = 4
    epsilon: float = 0.01

    def validate_paths(self) -> list[str]:
        """Referenced files must exist at startup; returns the missing ones."""
        missing = []
        for path in [self.thesaurus_path, self.corpus_path, *self.ontology_paths]:
            if path and not Path(path).exists():
                missing.append(path)
        if self.vocab_dir and not Path(self.vocab_dir).is_dir():
            missing.append(self.vocab_dir)
        return missing


def load_config(path: str | Path | None = None) -> AppConfig:
    config = AppConfig()
    if path is not None:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        for key, value in data.items():
            if not hasattr(config, key):
                raise KeyError(f"unknown config key: {key}")
            setattr(config, key, value)
    for env, (attr, cast) in ENV_OVERRIDES.items():
        if env in os.environ:
            setattr(config, attr, cast(os.environ[env]))
    return config
