"""Run configuration: toolchain pins, sandbox limits, fingerprinting.

Classification results are version-sensitive, so the resolved engine
versions are folded into the config fingerprint that every verdict carries.
"""

from __future__ import annotations

import hashlib
import json
import sys
from dataclasses import asdict, dataclass, field, replace
from pathlib import Path
from typing import Any

from snipcheck.model import Language

CONFIG_VERSION = 1


@dataclass(frozen=True)
class SandboxLimits:
    """Containment for the run stage: wall-clock timeout, address-space cap,
    capped captured output, scratch-dir confinement, empty stdin."""

    timeout_seconds: float = 5.0
    memory_bytes: int = 512 * 1024 * 1024
    max_output_bytes: int = 65536


@dataclass(frozen=True)
class RunConfig:
    version: int = CONFIG_VERSION
    node_path: str = "node"
    python_v3_runtime: str = ""  # empty -> sys.executable
    python_v2_runtime: str = ""  # empty -> no python2 runtime configured
    javac_path: str = ""  # empty -> Java compile stage unavailable
    csharp_compiler_path: str = ""  # empty -> C# compile stage unavailable
    sandbox: SandboxLimits = field(default_factory=SandboxLimits)
    tag_map: dict[str, list[str]] = field(default_factory=dict)
    answer_usable_rule: str = "any"  # "any" | "all": how multi-snippet answers count
    search_site_filter: str = "stackoverflow.com"
    search_keyword: str = ""  # empty -> language name is used

    def resolved_python_v3(self) -> str:
        return self.python_v3_runtime or sys.executable

    def language_tag_map(self) -> dict[Language, frozenset[str]] | None:
        if not self.tag_map:
            return None
        return {Language(k): frozenset(v) for k, v in self.tag_map.items()}

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "RunConfig":
        data = dict(data)
        sandbox = data.pop("sandbox", None)
        cfg = cls(**data)
        if sandbox:
            cfg = replace(cfg, sandbox=SandboxLimits(**sandbox))
        return cfg

    @classmethod
    def load(cls, path: str | Path) -> "RunConfig":
        with open(path, encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))

    def save(self, path: str | Path) -> None:
        Path(path).write_text(canonical_json(self.to_dict()) + "\n", encoding="utf-8")


def canonical_json(data: Any) -> str:
    return json.dumps(data, sort_keys=True, ensure_ascii=False, separators=(",", ":"))


def config_fingerprint(config: RunConfig, engine_versions: dict[str, str]) -> str:
    """Hash of the config plus the resolved engine versions (16 hex chars)."""
    payload = canonical_json({"config": config.to_dict(), "engines": engine_versions})
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()[:16]
