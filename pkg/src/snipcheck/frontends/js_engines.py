"""JavaScript grammar engine and runtime backed by a Node.js binary.

Node stops at the first syntax error and an uncaught runtime error kills the
process, so at most one error string comes back per snippet. The interesting
stderr line (``SyntaxError: ...``, ``ReferenceError: ...``) is extracted from
the surrounding stack-trace noise.
"""

from __future__ import annotations

import re
import shutil
import subprocess

from snipcheck.config import SandboxLimits
from snipcheck.frontends.base import EngineInfo, ToolUnavailable
from snipcheck.sandbox import SandboxResult, run_sandboxed

_ERROR_LINE = re.compile(r"^\s*((?:[A-Z][A-Za-z]*)?Error\b.*)$", re.MULTILINE)
_VERSION_CACHE: dict[str, str] = {}


def node_version(node_path: str) -> str:
    """Resolve and cache `node --version`; raises ToolUnavailable when absent."""
    cached = _VERSION_CACHE.get(node_path)
    if cached:
        return cached
    binary = shutil.which(node_path)
    if binary is None:
        raise ToolUnavailable(f"node binary not found: {node_path}")
    try:
        out = subprocess.run(
            [binary, "--version"], capture_output=True, text=True, timeout=30
        )
    except (OSError, subprocess.TimeoutExpired) as exc:
        raise ToolUnavailable(f"node not runnable: {exc}") from exc
    version = out.stdout.strip() or "unknown"
    _VERSION_CACHE[node_path] = version
    return version


def extract_error_line(stderr: str, fallback: str) -> str:
    match = _ERROR_LINE.search(stderr)
    if match:
        return match.group(1).strip()
    return fallback


class NodeCheckEngine:
    """Parse check via `node --check` (the engine's own parser, no execution)."""

    def __init__(self, node_path: str = "node") -> None:
        version = node_version(node_path)
        self.node_path = node_path
        self.info = EngineInfo("javascript", f"node-{version}")

    def check(self, text: str) -> list[str]:
        result = run_sandboxed(
            [self.node_path, "--check", "snippet.js"],
            SandboxLimits(timeout_seconds=30.0),
            files={"snippet.js": text},
        )
        if result.returncode == 0 and not result.timed_out:
            return []
        return [extract_error_line(result.stderr, f"exited with status {result.returncode}")]


class NodeRuntime:
    """Execute a snippet in a fresh Node process inside the sandbox."""

    def __init__(self, node_path: str = "node") -> None:
        version = node_version(node_path)
        self.node_path = node_path
        self.info = EngineInfo("javascript-runtime", f"node-{version}")

    def run(self, text: str, limits: SandboxLimits) -> SandboxResult:
        return run_sandboxed([self.node_path, "snippet.js"], limits, files={"snippet.js": text})

    @staticmethod
    def first_error(result: SandboxResult) -> str:
        return extract_error_line(result.stderr, f"exited with status {result.returncode}")
