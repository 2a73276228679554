"""Subprocess containment for executing untrusted snippets.

Every run gets a fresh scratch directory as cwd, an empty stdin, a minimal
environment, a wall-clock timeout and POSIX resource limits. Timeout is a
distinct outcome, never conflated with error failure.
"""

from __future__ import annotations

import os
import shutil
import subprocess
import tempfile
from dataclasses import dataclass

from snipcheck.config import SandboxLimits

try:
    import resource
except ImportError:  # non-POSIX platform
    resource = None  # type: ignore[assignment]


@dataclass(frozen=True)
class SandboxResult:
    returncode: int
    stdout: str
    stderr: str
    timed_out: bool


def _limit_hook(limits: SandboxLimits):
    if resource is None:
        return None

    def apply() -> None:
        cpu = max(1, int(limits.timeout_seconds) + 1)
        resource.setrlimit(resource.RLIMIT_CPU, (cpu, cpu + 1))
        try:
            resource.setrlimit(resource.RLIMIT_AS, (limits.memory_bytes, limits.memory_bytes))
        except (ValueError, OSError):
            pass
        # Confine accidental writes to something small; scratch dir is wiped anyway.
        resource.setrlimit(resource.RLIMIT_FSIZE, (16 * 1024 * 1024, 16 * 1024 * 1024))

    return apply


def run_sandboxed(argv: list[str], limits: SandboxLimits,
                  files: dict[str, str] | None = None) -> SandboxResult:
    """Run argv inside a throwaway scratch directory.

    ``files`` maps relative names to contents written into the scratch dir
    before execution; occurrences of the scratch path are stripped from the
    captured output so results stay deterministic across runs.
    """
    scratch = tempfile.mkdtemp(prefix="snipcheck-")
    env = {
        "PATH": os.environ.get("PATH", "/usr/bin:/bin"),
        "HOME": scratch,
        "TMPDIR": scratch,
        "LANG": "C.UTF-8",
    }
    try:
        for name, content in (files or {}).items():
            with open(os.path.join(scratch, name), "w", encoding="utf-8") as fh:
                fh.write(content)
        try:
            proc = subprocess.run(
                argv,
                cwd=scratch,
                env=env,
                stdin=subprocess.DEVNULL,
                capture_output=True,
                timeout=limits.timeout_seconds,
                preexec_fn=_limit_hook(limits),
            )
        except subprocess.TimeoutExpired as exc:
            out = _decode(exc.stdout, limits)
            err = _decode(exc.stderr, limits)
            return SandboxResult(-1, _scrub(out, scratch), _scrub(err, scratch), True)
        out = _decode(proc.stdout, limits)
        err = _decode(proc.stderr, limits)
        return SandboxResult(proc.returncode, _scrub(out, scratch), _scrub(err, scratch), False)
    finally:
        shutil.rmtree(scratch, ignore_errors=True)


def _decode(raw: bytes | str | None, limits: SandboxLimits) -> str:
    if raw is None:
        return ""
    text = raw.decode("utf-8", "replace") if isinstance(raw, bytes) else raw
    return text[: limits.max_output_bytes]


def _scrub(text: str, scratch: str) -> str:
    return text.replace(scratch + os.sep, "").replace(scratch, "")
