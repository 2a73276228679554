"""Uniform interface for grammar frontends."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Protocol, runtime_checkable


class ToolUnavailable(Exception):
    """The configured frontend or toolchain is missing from this environment."""


@dataclass(frozen=True)
class EngineInfo:
    name: str  # e.g. "python-v3"
    version: str  # e.g. "cpython-3.10.12"


@runtime_checkable
class ParseEngine(Protocol):
    info: EngineInfo

    def check(self, text: str) -> list[str]:
        """Return parse error strings; an empty list means a full tree built."""
        ...
