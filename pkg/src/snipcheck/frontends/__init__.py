"""Grammar frontends and runtimes, pluggable per language.

Every engine carries a (name, version) identity that feeds the config
fingerprint; a missing toolchain surfaces as ToolUnavailable, never as a
snippet failure.
"""

from snipcheck.frontends.base import EngineInfo, ParseEngine, ToolUnavailable

__all__ = ["EngineInfo", "ParseEngine", "ToolUnavailable"]
