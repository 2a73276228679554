"""Python grammar engines and runtime.

Two parse engines cover the version split in old Q&A corpora:

* ``python-v3`` builds an AST with the running interpreter's ``compile``.
* ``python-v2`` uses the stdlib lib2to3 legacy grammar, which still has the
  print and exec *statements*. It is a tolerant superset of strict 2.7 (it
  also reads most 3.x code), which only affects which engine gets credited
  when both would pass; the combine rule (pass iff either passes) is
  unaffected. 3.10-only syntax such as ``match`` is rejected, so genuinely
  new code falls through to the v3 engine.

Both engines report at most one error: these libraries stop at the first
problem they hit.
"""

from __future__ import annotations

import ast
import platform
import warnings

from snipcheck.config import SandboxLimits
from snipcheck.frontends.base import EngineInfo, ToolUnavailable
from snipcheck.sandbox import SandboxResult, run_sandboxed

with warnings.catch_warnings():
    warnings.simplefilter("ignore")  # lib2to3 emits a deprecation warning on import
    try:
        from lib2to3 import pygram
        from lib2to3.pgen2 import driver as _pgen_driver
        from lib2to3.pgen2.parse import ParseError as _Lib2to3ParseError
        from lib2to3.pgen2.tokenize import TokenError as _Lib2to3TokenError
    except ImportError:  # removed from the stdlib in newer interpreters
        pygram = None  # type: ignore[assignment]


class BuiltinAstEngine:
    """python-v3: the running CPython's own parser, AST-only."""

    def __init__(self) -> None:
        self.info = EngineInfo("python-v3", f"cpython-{platform.python_version()}")

    def check(self, text: str) -> list[str]:
        try:
            compile(text, "<snippet>", "exec", ast.PyCF_ONLY_AST)
        except SyntaxError as exc:
            return [f"{type(exc).__name__}: {exc.msg} (line {exc.lineno})"]
        except (ValueError, MemoryError, RecursionError) as exc:
            return [f"{type(exc).__name__}: {exc}"]
        return []


class LegacyGrammarEngine:
    """python-v2: lib2to3 grammar with print/exec statements."""

    def __init__(self) -> None:
        if pygram is None:
            raise ToolUnavailable("lib2to3 legacy grammar not available")
        self.info = EngineInfo(
            "python-v2", f"lib2to3-legacy-{platform.python_version()}"
        )
        self._driver = _pgen_driver.Driver(pygram.python_grammar)

    def check(self, text: str) -> list[str]:
        source = text if text.endswith("\n") else text + "\n"
        try:
            self._driver.parse_string(source)
        except _Lib2to3ParseError as exc:
            line, col = exc.context[1]
            return [f"ParseError: {exc.msg} (line {line}, column {col})"]
        except _Lib2to3TokenError as exc:
            return [f"TokenError: {exc.args[0] if exc.args else exc}"]
        except (IndentationError, SyntaxError) as exc:
            return [f"{type(exc).__name__}: {exc}"]
        except UnicodeError as exc:
            return [f"UnicodeError: {exc}"]
        return []


# Runs inside the sandbox: install a best-effort network guard, then execute
# the snippet the way the original study did (compile + exec of a string),
# reporting only the first uncaught error on a single stderr line.
_LAUNCHER = """\
import sys

def _deny(*args, **kwargs):
    raise OSError("network access disabled in snippet sandbox")

try:
    import socket
    socket.socket = _deny
    socket.create_connection = _deny
except ImportError:
    pass

with open(sys.argv[1], encoding="utf-8", errors="replace") as fh:
    _source = fh.read()

try:
    _code = compile(_source, "<snippet>", "exec")
    exec(_code, {"__name__": "__main__"})
except SystemExit as exc:
    code = exc.code if isinstance(exc.code, int) else (0 if exc.code is None else 1)
    if code != 0:
        sys.stderr.write("SystemExit: %s\\n" % code)
    sys.exit(code)
except BaseException as exc:
    sys.stderr.write("%s: %s\\n" % (type(exc).__name__, exc))
    sys.exit(1)
"""


class PythonRuntime:
    """Execute a snippet under a CPython interpreter inside the sandbox."""

    def __init__(self, executable: str, engine_name: str) -> None:
        self.executable = executable
        self.info = EngineInfo(f"{engine_name}-runtime", executable)

    def run(self, text: str, limits: SandboxLimits) -> SandboxResult:
        return run_sandboxed(
            [self.executable, "-I", "_launch.py", "snippet.py"],
            limits,
            files={"_launch.py": _LAUNCHER, "snippet.py": text},
        )

    @staticmethod
    def first_error(result: SandboxResult) -> str:
        for line in result.stderr.splitlines():
            line = line.strip()
            if line:
                return line
        return f"exited with status {result.returncode}"
