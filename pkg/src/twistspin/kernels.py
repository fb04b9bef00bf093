"""Kernel backend selection: compiled extension if available, else pure Python.

Set TWISTSPIN_KERNEL=pure (or =compiled) to force a backend; forcing the
compiled kernel raises if the extension is missing.  TWISTSPIN_THREADS sets
the default worker count for sharding the outermost search loop.
"""

from __future__ import annotations

import os

from . import _searchkernel_py

class KernelConfigError(RuntimeError):
    """Invalid kernel-related environment configuration."""


_FORCED = os.environ.get("TWISTSPIN_KERNEL", "").strip().lower()

run_program = None
BACKEND = "pure"

if _FORCED not in ("", "pure", "compiled"):
    raise KernelConfigError(
        f"TWISTSPIN_KERNEL must be 'pure' or 'compiled', not {_FORCED!r}"
    )

if _FORCED != "pure":
    try:
        from . import _searchkernel  # compiled extension

        run_program = _searchkernel.run_program
        BACKEND = "compiled"
    except ImportError:
        if _FORCED == "compiled":
            raise KernelConfigError(
                "TWISTSPIN_KERNEL=compiled, but the compiled kernel is not built"
            ) from None

if run_program is None:
    run_program = _searchkernel_py.run_program
    BACKEND = "pure"


def default_threads() -> int:
    raw = os.environ.get("TWISTSPIN_THREADS", "1").strip()
    try:
        n = int(raw)
    except ValueError:
        raise KernelConfigError(
            f"TWISTSPIN_THREADS must be an integer, not {raw!r}"
        ) from None
    return max(1, n)
