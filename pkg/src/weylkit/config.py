"""Process-wide strictness switch.

Strict mode makes every word-composed operator recompute itself along all
reduced words of the group element and compare the results. It is slow and
exists to catch bugs, so the library default is off; the test suite turns it
on, and the WEYLKIT_STRICT=1 environment variable forces it everywhere.
"""

from __future__ import annotations

import os

_strict_default: bool | None = None


def strict_default() -> bool:
    if _strict_default is not None:
        return _strict_default
    return os.environ.get("WEYLKIT_STRICT", "") == "1"


def set_strict_default(value: bool | None) -> None:
    """Override the default (None restores env-var behaviour)."""
    global _strict_default
    _strict_default = value


def resolve_strict(strict: bool | None) -> bool:
    return strict_default() if strict is None else strict
