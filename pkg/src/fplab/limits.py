"""Enumeration caps for the brute-force oracles.

Exhaustive scans (grid zero sets, codeword enumerations) refuse to start
when the instance size exceeds the cap, instead of running forever.  The
default of 10**6 can be overridden through the FPLAB_MAX_ENUM environment
variable.
"""

from __future__ import annotations

import os

DEFAULT_MAX_ENUM = 10**6
ENV_VAR = "FPLAB_MAX_ENUM"


class EnumerationLimitError(RuntimeError):
    """An exhaustive scan was larger than the configured cap."""


def max_enum() -> int:
    raw = os.environ.get(ENV_VAR)
    if raw is None:
        return DEFAULT_MAX_ENUM
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{ENV_VAR} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValueError(f"{ENV_VAR} must be positive, got {value}")
    return value


def check_enum(size: int, what: str):
    cap = max_enum()
    if size > cap:
        raise EnumerationLimitError(
            f"{what} needs {size} steps, above the cap of {cap}; "
            f"raise {ENV_VAR} to allow it"
        )
