"""Enumeration caps: predictable desk-scale runtimes.

Every operation that enumerates candidate structures multiplies out its
search space first and refuses to run past the cap.  The default cap can
be overridden with the ``FCAT_CAP`` environment variable; an explicit
argument (CLI flag or function parameter) wins over the environment.
"""
from __future__ import annotations

import os

from .report import CapExceeded

DEFAULT_CAP = 10**6
ENV_VAR = "FCAT_CAP"


def resolve_cap(explicit: int | None = None) -> int:
    if explicit is not None:
        return int(explicit)
    env = os.environ.get(ENV_VAR)
    if env is not None:
        return int(env)
    return DEFAULT_CAP


def guard(size: int, cap: int | None, what: str) -> int:
    """Check ``size`` against the cap; return the resolved cap."""
    limit = resolve_cap(cap)
    if size > limit:
        raise CapExceeded(f"search too large: {what} needs {size} candidates, cap is {limit}")
    return limit
