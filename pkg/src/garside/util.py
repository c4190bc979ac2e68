"""Small shared helpers."""

from __future__ import annotations

import os

DEFAULT_BUDGET = 200_000


def enumeration_budget(override: int | None = None) -> int:
    """Cap for enumerations (ball sizes, word searches, group tabulations).

    Controlled by the GARSIDE_BUDGET environment variable when no explicit
    override is given."""
    if override is not None:
        return override
    raw = os.environ.get("GARSIDE_BUDGET", "")
    try:
        return int(raw) if raw else DEFAULT_BUDGET
    except ValueError:
        return DEFAULT_BUDGET
