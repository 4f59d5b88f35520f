"""Size caps for the exhaustive searches.

Defaults keep every brute-force search at desk scale.  The environment
variable ``PERMUTORIA_LIMITS`` overrides individual caps, e.g.::

    PERMUTORIA_LIMITS="enumeration=12,da=16"
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Limits:
    enumeration: int = 11      # largest n for S_n enumeration / counting
    da: int = 14               # largest n for doubly alternating searches
    extended: int = 10         # largest d+c+r for extended avoidance
    tree_depth: int = 12       # deepest generating tree level
    series_order: int = 24     # largest truncation order per variable


def _from_env() -> Limits:
    raw = os.environ.get("PERMUTORIA_LIMITS", "")
    limits = Limits()
    if not raw:
        return limits
    overrides = {}
    for item in raw.split(","):
        item = item.strip()
        if not item:
            continue
        key, _, value = item.partition("=")
        key = key.strip()
        if key in Limits.__dataclass_fields__:
            overrides[key] = int(value)
    return replace(limits, **overrides)


DEFAULT_LIMITS = _from_env()
