"""Size caps for the exponential routines.

``TWC_SIZE_CAP`` overrides the matrix-side / graph-order caps (permanent
side, line-graph order for matching counts, rows for exhaustive pind
search).  Caps are read at call time so tests and the CLI can change the
environment without reimporting.
"""

from __future__ import annotations

import os

PERMANENT_SIDE = 24
MATCHING_VERTICES = 24
PIND_ROWS = 12
WEIGHTING_SPACE = 10**7
PIND_LEAVES = 5_000_000
NAIVE_PERMANENT_SIDE = 8


def _env_cap() -> int | None:
    raw = os.environ.get("TWC_SIZE_CAP")
    if raw is None or raw.strip() == "":
        return None
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"TWC_SIZE_CAP must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError("TWC_SIZE_CAP must be positive")
    return value


def permanent_side_cap() -> int:
    return _env_cap() or PERMANENT_SIDE


def matching_vertex_cap() -> int:
    return _env_cap() or MATCHING_VERTICES


def pind_row_cap() -> int:
    return _env_cap() or PIND_ROWS
