"""Counting kernels with a compiled fast path.

The backtracking counters below dominate the runtime of every brute-force
suite, so they exist twice: a pure-Python reference implementation in this
module and a Cython translation in ``_speedups.pyx``.  The compiled kernel
is selected at import time when available; setting ``PERMUTORIA_PURE=1``
forces the pure fallback.  Both implement the identical algorithm: insert
values left to right and prune a prefix as soon as a pattern occurrence
ends at the newest entry.
"""

from __future__ import annotations

import os
from typing import Sequence

Pattern = tuple[int, ...]


def _ends_at_last(word: list[int], length: int, pat: Pattern) -> bool:
    """Does an occurrence of pat end exactly at word[length-1]?"""
    m = len(pat)
    if m > length:
        return False
    v = word[length - 1]
    if m == 1:
        return True
    chosen: list[int] = []

    def go(slot: int, start: int) -> bool:
        if slot == m - 1:
            return True
        for pos in range(start, length - (m - 1 - slot)):
            u = word[pos]
            if (u < v) != (pat[slot] < pat[m - 1]):
                continue
            ok = True
            for j in range(len(chosen)):
                if (chosen[j] < u) != (pat[j] < pat[slot]):
                    ok = False
                    break
            if ok:
                chosen.append(u)
                if go(slot + 1, pos + 1):
                    chosen.pop()
                    return True
                chosen.pop()
        return False

    return go(0, 0)


def _prefix_blocked(word: list[int], length: int, patterns: Sequence[Pattern]) -> bool:
    for pat in patterns:
        if _ends_at_last(word, length, pat):
            return True
    return False


def count_avoiders_py(n: int, patterns: Sequence[Pattern]) -> int:
    """|S_n(patterns)| by pruned backtracking."""
    patterns = tuple(tuple(p) for p in patterns)
    word = [0] * n
    used = [False] * (n + 1)

    def rec(pos: int) -> int:
        if pos == n:
            return 1
        total = 0
        for v in range(1, n + 1):
            if used[v]:
                continue
            word[pos] = v
            if not _prefix_blocked(word, pos + 1, patterns):
                used[v] = True
                total += rec(pos + 1)
                used[v] = False
        return total

    return rec(0)


def _da_value_ok(word: list[int], used: list[bool], pos: int, v: int, n: int) -> bool:
    """Constraints keeping the prefix completable to a doubly alternating word.

    Position parity forces rise/descent against the previous entry; an even
    value may only be placed once both odd neighbours are already present,
    which is exactly what alternation of the inverse requires.
    """
    if pos > 0:
        prev = word[pos - 1]
        if pos % 2 == 1:  # 1-based position pos+1 is even: strict rise
            if v < prev:
                return False
        else:  # strict descent
            if v > prev:
                return False
    if v % 2 == 0:
        if not used[v - 1]:
            return False
        if v + 1 <= n and not used[v + 1]:
            return False
    return True


def count_da_py(n: int, patterns: Sequence[Pattern]) -> int:
    """|DA_n(patterns)| by pruned backtracking (patterns may be empty)."""
    patterns = tuple(tuple(p) for p in patterns)
    word = [0] * n
    used = [False] * (n + 2)

    def rec(pos: int) -> int:
        if pos == n:
            return 1
        total = 0
        for v in range(1, n + 1):
            if used[v] or not _da_value_ok(word, used, pos, v, n):
                continue
            word[pos] = v
            if not _prefix_blocked(word, pos + 1, patterns):
                used[v] = True
                total += rec(pos + 1)
                used[v] = False
        return total

    return rec(0)


_FORCE_PURE = os.environ.get("PERMUTORIA_PURE", "") not in ("", "0")

try:
    from . import _speedups  # type: ignore[attr-defined]
except ImportError:
    _speedups = None

HAVE_SPEEDUPS = _speedups is not None
USING_SPEEDUPS = HAVE_SPEEDUPS and not _FORCE_PURE

if USING_SPEEDUPS:
    count_avoiders_raw = _speedups.count_avoiders
    count_da_raw = _speedups.count_da
else:
    count_avoiders_raw = count_avoiders_py
    count_da_raw = count_da_py


def engine_name() -> str:
    return "compiled" if USING_SPEEDUPS else "pure-python"
