# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled counting kernels; mirrors kernels.py exactly."""

from libc.string cimport memset

DEF MAXN = 24
DEF MAXPAT = 12
DEF MAXPATLEN = 8


cdef struct PatternData:
    int count
    int length[MAXPAT]
    int entry[MAXPAT][MAXPATLEN]


cdef bint _ends_at_last(int* word, int length, int* pat, int m) noexcept:
    cdef int chosen[MAXPATLEN]
    if m > length:
        return False
    if m == 1:
        return True
    return _match(word, length, pat, m, chosen, 0, 0)


cdef bint _match(int* word, int length, int* pat, int m,
                 int* chosen, int slot, int start) noexcept:
    cdef int pos, u, j
    cdef int v = word[length - 1]
    cdef bint ok
    if slot == m - 1:
        return True
    for pos in range(start, length - (m - 1 - slot)):
        u = word[pos]
        if (u < v) != (pat[slot] < pat[m - 1]):
            continue
        ok = True
        for j in range(slot):
            if (chosen[j] < u) != (pat[j] < pat[slot]):
                ok = False
                break
        if ok:
            chosen[slot] = u
            if _match(word, length, pat, m, chosen, slot + 1, pos + 1):
                return True
    return False


cdef bint _prefix_blocked(int* word, int length, PatternData* pd) noexcept:
    cdef int i
    for i in range(pd.count):
        if _ends_at_last(word, length, &pd.entry[i][0], pd.length[i]):
            return True
    return False


cdef PatternData _pack(patterns) except *:
    cdef PatternData pd
    cdef int i, j
    pats = [tuple(p) for p in patterns]
    if len(pats) > MAXPAT:
        raise ValueError("too many patterns for the compiled kernel")
    pd.count = len(pats)
    for i, pat in enumerate(pats):
        if len(pat) > MAXPATLEN:
            raise ValueError("pattern too long for the compiled kernel")
        pd.length[i] = len(pat)
        for j in range(len(pat)):
            pd.entry[i][j] = pat[j]
    return pd


cdef long _count_rec(int n, int pos, int* word, bint* used, PatternData* pd) noexcept:
    cdef long total = 0
    cdef int v
    if pos == n:
        return 1
    for v in range(1, n + 1):
        if used[v]:
            continue
        word[pos] = v
        if not _prefix_blocked(word, pos + 1, pd):
            used[v] = True
            total += _count_rec(n, pos + 1, word, used, pd)
            used[v] = False
    return total


def count_avoiders(int n, patterns):
    """|S_n(patterns)| by pruned backtracking."""
    cdef PatternData pd = _pack(patterns)
    cdef int word[MAXN]
    cdef bint used[MAXN + 2]
    if n > MAXN:
        raise ValueError("n too large for the compiled kernel")
    if n == 0:
        return 1
    memset(used, 0, sizeof(used))
    return _count_rec(n, 0, word, used, &pd)


cdef bint _da_value_ok(int* word, bint* used, int pos, int v, int n) noexcept:
    cdef int prev
    if pos > 0:
        prev = word[pos - 1]
        if pos % 2 == 1:
            if v < prev:
                return False
        else:
            if v > prev:
                return False
    if v % 2 == 0:
        if not used[v - 1]:
            return False
        if v + 1 <= n and not used[v + 1]:
            return False
    return True


cdef long _count_da_rec(int n, int pos, int* word, bint* used, PatternData* pd) noexcept:
    cdef long total = 0
    cdef int v
    if pos == n:
        return 1
    for v in range(1, n + 1):
        if used[v] or not _da_value_ok(word, used, pos, v, n):
            continue
        word[pos] = v
        if not _prefix_blocked(word, pos + 1, pd):
            used[v] = True
            total += _count_da_rec(n, pos + 1, word, used, pd)
            used[v] = False
    return total


def count_da(int n, patterns):
    """|DA_n(patterns)| by pruned backtracking (patterns may be empty)."""
    cdef PatternData pd = _pack(patterns)
    cdef int word[MAXN]
    cdef bint used[MAXN + 2]
    if n > MAXN:
        raise ValueError("n too large for the compiled kernel")
    if n == 0:
        return 1
    memset(used, 0, sizeof(used))
    return _count_da_rec(n, 0, word, used, &pd)
