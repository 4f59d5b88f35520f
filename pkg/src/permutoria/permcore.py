"""Permutations, partial permutations and pattern containment.

Permutations of {1..n} are plain tuples in one-line notation.  The matrix
convention used throughout puts a dot in row i, column sigma(i): rows are
positions, columns are values.

A partial permutation is a rectangular 0-1 matrix with at most one dot per
row and per column.  Empty rows and columns are meaningful: two partial
permutations with the same dots but different row/column counts are
different objects.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Literal, Sequence

from .errors import ZeroObject

Word = tuple[int, ...]
GappedWord = tuple  # entries int or None

# ---------------------------------------------------------------------------
# plain permutation helpers


def is_permutation(word: Sequence[int]) -> bool:
    """True iff word is a bijection of {1..n}.

    >>> is_permutation((2, 1, 3)), is_permutation((2, 2)), is_permutation(())
    (True, False, True)
    """
    return sorted(word) == list(range(1, len(word) + 1))


def inverse(word: Sequence[int]) -> Word:
    """Functional inverse in one-line notation.

    >>> inverse((3, 4, 1, 2))
    (3, 4, 1, 2)
    """
    inv = [0] * len(word)
    for pos, value in enumerate(word):
        inv[value - 1] = pos + 1
    return tuple(inv)


def reverse(word: Sequence[int]) -> Word:
    return tuple(word[len(word) - 1 - i] for i in range(len(word)))


def complement(word: Sequence[int]) -> Word:
    n = len(word)
    return tuple(n + 1 - v for v in word)


def rotate180(word: Sequence[int]) -> Word:
    return complement(reverse(word))


SYMMETRIES = {
    "reverse": reverse,
    "complement": complement,
    "inverse": inverse,
    "rotate180": rotate180,
}


def symmetry(word: Sequence[int], op: str) -> Word:
    """Apply one of reverse / complement / inverse / rotate180."""
    return SYMMETRIES[op](tuple(word))


def standardize(values: Sequence[int]) -> Word:
    """Relabel distinct values to 1..k preserving relative order.

    >>> standardize((7, 9, 3))
    (2, 3, 1)
    """
    order = sorted(values)
    rank = {v: i + 1 for i, v in enumerate(order)}
    return tuple(rank[v] for v in values)


def contains_pattern(word: Sequence[int], pattern: Sequence[int]) -> bool:
    """True iff some subsequence of word is order-isomorphic to pattern.

    >>> contains_pattern((7, 9, 3, 8, 1, 10, 5, 6, 2, 4), (3, 2, 1, 4))
    True
    >>> contains_pattern((7, 9, 3, 8, 1, 10, 5, 6, 2, 4), (1, 2, 3, 4))
    False
    """
    word = tuple(word)
    pattern = tuple(pattern)
    m = len(pattern)
    if m > len(word):
        return False
    if m == 0:
        return True
    return _match_from(word, pattern, 0, 0, [])


def _match_from(word: Word, pattern: Word, slot: int, start: int, chosen: list[int]) -> bool:
    if slot == len(pattern):
        return True
    remaining = len(pattern) - slot
    for pos in range(start, len(word) - remaining + 1):
        v = word[pos]
        ok = True
        for j, u in enumerate(chosen):
            if (u < v) != (pattern[j] < pattern[slot]):
                ok = False
                break
        if ok:
            chosen.append(v)
            if _match_from(word, pattern, slot + 1, pos + 1, chosen):
                chosen.pop()
                return True
            chosen.pop()
    return False


def contains_pattern_bruteforce(word: Sequence[int], pattern: Sequence[int]) -> bool:
    """Independent oracle: exhaustive scan over all subsequences."""
    word = tuple(word)
    pattern = tuple(pattern)
    if len(pattern) > len(word):
        return False
    return any(
        standardize([word[i] for i in idx]) == standardize(pattern)
        for idx in combinations(range(len(word)), len(pattern))
    )


# ---------------------------------------------------------------------------
# pattern sets


@dataclass(frozen=True)
class PatternSet:
    """A normalized, nonempty set of patterns.

    Patterns containing another pattern of the set are redundant for
    avoidance and are dropped at construction.
    """

    patterns: tuple[Word, ...]

    def __init__(self, patterns):
        pats = {tuple(p) for p in patterns}
        if not pats:
            raise ValueError("a pattern set must be nonempty")
        for p in pats:
            if len(p) < 1 or not is_permutation(p):
                raise ValueError(f"not a valid pattern: {p}")
        minimal = {
            p
            for p in pats
            if not any(q != p and contains_pattern(p, q) for q in pats)
        }
        object.__setattr__(
            self, "patterns", tuple(sorted(minimal, key=lambda p: (len(p), p)))
        )

    @classmethod
    def parse(cls, text: str) -> "PatternSet":
        """Parse e.g. '123' or '2413,3142' (digits only, sizes < 10)."""
        return cls([tuple(int(ch) for ch in tok.strip()) for tok in text.split(",") if tok.strip()])

    def inverse(self) -> "PatternSet":
        return PatternSet([inverse(p) for p in self.patterns])

    def reverse(self) -> "PatternSet":
        return PatternSet([reverse(p) for p in self.patterns])

    def complement(self) -> "PatternSet":
        return PatternSet([complement(p) for p in self.patterns])

    def min_size(self) -> int:
        return min(len(p) for p in self.patterns)

    def __iter__(self):
        return iter(self.patterns)

    def __str__(self) -> str:
        return ",".join("".join(str(v) for v in p) for p in self.patterns)


def avoids_all(word: Sequence[int], patterns: PatternSet) -> bool:
    """True iff word avoids every pattern of the set."""
    return not any(contains_pattern(word, p) for p in patterns)


# ---------------------------------------------------------------------------
# alternating / doubly alternating / Baxter


def signature(word: Sequence) -> tuple[str, ...]:
    """'+' at i iff w_i < w_{i+1}; ties and descents are '-'.

    Entries may be None (gaps); a comparison touching a gap yields '.'.

    >>> "".join(signature((4, 1, 5, 5, 6, 2, 2)))
    '-+-+--'
    """
    out = []
    for a, b in zip(word, word[1:]):
        if a is None or b is None:
            out.append(".")
        elif a < b:
            out.append("+")
        else:
            out.append("-")
    return tuple(out)


def is_alternating(word: Sequence, mode: Literal["up-down", "down-up"] = "up-down") -> bool:
    """Strict rise at odd positions and weak descent at even (up-down mode).

    Gap entries (None) remove both comparisons touching them; only the
    comparisons that exist are required to hold.

    >>> is_alternating((2, 7, 4, 8, 3, 6, 1, 5))
    True
    >>> is_alternating((2, 1)), is_alternating((2, 1), "down-up")
    (False, True)
    """
    sig = signature(word)
    for i, s in enumerate(sig):  # i is 0-based; position i+1 in math terms
        if s == ".":
            continue
        want_rise = (i % 2 == 0) if mode == "up-down" else (i % 2 == 1)
        if want_rise and s != "+":
            return False
        if not want_rise and s != "-":
            return False
    return True


def is_doubly_alternating(word: Sequence[int]) -> bool:
    """True iff the permutation and its inverse are both up-down alternating.

    The empty permutation counts as doubly alternating.

    >>> is_doubly_alternating((7, 9, 3, 8, 1, 10, 5, 6, 2, 4))
    True
    >>> is_doubly_alternating((2, 7, 4, 8, 3, 6, 1, 5))
    False
    """
    word = tuple(word)
    return is_alternating(word) and is_alternating(inverse(word))


def is_baxter(word: Sequence[int]) -> bool:
    """Check the two four-index implications defining Baxter permutations."""
    w = tuple(word)
    n = len(w)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                for l in range(k + 1, n):
                    if w[i] + 1 == w[l] and w[j] > w[l] and not w[k] > w[l]:
                        return False
                    if w[l] + 1 == w[i] and w[k] > w[i] and not w[j] > w[i]:
                        return False
    return True


# ---------------------------------------------------------------------------
# partial permutations


@dataclass(frozen=True, order=True)
class PartialPermutation:
    """Rectangular dot matrix with at most one dot per row and column.

    Rows, columns and dot coordinates are 1-based.
    """

    rows: int
    cols: int
    dots: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        dots = tuple(sorted(self.dots))
        object.__setattr__(self, "dots", dots)
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimensions")
        seen_r, seen_c = set(), set()
        for r, c in dots:
            if not (1 <= r <= self.rows and 1 <= c <= self.cols):
                raise ValueError(f"dot {(r, c)} outside {self.rows}x{self.cols}")
            if r in seen_r or c in seen_c:
                raise ValueError("two dots share a row or column")
            seen_r.add(r)
            seen_c.add(c)

    # -- derived quantities -------------------------------------------------
    @property
    def d(self) -> int:
        return len(self.dots)

    @property
    def r(self) -> int:
        return self.rows - self.d

    @property
    def c(self) -> int:
        return self.cols - self.d

    @property
    def size(self) -> int:
        """Size of the permutations extending this object (d + c + r)."""
        return self.rows + self.cols - self.d

    def empty_rows(self) -> tuple[int, ...]:
        used = {r for r, _ in self.dots}
        return tuple(i for i in range(1, self.rows + 1) if i not in used)

    def empty_cols(self) -> tuple[int, ...]:
        used = {c for _, c in self.dots}
        return tuple(j for j in range(1, self.cols + 1) if j not in used)

    def word(self) -> GappedWord:
        """One entry per row: the dot column, or None for an empty row."""
        by_row = dict(self.dots)
        return tuple(by_row.get(i) for i in range(1, self.rows + 1))

    def is_zero(self) -> bool:
        return self.rows == 0 and self.cols == 0

    def transpose(self) -> "PartialPermutation":
        return PartialPermutation(self.cols, self.rows, tuple((c, r) for r, c in self.dots))

    # -- constructors ---------------------------------------------------------
    @classmethod
    def from_word(cls, word: Sequence, cols: int | None = None) -> "PartialPermutation":
        dots = tuple((i + 1, v) for i, v in enumerate(word) if v is not None)
        if cols is None:
            cols = len(dots)
        return cls(len(word), cols, dots)

    @classmethod
    def from_permutation(cls, word: Sequence[int]) -> "PartialPermutation":
        if not is_permutation(word):
            raise ValueError(f"not a permutation: {word}")
        return cls.from_word(tuple(word))

    # -- text / JSON forms ----------------------------------------------------
    def to_text(self) -> str:
        """One-line form, '_' for empty rows, '|cols' suffix if empty columns exist.

        >>> PartialPermutation.from_word((3, None, None, 2, 6, 5), cols=6).to_text()
        '3,_,_,2,6,5|6'
        """
        body = ",".join("_" if v is None else str(v) for v in self.word())
        if self.c > 0 or (self.rows == 0 and self.cols > 0):
            return f"{body}|{self.cols}"
        return body

    @classmethod
    def from_text(cls, text: str) -> "PartialPermutation":
        text = text.strip()
        body, _, suffix = text.partition("|")
        entries: list[int | None] = []
        if body:
            for tok in body.split(","):
                tok = tok.strip()
                entries.append(None if tok == "_" else int(tok))
        cols = int(suffix) if suffix else None
        return cls.from_word(tuple(entries), cols=cols)

    def to_json(self) -> str:
        return json.dumps(
            {"rows": self.rows, "cols": self.cols, "dots": [list(d) for d in self.dots]}
        )

    @classmethod
    def from_json(cls, text: str) -> "PartialPermutation":
        obj = json.loads(text)
        return cls(obj["rows"], obj["cols"], tuple((r, c) for r, c in obj["dots"]))


ZERO = PartialPermutation(0, 0)

ParentRule = Literal["standard", "standard-extended", "alt-extended"]


# ---------------------------------------------------------------------------
# extendable avoidance


def extensions(pp: PartialPermutation, patterns: PatternSet) -> Iterator[Word]:
    """All permutations in S_{d+c+r}(patterns) having pp as their NW corner.

    Empty rows of pp receive their dots strictly right of pp's columns and
    empty columns strictly below pp's rows; containment is pruned on
    prefixes, which is sound because it is monotone under extension.
    """
    n = pp.size
    by_row = dict(pp.dots)
    fixed = [by_row.get(i) for i in range(1, pp.rows + 1)] + [None] * (n - pp.rows)
    old_cols = pp.cols
    used = [False] * (n + 1)
    for _, c in pp.dots:
        used[c] = True
    pats = patterns.patterns
    word: list[int] = []

    def place(pos: int) -> Iterator[Word]:
        if pos == n:
            yield tuple(word)
            return
        forced = fixed[pos]
        if forced is not None:
            word.append(forced)
            if not _new_entry_completes_pattern(word, pats):
                yield from place(pos + 1)
            word.pop()
            return
        # empty rows of pp only accept values beyond pp's columns
        low = old_cols + 1 if pos < pp.rows else 1
        for v in range(low, n + 1):
            if used[v]:
                continue
            used[v] = True
            word.append(v)
            if not _new_entry_completes_pattern(word, pats):
                yield from place(pos + 1)
            word.pop()
            used[v] = False

    yield from place(0)


def _new_entry_completes_pattern(word: Sequence[int], patterns: Sequence[Word]) -> bool:
    """Does some pattern occurrence end exactly at the last entry of word?"""
    last = len(word) - 1
    for pat in patterns:
        m = len(pat)
        if m > len(word):
            continue
        if m == 1:
            return True
        if _ends_here(word, pat, last):
            return True
    return False


def _ends_here(word: Sequence[int], pat: Word, last: int) -> bool:
    v = word[last]
    m = len(pat)
    chosen: list[int] = []

    def go(slot: int, start: int) -> bool:
        if slot == m - 1:
            return True
        for pos in range(start, last - (m - 2 - slot)):
            u = word[pos]
            if (u < v) != (pat[slot] < pat[m - 1]):
                continue
            ok = True
            for j, w in enumerate(chosen):
                if (w < u) != (pat[j] < pat[slot]):
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


@lru_cache(maxsize=1 << 18)
def extendably_avoids(pp: PartialPermutation, patterns: PatternSet) -> bool:
    """True iff pp is the NW corner of some avoider of size d+c+r."""
    if pp.is_zero():
        return True
    return next(extensions(pp, patterns), None) is not None


# ---------------------------------------------------------------------------
# parent rules and children


def parent(pp: PartialPermutation, rule: ParentRule = "standard-extended") -> PartialPermutation:
    """The parent of pp under the given rule; raises ZeroObject on the root."""
    if pp.is_zero():
        raise ZeroObject("the zero object has no parent")
    if rule == "standard":
        if pp.r or pp.c:
            raise ValueError("the standard rule applies to full permutations only")
        return _remove_rightmost_dot(pp)
    empties = pp.empty_rows()
    if empties:
        target = max(empties) if rule == "standard-extended" else min(empties)
        return _remove_row(pp, target)
    if pp.cols and not any(c == pp.cols for _, c in pp.dots):
        return PartialPermutation(pp.rows, pp.cols - 1, pp.dots)
    if not pp.dots:
        raise ZeroObject("no rows, columns or dots to remove")
    return _remove_rightmost_dot(pp)


def _remove_rightmost_dot(pp: PartialPermutation) -> PartialPermutation:
    row, col = max(pp.dots, key=lambda rc: rc[1])
    dots = tuple(
        (r - (r > row), c - (c > col)) for r, c in pp.dots if (r, c) != (row, col)
    )
    return PartialPermutation(pp.rows - 1, pp.cols - 1, dots)


def _remove_row(pp: PartialPermutation, row: int) -> PartialPermutation:
    dots = tuple((r - (r > row), c) for r, c in pp.dots)
    return PartialPermutation(pp.rows - 1, pp.cols, dots)


def _insert_dot(pp: PartialPermutation, site: int) -> PartialPermutation:
    dots = tuple((r + (r >= site), c) for r, c in pp.dots) + ((site, pp.cols + 1),)
    return PartialPermutation(pp.rows + 1, pp.cols + 1, dots)


def _insert_row(pp: PartialPermutation, site: int) -> PartialPermutation:
    dots = tuple((r + (r >= site), c) for r, c in pp.dots)
    return PartialPermutation(pp.rows + 1, pp.cols, dots)


EdgeKind = Literal["dot", "column", "row"]


@lru_cache(maxsize=1 << 16)
def children_with_kinds(
    pp: PartialPermutation, rule: ParentRule, patterns: PatternSet
) -> tuple[tuple[EdgeKind, PartialPermutation], ...]:
    """All extendably avoiding objects whose parent is pp, in canonical order.

    Order: dot insertions by site top to bottom, then the column addition,
    then row insertions by site top to bottom.
    """
    out: list[tuple[EdgeKind, PartialPermutation]] = []
    empties = pp.empty_rows()
    if rule == "standard":
        if pp.r or pp.c:
            raise ValueError("the standard rule applies to full permutations only")
        for site in range(1, pp.rows + 2):
            child = _insert_dot(pp, site)
            if avoids_all(child.word(), patterns):
                out.append(("dot", child))
        return tuple(out)
    if not empties:
        for site in range(1, pp.rows + 2):
            child = _insert_dot(pp, site)
            if extendably_avoids(child, patterns):
                out.append(("dot", child))
        child = PartialPermutation(pp.rows, pp.cols + 1, pp.dots)
        if extendably_avoids(child, patterns):
            out.append(("column", child))
    if rule == "standard-extended":
        low = max(empties) + 1 if empties else 1
        sites = range(low, pp.rows + 2)
    else:
        high = min(empties) if empties else pp.rows + 1
        sites = range(1, high + 1)
    for site in sites:
        child = _insert_row(pp, site)
        if extendably_avoids(child, patterns):
            out.append(("row", child))
    return tuple(out)


def children(
    pp: PartialPermutation, rule: ParentRule, patterns: PatternSet
) -> list[PartialPermutation]:
    return [child for _, child in children_with_kinds(pp, rule, patterns)]


def fingerprint_cache_clear():
    """Drop the memoized children/extendability tables (test hygiene)."""
    children_with_kinds.cache_clear()
    extendably_avoids.cache_clear()


if __name__ == "__main__":
    import doctest

    doctest.testmod()
