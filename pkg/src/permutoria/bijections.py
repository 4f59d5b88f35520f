"""Explicit bijections between pattern-avoiding permutation families.

Three maps live here: the insertion-tableau bijection between avoiders of
an increasing length-4 pattern and doubly alternating avoiders of twice the
size; the block decomposition onto Dyck paths; and the active-region
rewiring between the 12-prefixed and 21-prefixed avoiding families.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Literal, Sequence

from .errors import (
    NoPlacement,
    NotAlternating,
    NotAvoider,
    NotInDomain,
    NotYamanouchi,
    TooManyColumns,
)
from .involutions import (
    matrix_to_permutation,
    permutation_matrix,
    rsk_matrix,
    rsk_matrix_inverse,
)
from .permcore import (
    PatternSet,
    Word,
    avoids_all,
    contains_pattern,
    is_alternating,
    is_doubly_alternating,
    standardize,
)
from .tableau import SkewTableau, is_yamanouchi

DyckPath = str  # 'U'/'D' letters, balanced, prefixes nonnegative


def is_dyck_path(path: str) -> bool:
    height = 0
    for step in path:
        if step == "U":
            height += 1
        elif step == "D":
            height -= 1
        else:
            return False
        if height < 0:
            return False
    return height == 0


# ---------------------------------------------------------------------------
# column words of standard tableaux


def column_word(t: SkewTableau) -> tuple[int, ...]:
    """column_word(t)[k-1] = 1-based column of the entry k."""
    pos = {}
    for r, c, v in t.cells():
        pos[v] = c + 1
    return tuple(pos[k] for k in range(1, t.size() + 1))


def row_word(t: SkewTableau) -> tuple[int, ...]:
    pos = {}
    for r, c, v in t.cells():
        pos[v] = r + 1
    return tuple(pos[k] for k in range(1, t.size() + 1))


def syt_from_column_word(word: Sequence[int]) -> SkewTableau:
    """Rebuild the standard tableau whose k-th entry sits in column word[k-1]."""
    if not is_yamanouchi(word):
        raise NotYamanouchi(f"column word {word} is not Yamanouchi")
    heights: dict[int, int] = {}
    rows: list[list[int]] = []
    for k, col in enumerate(word, start=1):
        r = heights.get(col, 0)
        heights[col] = r + 1
        if r == len(rows):
            rows.append([])
        rows[r].append(k)
    from .tableau import make_tableau

    n = len(word)
    return make_tableau([tuple(r) for r in rows], box2=(n, max(1, n)))


def is_alternating_tableau(t: SkewTableau) -> bool:
    """Membership test via the column reading."""
    return is_alternating(column_word(t), "up-down")


# ---------------------------------------------------------------------------
# the pair column reading


_PAIR_OF = {1: (1, 2), 2: (1, 3), 3: (2, 3)}


def colpair(t: SkewTableau) -> tuple[int, ...]:
    """Fuse the column word pairwise: (1,2)->1, (1,3)->2, (2,3)->3."""
    word = column_word(t)
    if len(word) % 2:
        raise NotAlternating("the tableau must have an even number of entries")
    if any(c > 3 for c in word):
        raise TooManyColumns("at most three columns allowed")
    if not is_alternating_tableau(t):
        raise NotAlternating("the column reading must be up-down alternating")
    out = []
    for i in range(0, len(word), 2):
        pair = (word[i], word[i + 1])
        letter = word[i] + word[i + 1] - 2
        if _PAIR_OF.get(letter) != pair:
            raise NotAlternating(f"forbidden column pair {pair}")
        out.append(letter)
    return tuple(out)


def colpair_inverse(word: Sequence[int]) -> SkewTableau:
    """The alternating standard tableau whose fused column word is given."""
    if any(not 1 <= w <= 3 for w in word):
        raise TooManyColumns("letters must be 1, 2 or 3")
    if not is_yamanouchi(word):
        raise NotYamanouchi(f"{word} is not a Yamanouchi word")
    cols: list[int] = []
    for w in word:
        a, b = _PAIR_OF[w]
        cols.extend((a, b))
    return syt_from_column_word(cols)


# ---------------------------------------------------------------------------
# avoiders of the increasing pattern vs doubly alternating avoiders


_INCREASING4 = PatternSet.parse("1234")


def rs_pair(word: Word) -> tuple[SkewTableau, SkewTableau]:
    """Insertion and recording tableaux of a permutation."""
    return rsk_matrix(permutation_matrix(word))


def phi(word: Word) -> Word:
    """Avoider of 1234 to a doubly alternating 1234-avoider of twice the size."""
    if not avoids_all(word, _INCREASING4):
        raise NotAvoider(f"{word} contains the increasing pattern of length 4")
    p, q = rs_pair(word)
    big_p = colpair_inverse(column_word(p))
    big_q = colpair_inverse(column_word(q))
    matrix = rsk_matrix_inverse(big_p, big_q)
    return matrix_to_permutation(matrix)


def phi_inverse(word: Word) -> Word:
    """Inverse map: fuse the column readings back down."""
    if not (is_doubly_alternating(word) and avoids_all(word, _INCREASING4)):
        raise NotInDomain(f"{word} is not a doubly alternating avoider")
    big_p, big_q = rs_pair(word)
    p = syt_from_column_word(colpair(big_p))
    q = syt_from_column_word(colpair(big_q))
    return matrix_to_permutation(rsk_matrix_inverse(p, q))


# ---------------------------------------------------------------------------
# the Dyck path bijection


def _in_theta_domain(word: Word) -> bool:
    return (
        len(word) % 2 == 0
        and is_doubly_alternating(word)
        and not contains_pattern(word, (2, 4, 1, 3))
    )


def _blocks_top_down(word: Word) -> list[Word]:
    """Anti-diagonal block factorization, top block (rightmost columns) first."""
    n = len(word)
    blocks = []
    start = 0
    top = n  # columns strictly above start-block are already used
    while start < n:
        seen = set()
        for end in range(start, n):
            seen.add(word[end])
            size = end - start + 1
            if seen == set(range(top - size + 1, top + 1)):
                blocks.append(standardize(word[start : end + 1]))
                top -= size
                start = end + 1
                break
        else:
            raise NotInDomain(f"{word} has no anti-diagonal block structure")
    return blocks


def theta(word: Word) -> DyckPath:
    """Doubly alternating avoider of 2413 to a Dyck path, by block recursion."""
    if not _in_theta_domain(word):
        raise NotInDomain(f"{word} is not a doubly alternating 2413-avoider of even size")
    blocks = _blocks_top_down(word)
    out = []
    for block in reversed(blocks):  # leftmost block first
        middle = standardize(tuple(reversed(block[1:-1])))
        out.append("U" + theta(middle) + "D")
    return "".join(out)


def theta_inverse(path: DyckPath) -> Word:
    """Rebuild the permutation from the Dyck path factorization."""
    if not is_dyck_path(path):
        raise NotInDomain(f"{path!r} is not a Dyck path")
    factors = []
    height = 0
    start = 0
    for i, step in enumerate(path):
        height += 1 if step == "U" else -1
        if height == 0:
            factors.append(path[start : i + 1])
            start = i + 1
    block_perms = []
    for factor in factors:  # leftmost block first
        middle = theta_inverse(factor[1:-1])
        k = len(middle) + 2
        inner = tuple(reversed(tuple(v + 1 for v in middle)))
        block_perms.append((1,) + inner + (k,))
    word: list[int] = []
    total = sum(len(b) for b in block_perms)
    used = total
    for block in reversed(block_perms):  # top rows get the rightmost values
        word.extend(v + used - len(block) for v in block)
        used -= len(block)
    return tuple(word)


# ---------------------------------------------------------------------------
# active regions and the 12tau/21tau rewiring


@dataclass(frozen=True)
class ActiveRegion:
    diagram: tuple[int, ...]  # row lengths of the union of rectangles
    active_dots: tuple[tuple[int, int], ...]
    placement: tuple[tuple[int, int], ...]  # all dots inside the diagram

    def rows(self) -> tuple[int, ...]:
        return tuple(sorted(r for r, _ in self.placement))

    def cols(self) -> tuple[int, ...]:
        return tuple(sorted(c for _, c in self.placement))


def _occurrences(word: Word, pattern: Word) -> Iterator[tuple[int, ...]]:
    """All index tuples carrying the pattern (1-based positions)."""
    n, m = len(word), len(pattern)

    def rec(slot: int, start: int, chosen: list[int]):
        if slot == m:
            yield tuple(i + 1 for i in chosen)
            return
        for pos in range(start, n - (m - slot) + 1):
            ok = True
            for j, p in enumerate(chosen):
                if (word[p] < word[pos]) != (pattern[j] < pattern[slot]):
                    ok = False
                    break
            if ok:
                chosen.append(pos)
                yield from rec(slot + 1, pos + 1, chosen)
                chosen.pop()

    yield from rec(0, 0, [])


def pattern_with_prefix(prefix: tuple[int, int], tail: Word) -> Word:
    """12tau or 21tau: the tail is a permutation of {3..m}."""
    return prefix + tuple(tail)


def active_region(word: Word, tail: Word) -> ActiveRegion:
    """Active dots, pairs and their rectangle union for one of the two
    one-sided families."""
    pat12 = pattern_with_prefix((1, 2), tail)
    pat21 = pattern_with_prefix((2, 1), tail)
    avoid12 = not contains_pattern(word, pat12)
    avoid21 = not contains_pattern(word, pat21)
    if not is_doubly_alternating(word):
        raise NotInDomain(f"{word} is not doubly alternating")
    pairs = []
    active = set()
    for pat in (pat12, pat21):
        for occ in _occurrences(word, pat):
            i1, i2 = occ[0], occ[1]
            d1 = (i1, word[i1 - 1])
            d2 = (i2, word[i2 - 1])
            active.update((d1, d2))
            pairs.append((d1, d2))
    if avoid12 or avoid21:
        # inside one of the one-sided families every active dot sits on odd
        # coordinates; outside them the claim is not guaranteed
        for (r, c) in active:
            if r % 2 == 0 or c % 2 == 0:
                raise AssertionError(f"active dot {(r, c)} with an even coordinate")
    n = len(word)
    lengths = [0] * n
    for d1, d2 in pairs:
        depth = max(d1[0], d2[0])
        width = max(d1[1], d2[1])
        for r in range(depth):
            lengths[r] = max(lengths[r], width)
    while lengths and lengths[-1] == 0:
        lengths.pop()
    diagram = tuple(lengths)
    placement = tuple(
        sorted((i + 1, v) for i, v in enumerate(word) if i < len(diagram) and v <= diagram[i])
    )
    if avoid12 and placement_contains(diagram, placement, (1, 2)):
        raise AssertionError("induced placement not 12-avoiding on the 12-avoiding side")
    if avoid21 and placement_contains(diagram, placement, (2, 1)):
        raise AssertionError("induced placement not 21-avoiding on the 21-avoiding side")
    return ActiveRegion(diagram, tuple(sorted(active)), placement)


def placement_contains(
    diagram: Sequence[int], dots: Sequence[tuple[int, int]], pattern: Word
) -> bool:
    """Pattern containment for rook placements on a Young diagram.

    An occurrence only counts when the whole spanned grid lies inside the
    diagram, i.e. its bounding corner cell (max row, max col) does.
    """
    dots = sorted(dots)
    m = len(pattern)

    def rec(slot: int, start: int, chosen: list[tuple[int, int]]) -> bool:
        if slot == m:
            row = max(r for r, _ in chosen)
            col = max(c for _, c in chosen)
            return row <= len(diagram) and col <= diagram[row - 1]
        for idx in range(start, len(dots) - (m - slot) + 1):
            r, c = dots[idx]
            ok = True
            for j, (_, cj) in enumerate(chosen):
                if (cj < c) != (pattern[j] < pattern[slot]):
                    ok = False
                    break
            if ok:
                chosen.append((r, c))
                if rec(slot + 1, idx + 1, chosen):
                    chosen.pop()
                    return True
                chosen.pop()
        return False

    return rec(0, 0, [])


def unique_monotone_placement(
    diagram: Sequence[int],
    rows: Sequence[int],
    cols: Sequence[int],
    direction: Literal["increasing", "decreasing"],
) -> tuple[tuple[int, int], ...]:
    """The unique monotone partial rook placement on the given rows/columns.

    Avoidance is diagram-relative: an inversion whose bounding corner falls
    outside the diagram does not count.  The decreasing (12-avoiding)
    placement is built top-down, the increasing (21-avoiding) one bottom-up;
    both take the largest free column that fits, which is forced.
    """
    if len(rows) != len(set(rows)) or len(cols) != len(set(cols)):
        raise ValueError("rows and columns must be distinct")
    if len(rows) != len(cols):
        raise NoPlacement("row and column counts differ")
    free = sorted(cols)
    order = sorted(rows) if direction == "decreasing" else sorted(rows, reverse=True)
    out = []
    for r in order:
        if r > len(diagram):
            raise NoPlacement(f"row {r} outside the diagram")
        legal = [c for c in free if c <= diagram[r - 1]]
        if not legal:
            raise NoPlacement(f"no free column fits in row {r}")
        pick = legal[-1]
        free.remove(pick)
        out.append((r, pick))
    result = tuple(sorted(out))
    forbidden = (1, 2) if direction == "decreasing" else (2, 1)
    if placement_contains(diagram, result, forbidden):
        raise NoPlacement(f"greedy placement is not {direction}")
    return result


def placements_bruteforce(
    diagram: Sequence[int],
    rows: Sequence[int],
    cols: Sequence[int],
    direction: Literal["increasing", "decreasing"],
) -> list[tuple[tuple[int, int], ...]]:
    """Exhaustive oracle for the uniqueness claim."""
    from itertools import permutations as iperm

    rows = sorted(rows)
    forbidden = (1, 2) if direction == "decreasing" else (2, 1)
    out = []
    for assignment in iperm(sorted(cols)):
        if not all(c <= diagram[r - 1] for r, c in zip(rows, assignment)):
            continue
        dots = tuple(zip(rows, assignment))
        if not placement_contains(diagram, dots, forbidden):
            out.append(dots)
    return out


def _rewire(word: Word, tail: Word, direction: Literal["increasing", "decreasing"]) -> Word:
    region = active_region(word, tail)
    replacement = unique_monotone_placement(
        region.diagram, region.rows(), region.cols(), direction
    )
    new_word = list(word)
    for r, c in replacement:
        new_word[r - 1] = c
    return tuple(new_word)


def psi(word: Word, tail: Word) -> Word:
    """12tau-avoiding doubly alternating to 21tau-avoiding, fixing every dot
    outside the active region."""
    pat12 = pattern_with_prefix((1, 2), tail)
    if not is_doubly_alternating(word) or contains_pattern(word, pat12):
        raise NotInDomain(f"{word} is not a doubly alternating {pat12}-avoider")
    image = _rewire(word, tail, "increasing")
    pat21 = pattern_with_prefix((2, 1), tail)
    if contains_pattern(image, pat21) or not is_doubly_alternating(image):
        raise AssertionError(f"image {image} left the target family")
    return image


def psi_inverse(word: Word, tail: Word) -> Word:
    pat21 = pattern_with_prefix((2, 1), tail)
    if not is_doubly_alternating(word) or contains_pattern(word, pat21):
        raise NotInDomain(f"{word} is not a doubly alternating {pat21}-avoider")
    image = _rewire(word, tail, "decreasing")
    pat12 = pattern_with_prefix((1, 2), tail)
    if contains_pattern(image, pat12) or not is_doubly_alternating(image):
        raise AssertionError(f"image {image} left the target family")
    return image
