"""The compiled kernel and the pure fallback must agree everywhere."""

import itertools

import pytest

from permutoria import kernels


def brute_avoiders(n, patterns):
    from permutoria.permcore import PatternSet, avoids_all

    ps = PatternSet(patterns)
    return sum(1 for w in itertools.permutations(range(1, n + 1)) if avoids_all(w, ps))


def brute_da(n, patterns):
    from permutoria.permcore import PatternSet, avoids_all, is_doubly_alternating

    ps = PatternSet(patterns) if patterns else None
    return sum(
        1
        for w in itertools.permutations(range(1, n + 1))
        if is_doubly_alternating(w) and (ps is None or avoids_all(w, ps))
    )


CASES = [
    ((1, 2, 3),),
    ((3, 2, 1),),
    ((2, 4, 1, 3),),
    ((1, 2, 3, 4), (2, 1, 3, 4)),
    ((2, 1, 3), (4, 1, 2, 3)),
]


@pytest.mark.parametrize("patterns", CASES)
def test_pure_matches_bruteforce(patterns):
    for n in range(8):
        assert kernels.count_avoiders_py(n, patterns) == brute_avoiders(n, patterns)


@pytest.mark.parametrize("patterns", CASES + [()])
def test_pure_da_matches_bruteforce(patterns):
    for n in range(8):
        assert kernels.count_da_py(n, patterns) == brute_da(n, patterns)


@pytest.mark.skipif(not kernels.HAVE_SPEEDUPS, reason="compiled kernel not built")
class TestCompiledParity:
    @pytest.mark.parametrize("patterns", CASES)
    def test_avoiders(self, patterns):
        for n in range(10):
            assert kernels._speedups.count_avoiders(n, patterns) == kernels.count_avoiders_py(
                n, patterns
            )

    @pytest.mark.parametrize("patterns", CASES + [()])
    def test_da(self, patterns):
        for n in range(11):
            assert kernels._speedups.count_da(n, patterns) == kernels.count_da_py(n, patterns)

    def test_larger_sizes(self):
        assert kernels._speedups.count_avoiders(10, ((1, 2, 3),)) == 16796
        assert kernels._speedups.count_avoiders(10, ((1, 2, 3, 4),)) == 586590
        assert kernels._speedups.count_da(12, ((2, 4, 1, 3),)) == 132


def test_engine_name():
    assert kernels.engine_name() in ("compiled", "pure-python")
