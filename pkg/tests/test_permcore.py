import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from permutoria import permcore as pc
from permutoria.errors import ZeroObject


def perms(n):
    return itertools.permutations(range(1, n + 1))


small_perm = st.integers(1, 6).flatmap(
    lambda n: st.permutations(list(range(1, n + 1))).map(tuple)
)
sized_perm = st.integers(1, 9).flatmap(
    lambda n: st.permutations(list(range(1, n + 1))).map(tuple)
)
short_pattern = st.integers(1, 4).flatmap(
    lambda n: st.permutations(list(range(1, n + 1))).map(tuple)
)


class TestContainment:
    def test_figure_example(self):
        sigma = (7, 9, 3, 8, 1, 10, 5, 6, 2, 4)
        assert pc.contains_pattern(sigma, (3, 2, 1, 4))
        assert not pc.contains_pattern(sigma, (1, 2, 3, 4))

    def test_self_containment(self):
        for n in range(1, 5):
            for w in perms(n):
                assert pc.contains_pattern(w, w)

    def test_identity_avoids_descent_pattern(self):
        assert not pc.contains_pattern((1, 2, 3, 4, 5), (3, 2, 1))

    def test_matches_bruteforce_oracle(self):
        patterns = [(1, 2, 3), (2, 1, 3), (2, 4, 1, 3), (1, 3, 2, 4)]
        for n in range(7):
            for w in perms(n):
                for p in patterns:
                    assert pc.contains_pattern(w, p) == pc.contains_pattern_bruteforce(w, p)

    @settings(max_examples=150, deadline=None)
    @given(small_perm, small_perm)
    def test_matches_bruteforce_random(self, w, p):
        assert pc.contains_pattern(w, p) == pc.contains_pattern_bruteforce(w, p)

    @settings(max_examples=200, deadline=None)
    @given(sized_perm, short_pattern)
    def test_matches_bruteforce_up_to_nine(self, w, p):
        assert pc.contains_pattern(w, p) == pc.contains_pattern_bruteforce(w, p)

    def test_avoids_all(self):
        ps = pc.PatternSet.parse("2413,3142")
        assert not pc.avoids_all((2, 4, 1, 3), ps)
        assert pc.avoids_all((1, 3, 2, 4), pc.PatternSet.parse("1234,2134"))
        assert pc.avoids_all((), ps)


class TestPatternSet:
    def test_normalization_drops_containing_patterns(self):
        ps = pc.PatternSet.parse("123,1243")
        assert ps.patterns == ((1, 2, 3),)

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            pc.PatternSet([])

    def test_str_round_trip(self):
        ps = pc.PatternSet.parse("2413,3142")
        assert pc.PatternSet.parse(str(ps)) == ps


class TestSymmetries:
    def test_examples(self):
        assert pc.symmetry((1, 3, 4, 2), "reverse") == (2, 4, 3, 1)
        assert pc.symmetry((1, 3, 4, 2), "complement") == (4, 2, 1, 3)
        assert pc.symmetry((1, 3, 4, 2), "rotate180") == (3, 1, 2, 4)
        assert pc.inverse((3, 4, 1, 2)) == (3, 4, 1, 2)

    def test_identity_fixed_points(self):
        ident = (1, 2, 3, 4)
        assert pc.symmetry(ident, "inverse") == ident
        assert pc.symmetry(ident, "rotate180") == ident
        assert pc.symmetry(ident, "reverse") == (4, 3, 2, 1)

    @settings(max_examples=100, deadline=None)
    @given(small_perm)
    def test_involutions(self, w):
        for op in ("reverse", "complement", "inverse", "rotate180"):
            assert pc.symmetry(pc.symmetry(w, op), op) == w
        assert pc.symmetry(w, "rotate180") == pc.symmetry(
            pc.symmetry(w, "reverse"), "complement"
        )
        assert pc.symmetry(w, "rotate180") == pc.symmetry(
            pc.symmetry(w, "complement"), "reverse"
        )


class TestAlternating:
    def test_known_word(self):
        assert pc.is_alternating((2, 7, 4, 8, 3, 6, 1, 5))

    def test_tiny(self):
        assert pc.is_alternating((1, 2))
        assert not pc.is_alternating((2, 1))
        assert pc.is_alternating((2, 1), "down-up")

    def test_signature_example(self):
        assert "".join(pc.signature((4, 1, 5, 5, 6, 2, 2))) == "-+-+--"

    def test_gaps_remove_comparisons(self):
        # (3, _, _, 2, 6, 5): only the 2<6 and 6>5 comparisons exist
        word = (3, None, None, 2, 6, 5)
        assert pc.is_alternating(word, "down-up")

    def test_doubly_alternating(self):
        assert pc.is_doubly_alternating((7, 9, 3, 8, 1, 10, 5, 6, 2, 4))
        assert pc.is_doubly_alternating((1, 2))
        assert pc.is_doubly_alternating((1, 3, 2))
        assert not pc.is_doubly_alternating((2, 7, 4, 8, 3, 6, 1, 5))
        assert pc.is_doubly_alternating(())

    def test_unique_small_da(self):
        assert [w for w in perms(2) if pc.is_doubly_alternating(w)] == [(1, 2)]
        assert [w for w in perms(3) if pc.is_doubly_alternating(w)] == [(1, 3, 2)]


class TestBaxter:
    def test_examples(self):
        assert pc.is_baxter((1, 2, 3, 4, 5))
        assert not pc.is_baxter((2, 4, 1, 3))
        assert not pc.is_baxter((3, 1, 4, 2))

    def test_da6_baxter_equals_2413_avoiders(self):
        da6 = [w for w in perms(6) if pc.is_doubly_alternating(w)]
        baxter = {w for w in da6 if pc.is_baxter(w)}
        avoiders = {w for w in da6 if not pc.contains_pattern(w, (2, 4, 1, 3))}
        assert baxter == avoiders and len(baxter) == 5


class TestPartialPermutation:
    def test_text_round_trip(self):
        pp = pc.PartialPermutation.from_text("3,_,_,2,6,5|6")
        assert (pp.d, pp.c, pp.r) == (4, 2, 2)
        assert pp.to_text() == "3,_,_,2,6,5|6"
        full = pc.PartialPermutation.from_permutation((4, 1, 5, 2, 3))
        assert full.to_text() == "4,1,5,2,3"
        assert pc.PartialPermutation.from_text(full.to_text()) == full

    def test_json_round_trip(self):
        pp = pc.PartialPermutation.from_text("3,_,_,2,6,5|6")
        assert pc.PartialPermutation.from_json(pp.to_json()) == pp

    def test_distinct_empty_shapes(self):
        row = pc.PartialPermutation(1, 0)
        col = pc.PartialPermutation(0, 1)
        assert row != col

    def test_rejects_shared_lines(self):
        with pytest.raises(ValueError):
            pc.PartialPermutation(2, 2, ((1, 1), (1, 2)))


class TestExtendability:
    def test_worked_example(self):
        pp = pc.PartialPermutation.from_text("3,_,_,2,6,5|6")
        assert pc.extendably_avoids(pp, pc.PatternSet.parse("123"))

    def test_dotless_always_extendable(self):
        ps = pc.PatternSet.parse("321")
        for rows in range(3):
            for cols in range(3):
                assert pc.extendably_avoids(pc.PartialPermutation(rows, cols), ps)

    def test_containment_blocks_extension(self):
        pp = pc.PartialPermutation.from_permutation((1, 2, 3))
        assert not pc.extendably_avoids(pp, pc.PatternSet.parse("123"))

    def test_extension_witness_is_avoider(self):
        ps = pc.PatternSet.parse("123")
        pp = pc.PartialPermutation.from_text("3,_,_,2,6,5|6")
        witness = next(pc.extensions(pp, ps))
        assert pc.avoids_all(witness, ps)
        assert witness[:1] == (3,) and witness[3:6] == (2, 6, 5)


class TestParentChildren:
    def test_standard_parent(self):
        pp = pc.PartialPermutation.from_permutation((4, 1, 5, 2, 3))
        parent = pc.parent(pp, "standard")
        assert parent == pc.PartialPermutation.from_permutation((4, 1, 2, 3))

    def test_zero_has_no_parent(self):
        with pytest.raises(ZeroObject):
            pc.parent(pc.ZERO, "standard-extended")

    def test_single_row_parent(self):
        pp = pc.PartialPermutation(1, 0)
        assert pc.parent(pp, "standard-extended") == pc.ZERO

    def test_empty_column_parent(self):
        pp = pc.PartialPermutation(1, 2, ((1, 1),))
        parent = pc.parent(pp, "standard-extended")
        assert parent == pc.PartialPermutation(1, 1, ((1, 1),))

    def test_zero_children_standard(self):
        ps = pc.PatternSet.parse("123")
        kids = pc.children(pc.ZERO, "standard", ps)
        assert kids == [pc.PartialPermutation.from_permutation((1,))]

    @pytest.mark.parametrize("rule", ["standard-extended", "alt-extended"])
    def test_parent_child_inverse(self, rule):
        ps = pc.PatternSet.parse("132")
        frontier = [pc.ZERO]
        for _ in range(3):
            nxt = []
            for pp in frontier:
                kids = pc.children(pp, rule, ps)
                assert len(set(kids)) == len(kids)
                for child in kids:
                    assert pc.parent(child, rule) == pp
                    assert pc.extendably_avoids(child, ps)
                nxt.extend(kids)
            frontier = nxt

    def test_child_order_is_canonical(self):
        ps = pc.PatternSet.parse("321")
        pp = pc.PartialPermutation.from_permutation((1, 2))
        kinds = [k for k, _ in pc.children_with_kinds(pp, "standard-extended", ps)]
        assert kinds == sorted(kinds, key=["dot", "column", "row"].index)
