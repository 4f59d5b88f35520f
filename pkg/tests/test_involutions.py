import itertools

import pytest

from permutoria import involutions as iv
from permutoria import tableau as tb
from permutoria.errors import (
    NotInnerCorner,
    NotLR,
    NotPartitionShaped,
    ShapeMismatch,
)
from permutoria.verify import dominant_universe, lr_universe, ssyt_universe

ck = iv.content_key


def small_universe():
    return list(ssyt_universe(3, 3, 3))


class TestJdt:
    def test_two_slides(self):
        t = tb.make_tableau([[2], [1, 3]], inner=(1,))
        assert iv.jdt(t).rows == ((1, 2), (3,))

    def test_partition_fixed(self):
        t = tb.make_tableau([[1, 1, 3], [2, 2]], box2=(3, 3))
        assert iv.jdt(t) == t

    def test_bad_corner(self):
        t = tb.make_tableau([[2], [1, 3]], inner=(1,))
        with pytest.raises(NotInnerCorner):
            iv.jdt_slide(t, (1, 0))

    def test_order_independence(self):
        import random

        rng = random.Random(7)
        skew = [t for t in small_universe() if t.inner]
        for t in rng.sample(skew, 200):
            base = iv.jdt(t)
            for seed in range(3):
                assert ck(iv.jdt_random_order(t, seed)) == ck(base)

    def test_weight_preserved(self):
        for t in small_universe():
            assert iv.jdt(t).weight() == t.weight()


class TestBenderKnuth:
    def test_rule_example(self):
        t = tb.make_tableau([[1, 1], [2]], box2=(2, 2))
        assert iv.bender_knuth(t, 1).rows == ((1, 2), (2,))

    def test_involution_exhaustive(self):
        for t in small_universe():
            for i in range(1, t.letters):
                assert ck(iv.bender_knuth(iv.bender_knuth(t, i), i)) == ck(t)

    def test_distant_generators_commute(self):
        for t in ssyt_universe(2, 3, 4):
            a = iv.bender_knuth(iv.bender_knuth(t, 1), 3)
            b = iv.bender_knuth(iv.bender_knuth(t, 3), 1)
            assert ck(a) == ck(b)

    def test_weight_action(self):
        for t in small_universe():
            for i in range(1, t.letters):
                w, ws = t.weight(), iv.bender_knuth(t, i).weight()
                assert (ws[i - 1], ws[i]) == (w[i], w[i - 1])

    def test_results_stay_valid(self):
        # the fast constructor skips validation; re-validate explicitly here
        for t in small_universe():
            for i in range(1, t.letters):
                s = iv.bender_knuth(t, i)
                tb.SkewTableau(s.outer, s.inner, s.rows, s.box1, s.box2)


class TestWords:
    def test_word_shapes(self):
        assert iv.zm_word(2) == (1,)
        assert iv.zm_word(3) == (1, 2, 1)
        assert iv.t_word(1, 1) == (1,)
        assert iv.t_word(2, 1) == (2, 1)
        assert iv.t_word(1, 2, d=1) == (2, 3)

    def test_z_square(self):
        for t in small_universe():
            w = iv.zm_word(t.letters)
            assert ck(iv.apply_bk_word(iv.apply_bk_word(t, w), w)) == ck(t)

    def test_t_cancellation(self):
        for t in ssyt_universe(2, 3, 4):
            for k in (1, 2, 3):
                l = t.letters - k
                if l < 0:
                    continue
                out = iv.apply_bk_word(iv.apply_bk_word(t, iv.t_word(k, l)), iv.t_word(l, k))
                assert ck(out) == ck(t)

    def test_z_split(self):
        for t in ssyt_universe(2, 3, 4):
            for k in (1, 2, 3):
                l = t.letters - k
                if l <= 0:
                    continue
                left = iv.apply_bk_word(t, iv.zm_word(t.letters))
                right = iv.apply_bk_word(
                    iv.apply_bk_word(iv.apply_bk_word(t, iv.zm_word(l)), iv.t_word(l, k)),
                    iv.zm_word(k),
                )
                assert ck(left) == ck(right)

    def test_t_split(self):
        for t in ssyt_universe(2, 3, 4):
            for l in (1, 2):
                for k in (1, 2):
                    m = t.letters - l - k
                    if m <= 0:
                        continue
                    lhs = iv.apply_bk_word(t, iv.t_word(l + k, m))
                    rhs = iv.apply_bk_word(
                        iv.apply_bk_word(t, iv.t_word(k, m, d=l)), iv.t_word(l, m)
                    )
                    assert ck(lhs) == ck(rhs)


class TestSchuetzenberger:
    def test_requires_partition_shape(self):
        t = tb.make_tableau([[2], [1, 3]], inner=(1,))
        with pytest.raises(NotPartitionShaped):
            iv.schuetzenberger(t)

    def test_small_value(self):
        assert iv.schuetzenberger(tb.canonical((2, 1))).rows == ((1, 2), (2,))

    def test_matches_evacuation(self):
        for shape in ((3, 2), (2, 2, 1), (4,), (3, 3)):
            for t in tb.enumerate_ssyt(shape, max_letter=3, box2=(3, 6)):
                assert ck(iv.schuetzenberger(t)) == ck(iv.evacuation(t))

    def test_involution_and_weight(self):
        for shape in ((3, 2, 1), (2, 2)):
            for t in tb.enumerate_ssyt(shape, max_letter=3, box2=(3, 6)):
                x = iv.schuetzenberger(t)
                assert x.weight() == tuple(reversed(t.weight()))
                assert ck(iv.schuetzenberger(x)) == ck(t)

    def test_canonical_identity(self):
        # evacuating a canonical, or rectifying its rotation, agree
        for lam in ((3, 1), (2, 2, 1), (4, 3, 1)):
            tight = tb.canonical(lam)
            assert ck(iv.jdt(tb.rotate(tight))) == ck(iv.schuetzenberger(tight))


class TestSwitching:
    def test_shape_mismatch(self):
        s = tb.make_tableau([[1]], box2=(1, 1))
        t = tb.make_tableau([[1]], inner=(2,), box1=(1, 3), box2=(1, 1))
        with pytest.raises(ShapeMismatch):
            iv.tableau_switch(s, t)

    def test_empty_inner(self):
        t = tb.make_tableau([[1, 2], [2]], box2=(2, 2))
        moved_t, moved_s = iv.tableau_switch(tb.EMPTY, t)
        assert ck(moved_t) == ck(t)
        assert moved_s.size() == 0

    def test_routes_agree_and_involutive(self):
        shapes = tb.partitions_in_box(3, 3)
        for nu in shapes:
            for mu in shapes:
                if not tb.contains(nu, mu):
                    continue
                for lam in shapes:
                    if not tb.contains(lam, nu):
                        continue
                    ss = list(tb.enumerate_ssyt(nu, mu, max_letter=2, box1=(3, 3), box2=(2, 3)))
                    ts = list(tb.enumerate_ssyt(lam, nu, max_letter=2, box1=(3, 3), box2=(2, 3)))
                    for s in ss:
                        for t in ts:
                            if s.size() == 0 and t.size() == 0:
                                continue
                            a = iv.tableau_switch(s, t)
                            b = iv.tableau_switch_sliding(s, t)
                            assert (ck(a[0]), ck(a[1])) == (ck(b[0]), ck(b[1]))
                            back = iv.tableau_switch(*a)
                            assert ck(back[0]) == ck(s) and ck(back[1]) == ck(t)
                            if not s.inner and s.size():
                                assert ck(a[0]) == ck(iv.jdt(t))


class TestMatrixRSK:
    def test_intro_example(self):
        p, q = iv.rsk_matrix(iv.permutation_matrix((5, 3, 4, 1, 2)))
        assert p.rows == ((1, 2), (3, 4), (5,))
        assert q.rows == ((1, 3), (2, 5), (4,))

    def test_zero_matrix(self):
        p, q = iv.rsk_matrix(((0, 0), (0, 0)))
        assert p.size() == q.size() == 0

    def test_knuth_laws(self):
        for entries in itertools.product(range(2), repeat=9):
            m = (entries[0:3], entries[3:6], entries[6:9])
            p, q = iv.rsk_matrix(m)
            pt, qt = iv.rsk_matrix(tuple(zip(*m)))
            assert ck(pt) == ck(q) and ck(qt) == ck(p)
            if any(entries):
                rot = tuple(tuple(reversed(r)) for r in reversed(m))
                pr, qr = iv.rsk_matrix(rot)
                assert ck(pr) == ck(iv.schuetzenberger(p))
                assert ck(qr) == ck(iv.schuetzenberger(q))
            assert iv.rsk_matrix_inverse(p, q) == m

    def test_inverse_on_general_matrices(self):
        for entries in itertools.product(range(3), repeat=4):
            m = (entries[0:2], entries[2:4])
            p, q = iv.rsk_matrix(m)
            assert iv.rsk_matrix_inverse(p, q) == m


class TestTableauRSK:
    def test_partition_input(self):
        t = tb.canonical((3, 1))
        p, q = iv.rsk_tableau(t)
        assert ck(p) == ck(t)

    def test_suite_on_dominant_universe(self):
        for t, nu, kap in dominant_universe(3, 3, 2, 3):
            m = tb.recording_matrix(t)
            p_, q_ = iv.rsk_matrix(tuple(reversed(m)))
            p, q = iv.rsk_tableau(t, nu, kap)
            assert ck(p) == ck(p_) == ck(iv.jdt(t))
            assert ck(q_) == ck(iv.schuetzenberger(q))
            assert ck(iv.jdt(tb.rotate(t))) == ck(iv.schuetzenberger(p))
            back = iv.rsk_tableau_inverse(p, q, t.outer, t.inner)
            assert ck(back) == ck(t)

    def test_injectivity(self):
        seen = {}
        for t, nu, kap in dominant_universe(3, 3, 2, 3):
            if (nu, kap) != ((2, 1), ()):
                continue
            p, q = iv.rsk_tableau(t, nu, kap)
            key = ((t.outer, t.inner), ck(p), ck(q))
            assert key not in seen or ck(seen[key]) == ck(t)
            seen[key] = t

    def test_transformation_laws(self):
        for t, nu, kap in dominant_universe(3, 3, 2, 3):
            p, q = iv.rsk_tableau(t, nu, kap)
            pt, qt = iv.rsk_tableau(tb.companion(t, nu, kap), t.outer, t.inner)
            assert ck(pt) == ck(q) and ck(qt) == ck(p)
            comp_out = tb.complement_in_box(kap, t.letters, t.box2[1])
            comp_in = tb.complement_in_box(nu, t.letters, t.box2[1])
            pr, qr = iv.rsk_tableau(tb.rotate(t), comp_out, comp_in)
            assert ck(pr) == ck(iv.schuetzenberger(p))
            assert ck(qr) == ck(iv.schuetzenberger(q))
            pc, qc = iv.rsk_tableau(iv.reversal(t), comp_out, comp_in)
            assert ck(pc) == ck(iv.schuetzenberger(p)) and ck(qc) == ck(q)


class TestReversal:
    def test_involution_weight_shape(self):
        for t in small_universe():
            r = iv.reversal(t)
            assert (r.outer, r.inner) == (t.outer, t.inner)
            assert r.weight() == tuple(reversed(t.weight()))
            assert ck(iv.reversal(r)) == ck(t)

    def test_partition_case_is_evacuation(self):
        for t in small_universe():
            if not t.inner:
                assert ck(iv.reversal(t)) == ck(iv.schuetzenberger(t))

    def test_helper_independence(self):
        import random

        rng = random.Random(3)
        skew = [t for t in small_universe() if t.inner]
        for t in rng.sample(skew, 100):
            helpers = list(tb.enumerate_ssyt(t.inner, max_letter=2, box1=(3, 3), box2=(2, 3)))
            base = iv.reversal(t)
            for s in helpers[:2]:
                assert ck(iv.reversal_with(t, s)) == ck(base)


class TestEquivalences:
    def test_partition_same_shape_dual_equivalent(self):
        groups = {}
        for t in small_universe():
            if not t.inner:
                groups.setdefault(t.outer, []).append(t)
        for group in groups.values():
            for a, b in zip(group, group[1:]):
                assert iv.dual_equivalent(a, b)

    def test_both_equivalences_force_equality(self):
        groups = {}
        for t in small_universe():
            groups.setdefault((t.outer, t.inner), []).append(t)
        for group in groups.values():
            for a in group[:5]:
                for b in group[:5]:
                    if iv.jdt_equivalent(a, b) and iv.dual_equivalent(a, b):
                        assert ck(a) == ck(b)

    def test_equal_recordings_rectify_alike(self):
        seen = {}
        for t in ssyt_universe(3, 3, 2):
            key = (t.outer, tb.recording_matrix(t))
            if key in seen:
                assert iv.jdt_equivalent(seen[key], t)
            else:
                seen[key] = t

    def test_companions_of_jdt_equivalent_are_dual_equivalent(self):
        for t, nu, kap in dominant_universe(3, 3, 2, 3):
            others = [
                u
                for u in tb.enumerate_ssyt(t.outer, t.inner, max_letter=2, box1=t.box1, box2=t.box2)
                if iv.jdt_equivalent(t, u)
            ]
            for u in others:
                assert tb.is_dominant(u, nu, kap)
                assert iv.dual_equivalent(
                    tb.companion(t, nu, kap), tb.companion(u, nu, kap)
                )


class TestRhoOmega:
    def test_rho_requires_flag(self):
        t = tb.make_tableau([[1]], box2=(1, 1))
        with pytest.raises(NotLR):
            iv.rho(t)

    def test_rho_flag_content_mismatch(self):
        t = tb.make_tableau([[2], [1, 3]], inner=(1,), box2=(3, 1), orientation="lr")
        with pytest.raises(NotLR):
            iv.rho(t)  # word is not Yamanouchi

    def test_rho_involution_and_shapes(self):
        for t in lr_universe(3, 3, 3):
            r = iv.rho(t)
            assert r.outer == t.outer and r.inner == tb.normalize(t.weight())
            assert ck(iv.rho(r)) == ck(t)

    def test_rho_composition_laws(self):
        for t in lr_universe(3, 3, 3):
            chi = iv.reversal(t)
            assert ck(iv.rho_dual(iv.rho(t))) == ck(chi)
            assert ck(iv.rho(iv.rho_dual(t))) == ck(chi)

    def test_omega_routes_and_involution(self):
        for t in ssyt_universe(3, 3, 2):
            a, b = iv.omega(t), iv.omega_bk(t)
            c = iv.reversal(tb.rotate(t))
            assert ck(a) == ck(b) == ck(c)
            assert ck(iv.omega(a)) == ck(t)

    def test_omega_triple_rho(self):
        for t in lr_universe(3, 3, 3):
            lhs = iv.omega(t)
            rhs = iv.rho(tb.rotate(iv.rho(tb.rotate(iv.rho(t)))))
            assert ck(lhs) == ck(rhs)

    def test_diagram_negative(self):
        # a flagged but corrupted tableau surfaces as failures, silently
        t = tb.make_tableau([[2], [1, 3]], inner=(1,), box2=(3, 2), orientation="lr")
        report = iv.verify_diagram(t)
        assert not report.passed


class TestCoefficients:
    def test_values(self):
        assert iv.lr_coefficient((2, 1), (1,), (1, 1)) == 1
        assert iv.lr_coefficient((2, 1), (1,), (2,)) == 1
        assert iv.lr_coefficient((3, 2, 1), (2, 1), (2, 1)) == 2

    def test_empty_side(self):
        assert iv.lr_coefficient((2, 2), (2, 2), ()) == 1
        assert iv.lr_coefficient((3, 1), (2, 1), ()) == 0

    def test_symmetry_small(self):
        for n in range(1, 7):
            for lam in tb.partitions_of(n):
                for k in range(n + 1):
                    for mu in tb.partitions_of(k):
                        if not tb.contains(lam, mu):
                            continue
                        for nu in tb.partitions_of(n - k):
                            assert iv.lr_coefficient(lam, mu, nu) == iv.lr_coefficient(
                                lam, nu, mu
                            )

    def test_schur_product(self):
        assert iv.schur_product_check((1,), (1, 1), 4)
        assert iv.schur_product_check((2, 1), (2,), 4)
        assert iv.schur_product_check((2, 2), (1, 1), 3)
