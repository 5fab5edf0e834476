import pytest

from endochain import (
    Endo,
    all_endos,
    cayley_tables,
    check_image_equals_fix,
    compose,
    constant,
    enumerate_id_family,
    enumerate_idempotents_by_jumps,
    fixed_points,
    format_endo,
    gap_jump_point,
    id_family_order,
    ideal_check,
    idempotent_witness,
    identity,
    is_idempotent,
    isolated_nonfixed_predicate,
    jump_points,
    k_minus,
    k_plus,
    no_jump_idempotent_count,
    segment_classify,
    stabilization_index,
)

from oracles import naive_endos, naive_is_idempotent


def E(*images):
    return Endo(images)


class TestIdempotentWitness:
    def test_least_violating_point(self):
        assert idempotent_witness(E(0, 0, 1)) == 2

    def test_identity_has_no_witness(self):
        assert idempotent_witness(identity(4)) is None

    def test_consecutive_jump_idempotent(self):
        assert idempotent_witness(E(1, 1, 1, 3, 5, 5)) is None

    def test_agrees_with_squaring_exhaustively(self):
        for n in range(1, 7):
            for a in all_endos(n):
                assert (idempotent_witness(a) is None) == is_idempotent(a)
                assert check_image_equals_fix(a) == is_idempotent(a)


class TestImageEqualsFix:
    def test_block_idempotent(self):
        assert check_image_equals_fix(E(1, 1, 1, 1, 5, 5, 5))

    def test_direct_set_computation(self):
        a = E(0, 0, 1)
        assert set(a) == {0, 1} and set(fixed_points(a)) == {0}
        assert not check_image_equals_fix(a)

    def test_constants(self):
        assert all(check_image_equals_fix(constant(5, k)) for k in range(5))


class TestIdFamily:
    def test_two_fixed_points_family(self):
        fam = enumerate_id_family(7, (1, 5))
        assert [format_endo(m) for m in fam.members] == [
            "1,1,1,1,1,5,5",
            "1,1,1,1,5,5,5",
            "1,1,1,5,5,5,5",
            "1,1,5,5,5,5,5",
        ]

    def test_single_fixed_point_is_constant(self):
        fam = enumerate_id_family(6, (2,))
        assert fam.members == (constant(6, 2),)

    def test_three_fixed_points_brute_forced(self):
        fam = enumerate_id_family(4, (0, 2, 3))
        want = [
            t
            for t in naive_endos(4)
            if naive_is_idempotent(t) and tuple(x for x in range(4) if t[x] == x) == (0, 2, 3)
        ]
        assert [tuple(m) for m in fam.members] == want == [(0, 0, 2, 3), (0, 2, 2, 3)]

    def test_family_members_form_chain_for_one_gap(self):
        fam = enumerate_id_family(7, (1, 5))
        for a, b in zip(fam.members, fam.members[1:]):
            assert a.pointwise_le(b) and not b.pointwise_le(a)

    def test_matches_brute_force_for_all_fixed_sets(self):
        import itertools

        for n in range(1, 6):
            idempotents = [a for a in all_endos(n) if is_idempotent(a)]
            for size in range(1, n + 1):
                for fixed in itertools.combinations(range(n), size):
                    fam = enumerate_id_family(n, fixed)
                    brute = sorted(a for a in idempotents if fixed_points(a) == fixed)
                    assert sorted(fam.members) == brute
                    assert id_family_order(n, fixed) == len(brute)

    def test_invalid_fixed_sets(self):
        with pytest.raises(ValueError):
            enumerate_id_family(4, ())
        with pytest.raises(ValueError):
            enumerate_id_family(4, (0, 4))


class TestIdFamilyOrder:
    def test_gap_product(self):
        assert id_family_order(7, (1, 5)) == 4

    def test_singleton(self):
        assert id_family_order(9, (4,)) == 1

    def test_punctured_chain_has_two(self):
        for n, k in ((4, 2), (6, 3)):
            fixed = tuple(x for x in range(n) if x != k)
            assert id_family_order(n, fixed) == 2

    def test_full_chain_gives_identity_only(self):
        fam = enumerate_id_family(5, range(5))
        assert fam.members == (identity(5),)
        assert id_family_order(5, range(5)) == 1


class TestCayleyTables:
    def test_family_tables_are_max_and_left(self):
        fam = enumerate_id_family(7, (1, 5))
        ct = cayley_tables(list(fam.members))
        k = len(ct.members)
        for i in range(k):
            for j in range(k):
                assert ct.add_table[i][j] == ct.members[max(i, j)]
                assert ct.mul_table[i][j] == ct.members[i]
        assert ct.closed

    def test_punctured_pair_tables(self):
        ct = cayley_tables([k_minus(4, 2), k_plus(4, 2)])
        lo, hi = ct.members
        assert ct.add_table == [[lo, hi], [hi, hi]]
        assert ct.mul_table == [[lo, lo], [hi, hi]]

    def test_non_closed_pair_is_flagged(self):
        ct = cayley_tables([E(0, 0, 2), E(0, 1, 1)])
        assert not ct.closed
        assert ("*", 0, 1, E(0, 0, 1)) in ct.escapes

    def test_duplicate_members_rejected(self):
        with pytest.raises(ValueError):
            cayley_tables([identity(3), identity(3)])


class TestIdealCheck:
    def test_two_point_family_is_ideal(self):
        rep = ideal_check(8, (1, 5))
        assert rep.ok and rep.instances > 0

    def test_single_constant_family(self):
        rep = ideal_check(3, (1,))
        assert rep.ok

    def test_bounds(self):
        with pytest.raises(ValueError):
            ideal_check(4, (0, 1, 2))
        with pytest.raises(ValueError):
            ideal_check(2, (0,))

    def test_cross_family_product_is_not_idempotent(self):
        a = E(1, 1, 5, 5, 5, 5, 5, 5)
        b = E(2, 2, 2, 5, 5, 5, 5, 5)
        prod = compose(a, b)
        assert prod == E(2, 2, 5, 5, 5, 5, 5, 5)
        assert not is_idempotent(prod)


class TestGapJumpPoint:
    def test_first_gap(self):
        assert gap_jump_point(E(2, 2, 2, 5, 5, 5, 5), 0) == 3

    def test_both_gaps_of_consecutive_jump_example(self):
        a = E(1, 1, 1, 3, 5, 5)
        assert gap_jump_point(a, 0) == 3
        assert gap_jump_point(a, 1) == 4

    def test_consecutive_pair_rejected(self):
        with pytest.raises(ValueError):
            gap_jump_point(identity(4), 0)

    def test_index_out_of_range(self):
        with pytest.raises(ValueError):
            gap_jump_point(E(2, 2, 2, 5, 5, 5, 5), 1)

    def test_unique_per_gap_exhaustively(self):
        for n in range(2, 8):
            for a in all_endos(n):
                fp = fixed_points(a)
                for i, (lo, hi) in enumerate(zip(fp, fp[1:])):
                    if hi > lo + 1:
                        j = gap_jump_point(a, i)
                        assert lo + 1 <= j <= hi


class TestStabilizationIndex:
    def test_two_step_shift(self):
        # positions k, k+1 pushed up by one, all else fixed
        a = E(0, 2, 3, 3)
        assert stabilization_index(a) == 2

    def test_idempotents_stabilize_immediately(self):
        assert stabilization_index(identity(5)) == 1
        assert stabilization_index(constant(4, 2)) == 1

    def test_three_step_chain(self):
        a = E(1, 2, 3, 3)
        acc, q = a, 1
        while compose(acc, a) != acc:
            acc, q = compose(acc, a), q + 1
        assert stabilization_index(a) == q == 3


class TestIsolatedNonfixedPredicate:
    def test_alternating_map(self):
        a = E(0, 0, 2, 2, 4, 4, 6)
        assert isolated_nonfixed_predicate(a)
        assert is_idempotent(a)

    def test_identity_not_covered(self):
        assert not isolated_nonfixed_predicate(identity(5))

    def test_consecutive_nonfixed_rejected(self):
        a = E(0, 2, 3, 3)
        assert not isolated_nonfixed_predicate(a)
        assert not is_idempotent(a)

    def test_implication_exhaustively(self):
        for n in range(1, 8):
            for a in all_endos(n):
                if isolated_nonfixed_predicate(a):
                    assert is_idempotent(a)


class TestSegmentClassify:
    def test_constant_identity_constant(self):
        seg = segment_classify(E(0, 0, 3, 3, 4, 4, 7, 7), 2, 6)
        assert seg.tag == "ConstantIdentityConstant"
        assert (seg.k, seg.ell) == (3, 4)

    def test_degenerate_block_normalizes_to_constant(self):
        seg = segment_classify(E(0, 0, 2, 2, 2, 5), 2, 5)
        assert seg.tag == "Constant"
        assert seg.k == seg.ell == 2

    def test_identity_segment(self):
        seg = segment_classify(E(0, 0, 2, 3, 5, 5), 2, 4)
        assert seg.tag == "Identity"
        assert (seg.k, seg.ell) == (2, 3)

    def test_identity_then_constant(self):
        seg = segment_classify(E(0, 0, 2, 3, 3, 5), 2, 5)
        assert seg.tag == "IdentityThenConstant"
        assert (seg.k, seg.ell) == (2, 3)

    def test_constant_then_identity(self):
        seg = segment_classify(E(0, 0, 3, 3, 4, 7, 7, 7), 2, 5)
        assert seg.tag == "ConstantThenIdentity"
        assert (seg.k, seg.ell) == (3, 4)

    def test_resynthesis_reproduces_restriction(self):
        for n in range(2, 8):
            for eps in all_endos(n):
                if not is_idempotent(eps):
                    continue
                js = jump_points(eps)
                for j1, j2 in zip(js, js[1:]):
                    if j2 > j1 + 1:
                        seg = segment_classify(eps, j1, j2)
                        assert [seg.value_at(x) for x in range(j1, j2)] == list(eps[j1:j2])

    def test_preconditions(self):
        with pytest.raises(ValueError):
            segment_classify(E(1, 2, 2), 1, 2)  # not idempotent
        with pytest.raises(ValueError):
            segment_classify(E(0, 0, 3, 3, 4, 4, 7, 7), 2, 7)  # not adjacent jumps
        with pytest.raises(ValueError):
            segment_classify(E(1, 1, 1, 3, 5, 5), 3, 4)  # consecutive jumps


class TestIdempotentsByJumps:
    def test_no_jump_idempotents_on_three_chain(self):
        got = [format_endo(a) for a in enumerate_idempotents_by_jumps(3, ())]
        assert sorted(got) == ["0,0,0", "0,1,1", "0,1,2", "1,1,1", "1,1,2", "2,2,2"]
        assert len(got) == no_jump_idempotent_count(3) == 6

    def test_lifted_map_has_jump_one(self):
        assert k_plus(4, 1) in enumerate_idempotents_by_jumps(4, (1,))

    def test_consecutive_jump_example_included(self):
        assert E(1, 1, 1, 3, 5, 5) in enumerate_idempotents_by_jumps(6, (3, 4))

    def test_counts(self):
        assert no_jump_idempotent_count(2) == 3
        assert no_jump_idempotent_count(7) == 28
        for n in range(1, 7):
            assert len(enumerate_idempotents_by_jumps(n, ())) == no_jump_idempotent_count(n)

    def test_out_of_range_jump_set(self):
        with pytest.raises(ValueError):
            enumerate_idempotents_by_jumps(4, (0,))

    def test_consecutive_jumps_only_after_fixed_jump(self):
        # for idempotents a jump at a non-fixed point is never followed by one
        for n in range(2, 9):
            for eps in all_endos(n):
                if not is_idempotent(eps):
                    continue
                js = jump_points(eps)
                for j1, j2 in zip(js, js[1:]):
                    if j2 == j1 + 1:
                        assert eps[j1] == j1
