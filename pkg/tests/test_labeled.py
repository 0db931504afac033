import itertools
import random
from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from stablerep.characters import cycle_types
from stablerep.errors import InvalidArgs, SizeBudgetExceeded
from stablerep.labeled import (
    FWGradedPiece,
    GeneralLabeledPartition,
    LabelAlphabet,
    QLabeledPartition,
    bell_number,
    build_fw_piece,
    check_phi_equivariance,
    count_general,
    enumerate_general,
    enumerate_pq,
    fw_dimension_by_series,
    hom_bicharacter,
    hom_space_dimension_gl,
    permutation_bicharacter,
    phi_matrix,
    set_partitions,
    splitting_map,
    verify_rw_prop,
    verify_splitting_lemma,
    _intertwiner_solve_dimension,
)
from stablerep.modules import all_perms, class_representative, perm_cycle_type

from conftest import bell_oracle, set_partitions_brute


class TestEnumeration:
    def test_set_partition_counts_are_bell(self):
        for p in range(8):
            assert len(set_partitions(p)) == bell_oracle(p)
        assert bell_number(3) == 5 and bell_number(4) == 15

    def test_set_partitions_match_brute_force(self):
        for p in range(6):
            mine = {tuple(sorted(sp)) for sp in set_partitions(p)}
            brute = {
                tuple(sorted(tuple(sorted(b)) for b in sp))
                for sp in set_partitions_brute(p)
            }
            assert mine == brute

    def test_general_counts(self):
        assert len(enumerate_general(2, LabelAlphabet(1))) == 5
        assert len(enumerate_general(1, LabelAlphabet(0))) == 1
        assert len(enumerate_general(3, LabelAlphabet(0))) == bell_oracle(3)
        assert len(enumerate_general(4, LabelAlphabet(4))) == 799

    def test_count_general_closed_form(self):
        for p in range(6):
            for q in range(4):
                alphabet = LabelAlphabet(q)
                assert count_general(p, alphabet) == len(
                    enumerate_general(p, alphabet)
                )

    def test_pq_counts(self):
        assert len(enumerate_pq(2, 1)) == 3
        assert len(enumerate_pq(3, 1)) == 10
        for p in range(1, 5):
            assert len(enumerate_pq(p, p)) == factorial(p)
            assert len(enumerate_pq(p, 0)) == bell_oracle(p)

    def test_pq_rejects_q_above_p(self):
        with pytest.raises(InvalidArgs):
            enumerate_pq(1, 2)

    def test_budget(self):
        with pytest.raises(SizeBudgetExceeded):
            enumerate_general(4, LabelAlphabet(4), budget=10)

    def test_general_count_from_pq_layers(self):
        # repeated-label bookkeeping: choosing which labels appear (with
        # multiplicity) reduces the general count to injective layers
        for p in range(1, 6):
            for q in range(0, min(p, 3) + 1):
                total = sum(
                    comb(q, i) * len(enumerate_pq(p, i)) for i in range(q + 1)
                )
                assert count_general(p, LabelAlphabet(q)) == total


class TestActionsAndSplitting:
    def test_action_is_a_group_action(self):
        objs = enumerate_general(3, LabelAlphabet(2))
        perms3 = all_perms(3)
        perms2 = all_perms(2)
        rng = random.Random(7)
        for _ in range(25):
            x = rng.choice(objs)
            s1, s2 = rng.choice(perms3), rng.choice(perms3)
            t1, t2 = rng.choice(perms2), rng.choice(perms2)
            from stablerep.modules import perm_compose
            assert x.act(s1, t1).act(s2, t2) == x.act(
                perm_compose(s2, s1), perm_compose(t2, t1)
            )

    def test_splitting_map_injective_and_label_multiset(self):
        for p, q in [(2, 1), (3, 1), (3, 2), (4, 2)]:
            objs = enumerate_pq(p, q)
            images = [splitting_map(x) for x in objs]
            assert len(set(images)) == len(objs)
            for x, y in zip(objs, images):
                expected = sorted(
                    l for part, l in zip(x.parts, x.labels) if l for _ in part
                )
                assert sorted(l for l in y.labels if l) == expected
                assert all(len(part) == 1 for part, l in zip(y.parts, y.labels) if l)

    def test_bicharacter_values_class_independent(self):
        p, q = 3, 2
        objs = enumerate_general(p, LabelAlphabet(q))
        chi = permutation_bicharacter(p, q, source="general")
        rng = random.Random(11)
        for s in cycle_types(p):
            for t in cycle_types(q):
                # any conjugate representative gives the same fixed count
                for _ in range(3):
                    sig = rng.choice([g for g in all_perms(p) if perm_cycle_type(g) == s])
                    tau = rng.choice([g for g in all_perms(q) if perm_cycle_type(g) == t])
                    fixed = sum(1 for x in objs if x.act(sig, tau) == x)
                    assert fixed == chi.values[(s, t)]
                assert chi.values[(s, t)] >= 0
                assert chi.values[(s, t)] == int(chi.values[(s, t)])


class TestFWPiece:
    def test_dimension_matches_series(self):
        for p in range(5):
            for q in range(3):
                for d in (1, 2):
                    piece = build_fw_piece(p, q, d)
                    assert piece.dimension == fw_dimension_by_series(p, q, d)

    def test_known_dimension(self):
        assert build_fw_piece(2, 1, 2).dimension == 13

    def test_gl_action_preserves_weight_shift(self):
        piece = build_fw_piece(3, 1, 2)
        for mono in piece.basis:
            w = piece.weight(mono)
            for tgt, c in piece.gl_apply(0, 1, mono).items():
                assert c > 0
                w2 = piece.weight(tgt)
                assert w2[0] == w[0] + 1 and w2[1] == w[1] - 1

    def test_budget(self):
        with pytest.raises(SizeBudgetExceeded):
            build_fw_piece(4, 4, 4, budget=100)


class TestPhi:
    def test_equivariance_exact(self):
        for p, q, d in [(2, 0, 2), (2, 1, 2), (3, 0, 3), (3, 2, 2), (4, 1, 3)]:
            piece = build_fw_piece(p, q, d)
            for x in enumerate_general(p, LabelAlphabet(q)):
                assert check_phi_equivariance(x, d, piece)

    def test_phi_matrix_columns_are_unit_vectors(self):
        objs = enumerate_general(2, LabelAlphabet(1))
        piece = build_fw_piece(2, 1, 2)
        for x in objs:
            m = phi_matrix(x, 2, piece)
            for j in range(m.cols):
                col = m.column(j)
                assert sum(col) == 1 and all(v in (0, 1) for v in col)


class TestHomSpace:
    def test_dimension_equals_count_when_d_large(self):
        for p in range(1, 4):
            for q in range(p + 1):
                assert hom_space_dimension_gl(p, q, p) == count_general(
                    p, LabelAlphabet(q)
                )

    def test_solve_path_agrees_with_characters(self):
        for p, q, d in [(1, 0, 1), (2, 0, 2), (2, 1, 2), (2, 2, 2), (3, 0, 2), (3, 1, 2)]:
            piece = build_fw_piece(p, q, d)
            solved = _intertwiner_solve_dimension(p, d, piece, 900)
            assert solved is not None
            assert solved == hom_space_dimension_gl(p, q, d)

    def test_hom_bicharacter_identity_value(self):
        chi = hom_bicharacter(2, 1, 2)
        assert chi.dimension == 5


class TestRWProp:
    def test_passes_when_d_equals_p(self):
        for p in range(1, 4):
            for q in range(p + 1):
                rep = verify_rw_prop(p, q, p)
                assert rep.passed
                assert rep.witnesses["rank"] == rep.witnesses["num_labeled_partitions"]

    def test_fails_injectivity_below_stable_dimension(self):
        rep = verify_rw_prop(2, 1, 1)
        assert not rep.passed
        assert rep.witnesses["rank"] < rep.witnesses["num_labeled_partitions"]
        combo = rep.witnesses["dependent_combination"]
        assert combo  # a concrete vanishing combination is exhibited
        rep = verify_rw_prop(3, 0, 1)
        assert not rep.passed

    def test_small_unlabeled_case_still_isomorphism(self):
        # d < p does not force failure: with no labels and p=2 the two
        # monomial images stay independent
        rep = verify_rw_prop(2, 0, 1)
        assert rep.passed


class TestSplittingLemma:
    def test_small_grid(self):
        for p in range(1, 4):
            for q in range(p + 1):
                rep = verify_splitting_lemma(p, q, p)
                assert rep.passed

    def test_example_dimensions(self):
        rep = verify_splitting_lemma(2, 1, 2)
        assert rep.passed
        assert rep.left == 5 and rep.right == 5
        # 2 unlabeled-layer + 3 injective-layer elements
        assert len(enumerate_pq(2, 0)) + len(enumerate_pq(2, 1)) == 5


def test_custom_alphabet():
    alphabet = LabelAlphabet.custom({1: (0, 1), 2: (0, 1, 2)})
    objs = enumerate_general(2, alphabet)
    # {1|2}: 2*2 labelings (one per part), {12}: 3 labelings
    assert len(objs) == 4 + 3


def test_text_rendering():
    x = enumerate_pq(2, 1)[0]
    assert str(x).startswith("{") and "labels=" in str(x)
    j = x.to_json()
    assert {p["label"] for p in j["parts"]} <= {None, 1}
