from math import factorial

import pytest

from stablerep.characters import cycle_types, decompose, identity_type
from stablerep.errors import InvalidArgs
from stablerep.labeled import enumerate_pq, permutation_bicharacter
from stablerep.partitions import Partition, transpose
from stablerep.stable import (
    SymbolicCoefficient,
    dimension_table,
    hom_side_total,
    stable_cohomology,
    step1_dimension_identity,
    theorem_a_induction_check,
    three_way_dimension_agreement,
)

from conftest import bell_oracle, series_coefficient_oracle


class TestStableCohomology:
    def test_known_dimensions(self):
        assert stable_cohomology(1, 0, 1).dimension == 1
        assert stable_cohomology(2, 1, 1).dimension == 3
        assert stable_cohomology(3, 0, 3).dimension == bell_oracle(3)
        for p in range(1, 5):
            assert stable_cohomology(p, p, 0).dimension == factorial(p)

    def test_bell_numbers_at_q_zero(self):
        for p in range(1, 7):
            assert stable_cohomology(p, 0, p).dimension == bell_oracle(p)

    def test_vanishing_off_degree(self):
        for p in range(5):
            for q in range(p + 1):
                for deg in range(-1, p + q + 2):
                    res = stable_cohomology(p, q, deg)
                    assert res.is_zero == (deg != p - q)

    def test_q_above_p_is_zero(self):
        for deg in range(-1, 4):
            assert stable_cohomology(1, 2, deg).is_zero

    def test_dimension_survives_sign_twist(self):
        for p, q in [(2, 1), (3, 2), (4, 2)]:
            res = stable_cohomology(p, q, p - q)
            untwisted = permutation_bicharacter(p, q, source="pq")
            assert res.dimension == untwisted.dimension

    def test_decomposition_keys_transposed_by_twist(self):
        for p, q in [(2, 1), (3, 1), (3, 2)]:
            twisted = stable_cohomology(p, q, p - q).decomposition
            untwisted = decompose(permutation_bicharacter(p, q, source="pq"))
            assert twisted.mults == {
                (transpose(lam), mu): m for (lam, mu), m in untwisted.mults.items()
            }

    def test_multiplicities_genuine(self):
        for p in range(1, 6):
            for q in range(p + 1):
                dec = stable_cohomology(p, q, p - q).decomposition
                assert all(
                    isinstance(m, int) and m > 0 for m in dec.mults.values()
                )

    def test_json_schema(self):
        data = stable_cohomology(2, 1, 1).to_json()
        assert set(data) == {
            "p", "q", "degree", "dimension", "valid_n_bound",
            "decomposition", "character",
        }
        assert data["dimension"] == 3
        total = sum(e["value"] == 3 for e in data["character"]
                    if e["sigma_class"] == "1,1" and e["tau_class"] == "1")
        assert total == 1

    def test_min_n(self):
        assert stable_cohomology(2, 1, 1).min_n == 8
        assert stable_cohomology(1, 1, 0).min_n == 5


class TestPipeline:
    def test_hom_side_total_trivial_values(self):
        assert hom_side_total(0, 0, 1) == 1
        assert hom_side_total(1, 0, 1) == 1

    def test_hom_side_total_vs_independent_series(self):
        from stablerep.characters import sym_dimension
        for p in range(5):
            for q in range(3):
                for d in (1, 2, 3):
                    factors = [(1, (q + 1) * d)] + [
                        (i, sym_dimension(d, i)) for i in range(2, p + 1)
                    ]
                    assert hom_side_total(p, q, d) == series_coefficient_oracle(
                        factors, p
                    )

    def test_step1_identity_grid(self):
        for p in range(5):
            for q in range(4):
                for d in (1, 2, 3):
                    assert step1_dimension_identity(p, q, d).passed

    def test_induction_grid(self):
        for p in range(1, 5):
            for q in range(p + 1):
                rep = theorem_a_induction_check(p, q)
                assert rep.passed
                assert rep.right == len(enumerate_pq(p, q))

    def test_induction_example(self):
        rep = theorem_a_induction_check(2, 1)
        assert rep.left == 5 - 2 == 3

    def test_induction_rejects_bad_range(self):
        with pytest.raises(InvalidArgs):
            theorem_a_induction_check(1, 2)

    def test_three_way_agreement(self):
        for p in range(1, 5):
            for q in range(p + 1):
                assert three_way_dimension_agreement(p, q).passed


class TestTable:
    def test_spot_rows(self):
        rows = {(r["p"], r["q"]): r for r in dimension_table(5, 5)}
        assert rows[(0, 0)] == {"p": 0, "q": 0, "degree": 0, "dimension": 1, "min_n": 3}
        assert rows[(1, 1)]["dimension"] == 1 and rows[(1, 1)]["degree"] == 0
        assert rows[(2, 1)] == {"p": 2, "q": 1, "degree": 1, "dimension": 3, "min_n": 8}
        assert rows[(3, 0)]["dimension"] == bell_oracle(3)

    def test_grid_shape(self):
        rows = dimension_table(4, 2)
        assert all(r["q"] <= min(r["p"], 2) for r in rows)
        assert len(rows) == sum(min(p, 2) + 1 for p in range(5))


def test_symbolic_coefficient():
    c = SymbolicCoefficient(2, 1)
    assert "⊗2" in str(c) and "n" in str(c)
    with pytest.raises(InvalidArgs):
        SymbolicCoefficient(-1, 0)
