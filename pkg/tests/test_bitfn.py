import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boolnl import (
    AffineFunction,
    AnfForm,
    DimensionMismatch,
    NotBooleanValued,
    NotPowerOfTwo,
    ParseError,
    TooLarge,
    VariableOutOfRange,
    affine_anf,
    affine_from_anf,
    affine_table,
    anf_to_text,
    distance,
    evaluate,
    from_anf,
    from_truth_table,
    parse_anf,
    parse_truth_table,
    point_to_index,
    truth_table_bits,
    truth_table_hex,
    weight,
)
from _oracles import affine_table_direct, anf_value, random_table


def tables(max_n=8):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.integers(0, 1), min_size=1 << n, max_size=1 << n)
    )


class TestFromTruthTable:
    def test_worked_example(self):
        f = from_truth_table((1, 1, 1, 0))
        assert f.n == 2
        assert evaluate(f, (0, 0)) == 1
        assert evaluate(f, (1, 1)) == 0

    def test_zero_function_one_var(self):
        f = from_truth_table((0, 0))
        assert f.n == 1 and weight(f) == 0

    def test_not_power_of_two(self):
        with pytest.raises(NotPowerOfTwo):
            from_truth_table((1, 0, 1))
        with pytest.raises(NotPowerOfTwo):
            from_truth_table((1,))

    def test_non_bits_rejected(self):
        with pytest.raises(NotBooleanValued):
            from_truth_table((0, 2))

    def test_too_large(self):
        with pytest.raises(TooLarge):
            from_truth_table(np.zeros(1 << 25, dtype=np.uint8))

    def test_table_is_immutable(self):
        f = from_truth_table((0, 1))
        with pytest.raises(ValueError):
            f.table[0] = 1


class TestParseAnf:
    def test_worked_example(self):
        p = parse_anf("x1*x2 + 1", 2)
        assert p.monomials == {0b11, 0b00}

    def test_cancellation(self):
        assert parse_anf("x1 + x1", 1).monomials == frozenset()

    def test_five_var_example(self):
        p = parse_anf(
            "x1*x3*x4*x5 + x1*x2*x4 + x1*x4*x5 + x2*x3*x4 + x2*x4*x5 + x3*x4*x5 + x4*x5",
            5,
        )
        assert len(p.monomials) == 7
        assert p.degree == 4

    def test_inferred_n(self):
        assert parse_anf("x3").n == 3
        assert parse_anf("1").n == 1

    def test_zero_term(self):
        assert parse_anf("0", 2).monomials == frozenset()
        assert parse_anf("x1 + 0", 2).monomials == {0b10}

    def test_parse_errors_carry_position(self):
        with pytest.raises(ParseError) as exc:
            parse_anf("x1 + + 1", 2)
        assert exc.value.position == 5
        with pytest.raises(ParseError):
            parse_anf("", 2)
        with pytest.raises(ParseError):
            parse_anf("x1*", 2)
        with pytest.raises(ParseError):
            parse_anf("y1", 2)

    def test_variable_out_of_range(self):
        with pytest.raises(VariableOutOfRange):
            parse_anf("x3", 2)
        with pytest.raises(VariableOutOfRange):
            parse_anf("x0", 2)

    def test_render_round_trip(self):
        text = "x1*x2*x3 + x1*x2 + x2*x3 + x3 + 1"
        p = parse_anf(text, 3)
        assert anf_to_text(p) == text
        assert parse_anf(anf_to_text(p), 3) == p


class TestEvaluate:
    def test_anf_example(self):
        f = from_anf(parse_anf("x1*x2+x1*x3+x2+1", 3))
        assert evaluate(f, (0, 1, 0)) == 0

    def test_reassembly_identity(self):
        f = from_truth_table((1, 1, 1, 0))
        assert [evaluate(f, u) for u in range(4)] == list(f.table)

    @settings(max_examples=30)
    @given(st.integers(1, 4), st.randoms(use_true_random=False))
    def test_matches_direct_anf_evaluation(self, n, rnd):
        monos = frozenset(rnd.sample(range(1 << n), rnd.randint(0, 1 << n)))
        f = from_anf(AnfForm(n, monos))
        for u in range(1 << n):
            assert evaluate(f, u) == anf_value(monos, n, u)


class TestWeightDistance:
    def test_weight_examples(self):
        assert weight(from_truth_table((1, 1, 1, 0))) == 3
        assert weight(from_truth_table((0, 0))) == 0

    def test_distance_to_self(self):
        f = from_truth_table((1, 1, 1, 0))
        assert distance(f, f) == 0

    def test_distance_xor_popcount(self):
        # hand oracle: (1,1,1,0) xor (0,1,1,0) = (1,0,0,0) -> weight 1
        f = from_truth_table((1, 1, 1, 0))
        g = from_truth_table((0, 1, 1, 0))
        assert distance(f, g) == 1

    def test_distance_paper_example(self):
        f = from_anf(parse_anf("x1*x2+x1*x3+x2+1", 3))
        alpha = from_anf(parse_anf("1 + x2", 3))
        assert distance(f, alpha) == 2

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            distance(from_truth_table((0, 1)), from_truth_table((0, 1, 1, 0)))

    @settings(max_examples=50)
    @given(tables(6), st.randoms(use_true_random=False))
    def test_metric_properties(self, bits, rnd):
        f = from_truth_table(bits)
        rng = np.random.default_rng(rnd.randint(0, 2**32))
        g = from_truth_table(random_table(rng, f.n))
        h = from_truth_table(random_table(rng, f.n))
        assert distance(f, g) == distance(g, f)
        assert (distance(f, g) == 0) == (f == g)
        assert distance(f, h) <= distance(f, g) + distance(g, h)


class TestAffine:
    def test_constant_tables(self):
        assert weight(affine_table(AffineFunction(0, 0), 3)) == 0
        assert weight(affine_table(AffineFunction(1, 0), 3)) == 8

    def test_xor_table(self):
        f = affine_table(AffineFunction(0, 0b11), 2)
        assert list(f.table) == [0, 1, 1, 0]

    @settings(max_examples=50)
    @given(st.integers(1, 6), st.integers(0, 1), st.data())
    def test_matches_direct(self, n, a0, data):
        mask = data.draw(st.integers(0, (1 << n) - 1))
        f = affine_table(AffineFunction(a0, mask), n)
        assert list(f.table) == affine_table_direct(a0, mask, n)

    def test_mask_too_wide(self):
        with pytest.raises(DimensionMismatch):
            affine_table(AffineFunction(0, 0b100), 2)

    def test_anf_round_trip(self):
        alpha = AffineFunction(1, 0b101)
        assert affine_from_anf(affine_anf(alpha, 3)) == alpha
        assert anf_to_text(affine_anf(alpha, 3)) == "x1 + x3 + 1"

    def test_affine_from_anf_rejects_quadratic(self):
        with pytest.raises(DimensionMismatch):
            affine_from_anf(parse_anf("x1*x2", 2))


class TestTruthTableText:
    def test_hex_parse(self):
        f = parse_truth_table("0x6")
        assert f.n == 2 and list(f.table) == [0, 1, 1, 0]

    def test_binary_parse(self):
        f = parse_truth_table("1110")
        assert list(f.table) == [1, 1, 1, 0]

    def test_bare_hex(self):
        f = parse_truth_table("ca")
        assert f.n == 3 and weight(f) == 4

    def test_round_trips(self):
        rng = np.random.default_rng(7)
        for n in range(2, 8):
            f = from_truth_table(random_table(rng, n))
            assert parse_truth_table(truth_table_hex(f)) == f
            assert parse_truth_table(truth_table_bits(f)) == f

    def test_hex_needs_two_vars(self):
        with pytest.raises(NotPowerOfTwo):
            truth_table_hex(from_truth_table((0, 1)))

    def test_bad_inputs(self):
        with pytest.raises(ParseError):
            parse_truth_table("")
        with pytest.raises(ParseError):
            parse_truth_table("0xz1")
        with pytest.raises(NotPowerOfTwo):
            parse_truth_table("0x123")


def test_point_index_round_trip():
    from boolnl import index_to_point

    for n in (1, 3, 5):
        for k in range(1 << n):
            assert point_to_index(index_to_point(k, n)) == k
