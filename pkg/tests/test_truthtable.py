import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mbfkit.truthtable import (
    MinimalTermSet,
    TruthTable,
    from_minimal_terms,
    is_monotone,
    is_monotone_bits,
    pack,
    to_minimal_terms,
    unpack,
    word_count,
)
from published import EXAMPLE64_BITSTRING, EXAMPLE64_TERMS, EXAMPLE64_WORDS


def table_of(n, *terms):
    masks = frozenset(sum(1 << (v - 1) for v in t) if t else 0 for t in terms)
    return from_minimal_terms(MinimalTermSet(n, masks))


class TestOrdering:
    def test_three_variable_worked_example(self):
        # x1 or (x2 and x3) reads 11101010 in reverse colex input order
        t = table_of(3, (1,), (2, 3))
        assert t.to_string() == "11101010"
        assert is_monotone(t)

    def test_input_column_order(self):
        # column order for n=3: {1,2,3},{2,3},{1,3},{3},{1,2},{2},{1},{}
        t = table_of(3, (3,))
        assert t.to_string() == "11010000"

    def test_value_at_terms(self):
        t = TruthTable.from_string("11101010")
        assert t.value_at(0b001) == 1  # {1}
        assert t.value_at(0b110) == 1  # {2,3}
        assert t.value_at(0b010) == 0  # {2}
        assert t.value_at(0b000) == 0  # {}


class TestMonotone:
    def test_constant_tables(self):
        assert is_monotone(TruthTable(3, 0))
        assert is_monotone(TruthTable(3, (1 << 8) - 1))

    def test_single_true_output_below_top_is_not_monotone(self):
        # f = 1 only on {2,3}: its superset {1,2,3} maps to 0
        assert not is_monotone(TruthTable.from_string("01000000"))

    @pytest.mark.parametrize("n,count", [(0, 2), (1, 3), (2, 6), (3, 20), (4, 168)])
    def test_monotone_census(self, n, count):
        got = sum(1 for bits in range(1 << (1 << n)) if is_monotone_bits(bits, n))
        assert got == count

    def test_agrees_with_all_pairs_definition_exhaustively(self):
        for n in range(4):
            size = 1 << n
            full = (1 << n) - 1
            subsets = [~q & full for q in range(size)]
            for bits in range(1 << size):
                naive = all(
                    (bits >> i) & 1 <= (bits >> j) & 1
                    for i in range(size)
                    for j in range(size)
                    if subsets[i] & subsets[j] == subsets[i]
                )
                assert is_monotone_bits(bits, n) == naive


class TestMinimalTerms:
    def test_worked_example_terms(self):
        t = TruthTable.from_string("11101010")
        assert to_minimal_terms(t).as_variable_sets() == [(1,), (2, 3)]

    def test_all_zeros_has_no_terms(self):
        assert len(to_minimal_terms(TruthTable(4, 0))) == 0

    def test_constant_one_is_the_empty_term(self):
        t = TruthTable(2, 0b1111)
        m = to_minimal_terms(t)
        assert m.terms == frozenset({0})
        assert from_minimal_terms(m) == t

    def test_rejects_non_monotone(self):
        with pytest.raises(ValueError):
            to_minimal_terms(TruthTable.from_string("01000000"))

    def test_rejects_non_antichain(self):
        with pytest.raises(ValueError, match="antichain"):
            MinimalTermSet(3, frozenset({0b001, 0b011}))

    def test_round_trip_over_all_three_variable_functions(self):
        tables = [
            TruthTable(3, bits)
            for bits in range(1 << 8)
            if is_monotone_bits(bits, 3)
        ]
        assert len(tables) == 20
        for t in tables:
            assert from_minimal_terms(to_minimal_terms(t)) == t

    def test_sixty_four_bit_example_terms(self):
        t = TruthTable.from_string(EXAMPLE64_BITSTRING)
        got = to_minimal_terms(t).as_variable_sets()
        assert sorted(got) == sorted(EXAMPLE64_TERMS)


class TestPacking:
    def test_sixty_four_bit_example_packs_exactly(self):
        t = TruthTable.from_string(EXAMPLE64_BITSTRING)
        assert pack(t) == EXAMPLE64_WORDS

    def test_unpack_inverts_the_example(self):
        assert unpack(EXAMPLE64_WORDS, 6).to_string() == EXAMPLE64_BITSTRING

    def test_all_zero_table_packs_to_zero_words(self):
        for n in [0, 2, 5, 6, 7]:
            assert pack(TruthTable(n, 0)) == (0,) * word_count(n)

    def test_small_tables_pad_right(self):
        t = TruthTable.from_string("1110")
        assert pack(t) == (0b0111,)

    def test_unpack_rejects_wrong_word_count(self):
        with pytest.raises(ValueError, match="words"):
            unpack((0, 0), 5)

    def test_unpack_rejects_nonzero_padding(self):
        with pytest.raises(ValueError, match="padding"):
            unpack((1 << 20,), 4)

    def test_unpack_rejects_oversized_word(self):
        with pytest.raises(ValueError, match="range"):
            unpack((1 << 32, 0), 6)

    @given(st.integers(3, 6), st.data())
    @settings(max_examples=60)
    def test_pack_unpack_round_trip(self, n, data):
        bits = data.draw(st.integers(0, (1 << (1 << n)) - 1))
        t = TruthTable(n, bits)
        assert unpack(pack(t), n) == t


@st.composite
def antichains(draw, n):
    masks = draw(st.sets(st.integers(1, (1 << n) - 1), max_size=8))
    chain = []
    for m in sorted(masks, key=lambda v: (bin(v).count("1"), v)):
        if all(m & c != c for c in chain):
            chain.append(m)
    return MinimalTermSet(n, frozenset(chain))


class TestRoundTripProperties:
    @given(st.integers(2, 6).flatmap(lambda n: antichains(n)))
    @settings(max_examples=120)
    def test_terms_to_table_to_terms(self, m):
        t = from_minimal_terms(m)
        assert is_monotone(t)
        assert to_minimal_terms(t) == m


class TestValidation:
    def test_rejects_bad_n(self):
        with pytest.raises(ValueError):
            TruthTable(11, 0)

    def test_rejects_oversized_bits(self):
        with pytest.raises(ValueError):
            TruthTable(2, 1 << 4)

    def test_string_parse_errors(self):
        with pytest.raises(ValueError):
            TruthTable.from_string("110")
        with pytest.raises(ValueError):
            TruthTable.from_string("11x0")
