from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mbfkit.profiles import profile_of
from mbfkit.symmetry import (
    VariablePermutation,
    apply_permutation,
    batch_canonical_words,
    canonical_form,
    is_asymmetric,
    words_to_tables,
    _batch_canonical_words_reference,
)
from mbfkit.truthtable import (
    MinimalTermSet,
    TruthTable,
    from_minimal_terms,
    is_monotone,
    is_monotone_bits,
    to_minimal_terms,
)


def table_of(n, *terms):
    masks = frozenset(sum(1 << (v - 1) for v in t) if t else 0 for t in terms)
    return from_minimal_terms(MinimalTermSet(n, masks))


@st.composite
def monotone_tables(draw, max_n=6):
    n = draw(st.integers(2, max_n))
    masks = draw(st.sets(st.integers(1, (1 << n) - 1), min_size=0, max_size=6))
    chain = []
    for m in sorted(masks, key=lambda v: (bin(v).count("1"), v)):
        if all(m & c != c for c in chain):
            chain.append(m)
    return from_minimal_terms(MinimalTermSet(n, frozenset(chain)))


class TestVariablePermutation:
    def test_bijection_required(self):
        with pytest.raises(ValueError):
            VariablePermutation(3, (1, 1, 2))

    def test_inverse_and_compose(self):
        p = VariablePermutation(3, (2, 3, 1))
        assert p.compose(p.inverse()) == VariablePermutation.identity(3)
        assert p.inverse().compose(p) == VariablePermutation.identity(3)

    def test_all_has_group_order(self):
        assert sum(1 for _ in VariablePermutation.all(4)) == 24


class TestApplyPermutation:
    def test_worked_swap_example(self):
        # (x1 and x2) or (x2 and x3) under 1<->2 becomes (x1 and x2) or (x1 and x3)
        f = table_of(3, (1, 2), (2, 3))
        g = apply_permutation(f, VariablePermutation(3, (2, 1, 3)))
        assert g == table_of(3, (1, 2), (1, 3))

    def test_identity_fixes(self):
        t = table_of(4, (1, 2), (3,))
        assert apply_permutation(t, VariablePermutation.identity(4)) == t

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            apply_permutation(TruthTable(3, 0), VariablePermutation.identity(4))

    @given(monotone_tables(), st.data())
    @settings(max_examples=60, deadline=None)
    def test_inverse_round_trip(self, t, data):
        perm = data.draw(st.permutations(range(1, t.n + 1)))
        p = VariablePermutation(t.n, tuple(perm))
        assert apply_permutation(apply_permutation(t, p), p.inverse()) == t

    @given(monotone_tables(), st.data())
    @settings(max_examples=60, deadline=None)
    def test_preserves_monotonicity_and_profile(self, t, data):
        perm = data.draw(st.permutations(range(1, t.n + 1)))
        g = apply_permutation(t, VariablePermutation(t.n, tuple(perm)))
        assert is_monotone(g)
        assert profile_of(to_minimal_terms(g)) == profile_of(to_minimal_terms(t))


class TestCanonicalForm:
    def test_singleton_class_canonical_is_x1(self):
        rec = canonical_form(table_of(2, (2,)))
        assert rec.canonical == table_of(2, (1,))
        assert rec.orbit_size == 2
        assert rec.automorphism_count == 1

    def test_constant_zero(self):
        rec = canonical_form(TruthTable(4, 0))
        assert rec.canonical == TruthTable(4, 0)
        assert rec.orbit_size == 1
        assert rec.automorphism_count == 24

    def test_twenty_three_variable_functions_fall_into_ten_classes(self):
        canon = set()
        for bits in range(1 << 8):
            if is_monotone_bits(bits, 3):
                canon.add(canonical_form(TruthTable(3, bits)).canonical.bits)
        assert len(canon) == 10

    def test_rejects_non_monotone(self):
        with pytest.raises(ValueError):
            canonical_form(TruthTable.from_string("01000000"))

    @given(monotone_tables(max_n=5), st.data())
    @settings(max_examples=60, deadline=None)
    def test_constant_on_orbits(self, t, data):
        perm = data.draw(st.permutations(range(1, t.n + 1)))
        g = apply_permutation(t, VariablePermutation(t.n, tuple(perm)))
        assert canonical_form(g).canonical == canonical_form(t).canonical

    @given(monotone_tables(max_n=5))
    @settings(max_examples=60, deadline=None)
    def test_orbit_stabilizer_product(self, t):
        rec = canonical_form(t)
        assert rec.orbit_size * rec.automorphism_count == factorial(t.n)

    def test_orbit_sizes_sum_to_labeled_count(self):
        for n, want in [(2, 6), (3, 20), (4, 168)]:
            seen = {}
            for bits in range(1 << (1 << n)):
                if is_monotone_bits(bits, n):
                    rec = canonical_form(TruthTable(n, bits))
                    seen[rec.canonical.bits] = rec.orbit_size
            assert sum(seen.values()) == want


class TestSwapWalkAgainstReference:
    @given(st.integers(2, 7), st.data())
    @settings(max_examples=30, deadline=None)
    def test_fast_path_matches_gather_reference(self, n, data):
        masks = data.draw(st.sets(st.integers(1, (1 << n) - 1), min_size=1, max_size=6))
        chain = []
        for m in sorted(masks, key=lambda v: (bin(v).count("1"), v)):
            if all(m & c != c for c in chain):
                chain.append(m)
        t = from_minimal_terms(MinimalTermSet(n, frozenset(chain)))
        w1, a1 = batch_canonical_words(n, [t.bits])
        w2, a2 = _batch_canonical_words_reference(n, [t.bits])
        assert (w1 == w2).all()
        assert (a1 == a2).all()

    def test_words_decode_round_trip(self):
        tables = [table_of(5, (1, 2), (3,)).bits, 0, (1 << 32) - 1]
        words, _ = batch_canonical_words(5, tables)
        decoded = words_to_tables(5, words)
        redone, _ = batch_canonical_words(5, decoded)
        assert (words == redone).all()


class TestAsymmetric:
    def test_constants_are_never_asymmetric(self):
        assert not is_asymmetric(TruthTable(3, 0))
        assert not is_asymmetric(TruthTable(3, 255))

    def test_single_variable_dimension_counts_zero(self):
        assert not is_asymmetric(table_of(1, (1,)))

    def test_two_variable_census(self):
        hits = [
            bits
            for bits in range(16)
            if is_monotone_bits(bits, 2) and is_asymmetric(TruthTable(2, bits))
        ]
        # exactly one class is asymmetric and it has two labeled members
        assert len(hits) == 2

    def test_rejects_non_monotone(self):
        with pytest.raises(ValueError):
            is_asymmetric(TruthTable.from_string("01000000"))
