import pytest
from hypothesis import given, strategies as st

from mgsc.partitions import (
    Partition,
    add,
    base_ell_partition,
    enumerate_ell_regular,
    enumerate_partitions,
    enumerate_power_partitions,
    format_partition,
    is_ell_regular,
    is_ell_restricted,
    multiplicity,
    parse_partition,
    scale,
    transpose,
)

from oracles import conjugate_by_diagram, partition_count, partitions_from_compositions

P = Partition


def partitions_upto(n):
    for k in range(n + 1):
        yield from enumerate_partitions(k)


partition_st = st.lists(st.integers(1, 12), max_size=8).map(lambda xs: P(sorted(xs, reverse=True)))


class TestPartitionType:
    def test_rejects_increasing(self):
        with pytest.raises(ValueError):
            P((1, 2))

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            P((2, 0))

    def test_empty_is_size_zero(self):
        assert P().size == 0
        assert P() == ()

    def test_differences_roundtrip(self):
        for lam in partitions_upto(10):
            assert P.from_differences(lam.differences()) == lam


class TestTranspose:
    def test_small(self):
        assert transpose(P()) == ()
        assert transpose(P((3, 1))) == (2, 1, 1)

    @pytest.mark.parametrize("n", range(1, 31))
    def test_row_column(self, n):
        assert transpose(P((n,))) == (1,) * n
        assert transpose(P((1,) * n)) == (n,)

    def test_involution_exhaustive(self):
        for lam in partitions_upto(14):
            assert transpose(transpose(lam)) == lam
            assert transpose(lam).size == lam.size

    def test_matches_diagram_oracle(self):
        for lam in partitions_upto(12):
            assert transpose(lam) == conjugate_by_diagram(lam)


class TestRegularity:
    def test_examples(self):
        assert not is_ell_regular(P((2, 2, 1)), 2)
        assert is_ell_regular(P((3, 2, 1)), 2)
        assert not is_ell_regular(P((1, 1, 1)), 3)
        assert is_ell_restricted(P((2, 1)), 2)
        assert not is_ell_restricted(P((3,)), 2)

    @pytest.mark.parametrize("bad", [0, 1, 4, 6, 9, -3])
    def test_rejects_non_prime(self, bad):
        with pytest.raises(ValueError):
            is_ell_regular(P((1,)), bad)
        with pytest.raises(ValueError):
            is_ell_restricted(P((1,)), bad)

    @pytest.mark.parametrize("ell", [2, 3, 5])
    def test_restricted_iff_transpose_regular(self, ell):
        for lam in partitions_upto(14):
            assert is_ell_restricted(lam, ell) == is_ell_regular(transpose(lam), ell)

    @pytest.mark.parametrize("ell", [2, 3, 5])
    def test_regular_and_restricted_equinumerous(self, ell):
        for n in range(15):
            regular = enumerate_ell_regular(n, ell)
            restricted = [lam for lam in enumerate_partitions(n) if is_ell_restricted(lam, ell)]
            assert len(regular) == len(restricted)


class TestEnumeration:
    def test_small(self):
        assert enumerate_partitions(0) == [()]
        assert enumerate_partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
        assert len(enumerate_partitions(10)) == 42

    @pytest.mark.parametrize("n", range(15))
    def test_against_compositions(self, n):
        parts = enumerate_partitions(n)
        assert len(parts) == len(set(parts)) == partition_count(n)
        assert set(parts) == partitions_from_compositions(n)

    @pytest.mark.parametrize("n", range(1, 15))
    def test_reverse_lex(self, n):
        parts = enumerate_partitions(n)
        assert [tuple(p) for p in parts] == sorted((tuple(p) for p in parts), reverse=True)

    def test_ell_regular(self):
        assert enumerate_ell_regular(3, 2) == [(3,), (2, 1)]
        assert enumerate_ell_regular(2, 2) == [(2,)]
        for n in range(8):
            assert enumerate_ell_regular(n, 11) == enumerate_partitions(n)

    def test_power_partitions(self):
        assert enumerate_power_partitions(4, 2) == [(4,), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
        assert enumerate_power_partitions(3, 2) == [(2, 1), (1, 1, 1)]
        for ell in (2, 3, 5, 7):
            assert enumerate_power_partitions(1, ell) == [(1,)]

    @pytest.mark.parametrize("ell", [2, 3, 5])
    def test_power_partitions_are_a_filter(self, ell):
        powers = {ell**i for i in range(6)}
        for n in range(16):
            expected = [lam for lam in enumerate_partitions(n) if set(lam) <= powers]
            assert enumerate_power_partitions(n, ell) == expected


class TestBaseEll:
    def test_examples(self):
        assert base_ell_partition(6, 2) == (4, 2)
        assert base_ell_partition(7, 3) == (3, 3, 1)
        assert base_ell_partition(4, 5) == (1, 1, 1, 1)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            base_ell_partition(0, 2)

    @pytest.mark.parametrize("ell", [2, 3, 5])
    def test_unique_small_multiplicity_element(self, ell):
        for n in range(1, 40):
            nu = base_ell_partition(n, ell)
            candidates = [
                lam for lam in enumerate_power_partitions(n, ell)
                if all(multiplicity(lam, v) < ell for v in set(lam))
            ]
            assert candidates == [nu]


class TestArithmetic:
    def test_multiplicity(self):
        assert multiplicity(P((4, 2, 2, 1)), 2) == 2
        assert multiplicity(P((4, 2, 2, 1)), 8) == 0
        for lam in partitions_upto(12):
            assert sum(v * multiplicity(lam, v) for v in set(lam)) == lam.size

    def test_scale_add(self):
        assert scale(P((2, 1)), 3) == (6, 3)
        assert add(P((2,)), P((1,))) == (3,)
        assert add(P((3, 1)), P((2, 2))) == (5, 3)

    @given(partition_st, partition_st, partition_st)
    def test_add_laws(self, a, b, c):
        assert add(a, b) == add(b, a)
        assert add(add(a, b), c) == add(a, add(b, c))
        assert add(a, b).size == a.size + b.size

    @given(partition_st, st.integers(1, 9))
    def test_scale_size(self, lam, c):
        assert scale(lam, c).size == c * lam.size


class TestTextFormat:
    @pytest.mark.parametrize("text,parts", [("4,2,1", (4, 2, 1)), ("0", ()), ("5", (5,))])
    def test_parse(self, text, parts):
        assert parse_partition(text) == parts
        assert format_partition(parse_partition(text)) == text

    @pytest.mark.parametrize("text", ["1,2", "a", "3,,1", "2,-1"])
    def test_parse_rejects(self, text):
        with pytest.raises(ValueError):
            parse_partition(text)
