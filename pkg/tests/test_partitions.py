import pytest
from hypothesis import given, strategies as st

from nilorbits.partitions import (
    Partition, PartitionError, corner_boxes, dominates, is_p_restricted,
    multiplicity_vector, partitions_of, transpose,
)

P = Partition.parse


def all_partitions(n_max):
    return [p for n in range(n_max + 1) for p in partitions_of(n)]


partitions = st.lists(st.integers(1, 6), max_size=7).map(lambda xs: Partition(sorted(xs, reverse=True)))


def test_parse_and_print_round_trip():
    lam = P("5,4,4,3")
    assert lam.parts == (5, 4, 4, 3)
    assert str(lam) == "5,4,4,3"
    assert P("") == Partition()
    assert Partition([3, 1, 0, 0]).parts == (3, 1)


@pytest.mark.parametrize("text", ["3,4", "1,x", "2,0,1", "-1"])
def test_parse_rejects_bad_text(text):
    with pytest.raises(PartitionError):
        P(text)


def test_indexing_has_zero_tail():
    lam = P("3,1")
    assert lam[5] == 0
    assert lam.row(1) == 3 and lam.row(3) == 0


def test_transpose_examples():
    assert transpose(P("5,4,4,3")) == P("4,4,4,3,1")
    assert transpose(P("4")) == P("1,1,1,1")
    assert transpose(Partition()) == Partition()


def test_dominance_examples():
    assert dominates(P("4,4,4,4"), P("5,4,4,3"))
    assert dominates(P("3,2,1"), P("3,2,1"))
    assert not dominates(P("3,3"), P("4,1,1"))
    with pytest.raises(PartitionError):
        dominates(P("2"), P("3"))


def test_multiplicity_vector():
    assert multiplicity_vector(P("2,1"), 3) == [1, 1]
    assert multiplicity_vector(P("1,1,1,1"), 3) == [4, 0]
    assert multiplicity_vector(P("3"), 4) == [0, 0, 1]
    with pytest.raises(ValueError):
        multiplicity_vector(P("3"), 3)


def test_corner_boxes():
    assert corner_boxes(P("5,4,4,3")) == [(1, 5), (3, 4), (4, 3)]
    assert corner_boxes(P("6")) == [(1, 6)]
    assert corner_boxes(P("2,2,2")) == [(3, 2)]
    assert corner_boxes(Partition()) == []


def test_p_restricted():
    assert not is_p_restricted(P("3"), 2)
    assert not is_p_restricted(P("3"), 3)
    assert is_p_restricted(P("1,1,1"), 2)
    with pytest.raises(ValueError):
        is_p_restricted(P("1"), 4)


def test_partition_counts():
    assert [sum(1 for _ in partitions_of(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]
    assert next(iter(partitions_of(5))) == P("5")


def test_dominance_is_partial_order():
    for n in range(1, 9):
        parts = list(partitions_of(n))
        for a in parts:
            assert dominates(a, a)
            for b in parts:
                if a != b and dominates(a, b):
                    assert not dominates(b, a)
                for c in parts:
                    if dominates(a, b) and dominates(b, c):
                        assert dominates(a, c)


def test_dominance_reverses_under_transpose():
    for n in range(1, 9):
        parts = list(partitions_of(n))
        for a in parts:
            for b in parts:
                assert dominates(a, b) == dominates(transpose(b), transpose(a))


@given(partitions)
def test_transpose_is_involution(lam):
    assert transpose(transpose(lam)) == lam
    assert transpose(lam).n == lam.n


@given(partitions, st.integers(0, 3))
def test_multiplicity_vector_reconstructs(mu, extra):
    m = mu[0] + 1 + extra
    w = multiplicity_vector(mu, m)
    assert len(w) == m - 1
    rebuilt = sorted((i for i, k in enumerate(w, start=1) for _ in range(k)), reverse=True)
    assert Partition(rebuilt) == mu
