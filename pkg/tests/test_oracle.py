import random

import pytest

from nilorbits.linalg import DimensionError, RationalMatrix, commutator
from nilorbits.oracle import (
    NotNilpotentError, centralizer_dimension, in_orbit_closure, jordan_nilpotent,
    jordan_type, orbit_dimension_by_rank, random_conjugate, sl2_triple,
)
from nilorbits.partitions import Partition, dominates, partitions_of
from nilorbits.poset import orbit_dimension_formula

P = Partition.parse


def test_jordan_nilpotent_examples():
    assert jordan_nilpotent(P("2")) == RationalMatrix([[0, 1], [0, 0]])
    assert jordan_nilpotent(P("1,1,1")).is_zero()
    x = jordan_nilpotent(P("2,1"))
    assert x == RationalMatrix([[0, 1, 0], [0, 0, 0], [0, 0, 0]])


def test_jordan_type_examples():
    assert jordan_type(jordan_nilpotent(P("5,4,4,3"))) == P("5,4,4,3")
    assert jordan_type(RationalMatrix.zeros(4, 4)) == P("1,1,1,1")
    rng = random.Random(3)
    assert jordan_type(random_conjugate(jordan_nilpotent(P("3,1")), rng)) == P("3,1")
    with pytest.raises(NotNilpotentError):
        jordan_type(RationalMatrix.identity(2))


def test_closure_examples():
    assert in_orbit_closure(jordan_nilpotent(P("4,4,4,4")), P("5,4,4,3"))
    assert in_orbit_closure(RationalMatrix.zeros(3, 3), P("2,1"))
    assert not in_orbit_closure(jordan_nilpotent(P("3")), P("2,1"))
    with pytest.raises(DimensionError):
        in_orbit_closure(RationalMatrix.zeros(2, 2), P("2,1"))


def test_sl2_triple_examples():
    assert sl2_triple(P("3")).Y == RationalMatrix([[0, 0, 0], [2, 0, 0], [0, 2, 0]])
    assert sl2_triple(P("2")).Y == RationalMatrix([[0, 0], [1, 0]])
    assert sl2_triple(P("2,1")).Y == RationalMatrix([[0, 0, 0], [1, 0, 0], [0, 0, 0]])


def test_sl2_triples_up_to_seven():
    for n in range(1, 8):
        for lam in partitions_of(n):
            tr = sl2_triple(lam)
            h = commutator(tr.X, tr.Y)
            assert commutator(h, tr.X) == tr.X.scale(2)
            assert commutator(h, tr.Y) == tr.Y.scale(-2)
            assert tr.check()


def test_closure_matches_dominance():
    for n in range(1, 7):
        parts = list(partitions_of(n))
        for mu in parts:
            x = jordan_nilpotent(mu)
            for lam in parts:
                assert in_orbit_closure(x, lam) == dominates(mu, lam)


def test_conjugation_invariance():
    rng = random.Random(11)
    for n in range(1, 7):
        for lam in partitions_of(n):
            x = jordan_nilpotent(lam)
            trials = 50 if n <= 4 else 5
            for _ in range(trials):
                assert jordan_type(random_conjugate(x, rng)) == lam


def test_rank_dimension_matches_formula():
    assert centralizer_dimension(jordan_nilpotent(P("1,1"))) == 4
    for n in range(1, 7):
        for lam in partitions_of(n):
            assert orbit_dimension_by_rank(lam) == orbit_dimension_formula(lam)
