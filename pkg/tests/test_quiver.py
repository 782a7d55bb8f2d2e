import json
import random
from fractions import Fraction

import pytest

from nilorbits.linalg import DimensionError, RationalMatrix, contains
from nilorbits.oracle import is_nilpotent, jordan_type
from nilorbits.partitions import Partition, dominates, partitions_of
from nilorbits.quiver import (
    QuiverData, QuiverError, QuiverPoint, check_relations, flag_from_point, is_stable,
    is_stable_surjective, kp_project, maffei_dims, random_relation_point,
)

P = Partition.parse
M = RationalMatrix


def ones(n):
    return Partition([1] * n)


def test_dims_examples():
    d = maffei_dims(P("3"), P("2,1"), [1, 1, 1])
    assert (d.v, d.w) == ((1, 1), (1, 1))
    assert maffei_dims(P("3"), P("2,1")) == d
    assert maffei_dims(P("2,1"), P("2,1"), [2, 1, 0]).v == (0, 0)


def test_dims_errors():
    with pytest.raises(QuiverError):
        maffei_dims(P("2,1"), P("3"))
    with pytest.raises(QuiverError):
        maffei_dims(P("3"), P("2,1"), [1, 1])
    with pytest.raises(QuiverError):
        maffei_dims(P("3"), P("2,1"), [2, 1, 0])


def test_mu_trivial_dims_up_to_eight():
    for n in range(1, 9):
        for lam in partitions_of(n):
            d = maffei_dims(lam, ones(n))
            assert d.w == (n,) + (0,) * (d.m - 2)
            assert list(d.v) == [n - sum(d.r[:i]) for i in range(1, d.m)]


def test_data_json_round_trip():
    d = maffei_dims(P("5,4,4,3"), P("3,3,3,3,2,2"))
    assert d.to_json() == {"m": 5, "r": [4, 4, 4, 3, 1], "v": [2, 4, 4, 1], "w": [0, 2, 4, 0]}
    assert QuiverData.from_json(json.dumps(d.to_json())) == d


def rank_one_point(a, b):
    """v = (1), w = (n): Gamma_1 is the row a, Delta_1 the column b."""
    n = len(a)
    data = maffei_dims(Partition([2] + [1] * (n - 2)), ones(n))
    assert data.v == (1,)
    return QuiverPoint(data, [], [], [M([a], n)], [M([[x] for x in b], 1)])


def test_zero_point():
    data = maffei_dims(P("3"), P("2,1"))
    zero = QuiverPoint.zero(data)
    assert check_relations(zero)
    assert not is_stable(zero)
    trivial = QuiverPoint.zero(maffei_dims(P("2,1"), P("2,1"), [2, 1, 0]))
    assert is_stable(trivial)
    assert kp_project(QuiverPoint.zero(maffei_dims(P("2,1"), ones(3)))).is_zero()


def test_rank_one_relations_and_projection():
    p = rank_one_point([1, 0, 0], [0, 1, 0])
    assert check_relations(p) and is_stable(p) and is_stable_surjective(p)
    x = kp_project(p)
    e21 = RationalMatrix.zeros(3, 3)
    e21.rows[1][0] = Fraction(1)
    assert x == e21
    assert jordan_type(x) == P("2,1")
    assert not check_relations(rank_one_point([1, 2, 0], [1, 0, 0]))
    assert not is_stable(rank_one_point([0, 0, 0], [1, 0, 0]))
    with pytest.raises(QuiverError):
        kp_project(rank_one_point([1, 2, 0], [1, 0, 0]))


def test_rank_one_flag():
    p = rank_one_point([1, 1, 0], [1, -1, 2])
    x, flags = flag_from_point(p)
    assert [len(f) for f in flags] == [0, 2, 3]
    for u in flags[2]:
        assert contains(flags[1], x.apply(u))
    for u in flags[1]:
        assert all(c == 0 for c in x.apply(u))


def test_v_equals_w_example_relation():
    rng = random.Random(4)
    data = maffei_dims(P("3"), P("2,1"), [1, 1, 1])
    for _ in range(30):
        g1, d1, a1, g2 = (Fraction(rng.choice([-3, -2, -1, 1, 2, 3])) for _ in range(4))
        b1 = g1 * d1 / a1
        d2 = -a1 * b1 / g2
        p = QuiverPoint(data, [M([[a1]])], [M([[b1]])], [M([[g1]]), M([[g2]])],
                        [M([[d1]]), M([[d2]])])
        assert check_relations(p)
        a = d1 * g1
        b = d1 * b1 * g2
        c = d2 * a1 * g1
        assert a ** 3 + b * c == 0
    bad = QuiverPoint(data, [M([[1]])], [M([[1]])], [M([[1]]), M([[1]])], [M([[2]]), M([[-1]])])
    assert not check_relations(bad)


def test_shape_errors():
    data = maffei_dims(P("3"), P("2,1"))
    with pytest.raises(DimensionError):
        QuiverPoint(data, [M([[1, 0]], 2)], [M([[0]])], [M([[0]]), M([[0]])], [M([[0]]), M([[0]])])
    with pytest.raises(DimensionError):
        QuiverPoint(data, [], [], [], [])


def test_point_json_round_trip():
    rng = random.Random(9)
    p = random_relation_point(P("2,2"), rng, stable=True)
    again = QuiverPoint.from_json(json.dumps(p.to_json()))
    assert again.to_json() == p.to_json()
    assert check_relations(again)


def test_random_points_project_into_closure():
    rng = random.Random(2024)
    parts = [lam for n in range(2, 5) for lam in partitions_of(n)]
    for _ in range(200):
        lam = rng.choice(parts)
        p = random_relation_point(lam, rng)
        assert check_relations(p)
        x = kp_project(p)
        assert x.trace() == 0 and is_nilpotent(x)
        assert dominates(jordan_type(x), lam)


def test_stability_criteria_agree():
    rng = random.Random(17)
    parts = [lam for n in range(2, 5) for lam in partitions_of(n)]
    seen = set()
    for _ in range(500):
        lam = rng.choice(parts)
        p = random_relation_point(lam, rng)
        s = is_stable(p)
        seen.add(s)
        assert s == is_stable_surjective(p)
    assert seen == {True, False}


def test_flags_of_stable_points():
    rng = random.Random(31)
    for lam in [P("2,1"), P("2,2"), P("3,1"), P("2,1,1"), P("3")]:
        for r in (None, list(reversed(maffei_dims(lam, ones(lam.n)).r))):
            for _ in range(5):
                p = random_relation_point(lam, rng, r=r, stable=True)
                assert is_stable(p)
                x, flags = flag_from_point(p)
                assert [len(f) for f in flags] == [sum(p.data.r[:i]) for i in range(p.data.m + 1)]
                for i in range(1, len(flags)):
                    assert all(contains(flags[i - 1], x.apply(u)) for u in flags[i])


def test_flag_requires_stability():
    rng = random.Random(1)
    p = random_relation_point(P("2,2"), rng, stable=False)
    assert not is_stable(p)
    with pytest.raises(QuiverError):
        flag_from_point(p)
