import random
from fractions import Fraction

import pytest

from nilorbits.linalg import RationalMatrix
from nilorbits.partitions import Partition, partitions_of
from nilorbits.poly import MultiPoly, PolyError, PolyMatrix, poly_eval
from nilorbits.poset import orbit_dimension
from nilorbits.slices import (
    KleinianType, chi_invariants, chi_of_matrix, kleinian_equation, load_fixture,
    semiuniversal_typeA, slice_nilpotent_equations, slodowy_pair, slodowy_slice,
)

P = Partition.parse


def chi_strings(name):
    return [str(p) for p in chi_invariants(load_fixture(name))]


def test_fixture_invariants():
    assert chi_strings("sl3_regular") == ["-2*a", "b"]
    assert chi_strings("sl3_subregular") == ["-3*a^2 - b", "-2*a^3 + 2*a*b + c*d"]
    assert chi_strings("sl4_subregular") == [
        "-6*a^2 - 2*b", "-8*a^3 + 4*a*b + c", "-3*a^4 + 6*a^2*b - 3*a*c - d*e"]


def test_chi_rejects_trace():
    with pytest.raises(PolyError):
        chi_invariants(PolyMatrix.parse([["a", "0"], ["0", "a"]], ["a"]))


def test_slice_dimensions():
    assert slodowy_slice(P("2,1")).dimension == 4
    assert slodowy_slice(P("3")).dimension == 2
    full = slodowy_slice(P("1,1,1"))
    assert full.dimension == 8 and full.triple.X.is_zero()
    for n in range(2, 7):
        for mu in partitions_of(n):
            assert slodowy_slice(mu).dimension == n * n - 1 - orbit_dimension(mu)


def test_regular_slice_meets_cone_only_at_x():
    for n in range(2, 6):
        chart = slodowy_slice(Partition([n]))
        eqs = chi_invariants(chart.chart)
        origin = {v: 0 for v in chart.variables}
        assert all(poly_eval(e, origin) == 0 for e in eqs)
        jac = RationalMatrix([[poly_eval(e.derivative(v), origin) for v in chart.variables]
                              for e in eqs])
        assert jac.rank() == n - 1 == chart.dimension


def test_sl2_cone_equation():
    chart = slodowy_slice(P("1,1"))
    [chi] = slice_nilpotent_equations(P("1,1"))
    m = chart.chart
    assert chi == -(m[0, 0] * m[0, 0] + m[0, 1] * m[1, 0])


def test_full_chart_invariants_are_homogeneous():
    for n in range(2, 5):
        eqs = slice_nilpotent_equations(Partition([1] * n))
        for i, e in enumerate(eqs, start=1):
            assert e.is_homogeneous(i + 1)


def test_specialization_consistency():
    rng = random.Random(5)
    for mu in [P("2,1"), P("3"), P("2,2"), P("3,1"), P("2,1,1")]:
        chart = slodowy_slice(mu)
        eqs = chi_invariants(chart.chart)
        for _ in range(5):
            coords = [Fraction(rng.randint(-5, 5)) for _ in chart.variables]
            point = dict(zip(chart.variables, coords))
            assert [poly_eval(e, point) for e in eqs] == chi_of_matrix(chart.point(coords))


def test_subregular_sl3_against_displayed_family():
    """Points of the displayed family with b = -3a^2 and cd = 8a^3 are nilpotent,
    lie on our slice, and satisfy our chart's equations."""
    fixture = load_fixture("sl3_subregular")
    chart = slodowy_slice(P("2,1"))
    eqs = chi_invariants(chart.chart)
    rng = random.Random(2)
    for _ in range(20):
        a = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        c = Fraction(rng.choice([1, 2, -1, 3]))
        point = {"a": a, "b": -3 * a * a, "c": c, "d": 8 * a ** 3 / c}
        z = fixture.evaluate(point)
        coords = chart.coordinates(z)
        assert coords is not None
        assert all(poly_eval(e, dict(zip(chart.variables, coords))) == 0 for e in eqs)
        assert chi_of_matrix(z) == [0, 0]
    # and a point off the cone is detected
    z = fixture.evaluate({"a": 1, "b": -3, "c": 1, "d": 1})
    assert chi_of_matrix(z) != [0, 0]


def test_kleinian_equations():
    assert str(kleinian_equation(KleinianType("A", 2))) == "x^3 + y*z"
    assert str(kleinian_equation(KleinianType("E", 8))) == "x^5 + y^3 + z^2"
    assert str(kleinian_equation(KleinianType.parse("A_1"))) == "x^2 + y*z"
    with pytest.raises(ValueError):
        KleinianType("D", 3)
    with pytest.raises(ValueError):
        KleinianType("E", 9)


def test_semiuniversal_examples():
    assert semiuniversal_typeA(3, [0, 0, 0]) == kleinian_equation(KleinianType("A", 3))
    u1, u2 = MultiPoly.gens("u1 u2")
    assert str(semiuniversal_typeA(2, [u1, u2])) == "x^3 + x*u1 + y*z + u2"
    with pytest.raises(ValueError):
        semiuniversal_typeA(2, [0])


def test_sl4_subregular_is_semiuniversal_A3():
    """Solve chi_1 = u1, chi_2 = u2 for b and c; then chi_3 - u3 becomes
    -(x^4 + u1 x^2 + u2 x + u3 + yz) under x = 3a, y = d, z = e."""
    names = ["a", "b", "c", "d", "e", "u1", "u2", "u3"]
    a, b, c, d, e, u1, u2, u3 = (MultiPoly.var(v, names) for v in names)
    chi1, chi2, chi3 = [p.with_variables(names) for p in chi_invariants(load_fixture("sl4_subregular"))]
    b_sol = -(u1 + 6 * a ** 2) / 2
    c_sol = u2 + 8 * a ** 3 - 4 * a * b_sol
    assert chi1.substitute({"b": b_sol}).with_variables(names) == u1
    assert chi2.substitute({"b": b_sol, "c": c_sol}).with_variables(names) == u2
    reduced = (chi3 - u3).substitute({"b": b_sol, "c": c_sol})
    family = semiuniversal_typeA(3, [u1, u2, u3]).substitute({"x": 3 * a, "y": d, "z": e})
    assert reduced.with_variables(names) == (-family).with_variables(names)


def test_slodowy_pairs():
    assert tuple(map(str, slodowy_pair("B2"))) == ("A_3", "D_4", "S2")
    assert tuple(map(str, slodowy_pair("G2"))) == ("D_4", "E_7", "S3")
    assert tuple(map(str, slodowy_pair("F4"))) == ("E_6", "E_7", "S2")
    with pytest.raises(ValueError):
        slodowy_pair("A3")
    with pytest.raises(ValueError):
        slodowy_pair("G3")
