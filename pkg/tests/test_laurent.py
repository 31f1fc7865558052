from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mkbranch.field import FieldElement
from mkbranch.laurent import LaurentPoly, bracket, orbit_size

z = LaurentPoly.variable(1, 0)
zinv = LaurentPoly.variable(1, 0, -1)

coefs = st.fractions(min_value=-5, max_value=5, max_denominator=7)
exps = st.tuples(st.integers(-2, 2), st.integers(-2, 2))
polys = st.dictionaries(exps, coefs, max_size=5).map(lambda d: LaurentPoly(2, d))


def test_ring_examples():
    f = z + zinv * 3 - 2
    assert (f + (-f)).is_zero()
    assert f * LaurentPoly.constant(1) == f
    assert z * zinv == LaurentPoly.constant(1)
    assert len(LaurentPoly(1, {(1,): 0, (0,): 2})) == 1


def test_nvars_mismatch():
    with pytest.raises(ValueError):
        z + LaurentPoly.variable(2, 0)
    with pytest.raises(ValueError):
        z * LaurentPoly.variable(2, 1)


def test_bracket_examples():
    assert bracket(1, 0, 1) == z + zinv - 2
    x = Fraction(2, 7)
    assert bracket(1, 0, x).evaluate([x]) == 0
    assert bracket(1, 0, x) == bracket(1, 0, 1 / x)
    with pytest.raises(ValueError):
        bracket(1, 0, 0)


def test_evaluate_examples(params):
    assert LaurentPoly.constant(2).evaluate([Fraction(5), 3]) == 1
    assert (z + zinv).evaluate([2]) == Fraction(5, 2)
    assert bracket(1, 0, params.t0).evaluate([params.t0]) == 0
    with pytest.raises(ValueError):
        z.evaluate([0])
    with pytest.raises(ValueError):
        z.evaluate([1, 2])


def test_evaluate_in_extension():
    root = FieldElement(0, 1, 3)
    assert (z * z).evaluate([root]) == 3
    assert (z + zinv).evaluate([root]) == FieldElement(0, Fraction(4, 3), 3)


def test_symmetry_examples():
    assert LaurentPoly.constant(2).is_hyperoctahedral_symmetric()
    assert (z + zinv).is_hyperoctahedral_symmetric()
    assert not LaurentPoly.monomial((1, 1)).is_hyperoctahedral_symmetric()
    full = sum((LaurentPoly.monomial((a, b)) for a in (1, -1) for b in (1, -1)), LaurentPoly.zero(2))
    assert full.is_hyperoctahedral_symmetric()
    lopsided = full + LaurentPoly.monomial((1, 1))
    assert not lopsided.is_hyperoctahedral_symmetric()


def test_orbit_size():
    assert orbit_size((0, 0)) == 1
    assert orbit_size((1, 0)) == 4
    assert orbit_size((1, 1)) == 4
    assert orbit_size((2, 1)) == 8


def test_leading_coefficient_and_dominance(params):
    assert LaurentPoly.constant(1).leading_coefficient(()) == 1
    assert bracket(1, 0, params.t0).leading_coefficient((1,)) == 1
    f = LaurentPoly.monomial((2, 0)) + LaurentPoly.monomial((1, -1)) * 5
    assert f.leading_coefficient((2, 0)) == 1
    assert f.is_dominated_by((2, 0))
    assert not LaurentPoly.monomial((0, 2)).is_dominated_by((1, 1))


def test_degree_and_embed():
    f = LaurentPoly.monomial((3,)) + LaurentPoly.monomial((-1,))
    assert f.degree(0) == 3
    g = f.embed(3, [2])
    assert g.coefficient((0, 0, 3)) == 1 and g.nvars == 3


def test_json_round_trip():
    s = Fraction(5, 3)
    f = LaurentPoly(2, {(1, -1): Fraction(2, 3), (0, 0): FieldElement(1, 2, s)})
    data = f.to_json()
    assert [t["exp"] for t in data["terms"]] == [[0, 0], [1, -1]]
    assert LaurentPoly.from_json(data, s) == f


def test_evaluate_complex_agrees_with_exact():
    import numpy as np
    f = LaurentPoly(2, {(1, -2): Fraction(1, 3), (0, 1): 2, (0, 0): -1})
    x, y = Fraction(2, 3), Fraction(5, 4)
    exact = f.evaluate([x, y])
    assert f.evaluate_complex([np.array(float(x)), np.array(float(y))]) == pytest.approx(float(exact.a))


@settings(max_examples=100, deadline=None)
@given(polys, polys, polys)
def test_ring_laws(f, g, h):
    assert f + g == g + f
    assert (f + g) + h == f + (g + h)
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f - f).is_zero()
    assert f ** 2 == f * f


@settings(max_examples=100, deadline=None)
@given(polys, polys, st.fractions(min_value=1, max_value=5, max_denominator=5),
       st.fractions(min_value=1, max_value=5, max_denominator=5))
def test_evaluation_is_a_homomorphism(f, g, x, y):
    point = [x, y]
    assert (f * g).evaluate(point) == f.evaluate(point) * g.evaluate(point)
    assert (f + g).evaluate(point) == f.evaluate(point) + g.evaluate(point)
