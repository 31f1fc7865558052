from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mkbranch.field import (FieldElement, ParameterPoint, ResonantParameterError, as_rational,
                            hatted, qpochhammer)

S = Fraction(7, 3)
small = st.fractions(min_value=-20, max_value=20, max_denominator=30)
elements = st.builds(lambda a, b: FieldElement(a, b, S), small, small)


def test_qpochhammer_examples():
    assert qpochhammer(Fraction(3, 7), Fraction(1, 3), 0) == 1
    assert qpochhammer(1, Fraction(1, 3), 1) == 0
    assert qpochhammer(Fraction(1, 2), Fraction(1, 3), 2) == Fraction(5, 12)
    with pytest.raises(ValueError):
        qpochhammer(2, Fraction(1, 3), -1)


def test_qpochhammer_in_extension():
    a = FieldElement(0, 1, 2)  # sqrt(2)
    value = qpochhammer(a, Fraction(1, 2), 2)
    # (1 - sqrt2)(1 - sqrt2/2) = 1 - 3/2 sqrt2 + 1
    assert value == FieldElement(2, Fraction(-3, 2), 2)


def test_hatted_examples(params):
    n = 3
    assert hatted(params, n, n) == (params.t0, params.hat_t0)
    p = ParameterPoint(Fraction(1, 3), Fraction(1, 2), Fraction(1, 3), 2, 3, 5)
    assert hatted(p, 2, 1)[0] == Fraction(1, 6)
    tau_hat = hatted(p, 2, 1)[1]
    assert tau_hat.a == 0 and tau_hat.b == Fraction(1, 2)
    with pytest.raises(ValueError):
        hatted(p, 2, 3)


def test_hatted_relations(params):
    t0 = params.hat_t0
    assert t0 * t0 == params.s
    assert (t0 * t0).is_rational()
    for l in (1, 2, 3):
        prod = t0 * params.hat_t(l)
        assert prod.is_rational()
        assert prod == params.t0 * params.tl[l]


def test_parameter_parsing():
    p = ParameterPoint.parse("q=1/3, t=1/2, t0=1/5, t1=2/7, t2=1/4, t3=3/8")
    assert p.q == Fraction(1, 3) and p.t3 == Fraction(3, 8)
    assert ParameterPoint.parse(str(p)) == p
    assert p.to_dict()["t1"] == "2/7"
    assert p.swapped().q == p.t and p.swapped().t == p.q
    for bad in ("q=1/3,t=1/2", "q=0.3,t=1/2,t0=1/5,t1=2/7,t2=1/4,t3=3/8",
                "q=0,t=1/2,t0=1/5,t1=2/7,t2=1/4,t3=3/8", "x=1,q=1/3,t=1/2,t0=1/5,t1=2/7,t2=1/4,t3=3/8"):
        with pytest.raises(ValueError):
            ParameterPoint.parse(bad)


def test_rational_parsing():
    assert as_rational("6/4") == Fraction(3, 2)
    assert str(as_rational("0")) == "0"
    with pytest.raises(ValueError):
        as_rational("1e3")
    with pytest.raises(TypeError):
        as_rational(0.5)


def test_json_round_trip():
    x = FieldElement(Fraction(-2, 6), Fraction(5, 3), S)
    data = x.to_json()
    assert data == {"a": "-1/3", "b": "5/3"}
    assert FieldElement.from_json(data, S) == x
    assert FieldElement.from_json({"a": "4", "b": "0"}) == 4


def test_radicand_mismatch():
    with pytest.raises(ValueError):
        FieldElement(0, 1, 2) + FieldElement(0, 1, 3)
    # a rational element mixes with anything
    assert FieldElement(1, 0, 3) + FieldElement(0, 1, 2) == FieldElement(1, 1, 2)


def test_resonant_error_is_zero_division():
    err = ResonantParameterError("1 - x")
    assert isinstance(err, ZeroDivisionError)
    assert err.factor == "1 - x"


def test_complex_value():
    x = FieldElement(1, 2, 4)
    assert complex(x) == pytest.approx(5)


@settings(max_examples=200, deadline=None)
@given(elements, elements, elements)
def test_ring_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x and x * y == y * x
    assert x - x == 0 and x * 1 == x


@settings(max_examples=200, deadline=None)
@given(elements, elements)
def test_division(x, y):
    # 7/3 is not a rational square, so only zero lacks an inverse
    if y:
        assert (x / y) * y == x
        assert y * y.inverse() == 1
        assert y ** -2 == (y * y).inverse()
    else:
        with pytest.raises(ZeroDivisionError):
            x / y


@settings(max_examples=100, deadline=None)
@given(elements)
def test_norm_is_product_with_conjugate(x):
    assert x * x.conjugate() == x.norm()
