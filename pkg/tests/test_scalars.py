import pytest

from orbitstar import HScalar, rat
from orbitstar.parsing import ParseError, parse_h_scalar


def test_canonical_form_strips_trailing_zeros():
    assert HScalar((1, 0, 0)) == HScalar((1,))
    assert HScalar(()) == HScalar((0, 0))
    assert not HScalar(())
    assert HScalar((0, 1)).degree == 1


def test_ring_operations_exact():
    a = HScalar((rat(1, 2), 1))
    b = HScalar((rat(1, 2), -1))
    assert a + b == 1
    assert a - a == 0
    assert a * b == HScalar((rat(1, 4), 0, -1))
    assert (-a) + a == 0
    assert a * 2 == HScalar((1, 2))
    assert 2 * a == a * 2
    assert a**2 == a * a


def test_float_rejected():
    with pytest.raises(TypeError):
        HScalar((0.5,))
    with pytest.raises(TypeError):
        rat(0.5)


def test_evaluate_and_truncate():
    c = parse_h_scalar("l*(l+h)", l=1)
    assert c == HScalar((1, 1))
    assert c.evaluate(1) == 2
    assert c.evaluate(0) == 1
    assert c.truncated(1) == 1
    assert HScalar((0, 0, 3)).divided_by_h(2) == 3
    with pytest.raises(ValueError):
        HScalar((1, 2)).divided_by_h()


def test_parse_h_scalar_requires_l_value():
    with pytest.raises(ParseError):
        parse_h_scalar("l*(l+h)")
    assert parse_h_scalar("1/2*h^2 - 3") == HScalar((-3, 0, rat(1, 2)))


def test_printing_round_trip():
    c = HScalar((rat(-3, 4), 0, 1))
    assert str(c) == "-3/4 + h^2"
    assert parse_h_scalar(str(c)) == c
    assert str(HScalar(())) == "0"
    assert str(HScalar((0, 1))) == "h"
