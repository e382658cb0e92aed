from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from homly import (
    LinearMap,
    MalformedScalarError,
    DimensionMismatchError,
    cyclic_rotation,
    format_rational,
    map_apply,
    map_compose,
    map_power,
    maps_commute,
    parse_rational,
    rat_canonical,
)
from homly.exact import basis_vector, vec_add, vec_scale, vector, zero_vector

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q.numerator) < 10**6)


def small_maps(n):
    return st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n),
                    min_size=n, max_size=n).map(LinearMap)


@pytest.mark.parametrize("num, den, expected", [
    (2, 4, Fraction(1, 2)),
    (3, -3, Fraction(-1, 1)),
    (0, 7, Fraction(0, 1)),
])
def test_rat_canonical(num, den, expected):
    q = rat_canonical(num, den)
    assert q == expected
    assert q.denominator > 0


def test_rat_canonical_zero_denominator():
    with pytest.raises(MalformedScalarError):
        rat_canonical(1, 0)


@pytest.mark.parametrize("text, value", [
    ("3", Fraction(3)), ("-3", Fraction(-3)), ("4/6", Fraction(2, 3)),
    ("-1/2", Fraction(-1, 2)), ("−5/10", Fraction(-1, 2)), ("0/9", Fraction(0)),
])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["1/0", "1/-2", "", " 1", "1.5", "1e3", "--1", "+1", "1/", "/2"])
def test_parse_rational_rejects(text):
    with pytest.raises(MalformedScalarError):
        parse_rational(text)


def test_parse_rational_rejects_non_strings():
    with pytest.raises(MalformedScalarError):
        parse_rational(0.5)


@given(rationals)
def test_format_parse_round_trip(q):
    assert parse_rational(format_rational(q)) == q


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if b != 0:
        assert (a / b) * b == a


def test_map_apply_examples():
    x = vector([1, "2/3", -4])
    assert map_apply(LinearMap.identity(3), x) == x
    assert map_apply(LinearMap.zero(3), x) == zero_vector(3)
    assert map_apply(cyclic_rotation(3), basis_vector(3, 0)) == basis_vector(3, 1)


def test_map_apply_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        map_apply(LinearMap.identity(2), vector([1, 2, 3]))


def test_map_compose_examples():
    m = LinearMap([[1, 2], [3, 4]])
    assert map_compose(m, LinearMap.identity(2)) == m
    assert map_compose(m, LinearMap.zero(2)) == LinearMap.zero(2)
    p = cyclic_rotation(3)
    assert map_compose(p, p) != LinearMap.identity(3)
    assert map_compose(p, map_compose(p, p)) == LinearMap.identity(3)
    with pytest.raises(DimensionMismatchError):
        map_compose(m, LinearMap.identity(3))


def test_map_compose_order():
    # (m1 o m2)(x) = m1(m2(x))
    m1 = LinearMap([[1, 1], [0, 1]])
    m2 = LinearMap([[0, 1], [1, 0]])
    x = vector([2, 5])
    assert map_apply(map_compose(m1, m2), x) == map_apply(m1, map_apply(m2, x))


def test_map_power_examples():
    m = LinearMap([[1, 2], [3, 4]])
    assert map_power(m, 0) == LinearMap.identity(2)
    assert map_power(LinearMap.identity(4), 7) == LinearMap.identity(4)
    assert map_power(cyclic_rotation(3), 3) == LinearMap.identity(3)
    with pytest.raises(ValueError):
        map_power(m, -1)


def test_maps_commute_examples():
    m = LinearMap([[1, 2], [3, 4]])
    assert maps_commute(m, m)
    assert maps_commute(m, LinearMap.identity(2))
    # diag(1,2) swap = [[0,1],[2,0]], swap diag(1,2) = [[0,2],[1,0]]
    assert not maps_commute(LinearMap.diagonal([1, 2]), LinearMap([[0, 1], [1, 0]]))


def test_linear_map_is_read_only():
    m = LinearMap.identity(2)
    with pytest.raises(ValueError):
        m.entries[0, 0] = Fraction(5)


def test_linear_map_rejects_non_square():
    with pytest.raises(DimensionMismatchError):
        LinearMap([[1, 2, 3], [4, 5, 6]])


@settings(max_examples=40, deadline=None)
@given(small_maps(3), st.integers(0, 4), st.integers(0, 4))
def test_power_law(m, a, b):
    assert map_power(m, a + b) == map_compose(map_power(m, a), map_power(m, b))


@settings(max_examples=40, deadline=None)
@given(small_maps(3), rationals, rationals,
       st.lists(rationals, min_size=3, max_size=3), st.lists(rationals, min_size=3, max_size=3))
def test_map_apply_linear(m, a, b, x, y):
    x, y = tuple(x), tuple(y)
    lhs = map_apply(m, vec_add(vec_scale(a, x), vec_scale(b, y)))
    rhs = vec_add(vec_scale(a, map_apply(m, x)), vec_scale(b, map_apply(m, y)))
    assert lhs == rhs


def test_signed_permutation_columns():
    m = LinearMap.permutation([1, 0], [1, -1])
    assert m.column(0) == (0, 1)
    assert m.column(1) == (-1, 0)
