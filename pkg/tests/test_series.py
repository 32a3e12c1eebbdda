"""Core series arithmetic: frozen examples plus ring-law properties."""
import pytest
from hypothesis import given, strategies as st

from qvanish.errors import IndexBeyondOrder, NonUnitConstantTerm
from qvanish.series import TruncatedSeries, from_terms, one, zero


# --- independent oracles ------------------------------------------------------


def poly_mul(a, b, n):
    """Naive list-of-coefficients product, truncated at order n."""
    out = [0] * (n + 1)
    for i, ai in enumerate(a[: n + 1]):
        if ai:
            for j, bj in enumerate(b[: n + 1 - i]):
                out[i + j] += ai * bj
    return out


def euler_factor_product(n):
    """(q;q)_infinity by multiplying out (1-q)(1-q^2)... term by term."""
    prod = [1]
    for d in range(1, n + 1):
        prod = poly_mul(prod, [1] + [0] * (d - 1) + [-1], n)
    return prod


def partition_counts(n):
    """p(0..n) by the coin-change recurrence over part sizes."""
    table = [1] + [0] * n
    for part in range(1, n + 1):
        for m in range(part, n + 1):
            table[m] += table[m - part]
    return table


# --- frozen expected values ---------------------------------------------------


def test_euler_product_truncation_order_7():
    expected = euler_factor_product(7)
    assert expected == [1, -1, -1, 0, 0, 1, 0, 1]


def test_invert_euler_product_gives_partition_numbers():
    e1 = TruncatedSeries(euler_factor_product(12))
    inv = e1.invert()
    assert list(inv.coeffs) == partition_counts(12)
    assert list(inv.coeffs) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]


def test_invert_geometric():
    assert TruncatedSeries([1, -1, 0, 0]).invert() == TruncatedSeries([1, 1, 1, 1])


def test_one_and_zero():
    assert one(3).coeffs == (1, 0, 0, 0)
    assert zero(2).coeffs == (0, 0, 0)


def test_mul_truncates_to_shorter_operand():
    a = TruncatedSeries([1, 2, 3, 4, 5])
    b = TruncatedSeries([1, 1])
    assert (a * b).order == 1
    assert (a * b).coeffs == (1, 3)


def test_shift_drops_tail():
    a = TruncatedSeries([1, 2, 3])
    assert a.shift(1).coeffs == (0, 1, 2)
    assert a.shift(5).coeffs == (0, 0, 0)
    with pytest.raises(ValueError):
        a.shift(-1)


def test_coeff_bounds_checked():
    a = TruncatedSeries([1, 2])
    assert a.coeff(1) == 2
    with pytest.raises(IndexBeyondOrder):
        a.coeff(2)
    with pytest.raises(IndexBeyondOrder):
        a.coeff(-1)


def test_invert_requires_unit_constant():
    with pytest.raises(NonUnitConstantTerm):
        TruncatedSeries([2, 1]).invert()
    with pytest.raises(NonUnitConstantTerm):
        TruncatedSeries([0, 1]).invert()


def test_immutable():
    a = TruncatedSeries([1, 2])
    with pytest.raises(AttributeError):
        a._coeffs = (3,)
    with pytest.raises(TypeError):
        TruncatedSeries([1.5, 2])


def test_from_terms():
    s = from_terms([(0, 1), (3, -2), (9, 5)], 4)
    assert s.coeffs == (1, 0, 0, -2, 0)
    with pytest.raises(ValueError):
        from_terms([(-1, 1)], 4)


# --- properties ---------------------------------------------------------------

coeffs = st.lists(
    st.integers(min_value=-40, max_value=40) | st.integers(min_value=-(10**25), max_value=10**25),
    min_size=1,
    max_size=24,
)
series = coeffs.map(TruncatedSeries)
unit_series = st.tuples(st.sampled_from([1, -1]), coeffs).map(
    lambda t: TruncatedSeries((t[0],) + tuple(t[1]))
)


@given(series, series, series)
def test_ring_laws(a, b, c):
    n = min(a.order, b.order, c.order)
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert ((a * b) * c).truncate(n) == (a * (b * c)).truncate(n)
    assert (a * (b + c)).truncate(n) == (a * b + a * c).truncate(n)


@given(series)
def test_identities(a):
    n = a.order
    assert a + zero(n) == a
    assert a * one(n) == a
    assert a - a == zero(n)
    assert a + (-a) == zero(n)
    assert (a * zero(n)).is_zero()


@given(series, series)
def test_mul_matches_naive_oracle(a, b):
    n = min(a.order, b.order)
    assert list((a * b).coeffs) == poly_mul(list(a.coeffs), list(b.coeffs), n)


@given(unit_series)
def test_invert_soundness(a):
    assert a * a.invert() == one(a.order)
    assert a.invert().invert() == a


@given(series, st.integers(min_value=0, max_value=5))
def test_pow_is_repeated_mul(a, e):
    expected = one(a.order)
    for _ in range(e):
        expected = expected * a
    assert a**e == expected


@given(unit_series, st.integers(min_value=1, max_value=4))
def test_negative_pow(a, e):
    assert a**-e == a.invert() ** e
    assert (a**-e) * (a**e) == one(a.order)


@given(series, st.integers(min_value=0, max_value=30))
def test_shift_composes(a, c):
    assert a.shift(c).coeffs == tuple(
        (a.coeffs[n - c] if n >= c else 0) for n in range(a.order + 1)
    )
    assert a.shift(c).shift(3) == a.shift(c + 3)


@given(series, series, st.data())
def test_truncation_monotone(a, b, data):
    n = min(a.order, b.order)
    m = data.draw(st.integers(min_value=0, max_value=n))
    at, bt = a.truncate(m), b.truncate(m)
    assert (a + b).truncate(m) == at + bt
    assert (a * b).truncate(m) == at * bt
    assert (a.shift(2)).truncate(m) == at.shift(2) if m >= 0 else True
    assert (a**2).truncate(m) == at**2


@given(unit_series, st.data())
def test_truncation_monotone_invert(a, data):
    m = data.draw(st.integers(min_value=0, max_value=a.order))
    assert a.invert().truncate(m) == a.truncate(m).invert()
