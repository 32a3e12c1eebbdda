"""Product and theta constructors against independent expansions."""
import pytest
from hypothesis import given, settings, strategies as st

from qvanish.errors import NegativeExponent, PreconditionViolated
from qvanish.products import (
    ALTERNATING,
    PochhammerFactor,
    ThetaSum,
    build_named,
    euler_product,
    jacobi_triple_product,
    phi,
    pochhammer,
    psi,
    rogers_ramanujan,
    theta_f,
    theta_series,
)
from qvanish.series import TruncatedSeries, one


# --- independent oracles ------------------------------------------------------


def poly_mul(a, b, n):
    out = [0] * (n + 1)
    for i, ai in enumerate(a[: n + 1]):
        if ai:
            for j, bj in enumerate(b[: n + 1 - i]):
                out[i + j] += ai * bj
    return out


def naive_symbol(sign, offset, modulus, n):
    """(sign q^offset; q^modulus)_inf by explicit factor polynomials."""
    prod = [1]
    d = offset
    while d <= n:
        prod = poly_mul(prod, [1] + [0] * (d - 1) + [-sign], n)
        d += modulus
    return prod + [0] * (n - len(prod) + 1)


def naive_theta(quad, lin, alternating, n):
    c = [0] * (n + 1)
    for m in range(-n - 2, n + 3):
        e = quad * m * m + lin * m
        if 0 <= e <= n:
            c[e] += -1 if alternating and m % 2 else 1
    return c


# --- Pochhammer products --------------------------------------------------------


def test_euler_product_examples():
    assert list(euler_product(1, 7).coeffs) == [1, -1, -1, 0, 0, 1, 0, 1]
    assert list(euler_product(2, 4).coeffs) == [1, 0, -1, 0, -1]
    assert list(euler_product(1, 30).coeffs) == naive_symbol(1, 1, 1, 30)


def test_offset_past_order_gives_one():
    f = PochhammerFactor(sign=1, offset=9, modulus=5)
    assert pochhammer(f, 8) == one(8)


@given(
    st.sampled_from([1, -1]),
    st.integers(min_value=1, max_value=6),
    st.integers(min_value=1, max_value=8),
)
def test_pochhammer_matches_naive(sign, offset, modulus):
    f = PochhammerFactor(sign, offset, modulus)
    assert list(pochhammer(f, 40).coeffs) == naive_symbol(sign, offset, modulus, 40)


def test_negative_power_is_inverse():
    f = PochhammerFactor(1, 1, 5, power=-2)
    g = PochhammerFactor(1, 1, 5, power=2)
    assert pochhammer(f, 30) == pochhammer(g, 30).invert()
    assert pochhammer(f, 30) * pochhammer(g, 30) == one(30)


def test_factor_validation():
    with pytest.raises(PreconditionViolated):
        PochhammerFactor(2, 1, 5)
    with pytest.raises(PreconditionViolated):
        PochhammerFactor(1, 0, 5)
    with pytest.raises(PreconditionViolated):
        PochhammerFactor(1, 1, 0)
    with pytest.raises(PreconditionViolated):
        PochhammerFactor(1, 1, 5, power=0)
    with pytest.raises(PreconditionViolated):
        euler_product(0, 5)


# --- theta sums -----------------------------------------------------------------


def test_theta_examples():
    sq = theta_series(ThetaSum(1, 0), 9)
    assert list(sq.coeffs) == [1, 2, 0, 0, 2, 0, 0, 0, 0, 2]
    t = theta_series(ThetaSum(20, 6), 26)
    assert [i for i, c in enumerate(t.coeffs) if c] == [0, 14, 26]
    ta = theta_series(ThetaSum(5, 1, ALTERNATING), 6)
    assert list(ta.coeffs) == [1, 0, 0, 0, -1, 0, -1]


def test_theta_rejects_negative_reach():
    with pytest.raises(NegativeExponent):
        ThetaSum(5, -6)
    with pytest.raises(NegativeExponent):
        ThetaSum(1, 2)
    with pytest.raises(NegativeExponent):
        ThetaSum(0, 0)
    # boundary cases that just touch zero are fine
    assert ThetaSum(5, -5).min_exponent() == 0
    assert ThetaSum(5, 5).min_exponent() == 0


@given(
    st.integers(min_value=1, max_value=25),
    st.integers(min_value=-25, max_value=25),
    st.booleans(),
    st.integers(min_value=0, max_value=6),
)
def test_theta_window_padding_is_invisible(quad, lin, alt, pad):
    try:
        t = ThetaSum(quad, lin, ALTERNATING if alt else "trivial")
    except NegativeExponent:
        return
    assert theta_series(t, 120, pad=pad) == theta_series(t, 120)
    assert list(theta_series(t, 120).coeffs) == naive_theta(quad, lin, alt, 120)


def test_phi_psi_sums():
    assert list(phi(25).coeffs) == naive_theta(1, 0, False, 25)
    tri = [0] * 26
    for m in range(10):
        e = m * (m + 1) // 2
        if e <= 25:
            tri[e] = 1
    assert list(psi(25).coeffs) == tri


def test_phi_psi_eta_quotients():
    n = 200
    e1, e2, e4 = euler_product(1, n), euler_product(2, n), euler_product(4, n)
    assert psi(n) == e2**2 * e1.invert()
    assert phi(n) == e2**5 * (e1**2 * e4**2).invert()


# --- triple product -------------------------------------------------------------


def test_triple_product_matches_single_sign_symbols():
    # for sa*sb = +1 the product side is three plain Pochhammer symbols
    n = 200
    for x, y, s in [(1, 4, 1), (2, 3, 1), (1, 9, -1), (2, 8, -1), (3, 7, -1), (4, 6, -1)]:
        p1 = pochhammer(PochhammerFactor(-s, x, x + y), n)
        p2 = pochhammer(PochhammerFactor(-s, y, x + y), n)
        p3 = pochhammer(PochhammerFactor(1, x + y, x + y), n)
        assert jacobi_triple_product(x, y, s, s, n) == p1 * p2 * p3


@pytest.mark.parametrize(
    "x,y,sa,sb",
    [(1, 4, 1, 1), (2, 3, 1, 1), (1, 9, -1, -1), (1, 2, 1, -1), (3, 5, -1, 1), (4, 6, -1, -1)],
)
def test_triple_product_on_fixed_instances(x, y, sa, sb):
    n = 200
    assert theta_f(x, y, sa, sb, n) == jacobi_triple_product(x, y, sa, sb, n)


@settings(max_examples=160)
@given(
    st.integers(min_value=1, max_value=8),
    st.integers(min_value=1, max_value=8),
    st.sampled_from([1, -1]),
    st.sampled_from([1, -1]),
)
def test_triple_product_fuzzed(x, y, sa, sb):
    assert theta_f(x, y, sa, sb, 60) == jacobi_triple_product(x, y, sa, sb, 60)


# --- quotient and named products --------------------------------------------------


def test_rogers_ramanujan_low_coefficients():
    u = rogers_ramanujan(8)
    assert u.coeff(0) == 1
    assert u.coeff(1) == -1
    assert u.coeff(3) == 0
    v = rogers_ramanujan(50, inverted=True)
    assert rogers_ramanujan(50) * v == one(50)


def test_build_named_a1():
    s = build_named("a1", 14)
    sq = TruncatedSeries(naive_symbol(-1, 1, 5, 14)) * TruncatedSeries(naive_symbol(-1, 4, 5, 14))
    expected = (
        sq
        * sq
        * TruncatedSeries(naive_symbol(1, 4, 10, 14))
        * TruncatedSeries(naive_symbol(1, 6, 10, 14))
    )
    assert s == expected
    assert s.coeff(0) == 1
    assert s.coeff(1) == 2
    assert s.coeff(3) == 0 and s.coeff(8) == 0 and s.coeff(13) == 0


@pytest.mark.parametrize("name", sorted(["a", "b", "a1", "b1", "a2", "b2", "a3", "b3"]))
def test_build_named_against_naive(name):
    from qvanish.products import NAMED_PRODUCTS

    n = 40
    expected = one(n)
    for sign, offsets, modulus, power in NAMED_PRODUCTS[name]:
        grp = one(n)
        for o in offsets:
            grp = grp * TruncatedSeries(naive_symbol(sign, o, modulus, n))
        expected = expected * grp**power
    assert build_named(name, n) == expected


def test_build_named_unknown():
    with pytest.raises(PreconditionViolated):
        build_named("c", 5)
