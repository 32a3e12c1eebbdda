"""Constructors for Pochhammer products and one-dimensional theta series.

Everything lands in a TruncatedSeries.  Infinite products are truncated by
dropping factors whose lowest exponent exceeds the order; infinite sums run
over the full integer range that can still touch the window, with one spare
index of padding on each side so boundary terms cannot be lost silently.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import NegativeExponent, PreconditionViolated
from .series import TruncatedSeries, one

TRIVIAL = "trivial"
ALTERNATING = "alternating"
CHARACTERS = (TRIVIAL, ALTERNATING)


@dataclass(frozen=True)
class PochhammerFactor:
    """One symbol (q^offset; q^modulus)^power, with sign -1 meaning (-q^offset; ...)."""

    sign: int
    offset: int
    modulus: int
    power: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise PreconditionViolated(f"sign must be +1 or -1, got {self.sign}")
        if self.offset < 1:
            raise PreconditionViolated(f"offset must be >= 1, got {self.offset}")
        if self.modulus < 1:
            raise PreconditionViolated(f"modulus must be >= 1, got {self.modulus}")
        if self.power == 0:
            raise PreconditionViolated("power must be nonzero")


@dataclass(frozen=True)
class ThetaSum:
    """sum over all integers n of eps(n) * q^(quad*n^2 + lin*n).

    eps is 1 for the trivial character and (-1)^n for the alternating one.
    The exponent minimum over the integers must be >= 0, otherwise the sum
    does not embed in a power series in q.
    """

    quad: int
    lin: int
    character: str = TRIVIAL

    def __post_init__(self):
        if self.quad < 1:
            raise NegativeExponent(f"quadratic coefficient must be positive, got {self.quad}")
        if self.character not in CHARACTERS:
            raise PreconditionViolated(f"unknown character {self.character!r}")
        if self.min_exponent() < 0:
            raise NegativeExponent(
                f"{self.quad}n^2+{self.lin}n reaches {self.min_exponent()} < 0"
            )

    def exponent(self, n: int) -> int:
        return self.quad * n * n + self.lin * n

    def min_exponent(self) -> int:
        # integer minimum sits next to the real vertex -lin/(2*quad)
        v = -self.lin // (2 * self.quad)
        return min(self.exponent(v), self.exponent(v + 1))

    def term_sign(self, n: int) -> int:
        if self.character == ALTERNATING and n & 1:
            return -1
        return 1


def _symbol_product(signed_offsets, modulus: int, n: int, base_sign: int = 1) -> TruncatedSeries:
    """prod over offsets o of (sign(o) q^|o|; base_sign * q^modulus)_inf, truncated at order n.

    base_sign = -1 makes the sign of the k-th factor alternate, as needed for
    symbols whose base is a negative power of q.
    """
    if base_sign not in (1, -1):
        raise PreconditionViolated(f"base_sign must be +1 or -1, got {base_sign}")
    c = [0] * (n + 1)
    c[0] = 1
    for so in signed_offsets:
        s = 1 if so > 0 else -1
        d = abs(so)
        if d < 1:
            raise PreconditionViolated(f"offset must be >= 1, got {d}")
        while d <= n:
            # multiply by (1 - s*q^d) in place; downward scan keeps reads pristine
            for i in range(n, d - 1, -1):
                if c[i - d]:
                    c[i] -= s * c[i - d]
            d += modulus
            s *= base_sign
    return TruncatedSeries(c)


def pochhammer(factor: PochhammerFactor, n: int) -> TruncatedSeries:
    """Expand one Pochhammer symbol to order n, applying its power last."""
    base = _symbol_product([factor.sign * factor.offset], factor.modulus, n)
    return base if factor.power == 1 else base**factor.power


def euler_product(j: int, n: int) -> TruncatedSeries:
    """(q^j; q^j)_infinity, the building block of eta quotients."""
    if j < 1:
        raise PreconditionViolated(f"euler_product needs j >= 1, got {j}")
    return _symbol_product([j], j, n)


def theta_series(t: ThetaSum, n: int, pad: int = 1) -> TruncatedSeries:
    """Expand a one-dimensional theta sum to order n.

    pad widens the summation window beyond the solved bounds; any correct
    pad >= 0 gives identical output, which the tests exercise.
    """
    if n < 0:
        raise PreconditionViolated("order must be >= 0")
    a, b = t.quad, t.lin
    r = isqrt(b * b + 4 * a * n)
    lo = (-b - r) // (2 * a) - 1 - pad
    hi = (-b + r) // (2 * a) + 1 + pad
    c = [0] * (n + 1)
    for k in range(lo, hi + 1):
        e = t.exponent(k)
        if 0 <= e <= n:
            c[e] += t.term_sign(k)
    return TruncatedSeries(c)


def theta_f(x: int, y: int, sa: int = 1, sb: int = 1, n: int = 0) -> TruncatedSeries:
    """The two-parameter theta sum f(sa*q^x, sb*q^y), truncated at order n.

    f(a, b) = sum over all integers m of a^(m(m+1)/2) * b^(m(m-1)/2); with
    a = sa*q^x, b = sb*q^y the exponent of q is x*m(m+1)/2 + y*m(m-1)/2 and
    the sign is sa^(m(m+1)/2) * sb^(m(m-1)/2).
    """
    if x < 1 or y < 1:
        raise PreconditionViolated(f"theta_f needs positive exponents, got ({x}, {y})")
    if sa not in (1, -1) or sb not in (1, -1):
        raise PreconditionViolated("signs must be +1 or -1")
    if n < 0:
        raise PreconditionViolated("order must be >= 0")
    a2, b2 = x + y, x - y
    r = isqrt(b2 * b2 + 8 * a2 * n)
    lo = (-b2 - r) // (2 * a2) - 2
    hi = (-b2 + r) // (2 * a2) + 2
    c = [0] * (n + 1)
    for m in range(lo, hi + 1):
        t1 = m * (m + 1) // 2
        t2 = m * (m - 1) // 2
        e = x * t1 + y * t2
        if 0 <= e <= n:
            s = 1
            if sa < 0 and t1 & 1:
                s = -s
            if sb < 0 and t2 & 1:
                s = -s
            c[e] += s
    return TruncatedSeries(c)


def jacobi_triple_product(x: int, y: int, sa: int = 1, sb: int = 1, n: int = 0) -> TruncatedSeries:
    """The product side matching theta_f(x, y, sa, sb): with a = sa*q^x and
    b = sb*q^y this is (-a; ab)_inf (-b; ab)_inf (ab; ab)_inf.

    When sa*sb = -1 the factor signs alternate along each symbol.
    """
    if x < 1 or y < 1:
        raise PreconditionViolated(f"needs positive exponents, got ({x}, {y})")
    if sa not in (1, -1) or sb not in (1, -1):
        raise PreconditionViolated("signs must be +1 or -1")
    base = sa * sb
    p1 = _symbol_product([-sa * x], x + y, n, base)
    p2 = _symbol_product([-sb * y], x + y, n, base)
    p3 = _symbol_product([base * (x + y)], x + y, n, base)
    return p1 * p2 * p3


def phi(n: int) -> TruncatedSeries:
    """sum of q^(m^2) over all integers m."""
    return theta_f(1, 1, 1, 1, n)


def psi(n: int) -> TruncatedSeries:
    """sum of q^(m(m+1)/2) over m >= 0."""
    return theta_f(1, 3, 1, 1, n)


def rogers_ramanujan(n: int, inverted: bool = False) -> TruncatedSeries:
    """The Rogers-Ramanujan quotient (q,q^4;q^5)_inf / (q^2,q^3;q^5)_inf.

    With inverted=True the reciprocal quotient is returned.
    """
    num = _symbol_product([1, 4], 5, n)
    den = _symbol_product([2, 3], 5, n)
    if inverted:
        num, den = den, num
    return num * den.invert()


# The eight built-in products: groups of (sign, offsets, modulus, power).
NAMED_PRODUCTS = {
    "a": (((-1, (1, 4), 5, 1), (1, (1, 9), 10, 3))),
    "b": (((-1, (2, 3), 5, 1), (1, (3, 7), 10, 3))),
    "a1": (((-1, (1, 4), 5, 2), (1, (4, 6), 10, 1))),
    "b1": (((-1, (2, 3), 5, 2), (1, (2, 8), 10, 1))),
    "a2": (((-1, (1, 4), 5, 3), (1, (2, 8), 10, 1))),
    "b2": (((-1, (2, 3), 5, 3), (1, (4, 6), 10, 1))),
    "a3": (((-1, (1, 4), 5, 3), (1, (3, 7), 10, 1))),
    "b3": (((-1, (2, 3), 5, 3), (1, (1, 9), 10, 1))),
}


def build_named(which: str, n: int) -> TruncatedSeries:
    """Expand one of the eight built-in infinite products to order n."""
    try:
        groups = NAMED_PRODUCTS[which]
    except KeyError:
        raise PreconditionViolated(
            f"unknown product {which!r}; choose from {sorted(NAMED_PRODUCTS)}"
        ) from None
    result = one(n)
    for sign, offsets, modulus, power in groups:
        base = _symbol_product([sign * o for o in offsets], modulus, n)
        result = result * (base if power == 1 else base**power)
    return result
