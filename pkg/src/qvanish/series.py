"""Truncated power series over exact (arbitrary-precision) integers.

A TruncatedSeries represents sum_{n=0}^{order} c(n) q^n with the tail beyond
`order` unknown, not zero.  Every binary operation truncates to the shorter
operand, so results are exact as far as they go.  There is no floating point
anywhere in this module.
"""
from __future__ import annotations

from .errors import IndexBeyondOrder, NonUnitConstantTerm


class TruncatedSeries:
    """Immutable integer power series known exactly through q^order."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs):
        cs = tuple(coeffs)
        if not cs:
            raise ValueError("a series needs at least its constant coefficient")
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be int, got {type(c).__name__}")
        object.__setattr__(self, "_coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    def coeff(self, n: int) -> int:
        if n < 0 or n > self.order:
            raise IndexBeyondOrder(f"coefficient {n} outside [0, {self.order}]")
        return self._coeffs[n]

    def truncate(self, m: int) -> "TruncatedSeries":
        """Restrict to order m <= order.  Cannot extend: the tail is unknown."""
        if m < 0 or m > self.order:
            raise IndexBeyondOrder(f"cannot truncate order-{self.order} series to {m}")
        return TruncatedSeries(self._coeffs[: m + 1])

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        a, b = self._coeffs, other._coeffs
        return TruncatedSeries([a[i] + b[i] for i in range(n + 1)])

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        a, b = self._coeffs, other._coeffs
        return TruncatedSeries([a[i] - b[i] for i in range(n + 1)])

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self._coeffs])

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        a, b = self._coeffs, other._coeffs
        nza = [(i, v) for i, v in enumerate(a[: n + 1]) if v]
        nzb = [(j, v) for j, v in enumerate(b[: n + 1]) if v]
        if len(nza) > len(nzb):
            nza, nzb = nzb, nza
        out = [0] * (n + 1)
        for i, ai in nza:
            lim = n - i
            for j, bj in nzb:
                if j > lim:
                    break
                out[i + j] += ai * bj
        return TruncatedSeries(out)

    def invert(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires constant term +1 or -1.

        Solved coefficient by coefficient: with u = c(0) and u*u = 1,
        inv(n) = -u * sum_{k=1..n} c(k) * inv(n-k).
        """
        u = self._coeffs[0]
        if u not in (1, -1):
            raise NonUnitConstantTerm(f"constant term {u} is not a unit")
        a = self._coeffs
        nza = [(k, v) for k, v in enumerate(a) if v and k > 0]
        inv = [u]
        for n in range(1, self.order + 1):
            s = 0
            for k, ak in nza:
                if k > n:
                    break
                s += ak * inv[n - k]
            inv.append(-u * s)
        return TruncatedSeries(inv)

    def shift(self, c: int) -> "TruncatedSeries":
        """Multiply by q^c (c >= 0); order unchanged, high coefficients drop off."""
        if c < 0:
            raise ValueError("negative shifts would create negative exponents")
        n = self.order
        return TruncatedSeries((0,) * min(c, n + 1) + self._coeffs[: max(0, n + 1 - c)])

    def __pow__(self, e: int) -> "TruncatedSeries":
        if not isinstance(e, int):
            raise TypeError("exponent must be int")
        if e == 0:
            return one(self.order)
        base = self.invert() if e < 0 else self
        e = abs(e)
        result = None
        while e:
            if e & 1:
                result = base if result is None else result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- plumbing -------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, TruncatedSeries) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        cs = self._coeffs
        shown = ", ".join(str(c) for c in cs[:8])
        if len(cs) > 8:
            shown += ", ..."
        return f"TruncatedSeries([{shown}], order={self.order})"

    def is_zero(self) -> bool:
        return not any(self._coeffs)


def one(order: int) -> TruncatedSeries:
    """The constant series 1 truncated at `order`."""
    return TruncatedSeries((1,) + (0,) * order)


def zero(order: int) -> TruncatedSeries:
    return TruncatedSeries((0,) * (order + 1))


def from_terms(terms, order: int) -> TruncatedSeries:
    """Build a series from (exponent, coefficient) pairs, dropping exponents > order."""
    out = [0] * (order + 1)
    for e, c in terms:
        if e < 0:
            raise ValueError(f"negative exponent {e}")
        if e <= order:
            out[e] += c
    return TruncatedSeries(out)
