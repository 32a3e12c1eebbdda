"""Vanishing and sign-pattern laboratory for two-parameter product families.

A family is indexed by (kind, r, s, t) and expands to

    kind "a":  (-q^r, -q^(t-r); q^t)^3 * (q^s, q^(2t-s); q^(2t))
    kind "b":  (-q^r, -q^(t-r); q^t)   * (q^s, q^(2t-s); q^(2t))^3

with 0 < r < t, 0 < s < 2t, s != t, t >= 5.  The tools here answer two
questions about a series: which residue classes mod k consist entirely of
zero coefficients, and what sign pattern each class settles into.  grid_search
sweeps every canonical family for a given t, using a single-prime modular
prefilter so that only genuine candidates are expanded in exact arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidFamily, PreconditionViolated
from .products import _symbol_product
from .series import TruncatedSeries

ZERO = "zero"
POSITIVE = "positive"
NEGATIVE = "negative"
MIXED = "mixed"

# a sign verdict must be supported by this many trailing coefficients
MIN_TAIL = 10


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    r: int
    s: int
    t: int

    def __post_init__(self):
        if self.kind not in ("a", "b"):
            raise InvalidFamily(f"kind must be 'a' or 'b', not {self.kind!r}")
        if self.t < 5:
            raise InvalidFamily(f"t must be at least 5, got {self.t}")
        if not 0 < self.r < self.t:
            raise InvalidFamily(f"r must satisfy 0 < r < t, got r={self.r}, t={self.t}")
        if not 0 < self.s < 2 * self.t or self.s == self.t:
            raise InvalidFamily(
                f"s must satisfy 0 < s < 2t and s != t, got s={self.s}, t={self.t}"
            )

    def has_prime_modulus(self) -> bool:
        return _is_prime(self.t)

    def canonical_key(self) -> tuple[str, int, int, int]:
        """Families agree under r -> t-r and s -> 2t-s; key identifies the orbit."""
        return (self.kind, self.t, min(self.r, self.t - self.r), min(self.s, 2 * self.t - self.s))

    def is_canonical(self) -> bool:
        return (self.kind, self.t, self.r, self.s) == self.canonical_key()

    def powers(self) -> tuple[int, int]:
        return (3, 1) if self.kind == "a" else (1, 3)

    def label(self) -> str:
        return f"{self.kind}[{self.r},{self.s},{self.t}]"


def build_family(spec: FamilySpec, order: int) -> TruncatedSeries:
    """Exact expansion of the family product to the given order."""
    e1, e2 = spec.powers()
    sym1 = _symbol_product((-spec.r, -(spec.t - spec.r)), spec.t, order)
    sym2 = _symbol_product((spec.s, 2 * spec.t - spec.s), 2 * spec.t, order)
    return sym1**e1 * sym2**e2


# --- scan reports -----------------------------------------------------------------


@dataclass(frozen=True)
class ResidueVanishing:
    residue: int
    all_zero: bool
    first_nonzero: int | None
    examined: int


@dataclass(frozen=True)
class ProgressionReport:
    modulus: int
    order: int
    classes: tuple[ResidueVanishing, ...]

    def all_zero_residues(self) -> tuple[int, ...]:
        return tuple(c.residue for c in self.classes if c.all_zero)


def scan_vanishing(series: TruncatedSeries, modulus: int) -> ProgressionReport:
    """Report, for every residue class, whether all examined coefficients vanish."""
    if modulus < 1:
        raise PreconditionViolated("modulus must be positive")
    coeffs = series.coeffs
    classes = []
    for residue in range(modulus):
        values = coeffs[residue :: modulus]
        first = next(
            (residue + modulus * i for i, value in enumerate(values) if value), None
        )
        classes.append(ResidueVanishing(residue, first is None, first, len(values)))
    return ProgressionReport(modulus, series.order, tuple(classes))


@dataclass(frozen=True)
class ResidueSigns:
    residue: int
    verdict: str
    n_min: int | None
    examined: int
    exceptional_zeros: tuple[int, ...]


@dataclass(frozen=True)
class SignReport:
    modulus: int
    order: int
    classes: tuple[ResidueSigns, ...]

    def exceptional_zeros(self) -> tuple[int, ...]:
        merged = []
        for cls in self.classes:
            merged.extend(cls.exceptional_zeros)
        return tuple(sorted(merged))


def _scan_class_signs(residue: int, modulus: int, values: tuple[int, ...]) -> ResidueSigns:
    examined = len(values)
    if examined == 0:
        return ResidueSigns(residue, MIXED, None, 0, ())
    if not any(values):
        return ResidueSigns(residue, ZERO, residue, examined, ())
    indices = [residue + modulus * i for i in range(examined)]
    j = examined - 1
    if values[j] == 0:
        while values[j] == 0:
            j -= 1
        tail_start = j + 1
        if examined - tail_start >= MIN_TAIL:
            return ResidueSigns(residue, ZERO, indices[tail_start], examined, ())
        return ResidueSigns(residue, MIXED, None, examined, ())
    sign = 1 if values[j] > 0 else -1
    while j >= 0 and values[j] * sign > 0:
        j -= 1
    start = j + 1
    if examined - start < MIN_TAIL:
        return ResidueSigns(residue, MIXED, None, examined, ())
    zeros = tuple(indices[i] for i in range(start) if values[i] == 0)
    return ResidueSigns(residue, POSITIVE if sign > 0 else NEGATIVE, indices[start], examined, zeros)


def scan_signs(series: TruncatedSeries, modulus: int) -> SignReport:
    """Classify the eventual sign of each residue class.

    A class is "zero" when every examined coefficient vanishes (or when a
    zero tail of at least MIN_TAIL entries follows the last nonzero one),
    "positive"/"negative" when a strict-sign tail of at least MIN_TAIL
    entries reaches the truncation order, and "mixed" otherwise.  n_min is
    the coefficient index where the settled behaviour begins; zeros of a
    signed class occurring below n_min are collected as exceptional.
    """
    if modulus < 1:
        raise PreconditionViolated("modulus must be positive")
    coeffs = series.coeffs
    classes = tuple(
        _scan_class_signs(residue, modulus, coeffs[residue::modulus])
        for residue in range(modulus)
    )
    return SignReport(modulus, series.order, classes)


# --- grid search ------------------------------------------------------------------

# single 25-bit prime: convolution products stay far below 2^63 in int64
_FILTER_PRIME = 33_554_393

_exact_cache: dict[tuple, TruncatedSeries] = {}


def _symbol_mod(signed_offsets: tuple[int, ...], modulus: int, order: int) -> np.ndarray:
    """Coefficients of the product of (1 - sign*q^offset) factors, mod the filter prime."""
    coeffs = np.zeros(order + 1, dtype=np.int64)
    coeffs[0] = 1
    for start in signed_offsets:
        sign = 1 if start > 0 else -1
        for d in range(abs(start), order + 1, modulus):
            coeffs[d:] = (coeffs[d:] - sign * coeffs[: order + 1 - d]) % _FILTER_PRIME
    return coeffs


def _convolve_mod(a: np.ndarray, b: np.ndarray, order: int) -> np.ndarray:
    return np.convolve(a, b)[: order + 1] % _FILTER_PRIME


def _family_mod(spec: FamilySpec, order: int) -> np.ndarray:
    e1, e2 = spec.powers()
    sym1 = _symbol_mod((-spec.r, -(spec.t - spec.r)), spec.t, order)
    sym2 = _symbol_mod((spec.s, 2 * spec.t - spec.s), 2 * spec.t, order)
    result = np.zeros(order + 1, dtype=np.int64)
    result[0] = 1
    for base, power in ((sym1, e1), (sym2, e2)):
        for _ in range(power):
            result = _convolve_mod(result, base, order)
    return result


def _build_family_cached(spec: FamilySpec, order: int) -> TruncatedSeries:
    key = (spec.canonical_key(), order)
    series = _exact_cache.get(key)
    if series is None:
        series = build_family(spec, order)
        _exact_cache[key] = series
    return series


@dataclass(frozen=True)
class GridFinding:
    spec: FamilySpec
    report: ProgressionReport


def grid_search(
    t: int,
    order: int,
    modulus: int | None = None,
    kinds: tuple[str, ...] = ("a", "b"),
) -> list[GridFinding]:
    """Scan every canonical family with parameter t for all-zero residue classes.

    Candidates are screened modulo a single word-sized prime first; a class
    that is nonzero mod p is nonzero exactly, so no family is wrongly
    discarded.  Survivors are re-expanded in exact arithmetic and reported
    only if a class is genuinely all zero.  Results are ordered by
    (kind, r, s).
    """
    if modulus is None:
        modulus = t
    if modulus < 1:
        raise PreconditionViolated("modulus must be positive")
    findings = []
    for kind in kinds:
        for r in range(1, t // 2 + 1):
            for s in range(1, t):
                spec = FamilySpec(kind, r, s, t)
                filtered = _family_mod(spec, order)
                survives = any(
                    not filtered[residue::modulus].any() for residue in range(modulus)
                )
                if not survives:
                    continue
                series = _build_family_cached(spec, order)
                report = scan_vanishing(series, modulus)
                if report.all_zero_residues():
                    findings.append(GridFinding(spec, report))
    return findings
