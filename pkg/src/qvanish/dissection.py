"""Dissection of two-variable theta-type sums along arithmetic progressions.

The central objects are exponent forms Q(m, n) = am*m^2 + bm*m + an*n^2 + bn*n
summed over the integer lattice, possibly with alternating signs per index.
A pair of such sums S1, S2 together with a prefactor e is said to vanish on
the progression (k, l) when every coefficient of q^(k*n + l) in S1 - q^e * S2
is zero.  Such claims can be certified exactly: a VanishingCertificate maps
the two relevant solution sets onto a common quadratic form in fresh
variables, and verify_certificate replays every step with integer arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import Infeasible, PreconditionViolated, ResidueBeyondOrder
from .products import TRIVIAL, ThetaSum, theta_series
from .series import TruncatedSeries


# --- progression operators -------------------------------------------------------


def keep_progression(series: TruncatedSeries, modulus: int, residue: int) -> TruncatedSeries:
    """Zero out every coefficient whose index is not residue mod modulus."""
    if modulus < 1:
        raise PreconditionViolated("modulus must be positive")
    residue %= modulus
    coeffs = [c if i % modulus == residue else 0 for i, c in enumerate(series.coeffs)]
    return TruncatedSeries(coeffs)


def extract_progression(series: TruncatedSeries, modulus: int, residue: int) -> TruncatedSeries:
    """Collect coefficients along a progression: c'(n) = c(modulus*n + residue)."""
    if modulus < 1:
        raise PreconditionViolated("modulus must be positive")
    residue %= modulus
    if residue > series.order:
        raise ResidueBeyondOrder(
            f"residue {residue} exceeds series order {series.order}"
        )
    return TruncatedSeries(series.coeffs[residue :: modulus])


# --- exponent forms ---------------------------------------------------------------


@dataclass(frozen=True)
class QuadExponent:
    """Separable quadratic exponent on the (m, n) lattice with per-index signs."""

    am: int
    bm: int
    an: int
    bn: int
    character_m: str = TRIVIAL
    character_n: str = TRIVIAL

    def __post_init__(self):
        # delegate positivity and minimum-exponent checks to the 1-d sums
        self.theta_m()
        self.theta_n()

    def theta_m(self) -> ThetaSum:
        return ThetaSum(self.am, self.bm, self.character_m)

    def theta_n(self) -> ThetaSum:
        return ThetaSum(self.an, self.bn, self.character_n)

    def exponent(self, m: int, n: int) -> int:
        return self.am * m * m + self.bm * m + self.an * n * n + self.bn * n

    def term_sign(self, m: int, n: int) -> int:
        return self.theta_m().term_sign(m) * self.theta_n().term_sign(n)


def lattice_sum(q: QuadExponent, order: int, prefactor: int = 0) -> TruncatedSeries:
    """Expand q^prefactor * sum over (m, n) of sign(m, n) * q^Q(m, n)."""
    if prefactor < 0:
        raise PreconditionViolated("prefactor must be nonnegative")
    base = theta_series(q.theta_m(), order) * theta_series(q.theta_n(), order)
    return base.shift(prefactor) if prefactor else base


@dataclass(frozen=True)
class PairVerdict:
    vanishes: bool
    first_nonzero: int | None
    order: int


def check_pair_numeric(
    q1: QuadExponent,
    q2: QuadExponent,
    prefactor: int,
    modulus: int,
    residue: int,
    order: int,
) -> PairVerdict:
    """Test numerically whether S1 - q^prefactor * S2 vanishes on a progression."""
    diff = lattice_sum(q1, order) - lattice_sum(q2, order, prefactor)
    kept = keep_progression(diff, modulus, residue)
    first = next((i for i, c in enumerate(kept.coeffs) if c), None)
    return PairVerdict(first is None, first, order)


# --- affine maps and bivariate quadratics ------------------------------------------


@dataclass(frozen=True)
class AffineMap2:
    """(r, s) -> (m11*r + m12*s + t1, m21*r + m22*s + t2) on the integer lattice."""

    m11: int
    m12: int
    m21: int
    m22: int
    t1: int
    t2: int

    def apply(self, r: int, s: int) -> tuple[int, int]:
        return (
            self.m11 * r + self.m12 * s + self.t1,
            self.m21 * r + self.m22 * s + self.t2,
        )

    def det(self) -> int:
        return self.m11 * self.m22 - self.m12 * self.m21

    def is_unimodular(self) -> bool:
        return abs(self.det()) == 1

    def compose(self, other: "AffineMap2") -> "AffineMap2":
        """self after other: (self.compose(other)).apply(p) == self.apply(*other.apply(p))."""
        return AffineMap2(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
            self.m11 * other.t1 + self.m12 * other.t2 + self.t1,
            self.m21 * other.t1 + self.m22 * other.t2 + self.t2,
        )


@dataclass(frozen=True)
class Quad2:
    """General integer quadratic rr*r^2 + ss*s^2 + rs*r*s + r_*r + s_*s + const."""

    rr: int
    ss: int
    rs: int
    r: int
    s: int
    const: int

    @classmethod
    def from_quad_exponent(cls, q: QuadExponent, prefactor: int = 0) -> "Quad2":
        return cls(q.am, q.an, 0, q.bm, q.bn, prefactor)

    def evaluate(self, rv: int, sv: int) -> int:
        return (
            self.rr * rv * rv
            + self.ss * sv * sv
            + self.rs * rv * sv
            + self.r * rv
            + self.s * sv
            + self.const
        )

    def compose_affine(self, sigma: AffineMap2) -> "Quad2":
        a, b, u = sigma.m11, sigma.m12, sigma.t1
        c, d, v = sigma.m21, sigma.m22, sigma.t2
        return Quad2(
            self.rr * a * a + self.ss * c * c + self.rs * a * c,
            self.rr * b * b + self.ss * d * d + self.rs * b * d,
            2 * self.rr * a * b + 2 * self.ss * c * d + self.rs * (a * d + b * c),
            2 * self.rr * a * u + 2 * self.ss * c * v + self.rs * (a * v + c * u) + self.r * a + self.s * c,
            2 * self.rr * b * u + 2 * self.ss * d * v + self.rs * (b * v + d * u) + self.r * b + self.s * d,
            self.rr * u * u + self.ss * v * v + self.rs * u * v + self.r * u + self.s * v + self.const,
        )


# --- congruence parametrization ---------------------------------------------------


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_s, s = s, old_s - quot * s
        old_t, t = t, old_t - quot * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _norm2(v: tuple[int, int]) -> int:
    return v[0] * v[0] + v[1] * v[1]


def _round_div(num: int, den: int) -> int:
    """Nearest integer to num/den, ties toward +infinity."""
    if den < 0:
        num, den = -num, -den
    return (2 * num + den) // (2 * den)


def _reduce_basis(u: tuple[int, int], v: tuple[int, int]) -> tuple[tuple[int, int], tuple[int, int]]:
    """Lagrange-Gauss reduction to a shortest basis of the spanned lattice."""
    while True:
        if _norm2(u) > _norm2(v):
            u, v = v, u
        m = _round_div(u[0] * v[0] + u[1] * v[1], _norm2(u))
        if m == 0:
            return u, v
        v = (v[0] - m * u[0], v[1] - m * u[1])


def _canonical_vector(v: tuple[int, int]) -> tuple[int, int]:
    """Flip sign so the first nonzero component is positive."""
    if v[0] < 0 or (v[0] == 0 and v[1] < 0):
        return (-v[0], -v[1])
    return v


def parametrize_congruence(q: QuadExponent, modulus: int, residue: int) -> AffineMap2:
    """Affine bijection of Z^2 onto {(m, n) : bm*m + bn*n = residue mod modulus}.

    Requires the quadratic coefficients to vanish mod modulus, so that the
    congruence class of the exponent is decided by the linear part alone.
    Raises Infeasible when the congruence has no solutions.  The result is
    canonical: Gauss-reduced columns with deterministic signs and ordering,
    and a shortest translation vector.
    """
    if modulus < 1:
        raise PreconditionViolated("modulus must be positive")
    if q.am % modulus or q.an % modulus:
        raise PreconditionViolated("quadratic coefficients must vanish mod modulus")
    residue %= modulus
    bm, bn, k = q.bm, q.bn, modulus

    d, x, y = _xgcd(bm, bn)
    if d == 0:
        if residue:
            raise Infeasible(f"congruence 0 = {residue} mod {k} has no solutions")
        return AffineMap2(1, 0, 0, 1, 0, 0)
    g = gcd(d, k)
    if residue % g:
        raise Infeasible(
            f"gcd({bm}, {bn}, {k}) = {g} does not divide residue {residue}"
        )

    # particular solution: scale (x, y) so the linear form hits the residue
    k1 = k // g
    t = (residue // g) * pow(d // g, -1, k1) % k1 if k1 > 1 else 0
    point = (x * t, y * t)

    # homogeneous solutions: value 0 directly, or the smallest multiple of k
    u1 = (bn // d, -bm // d)
    u2 = (x * k1, y * k1)
    b1, b2 = _reduce_basis(u1, u2)
    b1, b2 = _canonical_vector(b1), _canonical_vector(b2)
    if (_norm2(b2), (-b2[0], -b2[1])) < (_norm2(b1), (-b1[0], -b1[1])):
        b1, b2 = b2, b1

    det = b1[0] * b2[1] - b1[1] * b2[0]
    # Babai rounding toward the nearest lattice point, then a local sweep
    c1 = _round_div(b2[1] * point[0] - b2[0] * point[1], det)
    c2 = _round_div(-b1[1] * point[0] + b1[0] * point[1], det)
    best = None
    for d1 in range(-3, 4):
        for d2 in range(-3, 4):
            e1, e2 = c1 + d1, c2 + d2
            cand = (
                point[0] - e1 * b1[0] - e2 * b2[0],
                point[1] - e1 * b1[1] - e2 * b2[1],
            )
            key = (_norm2(cand), (-cand[0], -cand[1]))
            if best is None or key < best[0]:
                best = (key, cand)
    trans = best[1]
    return AffineMap2(b1[0], b2[0], b1[1], b2[1], trans[0], trans[1])


# --- certificates -----------------------------------------------------------------

_CERT_KEYS = ("k", "l", "e", "q1", "q2", "sigma1", "sigma2", "matched")


@dataclass(frozen=True)
class VanishingCertificate:
    """Exact witness that S1 - q^prefactor * S2 vanishes on a progression.

    sigma1 and sigma2 parametrize the progression's solution sets for the two
    exponent forms, and both composites equal the shared matched form, so the
    coefficient counts cancel term by term.
    """

    modulus: int
    residue: int
    prefactor: int
    q1: QuadExponent
    q2: QuadExponent
    sigma1: AffineMap2
    sigma2: AffineMap2
    matched: Quad2

    def to_text(self) -> str:
        for q in (self.q1, self.q2):
            if q.character_m != TRIVIAL or q.character_n != TRIVIAL:
                raise PreconditionViolated("only trivial characters are serializable")
        sig1, sig2 = self.sigma1, self.sigma2
        m = self.matched
        lines = (
            f"k={self.modulus}",
            f"l={self.residue}",
            f"e={self.prefactor}",
            f"q1={self.q1.am},{self.q1.bm},{self.q1.an},{self.q1.bn}",
            f"q2={self.q2.am},{self.q2.bm},{self.q2.an},{self.q2.bn}",
            f"sigma1={sig1.m11},{sig1.m12},{sig1.m21},{sig1.m22},{sig1.t1},{sig1.t2}",
            f"sigma2={sig2.m11},{sig2.m12},{sig2.m21},{sig2.m22},{sig2.t1},{sig2.t2}",
            f"matched={m.rr},{m.ss},{m.rs},{m.r},{m.s},{m.const}",
        )
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "VanishingCertificate":
        fields = {}
        for raw in text.splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ValueError(f"malformed certificate line: {raw!r}")
            fields[key.strip()] = value.strip()
        missing = [key for key in _CERT_KEYS if key not in fields]
        if missing:
            raise ValueError(f"certificate is missing fields: {', '.join(missing)}")

        def ints(key: str, count: int) -> list[int]:
            parts = fields[key].split(",")
            if len(parts) != count:
                raise ValueError(f"field {key} needs {count} integers")
            try:
                return [int(p) for p in parts]
            except ValueError:
                raise ValueError(f"field {key} contains a non-integer") from None

        return cls(
            ints("k", 1)[0],
            ints("l", 1)[0],
            ints("e", 1)[0],
            QuadExponent(*ints("q1", 4)),
            QuadExponent(*ints("q2", 4)),
            AffineMap2(*ints("sigma1", 6)),
            AffineMap2(*ints("sigma2", 6)),
            Quad2(*ints("matched", 6)),
        )


@dataclass(frozen=True)
class CertificateCheck:
    valid: bool
    failures: tuple[str, ...]


def verify_certificate(
    cert: VanishingCertificate, *, order: int = 100, window: int = 5
) -> CertificateCheck:
    """Replay every step of a certificate in exact integer arithmetic."""
    failures = []
    k, l, e = cert.modulus, cert.residue, cert.prefactor
    if k < 1:
        failures.append("modulus must be positive")
    if e < 0:
        failures.append("prefactor must be nonnegative")
    if k >= 1 and not 0 <= l < k:
        failures.append("residue out of range")
    for tag, q in (("q1", cert.q1), ("q2", cert.q2)):
        if q.character_m != TRIVIAL or q.character_n != TRIVIAL:
            failures.append(f"{tag}: characters must be trivial")
        elif k >= 1 and (q.am % k or q.an % k):
            failures.append(f"{tag}: quadratic coefficients must vanish mod modulus")
    if failures:
        return CertificateCheck(False, tuple(failures))

    sides = (
        ("sigma1", cert.q1, cert.sigma1, 0, l),
        ("sigma2", cert.q2, cert.sigma2, e, (l - e) % k),
    )
    for tag, q, sigma, prefactor, target in sides:
        index = k // gcd(q.bm, q.bn, k)
        if abs(sigma.det()) != index:
            failures.append(f"{tag}: determinant does not match the lattice index")
        for col in ((sigma.m11, sigma.m21), (sigma.m12, sigma.m22)):
            if (q.bm * col[0] + q.bn * col[1]) % k:
                failures.append(f"{tag}: column leaves the congruence lattice")
        if (q.bm * sigma.t1 + q.bn * sigma.t2 - target) % k:
            failures.append(f"{tag}: translation misses the residue")
        composite = Quad2.from_quad_exponent(q, prefactor).compose_affine(sigma)
        if composite != cert.matched:
            failures.append(f"{tag}: composite disagrees with the matched form")
        else:
            # independent spot check of the composition algebra
            for r in range(-window, window + 1):
                for s in range(-window, window + 1):
                    m, n = sigma.apply(r, s)
                    if cert.matched.evaluate(r, s) != q.exponent(m, n) + prefactor:
                        failures.append(f"{tag}: pointwise exponent mismatch")
                        break
                else:
                    continue
                break

    verdict = check_pair_numeric(cert.q1, cert.q2, e, k, l, order)
    if not verdict.vanishes:
        failures.append(
            f"difference has a nonzero coefficient at index {verdict.first_nonzero}"
        )
    return CertificateCheck(not failures, tuple(failures))


def _unimodular_candidates(bound: int) -> list[AffineMap2]:
    rng = range(-bound, bound + 1)
    sixes = [
        (a, b, c, d, u, v)
        for a in rng
        for b in rng
        for c in rng
        for d in rng
        if abs(a * d - b * c) == 1
        for u in rng
        for v in rng
    ]
    sixes.sort(
        key=lambda t: (
            max(abs(x) for x in t),
            tuple((abs(x), 0 if x >= 0 else 1) for x in t),
        )
    )
    return [AffineMap2(*t) for t in sixes]


def prove_pair(
    q1: QuadExponent,
    q2: QuadExponent,
    prefactor: int,
    modulus: int,
    residue: int,
    *,
    order: int = 200,
    bound: int = 2,
) -> VanishingCertificate | None:
    """Search for a certificate that S1 - q^prefactor * S2 vanishes on (modulus, residue).

    Both solution sets are parametrized canonically; the second is then
    re-aligned by a small unimodular affine change of variables until its
    composite quadratic matches the first.  Returns None when the numeric
    check already fails or no alignment is found within the search bound.
    """
    for q in (q1, q2):
        if q.character_m != TRIVIAL or q.character_n != TRIVIAL:
            raise PreconditionViolated("certificate search requires trivial characters")
    if modulus < 1:
        raise PreconditionViolated("modulus must be positive")
    if prefactor < 0:
        raise PreconditionViolated("prefactor must be nonnegative")
    residue %= modulus

    if not check_pair_numeric(q1, q2, prefactor, modulus, residue, order).vanishes:
        return None

    sigma1 = parametrize_congruence(q1, modulus, residue)
    sigma2 = parametrize_congruence(q2, modulus, (residue - prefactor) % modulus)
    matched = Quad2.from_quad_exponent(q1).compose_affine(sigma1)
    target = Quad2.from_quad_exponent(q2, prefactor)
    composite2 = target.compose_affine(sigma2)
    for tau in _unimodular_candidates(bound):
        if composite2.compose_affine(tau) == matched:
            return VanishingCertificate(
                modulus, residue, prefactor, q1, q2, sigma1, sigma2.compose(tau), matched
            )
    return None
