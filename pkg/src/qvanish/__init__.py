"""qvanish: exact q-series arithmetic, dissection certificates, and vanishing scans."""

from .dissection import (
    AffineMap2,
    CertificateCheck,
    PairVerdict,
    Quad2,
    QuadExponent,
    VanishingCertificate,
    check_pair_numeric,
    extract_progression,
    keep_progression,
    lattice_sum,
    parametrize_congruence,
    prove_pair,
    verify_certificate,
)
from .errors import (
    ExprSyntaxError,
    IndexBeyondOrder,
    Infeasible,
    InvalidFamily,
    NegativeExponent,
    NonUnitConstantTerm,
    OffsetOutOfRange,
    ParseError,
    PreconditionViolated,
    QVanishError,
    ResidueBeyondOrder,
)
from .products import (
    ALTERNATING,
    NAMED_PRODUCTS,
    TRIVIAL,
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
from .qexpr import evaluate, parse, render
from .series import TruncatedSeries, from_terms, one, zero
from .vanishlab import (
    MIXED,
    NEGATIVE,
    POSITIVE,
    ZERO,
    FamilySpec,
    GridFinding,
    ProgressionReport,
    ResidueSigns,
    ResidueVanishing,
    SignReport,
    build_family,
    grid_search,
    scan_signs,
    scan_vanishing,
)

__all__ = [
    "ALTERNATING",
    "AffineMap2",
    "CertificateCheck",
    "ExprSyntaxError",
    "FamilySpec",
    "GridFinding",
    "IndexBeyondOrder",
    "Infeasible",
    "InvalidFamily",
    "MIXED",
    "NAMED_PRODUCTS",
    "NEGATIVE",
    "NegativeExponent",
    "NonUnitConstantTerm",
    "OffsetOutOfRange",
    "POSITIVE",
    "PairVerdict",
    "ParseError",
    "PochhammerFactor",
    "PreconditionViolated",
    "ProgressionReport",
    "QVanishError",
    "Quad2",
    "QuadExponent",
    "ResidueBeyondOrder",
    "ResidueSigns",
    "ResidueVanishing",
    "SignReport",
    "TRIVIAL",
    "ThetaSum",
    "TruncatedSeries",
    "VanishingCertificate",
    "ZERO",
    "build_family",
    "build_named",
    "check_pair_numeric",
    "euler_product",
    "evaluate",
    "extract_progression",
    "from_terms",
    "grid_search",
    "jacobi_triple_product",
    "keep_progression",
    "lattice_sum",
    "one",
    "parametrize_congruence",
    "parse",
    "phi",
    "pochhammer",
    "prove_pair",
    "psi",
    "render",
    "rogers_ramanujan",
    "scan_signs",
    "scan_vanishing",
    "theta_f",
    "theta_series",
    "verify_certificate",
    "zero",
]
