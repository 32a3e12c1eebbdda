"""Command-line front door: expansion, identity checks, scans, proving, and search.

Six subcommands share a small flag vocabulary (-N/--order, --json, --out).
Exit codes: 0 success (equal / found / has an all-zero residue), 1 a check
that came back negative, 2 parse or precondition errors, 3 output I/O errors.
All output is deterministic: the same flags produce byte-identical text.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .dissection import QuadExponent, check_pair_numeric, prove_pair
from .errors import PreconditionViolated, QVanishError
from .products import ALTERNATING, TRIVIAL
from .qexpr import evaluate, parse
from .vanishlab import grid_search, scan_signs, scan_vanishing

CHECK_ORDER = 1000
SEARCH_ORDER = 2000
_INT64 = 2**63

CSV_HEADER = "kind,r,s,t,modulus,residue,N,verdict,first_nonzero,proof_status"


@dataclass(frozen=True)
class RunConfig:
    """Validated bundle of flags for a single invocation."""

    subcommand: str
    order: int
    as_json: bool = False
    out: str | None = None
    exprs: tuple[str, ...] = ()
    modulus: int | None = None
    period: int | None = None
    family_t: int | None = None
    pair: tuple[QuadExponent, QuadExponent] | None = None
    prefactor: int = 0
    residue: int = 0
    bound: int = 2

    def __post_init__(self):
        if self.order < 0:
            raise PreconditionViolated("order must be >= 0")
        if self.subcommand == "check-vanishing" and (self.modulus is None or self.modulus < 2):
            raise PreconditionViolated("modulus must be >= 2")
        if self.subcommand == "prove-pair":
            if self.modulus is None or self.modulus < 1:
                raise PreconditionViolated("modulus must be >= 1")
            if self.prefactor < 0:
                raise PreconditionViolated("prefactor must be >= 0")
            if self.bound < 0:
                raise PreconditionViolated("bound must be >= 0")
        if self.period is not None and self.period < 1:
            raise PreconditionViolated("period must be >= 1")
        if self.family_t is not None and self.family_t < 5:
            raise PreconditionViolated("t must be >= 5")


def _json_int(v: int):
    # exactness over convenience: values past 64 bits travel as decimal strings
    return v if -_INT64 <= v < _INT64 else str(v)


def _dump(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _emit(text: str, out: str | None) -> int:
    if out is None:
        sys.stdout.write(text)
        return 0
    try:
        with open(out, "w") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {out}: {exc}", file=sys.stderr)
        return 3
    return 0


def _parse_quad(text: str) -> QuadExponent:
    """Read 'am,bm,an,bn'; a ':alt' suffix on bm or bn selects the alternating sign."""
    parts = text.split(",")
    if len(parts) != 4:
        raise PreconditionViolated(f"expected am,bm,an,bn, got {text!r}")
    values = []
    characters = []
    for i, part in enumerate(parts):
        core, sep, suffix = part.partition(":")
        if sep:
            if i not in (1, 3):
                raise PreconditionViolated("character suffix belongs on bm or bn")
            if suffix != "alt":
                raise PreconditionViolated(f"unknown character suffix {suffix!r}")
        try:
            values.append(int(core))
        except ValueError:
            raise PreconditionViolated(f"not an integer: {core!r}") from None
        if i in (1, 3):
            characters.append(ALTERNATING if sep else TRIVIAL)
    return QuadExponent(values[0], values[1], values[2], values[3], characters[0], characters[1])


# --- subcommand handlers -----------------------------------------------------------


def cmd_expand(cfg: RunConfig) -> int:
    series = evaluate(parse(cfg.exprs[0]), cfg.order)
    if cfg.as_json:
        text = _dump([_json_int(c) for c in series.coeffs])
    else:
        text = "".join(f"{n}: {c}\n" for n, c in enumerate(series.coeffs))
    return _emit(text, cfg.out)


def cmd_verify_identity(cfg: RunConfig) -> int:
    lhs = evaluate(parse(cfg.exprs[0]), cfg.order)
    rhs = evaluate(parse(cfg.exprs[1]), cfg.order)
    index = next((i for i, (a, b) in enumerate(zip(lhs.coeffs, rhs.coeffs)) if a != b), None)
    if cfg.as_json:
        payload = {"equal": index is None, "order": cfg.order}
        if index is not None:
            payload["index"] = index
            payload["lhs"] = _json_int(lhs.coeff(index))
            payload["rhs"] = _json_int(rhs.coeff(index))
        text = _dump(payload)
    elif index is None:
        text = f"EQUAL up to {cfg.order}\n"
    else:
        text = f"DIFFER at index {index}: lhs {lhs.coeff(index)}, rhs {rhs.coeff(index)}\n"
    code = _emit(text, cfg.out)
    if code:
        return code
    return 0 if index is None else 1


def cmd_check_vanishing(cfg: RunConfig) -> int:
    series = evaluate(parse(cfg.exprs[0]), cfg.order)
    report = scan_vanishing(series, cfg.modulus)
    if cfg.as_json:
        text = _dump(
            {
                "modulus": report.modulus,
                "order": report.order,
                "classes": [
                    {
                        "residue": c.residue,
                        "all_zero": c.all_zero,
                        "first_nonzero": c.first_nonzero,
                        "examined": c.examined,
                    }
                    for c in report.classes
                ],
            }
        )
    else:
        lines = []
        for c in report.classes:
            if c.all_zero:
                lines.append(f"residue {c.residue}: all zero (examined {c.examined})")
            else:
                lines.append(
                    f"residue {c.residue}: first nonzero at {c.first_nonzero}"
                    f" (examined {c.examined})"
                )
        hits = report.all_zero_residues()
        if hits:
            lines.append("all-zero residues: " + ", ".join(str(r) for r in hits))
        else:
            lines.append("no all-zero residue")
        text = "\n".join(lines) + "\n"
    code = _emit(text, cfg.out)
    if code:
        return code
    return 0 if report.all_zero_residues() else 1


def cmd_signs(cfg: RunConfig) -> int:
    series = evaluate(parse(cfg.exprs[0]), cfg.order)
    report = scan_signs(series, cfg.period)
    if cfg.as_json:
        text = _dump(
            {
                "modulus": report.modulus,
                "order": report.order,
                "classes": [
                    {
                        "residue": c.residue,
                        "verdict": c.verdict,
                        "n_min": c.n_min,
                        "examined": c.examined,
                        "exceptional_zeros": list(c.exceptional_zeros),
                    }
                    for c in report.classes
                ],
            }
        )
    else:
        lines = []
        for c in report.classes:
            part = f"residue {c.residue}: {c.verdict}"
            if c.n_min is not None:
                part += f" from {c.n_min}"
            part += f" (examined {c.examined})"
            if c.exceptional_zeros:
                part += ", zeros at " + ", ".join(str(z) for z in c.exceptional_zeros)
            lines.append(part)
        text = "\n".join(lines) + "\n"
    return _emit(text, cfg.out)


def cmd_prove_pair(cfg: RunConfig) -> int:
    q1, q2 = cfg.pair
    residue = cfg.residue % cfg.modulus
    verdict = check_pair_numeric(q1, q2, cfg.prefactor, cfg.modulus, residue, cfg.order)
    cert = None
    if verdict.vanishes:
        cert = prove_pair(
            q1, q2, cfg.prefactor, cfg.modulus, residue, order=cfg.order, bound=cfg.bound
        )
    if cfg.as_json:
        payload = {
            "found": cert is not None,
            "numeric": {
                "vanishes": verdict.vanishes,
                "first_nonzero": verdict.first_nonzero,
                "order": verdict.order,
            },
        }
        if cert is not None:
            payload["certificate"] = {
                "k": cert.modulus,
                "l": cert.residue,
                "e": cert.prefactor,
                "q1": [cert.q1.am, cert.q1.bm, cert.q1.an, cert.q1.bn],
                "q2": [cert.q2.am, cert.q2.bm, cert.q2.an, cert.q2.bn],
                "sigma1": [s for s in _affine_fields(cert.sigma1)],
                "sigma2": [s for s in _affine_fields(cert.sigma2)],
                "matched": [
                    cert.matched.rr,
                    cert.matched.ss,
                    cert.matched.rs,
                    cert.matched.r,
                    cert.matched.s,
                    cert.matched.const,
                ],
            }
        text = _dump(payload)
    elif cert is not None:
        text = cert.to_text()
    elif not verdict.vanishes:
        text = (
            f"numeric check refutes: first nonzero at index {verdict.first_nonzero}"
            f" (order {verdict.order})\n"
        )
    else:
        text = (
            f"no certificate within bound {cfg.bound};"
            f" numeric check passes up to order {cfg.order}\n"
        )
    sys.stdout.write(text)
    if cfg.out is not None and cert is not None:
        code = _emit(cert.to_text(), cfg.out)
        if code:
            return code
    return 0 if cert is not None else 1


def _affine_fields(sigma):
    return (sigma.m11, sigma.m12, sigma.m21, sigma.m22, sigma.t1, sigma.t2)


def cmd_search(cfg: RunConfig) -> int:
    findings = grid_search(cfg.family_t, cfg.order)
    rows = []
    for finding in findings:
        spec = finding.spec
        for residue in finding.report.all_zero_residues():
            rows.append(
                {
                    "kind": spec.kind,
                    "r": spec.r,
                    "s": spec.s,
                    "t": spec.t,
                    "modulus": finding.report.modulus,
                    "residue": residue,
                    "N": cfg.order,
                    "verdict": "zero",
                    "first_nonzero": None,
                    "proof_status": "observed",
                }
            )
    if cfg.as_json:
        text = _dump(rows)
    else:
        lines = [CSV_HEADER]
        for row in rows:
            first = "" if row["first_nonzero"] is None else str(row["first_nonzero"])
            lines.append(
                f"{row['kind']},{row['r']},{row['s']},{row['t']},{row['modulus']},"
                f"{row['residue']},{row['N']},{row['verdict']},{first},{row['proof_status']}"
            )
        text = "\n".join(lines) + "\n"
    return _emit(text, cfg.out)


_HANDLERS = {
    "expand": cmd_expand,
    "verify-identity": cmd_verify_identity,
    "check-vanishing": cmd_check_vanishing,
    "signs": cmd_signs,
    "prove-pair": cmd_prove_pair,
    "search": cmd_search,
}


# --- argument plumbing -------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser, default_order: int) -> None:
    p.add_argument(
        "-N",
        "--order",
        type=int,
        default=default_order,
        help=f"truncation order (default {default_order})",
    )
    p.add_argument("--json", action="store_true", dest="as_json", help="emit JSON")
    p.add_argument("--out", metavar="PATH", help="write the report to PATH")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="qvanish",
        description="Exact q-series expansion, vanishing scans, and pair proving.",
    )
    sub = top.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("expand", help="print coefficients 0..N of an expression")
    p.add_argument("expr", help="series expression, e.g. '(-q,-q^4;q^5)^2*(q^4,q^6;q^10)'")
    _add_common(p, CHECK_ORDER)

    p = sub.add_parser("verify-identity", help="compare two expressions coefficientwise")
    p.add_argument("lhs")
    p.add_argument("rhs")
    _add_common(p, CHECK_ORDER)

    p = sub.add_parser("check-vanishing", help="find all-zero residue classes mod k")
    p.add_argument("expr")
    p.add_argument("-k", "--modulus", type=int, required=True)
    _add_common(p, CHECK_ORDER)

    p = sub.add_parser("signs", help="classify eventual coefficient signs per residue")
    p.add_argument("expr")
    p.add_argument("-p", "--period", type=int, required=True)
    _add_common(p, CHECK_ORDER)

    p = sub.add_parser("prove-pair", help="search a vanishing certificate for S1 - q^e*S2")
    p.add_argument("--q1", required=True, metavar="am,bm,an,bn", help="first exponent form")
    p.add_argument("--q2", required=True, metavar="am,bm,an,bn", help="second exponent form")
    p.add_argument("-e", "--prefactor", type=int, default=0)
    p.add_argument("-k", "--modulus", type=int, required=True)
    p.add_argument("-l", "--residue", type=int, required=True)
    p.add_argument("--bound", type=int, default=2, help="substitution search radius")
    _add_common(p, SEARCH_ORDER)

    p = sub.add_parser("search", help="grid-search family products for vanishing classes")
    p.add_argument("-t", "--t", dest="t", type=int, required=True, help="family parameter (>= 5)")
    _add_common(p, SEARCH_ORDER)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = _config_from_args(args)
        return _HANDLERS[cfg.subcommand](cfg)
    except QVanishError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _config_from_args(a: argparse.Namespace) -> RunConfig:
    base = dict(
        subcommand=a.subcommand,
        order=a.order,
        as_json=a.as_json,
        out=a.out,
    )
    if a.subcommand == "expand":
        return RunConfig(**base, exprs=(a.expr,))
    if a.subcommand == "verify-identity":
        return RunConfig(**base, exprs=(a.lhs, a.rhs))
    if a.subcommand == "check-vanishing":
        return RunConfig(**base, exprs=(a.expr,), modulus=a.modulus)
    if a.subcommand == "signs":
        return RunConfig(**base, exprs=(a.expr,), period=a.period)
    if a.subcommand == "prove-pair":
        return RunConfig(
            **base,
            modulus=a.modulus,
            residue=a.residue,
            prefactor=a.prefactor,
            bound=a.bound,
            pair=(_parse_quad(a.q1), _parse_quad(a.q2)),
        )
    return RunConfig(**base, family_t=a.t)


def entry() -> None:
    raise SystemExit(main())
