"""Command-line front end: ``schwarz <analyze|to-schwarz|charpoly|verify> INPUT``.

Exit codes: 0 ok, 1 verification failed, 2 degenerate Hurwitz table,
3 unparseable input or unpaired nonreal root, 4 any other unmet precondition.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import config, jsonio, oracle
from .classify import NOT_CLASSIFIED, classify
from .errors import (ConjugationViolation, DegenerateHurwitz, ParseError, PreconditionFailed,
                     SchwarzError)
from .hurwitz import hurwitz_determinants, rhp_root_count
from .inverse import (bebiano_from_spectrum, general_from_spectrum, holtz_from_spectrum,
                      schwarz_from_polynomial, sn_from_polynomial, sn_from_spectrum,
                      stable_from_spectrum)
from .polynomial import Poly, Spectrum, from_roots
from .schwarz import (SchwarzMatrix, SnView, charpoly, classify_by_sign_pattern,
                      rhp_count_by_signs)
from .wall import wall_coefficients

EXIT_OK, EXIT_FAIL, EXIT_DEGENERATE, EXIT_PARSE, EXIT_PRECONDITION = 0, 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, code: int, message: str):
        self.code = code
        super().__init__(message)


def _as_poly(obj) -> Poly:
    if isinstance(obj, Poly):
        return obj.monic()
    if isinstance(obj, Spectrum):
        return from_roots(obj)
    if isinstance(obj, SnView):
        return charpoly(obj.matrix())
    return charpoly(obj)


def _as_matrix(obj) -> SchwarzMatrix:
    if isinstance(obj, SnView):
        return obj.matrix()
    if isinstance(obj, SchwarzMatrix):
        return obj
    raise CliError(EXIT_PARSE, "expected a Schwarz matrix {\"b\": [...]} or an S_n view {\"a\", \"c\", \"k\"}")


# ---------------------------------------------------------------- commands

def cmd_analyze(obj, args) -> tuple[dict, int]:
    p = _as_poly(obj)
    t = hurwitz_determinants(p)
    out = {"poly": jsonio.to_json(p), "deltas": jsonio.to_json(t), "verdict": None,
           "rhp_count": None, "wall": None, "error": None}
    out["verdict"] = jsonio.to_json(classify(p))
    try:
        t.require_nonzero()
    except DegenerateHurwitz as exc:
        out["error"] = str(exc)
        return out, EXIT_DEGENERATE
    out["rhp_count"] = rhp_root_count(p, t)
    out["wall"] = jsonio.to_json(wall_coefficients(p))
    return out, EXIT_OK


def _auto_spectrum(s: Spectrum):
    for solver in (stable_from_spectrum, holtz_from_spectrum, bebiano_from_spectrum):
        try:
            return solver(s)
        except PreconditionFailed:
            continue
    return general_from_spectrum(s)


def cmd_to_schwarz(obj, args) -> tuple[dict, int]:
    mode = args.mode
    if isinstance(obj, Spectrum):
        solvers = {
            "auto": _auto_spectrum, "general": general_from_spectrum,
            "stable": stable_from_spectrum, "holtz": holtz_from_spectrum,
            "bebiano": bebiano_from_spectrum, "sn": lambda s: sn_from_spectrum(s, args.flavor),
        }
    elif isinstance(obj, Poly):
        solvers = {"auto": schwarz_from_polynomial, "general": schwarz_from_polynomial,
                   "sn": lambda p: sn_from_polynomial(p, args.flavor)}
    else:
        raise CliError(EXIT_PARSE, "to-schwarz expects a polynomial or a spectrum")
    if mode not in solvers:
        raise CliError(EXIT_PRECONDITION, f"mode {mode!r} needs a spectrum as input")
    return jsonio.to_json(solvers[mode](obj)), EXIT_OK


def cmd_charpoly(obj, args) -> tuple[dict, int]:
    J = _as_matrix(obj)
    p = charpoly(J)
    try:
        verdict = classify(p)
    except DegenerateHurwitz:
        verdict = NOT_CLASSIFIED
    return {"charpoly": jsonio.to_json(p), "verdict": jsonio.to_json(verdict),
            "sign_pattern_verdict": jsonio.to_json(classify_by_sign_pattern(J)),
            "rhp_count": rhp_count_by_signs(J)}, EXIT_OK


def _verify_matrix(J: SchwarzMatrix, checks: list) -> None:
    p = charpoly(J)
    again = schwarz_from_polynomial(p)
    checks.append(("matrix recovered from its charpoly", again.b == J.b))
    eig = oracle.eigenvalues(J)
    rts = oracle.roots(p)
    checks.append(("eigenvalues match charpoly roots", oracle.match_error(eig.roots, rts.roots) <= 1e-6))
    lhp, rhp, boundary = oracle.half_plane_counts(rts)
    if boundary == 0:
        checks.append(("negative products = right half-plane roots", rhp_count_by_signs(J) == rhp))
    signs = classify_by_sign_pattern(J)
    if signs != NOT_CLASSIFIED:
        checks.append(("sign pattern and determinant verdicts agree", signs.key() == again.verdict.key()))


def cmd_verify(obj, args) -> tuple[dict, int]:
    checks: list = []
    if isinstance(obj, Spectrum):
        report = _auto_spectrum(obj)
        J = report.matrix
        checks.append(("charpoly equals product over roots", charpoly(J) == from_roots(obj)
                       if obj.exact else all(ok for _, ok in report.checked)))
        err = oracle.match_error(oracle.eigenvalues(J).roots, obj.as_complex())
        checks.append(("eigenvalues match the input spectrum", err <= 1e-6))
    elif isinstance(obj, Poly):
        J = schwarz_from_polynomial(obj).matrix
    else:
        J = _as_matrix(obj)
    _verify_matrix(J, checks)
    ok = all(passed for _, passed in checks)
    out = {"result": "PASS" if ok else "FAIL", "matrix": jsonio.to_json(J),
           "checked": [{"name": n, "passed": bool(v)} for n, v in checks]}
    return out, EXIT_OK if ok else EXIT_FAIL


COMMANDS = {"analyze": cmd_analyze, "to-schwarz": cmd_to_schwarz, "charpoly": cmd_charpoly,
            "verify": cmd_verify}


# ---------------------------------------------------------------- plumbing

def _nested(v) -> bool:
    if isinstance(v, dict):
        return any(isinstance(x, (dict, list)) for x in v.values()) or len(v) > 3
    return isinstance(v, list) and any(isinstance(x, dict) for x in v)


def _plain(value, indent: int = 0) -> list[str]:
    """Aligned ``key  value`` lines, nesting only where a value has structure of its own."""
    pad = "  " * indent
    if isinstance(value, list):
        lines = []
        for v in value:
            lines.extend(_plain(v, indent) if _nested(v) else [f"{pad}- {_inline(v)}"])
        return lines
    width = max((len(k) for k in value), default=0)
    lines = []
    for k, v in value.items():
        if _nested(v):
            lines.append(f"{pad}{k}:")
            lines.extend(_plain(v, indent + 1))
        else:
            lines.append(f"{pad}{k.ljust(width)}  {_inline(v)}")
    return lines


def _inline(v) -> str:
    if isinstance(v, dict):
        return ", ".join(f"{k}={_inline(x)}" for k, x in v.items())
    if isinstance(v, list):
        return "[" + ", ".join(_inline(x) for x in v) + "]"
    if v is None:
        return "-"
    return str(v)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="schwarz", description="Schwarz matrices, Hurwitz determinants and inverse spectral problems.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--backend", choices=("exact", "float"),
                        default=os.environ.get("SCHWARZ_BACKEND", "exact"))
    common.add_argument("--format", choices=("json", "plain"), default="json")
    common.add_argument("--eps-zero", type=float, default=None)
    common.add_argument("--eps-im", type=float, default=None)
    common.add_argument("input", help="JSON object, or - to read standard input")
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("analyze", parents=[common], help="Hurwitz table, RHP count, verdict, Wall coefficients")
    ts = sub.add_parser("to-schwarz", parents=[common], help="reconstruct the Schwarz matrix")
    ts.add_argument("--mode", choices=("auto", "general", "stable", "holtz", "sn", "bebiano"), default="auto")
    ts.add_argument("--flavor", choices=("gh", "almost"), default="gh")
    sub.add_parser("charpoly", parents=[common], help="characteristic polynomial and verdicts of a matrix")
    sub.add_parser("verify", parents=[common], help="round trip through matrix, charpoly and oracle")
    return ap


def run(argv=None, stdin=None) -> tuple[int, str, str]:
    """Run the CLI and return (exit code, stdout text, stderr text)."""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), "", ""
    if args.backend not in ("exact", "float"):
        return EXIT_PARSE, "", f"error: unknown backend {args.backend!r}\n"
    exact = args.backend == "exact"
    overrides = {k: v for k, v in (("eps_zero", args.eps_zero), ("eps_im", args.eps_im)) if v is not None}
    try:
        with config.tolerances(**overrides):
            text = (stdin or sys.stdin).read() if args.input == "-" else args.input
            obj = jsonio.loads(text, exact)
            out, code = COMMANDS[args.command](obj, args)
    except CliError as exc:
        return exc.code, "", f"error: {exc}\n"
    except DegenerateHurwitz as exc:
        return EXIT_DEGENERATE, "", f"error: {exc}\n"
    except (ParseError, ConjugationViolation) as exc:
        return EXIT_PARSE, "", f"error: {exc}\n"
    except SchwarzError as exc:
        return EXIT_PRECONDITION, "", f"error: {type(exc).__name__}: {exc}\n"
    except ValueError as exc:
        # tolerance overrides and other argument-level values
        return EXIT_PARSE, "", f"error: {exc}\n"
    if args.format == "json":
        body = json.dumps(out, sort_keys=True, separators=(",", ":")) + "\n"
    else:
        body = "\n".join(_plain(out)) + "\n"
    err = f"error: {out['error']}\n" if isinstance(out, dict) and out.get("error") else ""
    return code, body, err


def main(argv=None) -> int:
    code, out, err = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
