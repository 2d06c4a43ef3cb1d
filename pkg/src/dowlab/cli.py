"""Command-line front end: triangle export, evaluation, verification, Dobinski.

Exit codes: 0 success, 1 identity failure (or Dobinski outside tolerance),
2 usage error.  Output goes to stdout unless --out is given, in which case
the file is written atomically (temp file + rename).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exact import LambdaPoly
from .stirling import Family
from .whitney import DobinskiRequest, build_triangle, dobinski_eval
from .identities import CATALOG, all_passed, report_document, run_identity, verify_all

FAMILY_ALIASES = {
    "W": Family.WDEG,
    "V": Family.VDEG,
    "WR": Family.WDEG_R,
    "VR": Family.VDEG_R,
}

FORMATS = ("csv", "json", "latex")


@dataclass
class CliConfig:
    """Validated arguments of one CLI invocation."""

    command: str
    family: Optional[Family] = None
    m: int = 1
    r: int = 1
    n_max: int = 0
    lam: Optional[Fraction] = None  # None means symbolic
    x: Optional[Fraction] = None
    fmt: str = "csv"
    seed: int = 0
    terms: int = 200
    tol: float = 1e-9
    out: Optional[str] = None
    ident: Optional[str] = None
    n: int = 0
    k: int = 0
    poly: Optional[str] = None
    m_set: tuple[int, ...] = (1, 2, 3)
    r_set: tuple[int, ...] = (1, 2, 3)


class UsageError(Exception):
    pass


def _parse_family(text: str) -> Family:
    if text in FAMILY_ALIASES:
        return FAMILY_ALIASES[text]
    try:
        return Family(text)
    except ValueError:
        names = ", ".join([f.value for f in Family] + list(FAMILY_ALIASES))
        raise UsageError(f"unknown family {text!r}; choose one of: {names}")


def _parse_rational(text: str, what: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"{what} must be a rational like 3 or -1/4, got {text!r}")


def _parse_int_set(text: str, what: str) -> tuple[int, ...]:
    try:
        values = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise UsageError(f"{what} must be a comma-separated integer list, got {text!r}")
    if not values:
        raise UsageError(f"{what} must not be empty")
    return values


def latex_poly(text: str) -> str:
    """Canonical grammar -> LaTeX body; inverse of latex_poly_inverse."""
    return text.replace("l", "\\lambda")


def latex_poly_inverse(text: str) -> str:
    return text.replace("\\lambda", "l")


def _entry_strings(cfg: CliConfig) -> list[list[str]]:
    triangle = build_triangle(cfg.family, cfg.m, cfg.r, cfg.n_max)
    rows = []
    for n in range(cfg.n_max + 1):
        row = []
        for k in range(n + 1):
            value = triangle.value(n, k)
            if cfg.lam is None:
                row.append(str(value))
            else:
                row.append(str(value.eval(cfg.lam)))
        rows.append(row)
    return rows


def _render_triangle(cfg: CliConfig) -> str:
    rows = _entry_strings(cfg)
    if cfg.fmt == "csv":
        return "\n".join(", ".join(row) for row in rows) + "\n"
    if cfg.fmt == "latex":
        return "\n".join(" & ".join(latex_poly(e) for e in row) + r" \\" for row in rows) + "\n"
    document = {
        "family": cfg.family.value,
        "m": cfg.m,
        "r": cfg.r,
        "lambda": "symbolic" if cfg.lam is None else str(cfg.lam),
        "n_max": cfg.n_max,
        "rows": rows,
    }
    return json.dumps(document, indent=2) + "\n"


def _write_output(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(out))
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".dowlab-")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp_path, out)
    except BaseException:
        if os.path.exists(tmp_path):
            os.unlink(tmp_path)
        raise


# -- subcommands --------------------------------------------------------------


def cmd_triangle(cfg: CliConfig) -> int:
    _write_output(_render_triangle(cfg), cfg.out)
    return 0


def cmd_eval(cfg: CliConfig) -> int:
    if cfg.poly is not None:
        try:
            value = LambdaPoly.parse(cfg.poly)
        except ValueError as exc:
            raise UsageError(str(exc))
    else:
        triangle = build_triangle(cfg.family, cfg.m, cfg.r, max(cfg.n, 0))
        try:
            value = triangle.value(cfg.n, cfg.k)
        except IndexError as exc:
            raise UsageError(str(exc))
    text = str(value) if cfg.lam is None else str(value.eval(cfg.lam))
    _write_output(text + "\n", cfg.out)
    return 0


def cmd_verify(cfg: CliConfig) -> int:
    if cfg.ident is not None:
        if cfg.ident not in CATALOG:
            raise UsageError(f"unknown identity id {cfg.ident!r}")
        reports = [run_identity(cfg.ident, cfg.n_max, cfg.m_set, cfg.r_set, cfg.seed)]
    else:
        reports = verify_all(cfg.n_max, cfg.m_set, cfg.r_set, cfg.seed)
    document = report_document(reports, cfg.n_max, cfg.m_set, cfg.r_set, cfg.seed)
    _write_output(json.dumps(document, indent=2) + "\n", cfg.out)
    return 0 if all_passed(reports) else 1


def cmd_dobinski(cfg: CliConfig) -> int:
    request = DobinskiRequest(
        m=cfg.m, n=cfg.n, x=cfg.x, lam=cfg.lam, terms=cfg.terms, tol=cfg.tol
    )
    truncated, exact = dobinski_eval(request)
    diff = abs(truncated - exact)
    ok = diff < cfg.tol
    if cfg.fmt == "json":
        line = json.dumps(
            {
                "truncated": truncated,
                "exact": exact,
                "diff": diff,
                "tol": cfg.tol,
                "status": "pass" if ok else "fail",
            }
        )
    else:
        status = "pass" if ok else "fail"
        line = f"truncated={truncated!r} exact={exact!r} diff={diff:.3e} tol={cfg.tol:g} {status}"
    _write_output(line + "\n", cfg.out)
    return 0 if ok else 1


# -- argument parsing -----------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dowlab",
        description="Exact degenerate Whitney/Stirling/Dowling number toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    tri = sub.add_parser("triangle", help="export one triangle family")
    tri.add_argument("--family", required=True)
    tri.add_argument("--m", type=int, default=1)
    tri.add_argument("--r", type=int, default=1)
    tri.add_argument("--n-max", type=int, required=True)
    tri.add_argument("--lambda", dest="lam", default=None, metavar="Q")
    tri.add_argument("--symbolic", action="store_true")
    tri.add_argument("--format", choices=FORMATS, default="csv")
    tri.add_argument("--out", default=None)

    ev = sub.add_parser("eval", help="evaluate a polynomial or a triangle entry")
    ev.add_argument("--poly", default=None, help="polynomial in the canonical grammar")
    ev.add_argument("--family", default=None)
    ev.add_argument("--m", type=int, default=1)
    ev.add_argument("--r", type=int, default=1)
    ev.add_argument("--n", type=int, default=0)
    ev.add_argument("--k", type=int, default=0)
    ev.add_argument("--lambda", dest="lam", default=None, metavar="Q")
    ev.add_argument("--symbolic", action="store_true")
    ev.add_argument("--out", default=None)

    ver = sub.add_parser("verify", help="run the identity catalog")
    ver.add_argument("--id", dest="ident", default=None)
    ver.add_argument("--n-max", type=int, default=8)
    ver.add_argument("--m-set", default="1,2,3")
    ver.add_argument("--r-set", default="1,2,3")
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--out", default=None)

    dob = sub.add_parser("dobinski", help="truncated series vs exact Dowling value")
    dob.add_argument("--m", type=int, required=True)
    dob.add_argument("--n", type=int, required=True)
    dob.add_argument("--x", required=True)
    dob.add_argument("--lambda", dest="lam", required=True, metavar="Q")
    dob.add_argument("--terms", type=int, default=200)
    dob.add_argument("--tol", type=float, default=1e-9)
    dob.add_argument("--format", choices=("text", "json"), default="text")
    dob.add_argument("--out", default=None)

    return parser


def _config_from_args(args: argparse.Namespace) -> CliConfig:
    cfg = CliConfig(command=args.command)
    cfg.out = getattr(args, "out", None)
    if args.command == "triangle":
        cfg.family = _parse_family(args.family)
        cfg.m, cfg.r, cfg.n_max = args.m, args.r, args.n_max
        cfg.fmt = args.format
        if args.n_max < 0:
            raise UsageError("--n-max must be >= 0")
        if args.lam is not None and args.symbolic:
            raise UsageError("--lambda and --symbolic are mutually exclusive")
        cfg.lam = None if args.lam is None else _parse_rational(args.lam, "--lambda")
    elif args.command == "eval":
        if (args.poly is None) == (args.family is None):
            raise UsageError("eval needs exactly one of --poly or --family")
        cfg.poly = args.poly
        if args.family is not None:
            cfg.family = _parse_family(args.family)
            cfg.m, cfg.r, cfg.n, cfg.k = args.m, args.r, args.n, args.k
        if args.lam is not None and args.symbolic:
            raise UsageError("--lambda and --symbolic are mutually exclusive")
        cfg.lam = None if args.lam is None else _parse_rational(args.lam, "--lambda")
    elif args.command == "verify":
        cfg.ident = args.ident
        cfg.n_max = args.n_max
        cfg.seed = args.seed
        cfg.m_set = _parse_int_set(args.m_set, "--m-set")
        cfg.r_set = _parse_int_set(args.r_set, "--r-set")
        if cfg.n_max < 0:
            raise UsageError("--n-max must be >= 0")
    elif args.command == "dobinski":
        cfg.m, cfg.n = args.m, args.n
        cfg.x = _parse_rational(args.x, "--x")
        if args.lam == "symbolic":
            raise UsageError("dobinski needs a numeric --lambda")
        cfg.lam = _parse_rational(args.lam, "--lambda")
        cfg.terms, cfg.tol, cfg.fmt = args.terms, args.tol, args.format
        if cfg.terms < 1:
            raise UsageError("--terms must be >= 1")
        if cfg.tol <= 0:
            raise UsageError("--tol must be positive")
    return cfg


COMMANDS = {
    "triangle": cmd_triangle,
    "eval": cmd_eval,
    "verify": cmd_verify,
    "dobinski": cmd_dobinski,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = _config_from_args(args)
        return COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except (ValueError, IndexError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
