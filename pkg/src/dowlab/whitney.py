"""Degenerate Whitney numbers, Dowling/Tanny-Dowling polynomials, r-variants.

Three independent computation routes exist for each triangle:

* the two-term recurrences (cheapest, the default),
* Newton conversion of the defining change of basis,
* coefficient extraction from the generating functions.

The identity engine and the acceptance suite compare all three entry by
entry, so none of the routes is ever trusted alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .exact import LAMBDA, LambdaPoly
from .bases import (
    XPoly,
    binom,
    int_nodes,
    lambda_falling,
    lambda_nodes,
    lambda_rising,
    newton_convert,
)
from .series import TruncatedSeries, binomial_series, deg_exp, deg_log, gf_triangle, one_series
from .stirling import (
    Family,
    Rows,
    Triangle,
    _freeze,
    deg_r_stirling1_unsigned_rows,
    deg_r_stirling2_rows,
    deg_stirling1_rows,
    deg_stirling2_rows,
    stirling1,
    stirling2,
)


@dataclass(frozen=True)
class WhitneyParams:
    """Validated (m, r) parameter pair; m is a group order, so m >= 1."""

    m: int
    r: int = 1

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"m must be a positive integer, got {self.m}")
        if self.r < 1:
            raise ValueError(f"r must be a positive integer, got {self.r}")


def _check_m(m: int) -> None:
    if m < 1:
        raise ValueError(f"m must be a positive integer, got {m}")


def _check_index(n: int, k: int) -> None:
    if n < 0 or k < 0 or k > n:
        raise IndexError(f"({n}, {k}) outside triangle")


# -- second kind -------------------------------------------------------------


@lru_cache(maxsize=None)
def whitney2_rows(m: int, n_max: int) -> Rows:
    """Second-kind triangle from the two-term recurrence."""
    _check_m(m)
    rows: list[list[LambdaPoly]] = [[LambdaPoly((1,))]]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        row = []
        for k in range(n + 1):
            acc = prev[k - 1] if k >= 1 else LambdaPoly()
            if k <= n - 1:
                acc = acc + prev[k] * (m * k + 1) - prev[k] * LAMBDA * (n - 1)
            row.append(acc)
        rows.append(row)
    return _freeze(rows)


def whitney2(m: int, n: int, k: int) -> LambdaPoly:
    _check_index(n, k)
    return whitney2_rows(m, n)[n][k]


def whitney2_or_zero(m: int, n: int, k: int) -> LambdaPoly:
    if k < 0 or k > n or n < 0:
        return LambdaPoly()
    return whitney2(m, n, k)


@lru_cache(maxsize=None)
def whitney2_rows_newton(m: int, n_max: int) -> Rows:
    """Second-kind triangle by expanding (mx+1)_{n,l} in the falling basis."""
    _check_m(m)
    rows: list[list[LambdaPoly]] = []
    prod = XPoly((1,))
    for n in range(n_max + 1):
        if n:
            prod = prod * XPoly((LambdaPoly((1, -(n - 1))), LambdaPoly.const(m)))
        coeffs = newton_convert(prod, int_nodes(n))
        rows.append([c / Fraction(m) ** k for k, c in enumerate(coeffs)])
    return _freeze(rows)


@lru_cache(maxsize=None)
def whitney2_rows_gf(m: int, n_max: int) -> Rows:
    """Second-kind triangle from the generating function e_l(t)((e_l^m(t)-1)/m)^k/k!."""
    _check_m(m)
    base = (deg_exp(m, 1, n_max) - one_series(n_max)).scaled(Fraction(1, m))
    return gf_triangle(base, deg_exp(1, 1, n_max), n_max)


# -- first kind ---------------------------------------------------------------


@lru_cache(maxsize=None)
def whitney1_rows(m: int, n_max: int) -> Rows:
    """First-kind triangle from the two-term recurrence."""
    _check_m(m)
    rows: list[list[LambdaPoly]] = [[LambdaPoly((1,))]]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        row = []
        for k in range(n + 1):
            acc = prev[k - 1] if k >= 1 else LambdaPoly()
            if k <= n - 1:
                acc = acc + prev[k] * (m - n * m - 1) + prev[k] * LAMBDA * k
            row.append(acc)
        rows.append(row)
    return _freeze(rows)


def whitney1(m: int, n: int, k: int) -> LambdaPoly:
    _check_index(n, k)
    return whitney1_rows(m, n)[n][k]


def whitney1_or_zero(m: int, n: int, k: int) -> LambdaPoly:
    if k < 0 or k > n or n < 0:
        return LambdaPoly()
    return whitney1(m, n, k)


@lru_cache(maxsize=None)
def whitney1_rows_newton(m: int, n_max: int) -> Rows:
    """First-kind triangle by Newton conversion of the defining relation.

    Substituting u = mx+1 turns m^n (x)_n into prod_j (u - (1+jm)), which
    is then expanded in the step-l falling basis of u; the coefficients are
    the first-kind numbers directly and everything stays in Q[l].
    """
    _check_m(m)
    rows: list[list[LambdaPoly]] = []
    prod = XPoly((1,))
    for n in range(n_max + 1):
        if n:
            prod = prod * XPoly((LambdaPoly.const(-(1 + (n - 1) * m)), LambdaPoly((1,))))
        rows.append(newton_convert(prod, lambda_nodes(n)))
    return _freeze(rows)


@lru_cache(maxsize=None)
def whitney1_rows_gf(m: int, n_max: int) -> Rows:
    """First-kind triangle from the generating function (log_l e_m(t))^k e_m^{-1}(t)/k!."""
    _check_m(m)
    e_m = binomial_series(Fraction(1, m), m, n_max)
    base = deg_log(n_max).compose(e_m - one_series(n_max))
    prefactor = binomial_series(Fraction(-1, m), m, n_max)
    return gf_triangle(base, prefactor, n_max)


# -- alternative explicit formulas ---------------------------------------------


def whitney2_alt(m: int, n: int, k: int, path: str) -> LambdaPoly:
    """Second-kind value by one of the alternative explicit formulas."""
    _check_m(m)
    if path == "sum_T12":
        # valid for n < k as well, where the alternating sum vanishes
        if n < 0 or k < 0:
            raise IndexError(f"({n}, {k}) outside domain")
        acc = LambdaPoly()
        for l in range(k + 1):
            sign = -1 if (k - l) % 2 else 1
            acc = acc + lambda_falling(l * m + 1, n, LAMBDA) * (sign * binom(k, l))
        return acc / (factorial(k) * Fraction(m) ** k)
    _check_index(n, k)
    if path == "stirling_T13":
        s2 = deg_stirling2_rows(n)
        acc = LambdaPoly()
        for i in range(k, n + 1):
            term = s2[i][k].scale_lambda(Fraction(1, m))
            acc = acc + term * lambda_falling(1, n - i, LAMBDA) * (binom(n, i) * m ** (i - k))
        return acc
    if path == "gf_T1":
        return whitney2_rows_gf(m, n)[n][k]
    raise ValueError(f"unknown second-kind path {path!r}")


def whitney2_diff(m: int, n: int, k: int) -> LambdaPoly:
    """Second-kind value as the kth forward difference of (mx+1)_{n,l} at x = 0."""
    _check_index(n, k)
    f = XPoly((1,))
    for j in range(n):
        f = f * XPoly((LambdaPoly((1, -j)), LambdaPoly.const(m)))
    shift = XPoly((1, 1))
    for _ in range(k):
        f = f.compose(shift) - f
    value = f.coeffs[0] if f.coeffs else LambdaPoly()
    return value / (factorial(k) * Fraction(m) ** k)


def v0(m: int, n: int) -> LambdaPoly:
    """First-kind column k = 0: (-1)^n (m+1)(2m+1)...((n-1)m+1), free of l."""
    _check_m(m)
    acc = 1
    for j in range(n):
        acc *= j * m + 1
    return LambdaPoly.const(acc if n % 2 == 0 else -acc)


def whitney1_alt(m: int, n: int, k: int, path: str) -> LambdaPoly:
    """First-kind value by one of the alternative explicit formulas."""
    _check_m(m)
    _check_index(n, k)
    if path == "quad_T8":
        s1deg = deg_stirling1_rows(n)
        acc = LambdaPoly()
        for j in range(k, n + 1):
            for l in range(k, j + 1):
                inner = LambdaPoly()
                for i in range(l, j + 1):
                    inner = inner + s1deg[i][l] * stirling2(j, i)
                sign = -1 if (l - k) % 2 else 1
                rising = lambda_rising(1, l - k, LAMBDA)
                acc = acc + rising * inner * (sign * binom(l, k) * stirling1(n, j) * m ** (n - j))
        return acc
    if path == "v0_T18":
        s1deg = deg_stirling1_rows(n)
        acc = LambdaPoly()
        for i in range(k, n + 1):
            tail = v0(m, n - i) * binom(n, i)
            inner = LambdaPoly()
            for j in range(k, i + 1):
                for l in range(k, j + 1):
                    inner = inner + s1deg[l][k] * (stirling2(j, l) * stirling1(i, j) * m ** (i - j))
            acc = acc + inner * tail
        return acc
    if path == "stirling_T19":
        s1deg = deg_stirling1_rows(n)
        acc = LambdaPoly()
        for q in range(k, n + 1):
            term = s1deg[n][q].scale_lambda(Fraction(1, m))
            sign = -1 if (q - k) % 2 else 1
            rising = lambda_rising(1, q - k, LAMBDA)
            acc = acc + term * rising * (sign * binom(q, k) * m ** (n - q))
        return acc
    if path == "gf_T5":
        return whitney1_rows_gf(m, n)[n][k]
    raise ValueError(f"unknown first-kind path {path!r}")


# -- Dowling and Tanny-Dowling polynomials ----------------------------------------


def dowling_poly(m: int, n: int, x: int | Fraction) -> LambdaPoly:
    """Row polynomial sum_k W(n,k) x^k of the second-kind triangle."""
    if n < 0:
        raise ValueError("n must be >= 0")
    rows = whitney2_rows(m, n)
    xq = Fraction(x)
    acc = LambdaPoly()
    power = Fraction(1)
    for k in range(n + 1):
        acc = acc + rows[n][k] * power
        power *= xq
    return acc


def dowling_number(m: int, n: int) -> LambdaPoly:
    return dowling_poly(m, n, 1)


def tanny_dowling_poly(m: int, n: int, x: int | Fraction) -> LambdaPoly:
    """Ordered variant sum_k k! W(n,k) x^k."""
    if n < 0:
        raise ValueError("n must be >= 0")
    rows = whitney2_rows(m, n)
    xq = Fraction(x)
    acc = LambdaPoly()
    power = Fraction(1)
    for k in range(n + 1):
        acc = acc + rows[n][k] * (power * factorial(k))
        power *= xq
    return acc


def tanny_dowling_gf(m: int, x: int | Fraction, n_max: int) -> TruncatedSeries:
    """Oracle: e_l(t) / (1 - x (e_l^m(t)-1)/m) generates the ordered polynomials."""
    base = (deg_exp(m, 1, n_max) - one_series(n_max)).scaled(Fraction(x, m))
    return deg_exp(1, 1, n_max).divide(one_series(n_max) - base, 0)


def dowling_gf(m: int, x: int | Fraction, n_max: int) -> TruncatedSeries:
    """Oracle: e_l(t) exp(x (e_l^m(t)-1)/m) generates the Dowling polynomials."""
    base = (deg_exp(m, 1, n_max) - one_series(n_max)).scaled(Fraction(x, m))
    return deg_exp(1, 1, n_max) * base.exp()


# -- r-generalizations ----------------------------------------------------------


@lru_cache(maxsize=None)
def r_whitney2_rows(m: int, r: int, n_max: int) -> Rows:
    """Second-kind r-triangle by expanding (mx+r)_{n,l} in the falling basis."""
    WhitneyParams(m, r)
    rows: list[list[LambdaPoly]] = []
    prod = XPoly((1,))
    for n in range(n_max + 1):
        if n:
            prod = prod * XPoly((LambdaPoly((r, -(n - 1))), LambdaPoly.const(m)))
        coeffs = newton_convert(prod, int_nodes(n))
        rows.append([c / Fraction(m) ** k for k, c in enumerate(coeffs)])
    return _freeze(rows)


def r_whitney2(m: int, r: int, n: int, k: int) -> LambdaPoly:
    _check_index(n, k)
    return r_whitney2_rows(m, r, n)[n][k]


@lru_cache(maxsize=None)
def r_whitney1_rows(m: int, r: int, n_max: int) -> Rows:
    """First-kind r-triangle via the substitution u = mx+r (stays in Q[l])."""
    WhitneyParams(m, r)
    rows: list[list[LambdaPoly]] = []
    prod = XPoly((1,))
    for n in range(n_max + 1):
        if n:
            prod = prod * XPoly((LambdaPoly.const(-(r + (n - 1) * m)), LambdaPoly((1,))))
        rows.append(newton_convert(prod, lambda_nodes(n)))
    return _freeze(rows)


def r_whitney1(m: int, r: int, n: int, k: int) -> LambdaPoly:
    _check_index(n, k)
    return r_whitney1_rows(m, r, n)[n][k]


@lru_cache(maxsize=None)
def r_whitney1_rows_direct(m: int, r: int, n_max: int) -> Rows:
    """Cross-check route without the u-substitution: convert m^n (x)_n over the
    rational-in-l nodes (j*l - r)/m and rescale by m^k afterwards."""
    WhitneyParams(m, r)
    rows: list[list[LambdaPoly]] = []
    prod = XPoly((1,))
    for n in range(n_max + 1):
        if n:
            prod = prod * XPoly((LambdaPoly.const(-(n - 1) * m), LambdaPoly.const(m)))
        nodes = [(LAMBDA * j - r) / Fraction(m) for j in range(n)]
        coeffs = newton_convert(prod, nodes)
        rows.append([c / Fraction(m) ** k for k, c in enumerate(coeffs)])
    return _freeze(rows)


def r_whitney2_rows_gf(m: int, r: int, n_max: int) -> Rows:
    """Oracle: coefficients of ((e_l^m(t)-1)/m)^k e_l^r(t) / k!."""
    WhitneyParams(m, r)
    base = (deg_exp(m, 1, n_max) - one_series(n_max)).scaled(Fraction(1, m))
    return gf_triangle(base, deg_exp(r, 1, n_max), n_max)


def r_whitney1_rows_gf(m: int, r: int, n_max: int) -> Rows:
    """Oracle: coefficients of (log_l e_m(t))^k e_m^{-r}(t) / k!."""
    WhitneyParams(m, r)
    e_m = binomial_series(Fraction(1, m), m, n_max)
    base = deg_log(n_max).compose(e_m - one_series(n_max))
    prefactor = binomial_series(Fraction(-r, m), m, n_max)
    return gf_triangle(base, prefactor, n_max)


# -- classical limits (plain rationals, no l) --------------------------------------


@lru_cache(maxsize=None)
def classical_whitney2_rows(m: int, n_max: int) -> tuple[tuple[Fraction, ...], ...]:
    """Classical second-kind numbers from (mx+1)^n = sum W m^k (x)_k over Q."""
    _check_m(m)
    rows = []
    base = XPoly((LambdaPoly((1,)), LambdaPoly.const(m)))
    prod = XPoly((1,))
    for n in range(n_max + 1):
        if n:
            prod = prod * base
        coeffs = newton_convert(prod, int_nodes(n))
        rows.append(tuple(c.constant() / Fraction(m) ** k for k, c in enumerate(coeffs)))
    return tuple(rows)


@lru_cache(maxsize=None)
def classical_whitney1_rows(m: int, n_max: int) -> tuple[tuple[Fraction, ...], ...]:
    """Classical first-kind numbers: m^n (x)_n in powers of u = mx+1 over Q."""
    _check_m(m)
    rows = []
    prod = XPoly((1,))
    for n in range(n_max + 1):
        if n:
            prod = prod * XPoly((LambdaPoly.const(-(1 + (n - 1) * m)), LambdaPoly((1,))))
        rows.append(tuple(c.constant() for c in prod.coeffs))
    return tuple(rows)


# -- Dobinski evaluation (the library's only inexact path) --------------------------


@dataclass(frozen=True)
class DobinskiRequest:
    """Parameters of one truncated Dobinski-series evaluation."""

    m: int
    n: int
    x: Fraction
    lam: Fraction
    terms: int = 200
    tol: float = 1e-9

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError("m must be a positive integer")
        if self.n < 0:
            raise ValueError("n must be >= 0")
        if self.terms < 1:
            raise ValueError("terms must be >= 1")
        if self.tol <= 0:
            raise ValueError("tol must be positive")


def _exp_rational(z: Fraction) -> Fraction:
    """Taylor approximation of exp(z) over Q, far below double-ulp resolution."""
    acc = Fraction(0)
    term = Fraction(1)
    j = 0
    while j < 500:
        acc += term
        j += 1
        term = term * z / j
        if abs(term) < Fraction(1, 10**60) and j > abs(z) * 2:
            break
    return acc


def dobinski_eval(req: DobinskiRequest) -> tuple[float, float]:
    """Truncated exponential series for the Dowling polynomial vs the exact value.

    Returns (truncated, exact), both as floats.  The truncated side runs in
    exact rationals (weights updated multiplicatively, never a bare
    factorial) and rounds once at the end: near values around 1e7 a single
    double ulp already exceeds 1e-9, so float accumulation could not honor
    the advertised tolerance.  Truncation of the series is the only
    approximation left.
    """
    m, n = req.m, req.n
    x = Fraction(req.x)
    lam = Fraction(req.lam)
    weight = Fraction(1)
    total = Fraction(0)
    for k in range(req.terms):
        base = Fraction(m * k + 1)
        prod = Fraction(1)
        for j in range(n):
            prod *= base - j * lam
        total += weight * prod
        weight *= x / (m * (k + 1))
    truncated = float(_exp_rational(-x / Fraction(m)) * total)
    exact = float(dowling_poly(m, n, req.x).eval(req.lam))
    return truncated, exact


# -- triangle export ------------------------------------------------------------


def build_triangle(family: Family | str, m: int, r: int, n_max: int) -> Triangle:
    """Materialize one family as an immutable Triangle (primary route each)."""
    family = Family(family)
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    used_m, used_r = 1, 0
    if family is Family.S1:
        rows = _freeze(
            [[LambdaPoly.const(stirling1(n, k)) for k in range(n + 1)] for n in range(n_max + 1)]
        )
    elif family is Family.S2:
        rows = _freeze(
            [[LambdaPoly.const(stirling2(n, k)) for k in range(n + 1)] for n in range(n_max + 1)]
        )
    elif family is Family.S1DEG:
        rows = deg_stirling1_rows(n_max)
    elif family is Family.S2DEG:
        rows = deg_stirling2_rows(n_max)
    elif family is Family.S1DEG_R:
        used_r = _check_r_nonneg(r)
        rows = deg_r_stirling1_unsigned_rows(r, n_max)
    elif family is Family.S2DEG_R:
        used_r = _check_r_nonneg(r)
        rows = deg_r_stirling2_rows(r, n_max)
    elif family is Family.WDEG:
        used_m = m
        rows = whitney2_rows(m, n_max)
    elif family is Family.VDEG:
        used_m = m
        rows = whitney1_rows(m, n_max)
    elif family is Family.WDEG_R:
        used_m, used_r = m, r
        rows = r_whitney2_rows(m, r, n_max)
    elif family is Family.VDEG_R:
        used_m, used_r = m, r
        rows = r_whitney1_rows(m, r, n_max)
    else:  # pragma: no cover - Family() already rejects unknown names
        raise ValueError(f"unknown family {family!r}")
    return Triangle(family=family, m=used_m, r=used_r, n_max=n_max, rows=rows)


def _check_r_nonneg(r: int) -> int:
    if r < 0:
        raise ValueError("r must be >= 0 for r-Stirling families")
    return r
