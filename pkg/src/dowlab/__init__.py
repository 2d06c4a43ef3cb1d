"""Exact arithmetic for degenerate Whitney, Stirling, Dowling, Bernoulli and
Euler number families, with an identity engine that cross-checks every
family along independent computation routes."""

from .exact import LAMBDA, LambdaPoly, Rational
from .bases import (
    NodeSequence,
    XPoly,
    basis_poly,
    binom,
    gen_binom,
    lambda_falling,
    lambda_rising,
    newton_convert,
)
from .series import (
    TruncatedSeries,
    binomial_series,
    deg_exp,
    deg_log,
    gf_triangle,
    one_series,
    t_series,
)
from .stirling import (
    Family,
    Triangle,
    deg_bell,
    deg_bell_number,
    deg_r_stirling1_unsigned,
    deg_r_stirling2,
    deg_stirling1,
    deg_stirling2,
    stirling1,
    stirling2,
)
from .whitney import (
    DobinskiRequest,
    WhitneyParams,
    build_triangle,
    dobinski_eval,
    dowling_number,
    dowling_poly,
    r_whitney1,
    r_whitney2,
    tanny_dowling_poly,
    whitney1,
    whitney1_alt,
    whitney2,
    whitney2_alt,
)
from .bernoulli_euler import deg_bernoulli, deg_bernoulli_gf, deg_euler
from .identities import (
    CATALOG,
    IdentityReport,
    all_passed,
    report_document,
    run_identity,
    verify_all,
)

__version__ = "0.1.0"

__all__ = [
    "CATALOG",
    "DobinskiRequest",
    "Family",
    "IdentityReport",
    "LAMBDA",
    "LambdaPoly",
    "NodeSequence",
    "Rational",
    "Triangle",
    "TruncatedSeries",
    "WhitneyParams",
    "XPoly",
    "all_passed",
    "basis_poly",
    "binom",
    "binomial_series",
    "build_triangle",
    "deg_bell",
    "deg_bell_number",
    "deg_bernoulli",
    "deg_bernoulli_gf",
    "deg_euler",
    "deg_exp",
    "deg_log",
    "deg_r_stirling1_unsigned",
    "deg_r_stirling2",
    "deg_stirling1",
    "deg_stirling2",
    "dobinski_eval",
    "dowling_number",
    "dowling_poly",
    "gen_binom",
    "gf_triangle",
    "lambda_falling",
    "lambda_rising",
    "newton_convert",
    "one_series",
    "r_whitney1",
    "r_whitney2",
    "report_document",
    "run_identity",
    "stirling1",
    "stirling2",
    "t_series",
    "tanny_dowling_poly",
    "verify_all",
    "whitney1",
    "whitney1_alt",
    "whitney2",
    "whitney2_alt",
]
