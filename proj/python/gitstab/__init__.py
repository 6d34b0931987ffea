"""Exact GIT stability of multidegree divisors in products of projective spaces.

The heavy lifting happens in the compiled extension; this package re-exports
its functions. All arithmetic is exact: rationals cross the boundary as
"p/q" strings and weights as plain integers.
"""

from gitstab._core import (
    ValidationError,
    InternalError,
    ann,
    centroid,
    centroid_verdict,
    check_support_json,
    classify_json,
    destabilizing_subgroup,
    fundamental_set,
    monomials,
    mu,
    mu_raw,
    n_oplus,
    n_plus,
    normalize,
    pairing,
    plot_svg,
)

__all__ = [
    "ValidationError",
    "InternalError",
    "ann",
    "centroid",
    "centroid_verdict",
    "check_support_json",
    "classify_json",
    "destabilizing_subgroup",
    "fundamental_set",
    "monomials",
    "mu",
    "mu_raw",
    "n_oplus",
    "n_plus",
    "normalize",
    "pairing",
    "plot_svg",
]

__version__ = "0.1.0"
