"""Exact log-concavity checks, sparse sum-of-products bounds and lifted geometry.

Coefficients travel as strings in the grammar ``INT``, ``INT/INT``, ``2^INT``
or ``INT/INT*2^INT``. Points are ``(x, r, tau_halves)`` tuples. Reports come
back as dictionaries.
"""

import json

from . import _core
from ._core import (
    CapExceeded,
    DegreeTooSmall,
    Error,
    ExponentOverflow,
    FatalInconsistency,
    ParseError,
    PreconditionFailed,
    ResourceLimit,
    ShapeError,
    ZeroPolynomial,
    check_g,
    convex_hull_vertices,
    expand as _expand,
    gen_f,
    gen_g,
    gen_h,
    is_convexly_independent,
    max_convex_chain,
    minkowski_sum,
    mul,
    normalize_coefficient,
    orientation,
    run_cli,
    sturm_distinct_real_roots,
    upper_envelope,
)


def _doc(sps):
    return sps if isinstance(sps, str) else json.dumps(sps)


def _coeffs(cs):
    return [str(c) for c in cs]


def check_newton(coeffs):
    return json.loads(_core.check_newton(_coeffs(coeffs)))


def check_kurtz(coeffs):
    return json.loads(_core.check_kurtz(_coeffs(coeffs)))


def check_tau(coeffs, tau):
    return json.loads(_core.check_tau(_coeffs(coeffs), str(tau)))


def check_strong(coeffs):
    return json.loads(_core.check_strong(_coeffs(coeffs)))


def expand(sps):
    return _expand(_doc(sps))


def params(sps):
    return json.loads(_core.params(_doc(sps)))


def verify_theorem2(sps):
    return json.loads(_core.verify_theorem2(_doc(sps)))


def sparse_factor_witness(sps):
    return json.loads(_core.sparse_factor_witness(_doc(sps)))


def build_lifting(sps, tau="4"):
    return json.loads(_core.build_lifting(_doc(sps), str(tau)))


def verify_lifting(sps, tau="4"):
    return json.loads(_core.verify_lifting(_doc(sps), str(tau)))


def split_products(sps):
    return json.loads(_core.split_products(_doc(sps)))


def bounds_report(sps):
    return json.loads(_core.bounds_report(_doc(sps)))


def verify_substitution_identity(n):
    return json.loads(_core.verify_substitution_identity(n))
