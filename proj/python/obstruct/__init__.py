"""Exact obstructions to realizing torus-knot splices by Dehn surgery."""

import json

from ._obstruct import (
    DomainError,
    ParseError,
    RangeError,
    ResourceError,
    __version__,
    builtin_goeritz,
    chi8m,
    density,
    determinant,
    em_slope,
    em_su2_cyclic,
    embed_in_complement,
    enumerate_changemakers,
    factor,
    family_2odd_2odd,
    genus_from_changemaker,
    goeritz_matrix,
    h1_order,
    in_S,
    in_Sprime,
    is_changemaker,
    is_prime,
    is_square_mod,
    jacobi,
    legendre,
    linking_self,
    product_bound,
)
from . import _obstruct


def splice_verdict(a, b, c, d, changemaker=False):
    """Verdict record for Y(T_{a,b}, T_{c,d}), as a dict."""
    return json.loads(_obstruct._splice_json(a, b, c, d, changemaker))


def census_2odd(max_product=341, jobs=1):
    return json.loads(_obstruct._census_json(max_product, jobs))


def em_report(l, m, n, p):
    return json.loads(_obstruct._em_json(l, m, n, p))


def cable_slopes(spec):
    return json.loads(_obstruct._cable_json(spec))
