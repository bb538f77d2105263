"""Scalar tower k = Q(zeta_n) inside R inside K = k(t), plus k[t]/t^N."""

from .cyclo import CycloNumber, CyclotomicField, cyclotomic_polynomial, euler_phi, residue_field
from .parse import parse_scalar
from .ratfunc import FunctionField, RatFunc
from .series import TruncatedSeries


def reduce_at_zero(x):
    """The residue map R -> k."""
    return x.at_zero()


def valuation(x):
    """t-adic valuation of a RatFunc (math.inf for zero)."""
    return x.valuation()


__all__ = [
    "CycloNumber", "CyclotomicField", "FunctionField", "RatFunc", "TruncatedSeries",
    "cyclotomic_polynomial", "euler_phi", "parse_scalar", "reduce_at_zero", "residue_field", "valuation",
]
