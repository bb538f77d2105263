"""Polynomial factorization over k = Q(zeta_n) and K = k(t), delegated to sympy.

Only the conversion layer lives here; the factoring itself is sympy's.
"""

from fractions import Fraction
from functools import lru_cache

import sympy

from .scalars import CycloNumber, RatFunc, euler_phi, residue_field
from .scalars import poly as P

_X, _T = sympy.symbols("x t")


@lru_cache(maxsize=None)
def _domain(order):
    if euler_phi(order) == 1:
        return sympy.QQ, None
    F = sympy.QQ.cyclotomic_field(order)
    return F, F.ext.as_expr()


def _cyclo_to_sympy(c, order):
    z = _domain(order)[1]
    expr = sympy.Integer(0)
    for i, a in enumerate(c.coeffs):
        if a:
            term = sympy.Rational(a.numerator, a.denominator)
            expr += term if i == 0 else term * z ** i
    return expr


def _mpq(q):
    return Fraction(int(q.numerator), int(q.denominator))


def _from_domain(a, order):
    """Convert an element of the sympy domain back to a CycloNumber."""
    if _domain(order)[1] is None:
        return CycloNumber(order, (_mpq(a),))
    rep = a.rep
    rep = rep.to_list() if hasattr(rep, "to_list") else list(rep)
    return CycloNumber(order, tuple(_mpq(q) for q in reversed(rep)))


def factor_over_k(coeffs, order):
    """Monic irreducible factors of a polynomial over Q(zeta_n).

    ``coeffs`` are CycloNumbers, constant term first. Returns a list of
    (factor, multiplicity) with each factor a tuple of CycloNumbers, constant
    term first, sorted by (degree, coefficients) for determinism.
    """
    F, z = _domain(order)
    expr = sum((_cyclo_to_sympy(c, order) * _X ** i for i, c in enumerate(coeffs) if c), sympy.Integer(0))
    _, facs = sympy.Poly(expr, _X, domain=F).factor_list()
    out = []
    for p, m in facs:
        cs = [_from_domain(c, order) for c in reversed(p.rep.to_list())]
        cs = P.monic(tuple(cs))
        out.append((cs, int(m)))
    out.sort(key=lambda fm: (len(fm[0]), [c.sort_key() for c in fm[0]]))
    return out


def roots_over_k(coeffs, order):
    """Roots with multiplicity; the second value lists any nonlinear factors."""
    roots, rest = [], []
    for f, m in factor_over_k(coeffs, order):
        if len(f) == 2:
            roots.append((-f[0], m))
        else:
            rest.append((f, m))
    return roots, rest


def _ratfunc_to_sympy(x):
    num = sum((_cyclo_to_sympy(c, x.order) * _T ** i for i, c in enumerate(x.num) if c), sympy.Integer(0))
    den = sum((_cyclo_to_sympy(c, x.order) * _T ** i for i, c in enumerate(x.den) if c), sympy.Integer(0))
    return num, den


def factor_over_K(coeffs, order):
    """Monic irreducible factors over K = Q(zeta_n)(t) of a polynomial with RatFunc coefficients."""
    F = _domain(order)[0]
    parts = [_ratfunc_to_sympy(c) if c else (sympy.Integer(0), sympy.Integer(1)) for c in coeffs]
    common = sympy.Integer(1)
    for _, d in parts:
        common = sympy.lcm(common, d)
    expr = sympy.Integer(0)
    for i, (n, d) in enumerate(parts):
        if n != 0:
            expr += sympy.cancel(n * common / d) * _X ** i
    expr = sympy.expand(expr)
    _, facs = sympy.Poly(expr, _X, _T, domain=F).factor_list()
    out = []
    for p, m in facs:
        if p.degree(_X) == 0:
            continue
        deg = p.degree(_X)
        cs = []
        for i in range(deg + 1):
            tpoly = [residue_field(order).zero] * (p.degree(_T) + 1)
            for (ix, it), c in p.rep.to_dict().items():
                if ix == i:
                    tpoly[it] = _from_domain(c, order)
            cs.append(RatFunc(order, tpoly))
        lead = cs[-1]
        cs = tuple(c / lead for c in cs)
        out.append((cs, int(m)))
    out.sort(key=lambda fm: (len(fm[0]), str(fm[0])))
    return out


def roots_over_K(coeffs, order):
    roots, rest = [], []
    for f, m in factor_over_K(coeffs, order):
        if len(f) == 2:
            roots.append((-f[0], m))
        else:
            rest.append((f, m))
    return roots, rest
