"""Rational functions K = k(t) over a cyclotomic field, and the local ring R.

R is modelled as the subring of rational functions without a pole at t = 0.
It is a discrete valuation ring with uniformizer t, which is all the lattice
algorithms need; unlike k[[t]] it is not Henselian (see README).
"""

import math
from fractions import Fraction

from ..errors import DivisionByZeroError, NonIntegralError
from . import poly as P
from .cyclo import CycloNumber, residue_field


class RatFunc:
    """num/den with gcd(num, den) = 1 and den monic."""

    __slots__ = ("order", "num", "den")

    def __init__(self, order, num, den=None):
        k = residue_field(order)
        num = P.trim(tuple(k(c) for c in num))
        den = P.trim(tuple(k(c) for c in den)) if den is not None else (k.one,)
        if not den:
            raise DivisionByZeroError("rational function with zero denominator")
        self.order = order
        self.num, self.den = _canonical(num, den, k.one)

    @classmethod
    def _raw(cls, order, num, den):
        obj = object.__new__(cls)
        obj.order = order
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def constant(cls, order, c):
        c = residue_field(order)(c)
        return cls._raw(order, (c,) if c else (), (residue_field(order).one,))

    @classmethod
    def polynomial(cls, order, coeffs):
        k = residue_field(order)
        return cls._raw(order, P.trim(tuple(k(c) for c in coeffs)), (k.one,))

    # -- coercion -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction, CycloNumber)):
            return RatFunc.constant(self.order, other)
        return NotImplemented

    def _one(self):
        return residue_field(self.order).one

    # -- predicates ---------------------------------------------------------

    def __bool__(self):
        return bool(self.num)

    def is_polynomial(self):
        return len(self.den) == 1

    def is_constant(self):
        return len(self.den) == 1 and len(self.num) <= 1

    def is_integral(self):
        """True iff the element lies in R, i.e. has no pole at t = 0."""
        return bool(self.den[0])

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, CycloNumber)):
            if not self.is_constant():
                return False
            return (self.num[0] if self.num else 0) == other
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.num[0]) if self.num else hash(0)
        return hash((self.num, self.den))

    # -- valuation and reduction ---------------------------------------------

    def valuation(self):
        """t-adic valuation; +inf for zero."""
        if not self.num:
            return math.inf
        return P.order_at_zero(self.num) - P.order_at_zero(self.den)

    def at_zero(self):
        """Reduction R -> k (evaluation at t = 0)."""
        if not self.den[0]:
            raise NonIntegralError(f"{self} has a pole at t=0")
        if not self.num:
            return residue_field(self.order).zero
        return self.num[0] / self.den[0]

    def evaluate(self, t0):
        """Value at a point of k; raises if t0 is a pole."""
        k = residue_field(self.order)
        d = P.evaluate(self.den, k(t0), k.zero)
        if not d:
            raise DivisionByZeroError(f"{self} has a pole at t={t0}")
        return P.evaluate(self.num, k(t0), k.zero) / d

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            num = P.add(self.num, other.num)
            if len(self.den) == 1:
                return RatFunc._raw(self.order, num, self.den)
            return RatFunc._raw(self.order, *_canonical(num, self.den, self._one()))
        num = P.add(P.mul(self.num, other.den), P.mul(other.num, self.den))
        den = P.mul(self.den, other.den)
        return RatFunc._raw(self.order, *_canonical(num, den, self._one()))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(self.order, P.neg(self.num), self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloNumber)):
            if not other:
                return RatFunc._raw(self.order, (), self.den[:0] + (self._one(),))
            return RatFunc._raw(self.order, P.scale(self.num, other), self.den)
        if not isinstance(other, RatFunc):
            return NotImplemented
        if not self.num or not other.num:
            return RatFunc._raw(self.order, (), (self._one(),))
        if len(self.den) == 1 and len(other.den) == 1:
            return RatFunc._raw(self.order, P.mul(self.num, other.num), self.den)
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        if len(d2) > 1:
            g = P.gcd(n1, d2)
            if len(g) > 1:
                n1, d2 = P.divmod_(n1, g)[0], P.divmod_(d2, g)[0]
        if len(d1) > 1:
            g = P.gcd(n2, d1)
            if len(g) > 1:
                n2, d1 = P.divmod_(n2, g)[0], P.divmod_(d1, g)[0]
        return RatFunc._raw(self.order, P.mul(n1, n2), P.mul(d1, d2))

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise DivisionByZeroError("division by zero rational function")
        lead = self.num[-1]
        if lead == 1:
            return RatFunc._raw(self.order, self.den, self.num)
        inv = 1 / lead
        return RatFunc._raw(self.order, P.scale(self.den, inv), P.scale(self.num, inv))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, CycloNumber)):
            if not other:
                raise DivisionByZeroError("division by zero")
            return RatFunc._raw(self.order, P.scale(self.num, 1 / residue_field(self.order)(other)), self.den)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = RatFunc.constant(self.order, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- display ------------------------------------------------------------

    def __str__(self):
        n = _poly_str(self.num)
        if len(self.den) == 1:
            return n
        d = _poly_str(self.den)
        if sum(1 for c in self.num if c) > 1 or n.startswith("-"):
            n = f"({n})"
        return f"{n}/({d})"

    def __repr__(self):
        return f"RatFunc({str(self)!r})"


def _canonical(num, den, one):
    if not num:
        return (), (one,)
    if len(den) > 1:
        g = P.gcd(num, den)
        if len(g) > 1:
            num = P.divmod_(num, g)[0]
            den = P.divmod_(den, g)[0]
    lead = den[-1]
    if lead != 1:
        inv = 1 / lead
        num = P.scale(num, inv)
        den = P.scale(den, inv)
    return num, den


def _coeff_str(c):
    s = str(c)
    return f"({s})" if " " in s else s


def _poly_str(p):
    if not p:
        return "0"
    terms = []
    for k, c in enumerate(p):
        if not c:
            continue
        mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
        if not mono:
            terms.append(_coeff_str(c))
        elif c == 1:
            terms.append(mono)
        elif c == -1:
            terms.append("-" + mono)
        else:
            terms.append(f"{_coeff_str(c)}*{mono}")
    out = terms[0]
    for term in terms[1:]:
        if term.startswith("-"):
            out += " - " + term[1:]
        else:
            out += " + " + term
    return out


class FunctionField:
    """K = k(t); elements are :class:`RatFunc`. R is the subring of integral elements."""

    tag = "K"

    def __init__(self, order):
        self.order = order
        self.base = residue_field(order)
        self.zero = RatFunc.constant(order, 0)
        self.one = RatFunc.constant(order, 1)
        self.t = RatFunc.polynomial(order, (0, 1))
        self.z = RatFunc.constant(order, self.base.gen)

    def __call__(self, x):
        if isinstance(x, RatFunc):
            return x
        return RatFunc.constant(self.order, x)

    def __eq__(self, other):
        return isinstance(other, FunctionField) and other.order == self.order

    def __hash__(self):
        return hash(("K", self.order))

    def __repr__(self):
        return f"FunctionField({self.order})"
