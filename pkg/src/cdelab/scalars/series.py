"""Truncated power series k[t]/t^N."""

import math

from ..errors import NonIntegralError
from . import poly as P
from .cyclo import residue_field


class TruncatedSeries:
    """A residue in k[t]/t^N; ``coeffs`` always has length N."""

    __slots__ = ("order", "precision", "coeffs")

    def __init__(self, order, precision, coeffs=()):
        if precision < 1:
            raise ValueError("precision must be positive")
        k = residue_field(order)
        cs = [k(c) for c in coeffs[:precision]]
        cs += [k.zero] * (precision - len(cs))
        self.order = order
        self.precision = precision
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, order, precision, coeffs):
        obj = object.__new__(cls)
        obj.order, obj.precision, obj.coeffs = order, precision, coeffs
        return obj

    @classmethod
    def from_ratfunc(cls, x, precision):
        """Expand an R-integral rational function to precision N."""
        if not x.is_integral():
            raise NonIntegralError(f"{x} has a pole at t=0")
        k = residue_field(x.order)
        num = list(x.num[:precision]) + [k.zero] * max(0, precision - len(x.num))
        den = x.den
        inv0 = 1 / den[0]
        out = []
        # long division of power series: num = den * out
        for i in range(precision):
            c = num[i]
            for j in range(1, min(i, len(den) - 1) + 1):
                c = c - den[j] * out[i - j]
            out.append(c * inv0)
        return cls._raw(x.order, precision, tuple(out))

    def _like(self, coeffs):
        return TruncatedSeries._raw(self.order, self.precision, tuple(coeffs))

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            if other.precision != self.precision:
                n = min(self.precision, other.precision)
                raise ValueError(f"precision mismatch ({self.precision} vs {other.precision}); truncate to {n} first")
            return other
        from .ratfunc import RatFunc

        if isinstance(other, RatFunc):
            return TruncatedSeries.from_ratfunc(other, self.precision)
        return TruncatedSeries(self.order, self.precision, (other,))

    def truncate(self, n):
        return TruncatedSeries._raw(self.order, n, self.coeffs[:n]) if n <= self.precision else \
            TruncatedSeries(self.order, n, self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            try:
                other = self._coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.precision == other.precision and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.precision, self.coeffs))

    def __add__(self, other):
        other = self._coerce(other)
        return self._like(a + b for a, b in zip(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return self._like(-a for a in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        return self._like(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        n = self.precision
        out = list(P.mul(self.coeffs, other.coeffs)[:n])
        out += [residue_field(self.order).zero] * (n - len(out))
        return self._like(out)

    __rmul__ = __mul__

    def valuation(self):
        """Order of vanishing at t = 0; +inf when the residue is zero."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return math.inf

    def at_zero(self):
        return self.coeffs[0]

    def __repr__(self):
        terms = [f"({c})*t^{i}" for i, c in enumerate(self.coeffs) if c]
        return f"TruncatedSeries({' + '.join(terms) or '0'} + O(t^{self.precision}))"
