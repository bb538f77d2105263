"""Exact arithmetic in cyclotomic fields Q(zeta_n).

An element is stored as its unique representative of degree < phi(n) modulo the
n-th cyclotomic polynomial, with :class:`fractions.Fraction` coefficients.
"""

from fractions import Fraction
from functools import lru_cache

from ..errors import DivisionByZeroError, InputError

MAX_PHI = 16


def _int_poly_divexact(num, den):
    """Exact division of integer polynomials (low degree first, den monic)."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1]
        q[i] = c
        if c:
            for k, d in enumerate(den):
                num[i + k] -= c * d
    assert not any(num), "inexact cyclotomic division"
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Coefficients (constant term first) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise InputError(f"cyclotomic order must be positive, got {n}")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _int_poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def euler_phi(n):
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _power_table(n):
    """x^m reduced modulo Phi_n, for phi <= m <= 2*phi - 2."""
    phi = euler_phi(n)
    poly = cyclotomic_polynomial(n)
    table = {}
    cur = [Fraction(-c) for c in poly[:phi]]  # x^phi
    for m in range(phi, 2 * phi - 1):
        table[m] = tuple(cur)
        # multiply by x and reduce
        top = cur[-1]
        cur = [Fraction(0)] + cur[:-1]
        if top:
            cur = [c - top * p for c, p in zip(cur, poly[:phi])]
    return table


_ZERO = Fraction(0)
_ONE = Fraction(1)


class CycloNumber:
    """An element of Q(zeta_n), immutable and hashable."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs=()):
        phi = euler_phi(order)
        if phi > MAX_PHI:
            raise InputError(f"cyclotomic order {order} has phi={phi} > {MAX_PHI}")
        cs = [Fraction(c) for c in coeffs]
        poly = cyclotomic_polynomial(order)
        for i in range(len(cs) - 1, phi - 1, -1):
            c = cs[i]
            if c:
                base = i - phi
                for k in range(phi):
                    cs[base + k] -= c * poly[k]
        cs = cs[:phi] + [_ZERO] * (phi - len(cs))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, order, coeffs):
        obj = object.__new__(cls)
        obj.order = order
        obj.coeffs = coeffs
        return obj

    # -- coercion -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycloNumber):
            if other.order != self.order:
                if other.is_rational():
                    return self._constant(other.coeffs[0])
                if self.is_rational():
                    return other  # caller swaps roles via the symmetric ops
                raise InputError(f"mixing cyclotomic orders {self.order} and {other.order}")
            return other
        if isinstance(other, (int, Fraction)):
            return self._constant(other)
        return NotImplemented

    def _constant(self, c):
        return CycloNumber._raw(self.order, (Fraction(c),) + (_ZERO,) * (len(self.coeffs) - 1))

    # -- predicates ---------------------------------------------------------

    def __bool__(self):
        return any(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def rational(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, CycloNumber):
            if other.order == self.order:
                return self.coeffs == other.coeffs
            return self.is_rational() and other.is_rational() and self.coeffs[0] == other.coeffs[0]
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    def sort_key(self):
        return self.coeffs

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.order != self.order:
            return other + self
        return CycloNumber._raw(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber._raw(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.order != self.order:
            return -(other - self)
        return CycloNumber._raw(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.order != self.order:
            return other * self
        a, b = self.coeffs, other.coeffs
        phi = len(a)
        if phi == 1:
            return CycloNumber._raw(self.order, (a[0] * b[0],))
        if other.is_rational():
            c = b[0]
            return CycloNumber._raw(self.order, tuple(x * c for x in a))
        if self.is_rational():
            c = a[0]
            return CycloNumber._raw(self.order, tuple(x * c for x in b))
        prod = [_ZERO] * (2 * phi - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        out = prod[:phi]
        table = _power_table(self.order)
        for m in range(phi, 2 * phi - 1):
            c = prod[m]
            if c:
                out = [o + c * r for o, r in zip(out, table[m])]
        return CycloNumber._raw(self.order, tuple(out))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise DivisionByZeroError("division by zero in Q(zeta)")
        phi = len(self.coeffs)
        if self.is_rational():
            return self._constant(1 / self.coeffs[0])
        # columns: x^i * self; solve M c = e_0
        cols = []
        cur = self
        x = CycloNumber(self.order, (0, 1))
        for _ in range(phi):
            cols.append(cur.coeffs)
            cur = cur * x
        rows = [[cols[j][i] for j in range(phi)] + [_ONE if i == 0 else _ZERO] for i in range(phi)]
        for c in range(phi):
            p = next(r for r in range(c, phi) if rows[r][c])
            rows[c], rows[p] = rows[p], rows[c]
            piv = rows[c][c]
            rows[c] = [v / piv for v in rows[c]]
            for r in range(phi):
                if r != c and rows[r][c]:
                    f = rows[r][c]
                    rows[r] = [v - f * w for v, w in zip(rows[r], rows[c])]
        return CycloNumber._raw(self.order, tuple(rows[i][phi] for i in range(phi)))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.order != self.order:
            return CycloNumber(other.order, self.coeffs) / other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = self._constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- display ------------------------------------------------------------

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            terms.append((c, mono))
        if not terms:
            return "0"
        out = ""
        for idx, (c, mono) in enumerate(terms):
            neg = c < 0
            a = -c if neg else c
            if mono and a == 1:
                body = mono
            else:
                body = _fmt_rational(a) + (("*" + mono) if mono else "")
            if idx == 0:
                out = ("-" if neg else "") + body
            else:
                out += (" - " if neg else " + ") + body
        return out

    def __repr__(self):
        return f"CycloNumber({self.order}, {str(self)!r})"


def _fmt_rational(a):
    if a.denominator == 1:
        return str(a.numerator)
    return f"{a.numerator}/{a.denominator}"


class CyclotomicField:
    """The residue field k = Q(zeta_n)."""

    tag = "k"

    def __init__(self, order):
        phi = euler_phi(order)
        if phi > MAX_PHI:
            raise InputError(f"cyclotomic order {order} has phi={phi} > {MAX_PHI}")
        self.order = order
        self.phi = phi
        self.zero = CycloNumber(order)
        self.one = CycloNumber(order, (1,))
        self.gen = CycloNumber(order, (0, 1))

    def __call__(self, x):
        if isinstance(x, CycloNumber):
            if x.order == self.order:
                return x
            if x.is_rational():
                return CycloNumber(self.order, (x.coeffs[0],))
            raise InputError(f"cannot coerce element of Q(zeta_{x.order}) into Q(zeta_{self.order})")
        if isinstance(x, (int, Fraction)):
            return CycloNumber(self.order, (x,))
        raise TypeError(f"cannot coerce {x!r} into {self}")

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.order == self.order

    def __hash__(self):
        return hash(("k", self.order))

    def __repr__(self):
        return f"CyclotomicField({self.order})"


@lru_cache(maxsize=None)
def residue_field(order):
    """Shared :class:`CyclotomicField` instance for an order."""
    return CyclotomicField(order)
