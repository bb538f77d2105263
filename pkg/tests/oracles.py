"""Independent reference computations used by the tests.

None of these share code paths with the routines they check: characters are
solved by plain Fraction/CycloNumber elimination, cyclotomic arithmetic is
checked through the complex embedding, and rational functions through sympy.
"""

import cmath
from fractions import Fraction

import sympy

T = sympy.Symbol("t")
X = sympy.Symbol("x")


def complex_value(c):
    """Image of a CycloNumber under zeta -> exp(2 pi i / n)."""
    z = cmath.exp(2j * cmath.pi / c.order)
    return sum(float(a) * z ** i for i, a in enumerate(c.coeffs))


def ratfunc_to_sympy(x):
    """A RatFunc over Q as a sympy expression in t (order 1 only)."""
    assert x.order == 1
    num = sum(sympy.Rational(c.rational().numerator, c.rational().denominator) * T ** i for i, c in enumerate(x.num))
    den = sum(sympy.Rational(c.rational().numerator, c.rational().denominator) * T ** i for i, c in enumerate(x.den))
    return num / den


def _solve_exact(rows, rhs):
    """Solve a consistent, full-column-rank system by Gaussian elimination."""
    n = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    piv_rows = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(aug)) if aug[i][c]), None)
        if p is None:
            raise ValueError("characters are not independent")
        aug[r], aug[p] = aug[p], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv_rows.append(r)
        r += 1
    for i in range(r, len(aug)):
        assert not aug[i][-1], "inconsistent character system"
    return [aug[i][-1] for i in range(n)]


def trace(m):
    return sum((m[i][i] for i in range(len(m))), m[0][0] - m[0][0]) if m else 0


def brauer_column(char_values, simple_chars):
    """Multiplicities n_i with char = sum n_i * simple_char_i (characteristic zero, split)."""
    rows = [list(col) for col in zip(*simple_chars)]
    sol = _solve_exact(rows, list(char_values))
    out = []
    for x in sol:
        assert x.is_rational() and x.rational().denominator == 1, f"non-integral multiplicity {x}"
        out.append(int(x.rational()))
    return out


def character(M):
    """Traces of all basis elements of the algebra on M."""
    return [trace(m) for m in M.mats]


def reduced_character(M):
    """Traces over K, reduced at t=0; these do not depend on the choice of lattice."""
    return [trace(m).at_zero() for m in M.mats]


def singular_depths(lam, depth):
    """Depths j >= 1 where e v_j = 0 in the Verma module of integer highest weight lam."""
    return [j for j in range(1, depth + 1) if j * (lam - j + 1) == 0]


def verma_composition(lam, window_weights):
    """Highest weights of the composition factors of Z(lam) over k (sl2, integer lam)."""
    out = [lam]
    if lam >= 0 and -lam - 2 in window_weights:
        out.append(-lam - 2)
    return out


def fraction(x):
    return Fraction(x)
