from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from cdelab import linalg as L
from cdelab.scalars import FunctionField, RatFunc, residue_field

k = residue_field(1)
K = FunctionField(1)


@st.composite
def int_matrices(draw, max_n=5):
    m = draw(st.integers(1, max_n))
    n = draw(st.integers(1, max_n))
    return [[k(draw(st.integers(-3, 3))) for _ in range(n)] for _ in range(m)]


def to_sympy(a):
    return sympy.Matrix([[sympy.Rational(x.rational().numerator, x.rational().denominator) for x in r] for r in a])


@settings(max_examples=300)
@given(int_matrices())
def test_rank_and_nullspace_match_sympy(a):
    ref = to_sympy(a)
    assert L.rank(a) == ref.rank()
    ns = L.nullspace(a, len(a[0]), k.zero, k.one)
    assert len(ns) == len(ref.nullspace())
    for v in ns:
        assert all(not x for x in L.matvec(a, v, k.zero))


@settings(max_examples=200)
@given(int_matrices(4))
def test_determinant_and_inverse_match_sympy(a):
    n = min(len(a), len(a[0]))
    sq = [r[:n] for r in a[:n]]
    ref = to_sympy(sq)
    d = L.determinant(sq, k.zero, k.one)
    assert Fraction(d.rational()) == Fraction(int(sympy.numer(ref.det())), int(sympy.denom(ref.det())))
    if d:
        inv = L.inverse(sq, k.zero, k.one)
        assert L.matmul(sq, inv, k.zero) == L.identity(n, k.zero, k.one)
    else:
        with pytest.raises(ZeroDivisionError):
            L.inverse(sq, k.zero, k.one)


@settings(max_examples=200)
@given(int_matrices(4), st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_solve_returns_solution_or_none(a, xs):
    n = len(a[0])
    x = [k(v) for v in xs[:n]]
    b = L.matvec(a, x, k.zero)
    sol = L.solve(a, b, k.zero, k.one)
    assert sol is not None and L.matvec(a, sol, k.zero) == b
    # an inconsistent right-hand side exists exactly when the rank is below the row count
    if L.rank(a) < len(a):
        ns = L.nullspace(L.transpose(a), len(a), k.zero, k.one)
        bad = [b_i + y for b_i, y in zip(b, ns[0])]
        assert L.solve(a, bad, k.zero, k.one) is None


def test_rank_over_K_certificate_and_fallback():
    t = K.t
    full = [[t, K.one], [K.one, t]]  # det t^2 - 1, generically invertible
    assert L.rank_over_K(full) == 2
    singular = [[t, t * t], [K.one, t]]  # rank 1 identically
    assert L.rank_over_K(singular) == 1
    assert L.rank(singular) == 1


def test_rank_over_K_with_poles():
    t = K.t
    a = [[K.one / (t - 5), K.one], [K.zero, K.one / (t + 3)]]
    assert L.rank_over_K(a) == 2


def test_specialize_detects_pole():
    a = [[K.one / (K.t - 2)]]
    assert L.specialize(a, 2) is None
    assert L.specialize(a, 3) == [[k.one]]


def test_echelon_incremental():
    e = L.Echelon(3)
    assert e.add({0: k.one, 1: k.one})
    assert not e.add({0: k(2), 1: k(2)})
    assert e.contains({0: k(5), 1: k(5)})
    assert e.add({2: k.one})
    assert len(e) == 2 and e.pivots() == [0, 2]


def test_matrix_helpers_over_R():
    t = K.t
    a = [[t, K.one], [K.zero, t]]
    assert L.matmul(a, L.identity(2, K.zero, K.one), K.zero) == a
    assert L.determinant(a, K.zero, K.one) == t * t
    assert L.is_zero_matrix(L.matsub(a, a))
    assert isinstance(L.matscale(a, t)[0][0], RatFunc)
