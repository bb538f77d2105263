"""Finite-dimensional associative unital algebras given by structure constants.

Elements are coordinate lists with respect to the algebra basis. Left modules
are given by one action matrix per basis element, acting on column vectors.
"""

import random
from functools import cached_property

from . import linalg as L
from .errors import (
    AssociativityError,
    InputError,
    NonIntegralError,
    NonSplitError,
    RepresentationError,
    UnitLawError,
)
from .roots import factor_over_K, factor_over_k
from .scalars import CycloNumber, FunctionField, RatFunc, parse_scalar, residue_field
from .scalars import poly as P

TAGS = ("k", "R", "K")

# Zero-divisor search budget when splitting a simple block (see split_corner).
SEARCH_CAP = 200
NEWTON_CAP = 64


def scalar_field(tag, order):
    if tag == "k":
        return residue_field(order)
    if tag in ("R", "K"):
        return FunctionField(order)
    raise InputError(f"unknown scalar tag {tag!r}")


def coerce_scalar(x, tag, order):
    """Parse or coerce one scalar into the ring named by ``tag``."""
    if isinstance(x, str):
        x = parse_scalar(x, order)
    if tag == "k":
        if isinstance(x, RatFunc):
            if not x.is_constant():
                raise InputError(f"scalar {x} is not a constant; expected an element of k")
            return residue_field(order)(x.num[0] if x.num else 0)
        return residue_field(order)(x)
    x = FunctionField(order)(x)
    if tag == "R" and not x.is_integral():
        raise NonIntegralError(f"structure constant {x} is not in R (pole at t=0)")
    return x


class Algebra:
    """Associative unital algebra with basis e_0..e_{n-1} (0-based internally)."""

    def __init__(self, tag, order, structure, unit=0, labels=None, check=True):
        if tag not in TAGS:
            raise InputError(f"unknown scalar tag {tag!r}")
        self.tag = tag
        self.order = order
        self.field = scalar_field(tag, order)
        n = len(structure)
        self.dim = n
        if not 0 <= unit < max(n, 1):
            raise InputError(f"unit index {unit + 1} outside 1..{n}")
        self.unit = unit
        self.labels = list(labels) if labels else [f"e{i + 1}" for i in range(n)]
        if len(self.labels) != n:
            raise InputError(f"{len(self.labels)} labels for a {n}-dimensional algebra")
        zero = self.field.zero
        table = []
        for i in range(n):
            if len(structure[i]) != n:
                raise InputError(f"structure row {i + 1} has length {len(structure[i])}, expected {n}")
            row = []
            for j in range(n):
                vec = structure[i][j]
                if len(vec) != n:
                    raise InputError(f"structure constant a[{i + 1}][{j + 1}] has length {len(vec)}, expected {n}")
                row.append([c if _is_scalar_of(c, tag, order) else coerce_scalar(c, tag, order) for c in vec])
            table.append(row)
        self.table = table
        # sparse products: (i, j) -> [(k, a_ij^k)]
        self._sparse = [[[(k, c) for k, c in enumerate(table[i][j]) if c] for j in range(n)] for i in range(n)]
        self._zero = zero
        if check:
            self._check_unit()
            self._check_associative()

    # -- construction checks ------------------------------------------------

    def _check_unit(self):
        u = self.unit
        for j in range(self.dim):
            for k in range(self.dim):
                want = 1 if j == k else 0
                if self.table[u][j][k] != want or self.table[j][u][k] != want:
                    raise UnitLawError(
                        f"unit law fails: e{u + 1} * e{j + 1} or e{j + 1} * e{u + 1} differs from e{j + 1} at coordinate {k + 1}")

    def _check_associative(self):
        n = self.dim
        for i in range(n):
            for j in range(n):
                ij = self.table[i][j]
                for k in range(n):
                    lhs = self.mul(ij, self.basis(k))
                    rhs = self.mul(self.basis(i), self.table[j][k])
                    if lhs != rhs:
                        l = next(l for l in range(n) if lhs[l] != rhs[l])
                        raise AssociativityError(i + 1, j + 1, k + 1, l + 1)

    # -- elements -----------------------------------------------------------

    def basis(self, i):
        v = [self._zero] * self.dim
        v[i] = self.field.one
        return v

    def one(self):
        return self.basis(self.unit)

    def zero(self):
        return [self._zero] * self.dim

    def mul(self, x, y):
        out = [self._zero] * self.dim
        xs = [(i, a) for i, a in enumerate(x) if a]
        ys = [(j, b) for j, b in enumerate(y) if b]
        for i, a in xs:
            row = self._sparse[i]
            for j, b in ys:
                ab = a * b
                for k, c in row[j]:
                    out[k] = out[k] + ab * c
        return out

    def add(self, x, y):
        return [a + b for a, b in zip(x, y)]

    def sub(self, x, y):
        return [a - b for a, b in zip(x, y)]

    def scale(self, x, c):
        return [a * c for a in x]

    def left_matrix(self, x):
        """Matrix of y -> x*y."""
        n = self.dim
        cols = [self.mul(x, self.basis(j)) for j in range(n)]
        return [[cols[j][k] for j in range(n)] for k in range(n)]

    def poly_eval(self, p, y, unit):
        """p(y) with y^0 := unit (so corners c A c can be used)."""
        acc = self.zero()
        for c in reversed(p):
            acc = self.add(self.mul(acc, y), self.scale(unit, c))
        return acc

    # -- cached structure ---------------------------------------------------

    @cached_property
    def generators(self):
        """Basis indices generating the algebra (unit excluded), chosen greedily."""
        gens = []
        span = self._closure(gens)
        for i in range(self.dim):
            if len(span) == self.dim:
                break
            if i == self.unit or span.contains(self.basis(i)):
                continue
            gens.append(i)
            span = self._closure(gens)
        return tuple(gens)

    def _closure(self, gens):
        span = Subspace(self.dim, [self.one()])
        frontier = [self.one()]
        while frontier:
            new = []
            for v in frontier:
                for g in gens:
                    w = self.mul(v, self.basis(g))
                    if span.add(w):
                        new.append(w)
            frontier = new
        return span

    def __repr__(self):
        return f"Algebra(tag={self.tag!r}, order={self.order}, dim={self.dim})"


def _is_scalar_of(c, tag, order):
    if tag == "k":
        return isinstance(c, CycloNumber) and c.order == order
    return isinstance(c, RatFunc) and c.order == order and (tag == "K" or c.is_integral())


def make_algebra(structure, unit=1, tag="R", order=1, labels=None, check=True):
    """Validated algebra from an n x n x n array of scalars; ``unit`` is 1-based."""
    if not isinstance(structure, (list, tuple)):
        raise InputError("structure constants must be a nested list")
    return Algebra(tag, order, structure, unit - 1, labels, check)


def extend_scalars(A, target):
    """View an algebra over R in K, or reduce it modulo t into k."""
    if A.tag != "R":
        raise InputError(f"extend_scalars expects an algebra over R, got tag {A.tag!r}")
    if target not in ("K", "k"):
        raise InputError(f"unknown target {target!r}; expected 'K' or 'k'")
    cache = A.__dict__.setdefault("_extensions", {})
    if target not in cache:
        if target == "K":
            B = Algebra("K", A.order, A.table, A.unit, A.labels, check=False)
        else:
            table = [[[c.at_zero() for c in vec] for vec in row] for row in A.table]
            B = Algebra("k", A.order, table, A.unit, A.labels, check=False)
        B.source = A
        cache[target] = B
    return cache[target]


# -- representations ----------------------------------------------------------


class Representation:
    """Left module: ``mats[i]`` is the d x d action matrix of basis element i."""

    SIMPLE = "simple"
    PROJECTIVE = "projective-indecomposable"

    def __init__(self, algebra, mats, marker=None, label=None, check=True):
        self.algebra = algebra
        self.mats = [[list(r) for r in m] for m in mats]
        if len(self.mats) != algebra.dim:
            raise RepresentationError(f"{len(self.mats)} action matrices for a {algebra.dim}-dimensional algebra")
        self.dim = len(self.mats[0]) if self.mats else 0
        self.marker = marker
        self.label = label
        if check:
            self._check()

    @property
    def field(self):
        return self.algebra.field

    def _check(self):
        A = self.algebra
        d = self.dim
        zero, one = A.field.zero, A.field.one
        for m in self.mats:
            if len(m) != d or any(len(r) != d for r in m):
                raise RepresentationError("action matrices must all be square of the same size")
        if self.mats[A.unit] != L.identity(d, zero, one):
            raise RepresentationError("the unit does not act as the identity")
        for i in range(A.dim):
            for j in range(A.dim):
                lhs = L.matmul(self.mats[i], self.mats[j], zero)
                rhs = self.action(A.table[i][j])
                if lhs != rhs:
                    raise RepresentationError(
                        f"rho({A.labels[i]}) rho({A.labels[j]}) differs from rho({A.labels[i]}*{A.labels[j]})")

    def action(self, x):
        d = self.dim
        zero = self.algebra.field.zero
        out = [[zero] * d for _ in range(d)]
        for i, c in enumerate(x):
            if c:
                m = self.mats[i]
                for r in range(d):
                    orow, mrow = out[r], m[r]
                    for s in range(d):
                        if mrow[s]:
                            orow[s] = orow[s] + c * mrow[s]
        return out

    def act(self, x, v):
        return L.matvec(self.action(x), v, self.algebra.field.zero)

    def traces(self):
        """Traces of the generators' action: a cheap isomorphism-class fingerprint."""
        return [sum((self.mats[g][i][i] for i in range(self.dim)), self.algebra.field.zero)
                for g in self.algebra.generators]

    def __repr__(self):
        return f"Representation(dim={self.dim}, marker={self.marker!r}, label={self.label!r})"


def direct_sum(*mods):
    A = mods[0].algebra
    zero = A.field.zero
    d = sum(m.dim for m in mods)
    mats = []
    for i in range(A.dim):
        big = [[zero] * d for _ in range(d)]
        off = 0
        for m in mods:
            for r in range(m.dim):
                for s in range(m.dim):
                    big[off + r][off + s] = m.mats[i][r][s]
            off += m.dim
        mats.append(big)
    return Representation(A, mats, check=False)


def zero_module(A):
    return Representation(A, [[] for _ in range(A.dim)], check=False)


def regular_module(A):
    """A acting on itself by left multiplication."""
    n = A.dim
    mats = [[[A.table[i][j][k] for j in range(n)] for k in range(n)] for i in range(n)]
    return Representation(A, mats, label="regular", check=False)


def extend_representation(M, target):
    """Transport a representation of an R-algebra along extend_scalars."""
    B = extend_scalars(M.algebra, target)
    if target == "K":
        mats = M.mats
    else:
        mats = [[[c.at_zero() for c in r] for r in m] for m in M.mats]
    return Representation(B, mats, M.marker, M.label, check=False)


# -- subspaces, submodules, quotients ----------------------------------------


class Subspace:
    """Row-reduced basis of a subspace of F^d; coordinates are read off at pivots."""

    def __init__(self, d, vectors=()):
        self.d = d
        self.ech = L.Echelon(d)
        for v in vectors:
            self.ech.add(L.sparse(v))

    def add(self, v):
        return self.ech.add(L.sparse(v))

    def __len__(self):
        return len(self.ech)

    def contains(self, v):
        return self.ech.contains(L.sparse(v))

    def basis(self, zero):
        return self.ech.dense_rows(zero)

    def coords(self, v):
        """Coordinates of v (assumed inside) in the echelon basis."""
        return [v[p] for p in self.ech.pivots()]


def submodule(M, vectors):
    """Submodule generated by ``vectors`` (closure under the generators) and its basis."""
    zero = M.field.zero
    span = Subspace(M.dim)
    frontier = [v for v in vectors if span.add(v)]
    gens = M.algebra.generators
    while frontier:
        new = []
        for v in frontier:
            for g in gens:
                w = L.matvec(M.mats[g], v, zero)
                if span.add(w):
                    new.append(w)
        frontier = new
    return span


def restrict(M, span, marker=None, label=None):
    """The submodule ``span`` (which must be stable) as a representation."""
    zero = M.field.zero
    basis = span.basis(zero)
    mats = []
    for m in M.mats:
        cols = [span.coords(L.matvec(m, b, zero)) for b in basis]
        mats.append([[cols[j][i] for j in range(len(basis))] for i in range(len(basis))])
    return Representation(M.algebra, mats, marker, label, check=False)


def quotient(M, span, marker=None, label=None):
    """M / span for a stable subspace ``span``."""
    zero, one = M.field.zero, M.field.one
    d = M.dim
    full = Subspace(d)
    for b in span.basis(zero):
        full.add(b)
    comp = []
    for i in range(d):
        e = [zero] * d
        e[i] = one
        if full.add(e):
            comp.append(i)
    # coordinates modulo span: express in basis [span basis; e_comp] and keep the tail
    sub = span.basis(zero)
    cols = sub + [[one if r == i else zero for r in range(d)] for i in comp]
    change = L.transpose(cols)
    inv = L.inverse(change, zero, one) if cols else []
    q = len(comp)
    tail = inv[len(sub):]
    mats = []
    for m in M.mats:
        block = []
        for a in range(q):
            row = []
            for b in range(q):
                # image of e_comp[b], projected to coordinate a of the complement
                col = [m[r][comp[b]] for r in range(d)]
                acc = zero
                for r, c in enumerate(col):
                    if c and tail[a][r]:
                        acc = acc + tail[a][r] * c
                row.append(acc)
            block.append(row)
        mats.append(block)
    return Representation(M.algebra, mats, marker, label, check=False)


# -- radical and semisimple quotient ------------------------------------------


def _require_field(A):
    if A.tag == "R":
        raise InputError("this operation needs an algebra over a field (k or K); use extend_scalars first")


def radical(A):
    """Basis of the Jacobson radical: kernel of the trace form (characteristic 0)."""
    _require_field(A)
    return list(_radical_cache(A))


def _radical_cache(A):
    if not hasattr(A, "_radical"):
        n = A.dim
        zero = A.field.zero
        tau = [sum((A.table[k][j][j] for j in range(n)), zero) for k in range(n)]
        gram = [[sum((c * tau[k] for k, c in enumerate(A.table[i][j]) if c), zero) for j in range(n)]
                for i in range(n)]
        A._radical = tuple(tuple(v) for v in L.nullspace(gram, n, zero, A.field.one))
    return A._radical


class SemisimpleQuotient:
    """B = A/J on a complement basis chosen from the standard basis, unit first."""

    def __init__(self, A):
        _require_field(A)
        zero, one = A.field.zero, A.field.one
        n = A.dim
        J = [list(v) for v in _radical_cache(A)]
        span = Subspace(n, J)
        comp = []
        for i in [A.unit] + [i for i in range(n) if i != A.unit]:
            if span.add(A.basis(i)):
                comp.append(i)
        self.A = A
        self.comp = comp
        self.J = J
        cols = J + [A.basis(i) for i in comp]
        inv = L.inverse(L.transpose(cols), zero, one) if cols else []
        self._proj = inv[len(J):]
        m = len(comp)
        table = [[self.project(A.mul(A.basis(comp[a]), A.basis(comp[b]))) for b in range(m)] for a in range(m)]
        self.B = Algebra(A.tag, A.order, table, 0, [A.labels[i] for i in comp], check=False)

    def project(self, x):
        zero = self.A.field.zero
        return [sum((row[r] * c for r, c in enumerate(x) if c and row[r]), zero) for row in self._proj]

    def embed(self, y):
        x = self.A.zero()
        for a, c in enumerate(y):
            x[self.comp[a]] = c
        return x


def semisimple_quotient(A):
    if not hasattr(A, "_ssq"):
        A._ssq = SemisimpleQuotient(A)
    return A._ssq


# -- idempotents --------------------------------------------------------------


def _factor(A, coeffs):
    if A.tag == "k":
        return factor_over_k(coeffs, A.order)
    return factor_over_K(coeffs, A.order)


def minimal_polynomial(A, y, unit):
    """Minimal polynomial of y inside the corner algebra with identity ``unit``."""
    zero, one = A.field.zero, A.field.one
    powers = [unit]
    span = Subspace(A.dim, [unit])
    cur = unit
    while True:
        cur = A.mul(cur, y)
        if not span.add(cur):
            cols = L.transpose(powers)
            sol = L.solve(cols, cur, zero, one)
            return tuple([-c for c in sol] + [one])
        powers.append(cur)


def _crt_split(A, y, unit, g, h):
    """Orthogonal idempotents from a coprime factorization g*h of the minimal polynomial of y."""
    one = A.field.one
    _, s, _ = P.xgcd(g, h, one)
    e1 = A.poly_eval(P.mul(s, g), y, unit)
    e2 = A.sub(unit, e1)
    return e2, e1  # e2 projects onto the kernel of g(y)


def _corner_basis(A, c):
    return Subspace(A.dim, [A.mul(A.mul(c, A.basis(j)), c) for j in range(A.dim)])


def _try_split(A, c, y):
    """Split c using y in cAc; returns (c1, c2) or None."""
    f = minimal_polynomial(A, y, c)
    if len(f) <= 2:
        return None
    facs = _factor(A, f)
    if len(facs) >= 2:
        g = tuple(facs[0][0])
        for _ in range(facs[0][1] - 1):
            g = P.mul(g, facs[0][0])
        h = P.divmod_(f, g)[0]
        return _crt_split(A, y, c, g, h)
    (g0, mult), = facs
    if len(g0) == 2 and mult >= 2:
        # y - r is nilpotent and nonzero: pair it with another element to get a non-nilpotent zero divisor
        w = A.poly_eval(g0, y, c)
        for j in range(A.dim):
            b = A.mul(A.mul(c, A.basis(j)), c)
            x = A.mul(w, b)
            fx = minimal_polynomial(A, x, c)
            if any(fx[:-1]):  # x is not nilpotent
                res = _try_split_linear(A, c, x, fx)
                if res:
                    return res
    return None


def _try_split_linear(A, c, x, f):
    facs = _factor(A, f)
    if len(facs) < 2:
        return None
    g = tuple(facs[0][0])
    for _ in range(facs[0][1] - 1):
        g = P.mul(g, facs[0][0])
    h = P.divmod_(f, g)[0]
    return _crt_split(A, x, c, g, h)


def _candidates(A, c, rng):
    basis = [A.mul(A.mul(c, A.basis(j)), c) for j in range(A.dim)]
    basis = [b for b in basis if any(b)]
    yield from basis
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            yield A.add(basis[i], basis[j])
    while True:
        x = A.zero()
        for b in basis:
            x = A.add(x, A.scale(b, A.field(rng.randint(-3, 3))))
        yield x


def split_corner(A, c, rng):
    """Decompose idempotent c of a semisimple algebra into primitive orthogonal idempotents."""
    if len(_corner_basis(A, c)) <= 1:
        return [c]
    for count, y in enumerate(_candidates(A, c, rng)):
        if count >= SEARCH_CAP:
            break
        res = _try_split(A, c, y)
        if res:
            c1, c2 = res
            return split_corner(A, c1, rng) + split_corner(A, c2, rng)
    raise NonSplitError(
        f"could not split a corner of dimension {len(_corner_basis(A, c))} over the base field; "
        "the semisimple quotient is probably not split")


def center(A):
    n = A.dim
    zero, one = A.field.zero, A.field.one
    rows = []
    for g in A.generators:
        # x*e_g - e_g*x = 0, linear in x
        for k in range(n):
            row = {}
            for i in range(n):
                v = A.table[i][g][k] - A.table[g][i][k]
                if v:
                    row[i] = v
            if row:
                rows.append(row)
    return L.nullspace(rows, n, zero, one)


def central_idempotents(A):
    """Primitive central idempotents of a split semisimple algebra."""
    Z = center(A)
    idems = [A.one()]
    for z in Z:
        new = []
        for c in idems:
            y = A.mul(c, z)
            f = minimal_polynomial(A, y, c)
            facs = _factor(A, f)
            if any(len(g) > 2 for g, _ in facs):
                raise NonSplitError("the center of the semisimple quotient is not split over the base field")
            roots = [-g[0] for g, _ in facs]
            if len(roots) == 1:
                new.append(c)
                continue
            for i, r in enumerate(roots):
                e = c
                for j, s in enumerate(roots):
                    if i != j:
                        e = A.scale(A.mul(e, A.sub(y, A.scale(c, s))), 1 / (r - s))
                new.append(e)
        idems = new
    if len(idems) != len(Z):
        raise NonSplitError("the center of the semisimple quotient is not split over the base field")
    return idems


def newton_lift(A, x, unit):
    """Iterate e <- 3e^2 - 2e^3 from x inside the corner with identity ``unit``."""
    e = x
    for _ in range(NEWTON_CAP):
        e2 = A.mul(e, e)
        if e2 == e:
            return e
        e3 = A.mul(e2, e)
        e = A.sub(A.scale(e2, 3), A.scale(e3, 2))
    raise RuntimeError("Newton idempotent lifting did not stabilize within the iteration cap")


class IdempotentSet:
    """Complete orthogonal primitive idempotents with their simple-module indices."""

    def __init__(self, algebra, elements, simple_index, block_central):
        self.algebra = algebra
        self.elements = elements
        self.simple_index = simple_index
        self.block_central = block_central  # central idempotents of A/J, one per simple

    @property
    def representatives(self):
        """One primitive idempotent per simple, in simple order."""
        out = {}
        for e, s in zip(self.elements, self.simple_index):
            out.setdefault(s, e)
        return [out[s] for s in sorted(out)]

    def __len__(self):
        return len(self.elements)


def primitive_idempotents(A, seed=0):
    """Primitive idempotents of A/J lifted to A (cached on the algebra)."""
    _require_field(A)
    if getattr(A, "_idempotents", None) is not None:
        return A._idempotents
    Q = semisimple_quotient(A)
    B = Q.B
    rng = random.Random(seed)
    centrals = central_idempotents(B)
    prims, index = [], []
    for s, c in enumerate(centrals):
        for e in split_corner(B, c, rng):
            prims.append(e)
            index.append(s)
    # lift along the nilpotent radical, one corner at a time
    lifted = []
    taken = A.zero()
    one = A.one()
    for e in prims[:-1]:
        rest = A.sub(one, taken)
        x = A.mul(A.mul(rest, Q.embed(e)), rest)
        f = newton_lift(A, x, rest)
        lifted.append(f)
        taken = A.add(taken, f)
    lifted.append(A.sub(one, taken))
    result = IdempotentSet(A, lifted, index, [Q.embed(c) for c in centrals])
    A._idempotents = result
    return result


# -- projectives, simples, Hom -------------------------------------------------


def left_ideal_module(A, e, marker=None, label=None):
    """A e as a left module."""
    M = regular_module(A)
    span = Subspace(A.dim, [A.mul(A.basis(j), e) for j in range(A.dim)])
    return restrict(M, span, marker, label)


def indecomposable_projectives(A):
    """P_i = A e_i, one per simple, in simple order."""
    idems = primitive_idempotents(A)
    return [left_ideal_module(A, e, Representation.PROJECTIVE, f"P{i + 1}")
            for i, e in enumerate(idems.representatives)]


def radical_submodule(M):
    """J M as a subspace of M."""
    span = Subspace(M.dim)
    for j in _radical_cache(M.algebra):
        act = M.action(j)
        for i in range(M.dim):
            span.add([act[r][i] for r in range(M.dim)])
    return span


def top(P):
    """P / J P."""
    _require_field(P.algebra)
    return quotient(P, radical_submodule(P), Representation.SIMPLE, P.label and f"top({P.label})")


def simple_modules(A):
    """The simple modules, one per primitive idempotent representative."""
    return [top(P) for P in indecomposable_projectives(A)]


def hom_space(M, N):
    """Basis of Hom_A(M, N) as dim(N) x dim(M) matrices."""
    A = M.algebra
    zero, one = A.field.zero, A.field.one
    dm, dn = M.dim, N.dim
    if dm == 0 or dn == 0:
        return []
    rows = []
    for g in A.generators:
        rm, rn = M.mats[g], N.mats[g]
        for r in range(dn):
            for c in range(dm):
                row = {}
                for k in range(dm):
                    v = rm[k][c]
                    if v:
                        idx = r * dm + k
                        row[idx] = row.get(idx, zero) + v
                for k in range(dn):
                    v = rn[r][k]
                    if v:
                        idx = k * dm + c
                        row[idx] = row.get(idx, zero) - v
                row = {i: v for i, v in row.items() if v}
                if row:
                    rows.append(row)
    sols = L.nullspace(rows, dn * dm, zero, one)
    return [[v[r * dm:(r + 1) * dm] for r in range(dn)] for v in sols]


def jh_multiplicity(N, i):
    """[N : simple i] = rank of the i-th primitive idempotent acting on N."""
    if N.dim == 0:
        return 0
    e = primitive_idempotents(N.algebra).representatives[i]
    return L.rank(N.action(e))


def composition_series_oracle(N):
    """Multiplicities of simples via the radical filtration N > JN > J^2N > ...

    Each layer is semisimple; the multiplicity of simple b in a layer is the
    rank of (a lift of) the b-th central idempotent of A/J on that layer
    divided by dim of simple b.
    """
    A = N.algebra
    zero = A.field.zero
    idems = primitive_idempotents(A)
    simples = simple_modules(A)
    counts = [0] * len(simples)
    layer = Subspace(N.dim, [[A.field.one if r == c else zero for r in range(N.dim)] for c in range(N.dim)])
    while len(layer):
        below = Subspace(N.dim)
        basis = layer.basis(zero)
        for j in _radical_cache(A):
            act = N.action(j)
            for v in basis:
                below.add(L.matvec(act, v, zero))
        for b, c in enumerate(idems.block_central):
            act = N.action(c)
            img = Subspace(N.dim, below.basis(zero))
            for v in basis:
                img.add(L.matvec(act, v, zero))
            r = len(img) - len(below)
            counts[b] += r // simples[b].dim
        if len(below) == len(layer):
            raise RuntimeError("radical filtration stalled; the radical is not nilpotent on this module")
        layer = below
    return counts


def composition_factors(N):
    """Multiset (as a list of simple indices with repetition)."""
    return [i for i, c in enumerate(composition_series_oracle(N)) for _ in range(c)]


def endomorphism_algebra(M):
    """End_A(M) with structure constants in a hom_space basis whose first element is the identity."""
    A = M.algebra
    zero, one = A.field.zero, A.field.one
    d = M.dim
    basis = hom_space(M, M)
    ident = L.identity(d, zero, one)

    def flat(m):
        return [x for r in m for x in r]

    span = Subspace(d * d, [flat(ident)])
    chosen = [ident]
    for F in basis:
        if span.add(flat(F)):
            chosen.append(F)
    # coordinates of products in the chosen basis
    cols = L.transpose([flat(F) for F in chosen])
    table = []
    for a in chosen:
        row = []
        for b in chosen:
            prod = flat(L.matmul(a, b, zero))
            row.append(L.solve(cols, prod, zero, one))
        table.append(row)
    E = Algebra(A.tag, A.order, table, 0, [f"f{i + 1}" for i in range(len(chosen))], check=False)
    E.matrices = chosen
    return E


def is_local_endoring(M):
    """True iff End(M) has no idempotents besides 0 and 1."""
    if M.dim == 0:
        return False
    E = endomorphism_algebra(M)
    return len(primitive_idempotents(E)) == 1
