"""Random split algebras over R with known generic simple modules.

Each algebra is a product of small blocks whose K-simples are known by
construction, written in a randomly changed R-basis whose first element is
the unit. Used to exercise the cde identities beyond the Hecke examples.
"""

import random

from . import linalg as L
from .algebra import Algebra, Representation, extend_scalars
from .scalars import FunctionField, RatFunc


def _rf(order, coeffs):
    return RatFunc.polynomial(order, coeffs)


class _Block:
    """A block: basis (unit first), multiplication as matrices, and K-simples as generator images."""

    def __init__(self, dim, table, simples):
        self.dim = dim
        self.table = table  # table[i][j] -> coordinate list
        self.simples = simples  # list of lists of action matrices (one per block basis element)


def _commutative_block(order, rng, m):
    """R[x] / prod (x - a_i(t)) with a_i = c_i + d_i t distinct in K."""
    K = FunctionField(order)
    while True:
        roots = [_rf(order, [rng.randint(-1, 1), rng.randint(-2, 2)]) for _ in range(m)]
        if len(set(roots)) == m:
            break
    f = (K.one,)
    for a in roots:
        # multiply by (x - a)
        f = tuple(((-a) * f[0],)) + tuple(f[i - 1] - a * f[i] for i in range(1, len(f))) + (f[-1],)

    def reduce(coeffs):
        coeffs = list(coeffs)
        for d in range(len(coeffs) - 1, m - 1, -1):
            c = coeffs[d]
            if c:
                for i in range(m + 1):
                    coeffs[d - m + i] = coeffs[d - m + i] - c * f[i]
        return coeffs[:m] + [K.zero] * (m - len(coeffs[:m]))

    table = []
    for i in range(m):
        row = []
        for j in range(m):
            v = [K.zero] * (2 * m)
            v[i + j] = K.one
            row.append(reduce(v))
        table.append(row)
    simples = [[[[a ** i]] for i in range(m)] for a in roots]
    return _Block(m, table, simples)


def _matrix_block(order, hereditary):
    """M_2(R) or the order [[R, R], [tR, R]], in the basis 1, E12, (t)E21, E22."""
    K = FunctionField(order)
    z, o = K.zero, K.one
    c = K.t if hereditary else o
    mats = [
        [[o, z], [z, o]],
        [[z, o], [z, z]],
        [[z, z], [c, z]],
        [[z, z], [z, o]],
    ]
    basis_flat = [[x for r in m for x in r] for m in mats]
    cols = L.transpose(basis_flat)
    table = []
    for a in mats:
        row = []
        for b in mats:
            prod = [x for r in L.matmul(a, b, z) for x in r]
            row.append(L.solve(cols, prod, z, o))
        table.append(row)
    return _Block(4, table, [mats])


def _hecke_block(order, rng):
    K = FunctionField(order)
    while True:
        q = _rf(order, [rng.choice([-1, -1, 1, 2]), rng.randint(-2, 2)])
        if q != -1:
            break
    z, o = K.zero, K.one
    table = [[[o, z], [z, o]], [[z, o], [q, q - o]]]
    simples = [[[[o]], [[K(-1)]]], [[[o]], [[q]]]]
    return _Block(2, table, simples)


def _random_blocks(order, rng, max_dim):
    blocks = []
    total = 0
    while True:
        kind = rng.choice(["comm", "comm", "mat", "her", "hecke"])
        if kind == "comm":
            b = _commutative_block(order, rng, rng.randint(1, 3))
        elif kind in ("mat", "her"):
            b = _matrix_block(order, kind == "her")
        else:
            b = _hecke_block(order, rng)
        if total + b.dim > max_dim:
            if blocks:
                return blocks
            continue
        blocks.append(b)
        total += b.dim
        if total >= max_dim - 1 or rng.random() < 0.3:
            return blocks


def random_split_algebra(seed, max_dim=8, order=1):
    """(algebra over R, list of its K-simples) for a random product of blocks."""
    rng = random.Random(seed)
    K = FunctionField(order)
    z, o = K.zero, K.one
    blocks = _random_blocks(order, rng, max_dim)
    n = sum(b.dim for b in blocks)
    offsets = []
    off = 0
    for b in blocks:
        offsets.append(off)
        off += b.dim

    def prod(i, j):
        v = [z] * n
        for b, s in zip(blocks, offsets):
            if s <= i < s + b.dim and s <= j < s + b.dim:
                for k, c in enumerate(b.table[i - s][j - s]):
                    v[s + k] = c
        return v

    # new basis (columns in old coordinates): global unit first, then a random unimodular change
    units = [s for s in offsets]
    change = [[z] * n for _ in range(n)]
    cols = []
    unit = [z] * n
    for s in units:
        unit[s] = o
    cols.append(unit)
    others = [i for i in range(n) if i != units[0]]
    for i in others:
        v = [z] * n
        v[i] = o
        cols.append(v)
    # upper unitriangular mixing among columns 2..n with polynomial entries
    for a in range(1, n):
        for b in range(a + 1, n):
            if rng.random() < 0.4:
                c = _rf(order, [rng.randint(-2, 2), rng.randint(-1, 1)])
                cols[b] = [x + c * y for x, y in zip(cols[b], cols[a])]
    change = L.transpose(cols)
    inv = L.inverse(change, z, o)

    def mul_old(x, y):
        out = [z] * n
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    if b:
                        p = prod(i, j)
                        ab = a * b
                        out = [u + ab * w for u, w in zip(out, p)]
        return out

    table = [[L.matvec(inv, mul_old(cols[a], cols[b]), z) for b in range(n)] for a in range(n)]
    A = Algebra("R", order, table, 0, [f"b{i + 1}" for i in range(n)])
    AK = extend_scalars(A, "K")
    simples = []
    for b, s in zip(blocks, offsets):
        for acts in b.simples:
            d = len(acts[0])
            old = [[[z] * d for _ in range(d)] for _ in range(n)]
            for i in range(b.dim):
                old[s + i] = acts[i]
            mats = []
            for col in cols:
                m = [[z] * d for _ in range(d)]
                for i, c in enumerate(col):
                    if c:
                        m = L.matadd(m, L.matscale(old[i], c))
                mats.append(m)
            simples.append(Representation(AK, mats, Representation.SIMPLE, f"M{len(simples) + 1}"))
    return A, simples
