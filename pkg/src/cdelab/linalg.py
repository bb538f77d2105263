"""Exact linear algebra over a field of scalars (CycloNumber or RatFunc).

Matrices are lists of rows; vectors are lists. Elimination works on sparse
rows (dicts column -> nonzero entry) and keeps the echelon form fully reduced,
which suits the block-sparse intertwiner systems produced elsewhere.
"""

import random

from .scalars import RatFunc


def zeros(m, n, zero):
    return [[zero] * n for _ in range(m)]


def identity(n, zero, one):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def transpose(a):
    return [list(col) for col in zip(*a)]


def matmul(a, b, zero):
    if not a:
        return []
    n = len(b[0]) if b else 0
    bt = transpose(b) if b else [[] for _ in range(n)]
    out = []
    for row in a:
        nz = [(k, x) for k, x in enumerate(row) if x]
        new = []
        for col in bt:
            acc = zero
            for k, x in nz:
                y = col[k]
                if y:
                    acc = acc + x * y
            new.append(acc)
        out.append(new)
    return out


def matvec(a, v, zero):
    nz = [(k, x) for k, x in enumerate(v) if x]
    out = []
    for row in a:
        acc = zero
        for k, x in nz:
            y = row[k]
            if y:
                acc = acc + y * x
        out.append(acc)
    return out


def matadd(a, b):
    return [[x + y for x, y in zip(r, s)] for r, s in zip(a, b)]


def matsub(a, b):
    return [[x - y for x, y in zip(r, s)] for r, s in zip(a, b)]


def matscale(a, c):
    return [[x * c for x in r] for r in a]


def is_zero_matrix(a):
    return not any(x for r in a for x in r)


class Echelon:
    """Incrementally maintained reduced row echelon form.

    ``rows`` maps pivot column -> sparse row (dict) with pivot entry one and
    zeros in every other pivot column.
    """

    def __init__(self, ncols):
        self.ncols = ncols
        self.rows = {}

    def reduce(self, row):
        """Reduce a sparse row against the current pivots (returns a new dict)."""
        row = dict(row)
        for c in [c for c in row if c in self.rows]:
            x = row.pop(c, None)
            if not x:
                continue
            for j, y in self.rows[c].items():
                if j == c:
                    continue
                v = row.get(j)
                v = -(x * y) if v is None else v - x * y
                if v:
                    row[j] = v
                else:
                    row.pop(j, None)
        return row

    def add(self, row):
        """Insert a row; returns True iff it was independent."""
        row = self.reduce(row)
        if not row:
            return False
        p = min(row)
        inv = 1 / row[p]
        row = {j: v * inv for j, v in row.items()}
        for q, other in self.rows.items():
            x = other.get(p)
            if x:
                for j, y in row.items():
                    v = other.get(j)
                    v = -(x * y) if v is None else v - x * y
                    if v:
                        other[j] = v
                    else:
                        other.pop(j, None)
        self.rows[p] = row
        return True

    def __len__(self):
        return len(self.rows)

    def contains(self, row):
        return not self.reduce(row)

    def pivots(self):
        return sorted(self.rows)

    def dense_rows(self, zero):
        out = []
        for p in self.pivots():
            r = [zero] * self.ncols
            for j, v in self.rows[p].items():
                r[j] = v
            out.append(r)
        return out

    def nullspace(self, zero, one):
        """Basis of {v : row . v = 0 for every row}, one vector per free column."""
        free = [j for j in range(self.ncols) if j not in self.rows]
        basis = []
        for f in free:
            v = [zero] * self.ncols
            v[f] = one
            for p, r in self.rows.items():
                x = r.get(f)
                if x:
                    v[p] = -x
            basis.append(v)
        return basis


def sparse(row):
    return {j: x for j, x in enumerate(row) if x}


def echelon(rows, ncols):
    ech = Echelon(ncols)
    for r in rows:
        ech.add(r if isinstance(r, dict) else sparse(r))
    return ech


def rank(a):
    if not a:
        return 0
    return len(echelon(a, len(a[0])))


def nullspace(a, ncols, zero, one):
    """Right kernel of the matrix ``a`` (rows may be dense lists or sparse dicts)."""
    return echelon(a, ncols).nullspace(zero, one)


def row_basis(vectors, ncols, zero):
    """Echelon basis of the span of ``vectors``."""
    return echelon(vectors, ncols).dense_rows(zero)


def solve(a, b, zero, one):
    """One solution x of a x = b, or None when inconsistent."""
    n = len(a[0]) if a else 0
    aug = [sparse(list(r) + [y]) for r, y in zip(a, b)]
    ech = echelon(aug, n + 1)
    if n in ech.rows:
        return None
    x = [zero] * n
    for p, r in ech.rows.items():
        x[p] = r.get(n, zero)
    return x


def inverse(a, zero, one):
    n = len(a)
    aug = [sparse(list(r) + [one if i == j else zero for j in range(n)]) for i, r in enumerate(a)]
    ech = echelon(aug, 2 * n)
    if ech.pivots() != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [[ech.rows[i].get(n + j, zero) for j in range(n)] for i in range(n)]


def determinant(a, zero, one):
    n = len(a)
    m = [list(r) for r in a]
    det = one
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c]), None)
        if p is None:
            return zero
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        piv = m[c][c]
        det = det * piv
        inv = 1 / piv
        for r in range(c + 1, n):
            x = m[r][c]
            if x:
                f = x * inv
                m[r] = [u - f * v for u, v in zip(m[r], m[c])]
    return det


def specialize(a, t0):
    """Evaluate a matrix over K at t = t0 (None if some entry has a pole there)."""
    out = []
    for row in a:
        new = []
        for x in row:
            if isinstance(x, RatFunc):
                if not _den_at(x, t0):
                    return None
                new.append(x.evaluate(t0))
            else:
                new.append(x)
        out.append(new)
    return out


def _den_at(x, t0):
    acc = 0
    for c in reversed(x.den):
        acc = acc * t0 + c
    return acc


def rank_over_K(a, rng=None, tries=3):
    """Rank of a matrix over K.

    The rank at a specialization t = t0 never exceeds the generic rank, so a
    full specialized rank is a certificate; otherwise fall back to exact
    elimination over K.
    """
    if not a or not a[0]:
        return 0
    bound = min(len(a), len(a[0]))
    rng = rng or random.Random(0)
    for _ in range(tries):
        t0 = rng.randint(-97, 97)
        s = specialize(a, t0)
        if s is not None and rank(s) == bound:
            return bound
    return rank(a)
