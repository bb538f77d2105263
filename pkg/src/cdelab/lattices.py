"""R-lattices in K-representations and the passage to the residue field.

R is a discrete valuation ring with uniformizer t, so every finitely generated
torsion-free R-module is free and echelon forms with valuation pivots exist.
"""

import math

from . import linalg as L
from .algebra import Representation, extend_scalars, hom_space
from .errors import InputError, NonIntegralError, NotIdempotentError, SeedsDoNotSpanError
from .scalars import RatFunc, TruncatedSeries


def _unit_part(x):
    """x = t^v * u with u a unit of R; returns u."""
    v = x.valuation()
    tv = RatFunc.polynomial(x.order, [0] * v + [1]) if v >= 0 else RatFunc(x.order, [1], [0] * (-v) + [1])
    return x / tv


def dvr_basis(vectors):
    """Free R-basis of the R-span of ``vectors`` (lists over K).

    Column by column, the pivot is the entry of least valuation (lowest row
    index on ties); rows below are cleared with R-multiples of it and the
    pivot is normalized to a power of t. Zero rows are dropped.
    """
    rows = [list(v) for v in vectors if any(v)]
    if not rows:
        return []
    d = len(rows[0])
    out = []
    for c in range(d):
        best = None
        for i, r in enumerate(rows):
            if r[c]:
                v = r[c].valuation()
                if best is None or v < best[0]:
                    best = (v, i)
        if best is None:
            continue
        piv = rows.pop(best[1])
        u = _unit_part(piv[c])
        if u != 1:
            inv = 1 / u
            piv = [x * inv for x in piv]
        p = piv[c]
        for r in rows:
            if r[c]:
                f = r[c] / p
                for j in range(c, d):
                    if piv[j]:
                        r[j] = r[j] - f * piv[j]
        rows = [r for r in rows if any(r)]
        out.append(piv)
    return out


def _all_integral(mats):
    return all(x.is_integral() for m in mats for r in m for x in r)


class Lattice:
    """Columns of ``basis`` span an R-form of the K-representation ``module``."""

    def __init__(self, algebra, module, basis, mats=None):
        self.algebra = algebra  # over R
        self.module = module  # over K
        self.basis = [list(b) for b in basis]
        K = module.field
        d = module.dim
        cols = L.transpose(self.basis) if self.basis else []
        if mats is None:
            inv = L.inverse(cols, K.zero, K.one) if d else []
            mats = [L.matmul(inv, L.matmul(m, cols, K.zero), K.zero) for m in module.mats]
        self.mats = mats
        if not _all_integral(mats):
            raise NonIntegralError("lattice is not stable under the R-algebra (non-integral action)")

    @property
    def rank(self):
        return len(self.basis)

    def representation(self):
        """The lattice's action matrices as a representation over K."""
        return Representation(self.module.algebra, self.mats, self.module.marker, self.module.label, check=False)


def spin_lattice(M, seeds):
    """The R-algebra-module generated by ``seeds`` inside the K-representation M."""
    A = getattr(M.algebra, "source", None)
    if M.algebra.tag != "K" or A is None:
        raise InputError("spin_lattice needs a representation of an algebra obtained by extend_scalars(..., 'K')")
    K = M.field
    gens = []
    for s in seeds:
        for m in M.mats:
            gens.append(L.matvec(m, list(s), K.zero))
    basis = dvr_basis(gens)
    if len(basis) != M.dim:
        raise SeedsDoNotSpanError(f"seeds span a subspace of rank {len(basis)} < {M.dim}")
    return Lattice(A, M, basis)


def standard_lattice(M):
    K = M.field
    return spin_lattice(M, L.identity(M.dim, K.zero, K.one))


def reduce_lattice(lat):
    """k tensor_R lattice as a representation of the reduced algebra."""
    Abar = extend_scalars(lat.algebra, "k")
    mats = [[[x.at_zero() for x in r] for r in m] for m in lat.mats]
    return Representation(Abar, mats, label=lat.module.label, check=False)


def _flat(m):
    return [x for r in m for x in r]


def _lattice_hom_basis_K(P, M):
    return hom_space(P.representation(), M.representation())


def saturate(vectors):
    """R-basis of V intersected with R^n, where V is the K-span of ``vectors``."""
    vecs = []
    for v in vectors:
        low = min(x.valuation() for x in v if x)
        if low:
            order = next(x for x in v if x).order
            shift = RatFunc.polynomial(order, [0] * (-low) + [1]) if low < 0 else RatFunc(order, [1], [0] * low + [1])
            v = [x * shift for x in v]
        vecs.append(v)
    vecs = dvr_basis(vecs)
    if not vecs:
        return []
    order = vecs[0][0].order
    t = RatFunc.polynomial(order, [0, 1])
    zero_R = RatFunc.constant(order, 0)
    # a k-relation among the reductions means some combination is divisible by t
    while True:
        reduced = [[x.at_zero() for x in v] for v in vecs]
        k0 = reduced[0][0]
        zero, one = k0 - k0, k0 - k0 + 1
        rel = L.nullspace(L.transpose(reduced), len(vecs), zero, one)
        if not rel:
            return vecs
        c = rel[0]
        j0 = next(j for j, x in enumerate(c) if x)
        combo = [sum((RatFunc.constant(order, cj) * v[i] for cj, v in zip(c, vecs) if cj), zero_R)
                 for i in range(len(vecs[0]))]
        vecs[j0] = [x / t for x in combo]


def hom_lattice(P, M):
    """R-basis of the intertwiners with R-integral matrices in the two lattice bases."""
    basis = _lattice_hom_basis_K(P, M)
    if not basis:
        return []
    rows, cols = len(basis[0]), len(basis[0][0])
    vecs = saturate([_flat(F) for F in basis])
    return [[v[r * cols:(r + 1) * cols] for r in range(rows)] for v in vecs]


def truncated_structure(A, precision):
    return [[[(k, TruncatedSeries.from_ratfunc(c, precision)) for k, c in enumerate(A.table[i][j]) if c]
             for j in range(A.dim)] for i in range(A.dim)]


def _series_mul(table, x, y, zero):
    out = [zero] * len(x)
    for i, a in enumerate(x):
        if not a:
            continue
        for j, b in enumerate(y):
            if not b:
                continue
            ab = a * b
            for k, c in table[i][j]:
                out[k] = out[k] + ab * c
    return out


def lift_idempotent_trunc(ebar, A, precision):
    """Lift an idempotent of k tensor A to A tensor k[t]/t^N by Newton steps e <- 3e^2 - 2e^3.

    Each step doubles the t-adic precision of e^2 = e, so ceil(log2 N) steps suffice.
    """
    if precision < 1:
        raise InputError("precision must be at least 1")
    Abar = extend_scalars(A, "k")
    ebar = [Abar.field(c) for c in ebar]
    if len(ebar) != A.dim:
        raise InputError(f"idempotent has {len(ebar)} coordinates, expected {A.dim}")
    if Abar.mul(ebar, ebar) != ebar:
        raise NotIdempotentError("the given element is not an idempotent of the reduced algebra")
    e = [TruncatedSeries(A.order, 1, (c,)) for c in ebar]
    p = 1
    steps = 0
    while p < precision:
        p = min(2 * p, precision)
        table = truncated_structure(A, p)
        zero = TruncatedSeries(A.order, p)
        e = [x.truncate(p) for x in e]
        e2 = _series_mul(table, e, e, zero)
        e3 = _series_mul(table, e2, e, zero)
        e = [a * 3 - b * 2 for a, b in zip(e2, e3)]
        steps += 1
    return e, steps


def series_defect_valuation(A, e):
    """min valuation of the coordinates of e^2 - e (computed at e's precision)."""
    p = e[0].precision
    table = truncated_structure(A, p)
    zero = TruncatedSeries(A.order, p)
    e2 = _series_mul(table, e, e, zero)
    return min((a - b).valuation() for a, b in zip(e2, e))


def series_to_ratfunc(x):
    """The polynomial representative of a truncated series, as an element of R."""
    return RatFunc.polynomial(x.order, x.coeffs)


def exact_defect_valuation(A, e):
    """Valuation of e^2 - e computed exactly in A over R from polynomial representatives."""
    x = [series_to_ratfunc(c) for c in e]
    d = A.sub(A.mul(x, x), x)
    return min((c.valuation() for c in d), default=math.inf)
