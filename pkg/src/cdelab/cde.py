"""Decomposition, Cartan and E matrices of an algebra over R, and their audits."""

from dataclasses import dataclass, field

from .algebra import (
    extend_scalars,
    hom_space,
    indecomposable_projectives,
    jh_multiplicity,
    primitive_idempotents,
    simple_modules,
)
from .errors import AuditError, IncompleteSimplesError
from .lattices import reduce_lattice, spin_lattice


@dataclass
class Audit:
    name: str
    passed: bool
    lhs: object
    rhs: object
    detail: str = ""

    def to_json(self):
        return {"name": self.name, "passed": self.passed, "lhs": self.lhs, "rhs": self.rhs, "detail": self.detail}


@dataclass
class CdeReport:
    K_simples: list
    k_simples: list
    D: list
    C: list
    E: list
    audits: list = field(default_factory=list)

    @property
    def passed(self):
        return all(a.passed for a in self.audits)

    def audit(self, name):
        return next(a for a in self.audits if a.name == name)

    def to_json(self):
        return {
            "K_simples": self.K_simples,
            "k_simples": self.k_simples,
            "D": self.D,
            "C": self.C,
            "E": self.E,
            "audits": [a.to_json() for a in self.audits],
            "passed": self.passed,
        }


def transpose(m):
    return [list(r) for r in zip(*m)] if m else []


def matmul_int(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def _trace_key(S):
    return [c.sort_key() for c in S.traces()]


def simple_label(S):
    A = S.algebra
    parts = [f"tr {A.labels[g]}={tr}" for g, tr in zip(A.generators, S.traces())]
    return f"dim {S.dim}: " + ", ".join(parts) if parts else f"dim {S.dim}"


class _Reduced:
    """The k-side data of an algebra over R, computed once."""

    def __init__(self, A):
        self.Abar = extend_scalars(A, "k")
        primitive_idempotents(self.Abar)
        self.simples = simple_modules(self.Abar)
        self.projectives = indecomposable_projectives(self.Abar)


def _lattice_multiplicities(M, red, seeds=None):
    K = M.field
    if seeds is None:
        seeds = [[K.one if r == c else K.zero for r in range(M.dim)] for c in range(M.dim)]
    lat = spin_lattice(M, seeds)
    N = reduce_lattice(lat)
    return [jh_multiplicity(N, i) for i in range(len(red.simples))]


def _k_order(columns, simples):
    """k-simples ordered by first appearance in the reductions, ties by trace key."""
    order = []
    for col in columns:
        fresh = [i for i, m in enumerate(col) if m and i not in order]
        fresh.sort(key=lambda i: _trace_key(simples[i]))
        order.extend(fresh)
    rest = sorted((i for i in range(len(simples)) if i not in order), key=lambda i: _trace_key(simples[i]))
    return order + rest


def _check_complete(A, K_simples):
    total = sum(M.dim ** 2 for M in K_simples)
    if total != A.dim:
        raise IncompleteSimplesError(
            f"sum of squared dimensions of the K-simples is {total}, but the algebra has dimension {A.dim}")


def decomposition_matrix(A, K_simples, _red=None, _order=None):
    """D[i][j] = [reduction of a lattice in K-simple j : k-simple i]."""
    _check_complete(A, K_simples)
    red = _red or _Reduced(A)
    cols = [_lattice_multiplicities(M, red) for M in K_simples]
    order = _order or _k_order(cols, red.simples)
    return [[cols[j][i] for j in range(len(K_simples))] for i in order]


def cartan_matrix(Abar, _order=None):
    """C[i][j] = dim Hom(P_i, P_j) = [P_j : simple i]."""
    Ps = indecomposable_projectives(Abar)
    order = _order or list(range(len(Ps)))
    return [[len(hom_space(Ps[i], Ps[j])) for j in order] for i in order]


def generic_simples(A):
    """K-simples of an algebra over R when none are supplied: simples of A tensor K.

    Sorted by dimension, then by the printed traces of the generators.
    """
    mods = simple_modules(extend_scalars(A, "K"))
    mods.sort(key=lambda M: (M.dim, [str(x) for x in M.traces()]))
    for j, M in enumerate(mods):
        M.label = f"M{j + 1}"
    return mods


def cde_verify(A, K_simples=None, raise_on_failure=True, seed_check=True):
    """Compute D and C independently, set E = D^t, and audit the cde identities."""
    if K_simples is None:
        K_simples = generic_simples(A)
    _check_complete(A, K_simples)
    red = _Reduced(A)
    cols = [_lattice_multiplicities(M, red) for M in K_simples]
    order = _k_order(cols, red.simples)
    D = [[cols[j][i] for j in range(len(K_simples))] for i in order]
    C = cartan_matrix(red.Abar, order)
    E = transpose(D)
    simples = [red.simples[i] for i in order]
    projectives = [red.projectives[i] for i in order]
    dimM = [M.dim for M in K_simples]
    dimS = [S.dim for S in simples]
    dimP = [P.dim for P in projectives]

    audits = []
    DDt = matmul_int(D, E)
    audits.append(Audit("C = D E", C == DDt, C, DDt))
    lhs = dimP
    rhs = [sum(E[j][i] * dimM[j] for j in range(len(dimM))) for i in range(len(dimP))]
    audits.append(Audit("rank: dim P_i = sum_j E_ji dim M_j", lhs == rhs, lhs, rhs))
    rhs2 = [sum(C[i][j] * dimS[i] for i in range(len(dimS))) for j in range(len(dimP))]
    audits.append(Audit("rank: dim P_j = sum_i C_ij dim S_i", lhs == rhs2, lhs, rhs2))
    reg = [sum(d * d for d in dimM), A.dim, sum(s * p for s, p in zip(dimS, dimP))]
    audits.append(Audit("regular: sum dim M_j^2 = dim A = sum dim S_i dim P_i", len(set(reg)) == 1, reg[:2], reg[1:]))
    nonzero = [any(col) for col in E]
    audits.append(Audit("D has no zero column", all(nonzero), nonzero, [True] * len(nonzero)))
    if seed_check:
        # reversed seed order gives a different lattice; its JH multiplicities must agree
        alt = []
        for M in K_simples:
            K = M.field
            seeds = [[K.one if r == c else K.zero for r in range(M.dim)] for c in reversed(range(M.dim))]
            if M.dim > 1:
                seeds[0] = [K.one] * M.dim
            col = _lattice_multiplicities(M, red, seeds)
            alt.append([col[i] for i in order])
        audits.append(Audit("D independent of lattice choice", transpose(alt) == D, D, transpose(alt)))

    report = CdeReport(
        K_simples=[{"dimension": M.dim, "label": M.label or f"M{j + 1}"} for j, M in enumerate(K_simples)],
        k_simples=[{"dimension": S.dim, "label": simple_label(S), "projective_cover_dimension": P.dim}
                   for S, P in zip(simples, projectives)],
        D=D, C=C, E=E, audits=audits,
    )
    report.K_modules = list(K_simples)
    report.k_modules = simples
    if raise_on_failure:
        for a in audits:
            if not a.passed:
                raise AuditError(a.name, a.lhs, a.rhs, a.detail)
    return report
