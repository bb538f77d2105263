"""Iwahori-Hecke algebras of types A1 and A2 over R, with their generic simple modules.

Relations: (s - q)(s + 1) = 0 for each generator, and s t s = t s t in type A2.
"""

from dataclasses import dataclass

from . import linalg as L
from .algebra import Algebra, Representation, extend_scalars
from .errors import DegenerateParameterError, InputError, NonIntegralError
from .scalars import FunctionField, RatFunc, parse_scalar

A1_LABELS = ["1", "s"]
A2_LABELS = ["1", "s", "t", "st", "ts", "sts"]
# basis words of A2 as generator sequences
A2_WORDS = [(), ("s",), ("t",), ("s", "t"), ("t", "s"), ("s", "t", "s")]
# Dynkin symmetry s <-> t on the A2 basis (sts = tst by the braid relation)
A2_SWAP = [0, 2, 1, 4, 3, 5]


@dataclass(frozen=True)
class HeckeSpec:
    type: str
    q: RatFunc

    def __post_init__(self):
        if self.type not in ("A1", "A2"):
            raise InputError(f"unsupported Hecke type {self.type!r}; expected A1 or A2")
        if not isinstance(self.q, RatFunc):
            raise InputError("q must be a RatFunc")
        if not self.q.is_integral():
            raise NonIntegralError(f"q = {self.q} is not in R (pole at t=0)")

    @classmethod
    def parse(cls, type_, q_text, order=1):
        return cls(type_, parse_scalar(q_text, order))

    @property
    def order(self):
        return self.q.order

    @property
    def q0(self):
        """The specialization q(0) in k."""
        return self.q.at_zero()


def _right_mul_a2(q):
    """Rules w * g for basis words w (indices) and generators g, as coordinate dicts."""
    one = RatFunc.constant(q.order, 1)
    qm1 = q - one
    s_rules = {
        0: {1: one},
        1: {1: qm1, 0: q},
        2: {4: one},
        3: {5: one},
        4: {4: qm1, 2: q},
        5: {5: qm1, 3: q},
    }
    t_rules = {
        0: {2: one},
        1: {3: one},
        2: {2: qm1, 0: q},
        3: {3: qm1, 1: q},
        4: {5: one},
        5: {5: qm1, 4: q},
    }
    return {"s": s_rules, "t": t_rules}


def _a2_table(q):
    K = FunctionField(q.order)
    rules = _right_mul_a2(q)
    table = []
    for i in range(6):
        row = []
        for j in range(6):
            x = {i: K.one}
            for g in A2_WORDS[j]:
                y = {}
                for w, c in x.items():
                    for w2, d in rules[g][w].items():
                        y[w2] = y.get(w2, K.zero) + c * d
                x = {w: c for w, c in y.items() if c}
            row.append([x.get(k, K.zero) for k in range(6)])
        table.append(row)
    return table


def _a1_table(q):
    K = FunctionField(q.order)
    z, o = K.zero, K.one
    return [
        [[o, z], [z, o]],
        [[z, o], [q, q - o]],
    ]


def hecke_algebra(spec, check=True):
    """The Hecke algebra over R in the basis 1, s (A1) or 1, s, t, st, ts, sts (A2)."""
    if spec.type == "A1":
        return Algebra("R", spec.order, _a1_table(spec.q), 0, A1_LABELS, check=check)
    return Algebra("R", spec.order, _a2_table(spec.q), 0, A2_LABELS, check=check)


def is_degenerate(spec):
    """True when the generic fibre (over K) is not semisimple."""
    q = spec.q
    if not q.is_constant():
        return False
    if spec.type == "A1":
        return q == -1
    return q == 0 or q == -1 or not (q * q + q + 1)


def _rep_from_generators(A, gens):
    """Action matrices for every basis word from generator matrices."""
    K = A.field
    d = len(gens["s"])
    ident = L.identity(d, K.zero, K.one)
    words = A2_WORDS if A.dim == 6 else [(), ("s",)]
    mats = []
    for w in words:
        m = ident
        for g in w:
            m = L.matmul(m, gens[g], K.zero)
        mats.append(m)
    return mats


def hecke_k_simples(spec):
    """Simple modules of A = (Hecke algebra) tensor K, in the order (-1), (q), then the 2-dimensional one."""
    if is_degenerate(spec):
        raise DegenerateParameterError(
            f"q = {spec.q} is a degenerate parameter for type {spec.type}; the algebra over K is not semisimple")
    A = extend_scalars(hecke_algebra(spec), "K")
    K = A.field
    q = spec.q
    minus = K(-1)
    reps = []
    for label, val in (("sign", minus), ("index", q)):
        gens = {"s": [[val]], "t": [[val]]}
        reps.append(Representation(A, _rep_from_generators(A, gens), Representation.SIMPLE, label))
    if spec.type == "A2":
        gens = {
            "s": [[minus, K.zero], [K.one, q]],
            "t": [[q, q], [K.zero, minus]],
        }
        reps.append(Representation(A, _rep_from_generators(A, gens), Representation.SIMPLE, "reflection"))
    total = sum(r.dim ** 2 for r in reps)
    assert total == A.dim, "generic simples do not exhaust the algebra"
    return reps


def swap_permutation(spec):
    return A2_SWAP if spec.type == "A2" else [0, 1]


def is_automorphism(A, perm):
    """Whether the basis permutation ``perm`` preserves the structure constants."""
    n = A.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if A.table[perm[i]][perm[j]][perm[k]] != A.table[i][j][k]:
                    return False
    return True


def twist(M, perm):
    """The module M with the action precomposed by the automorphism ``perm``."""
    return Representation(M.algebra, [M.mats[perm[i]] for i in range(M.algebra.dim)], M.marker,
                          M.label and f"twist({M.label})", check=False)


def _match(mods, twisted):
    """perm[j] = index of the module isomorphic to twisted[j] (simple modules, so Hom detects it)."""
    from .algebra import hom_space

    perm = []
    for T in twisted:
        hits = [i for i, M in enumerate(mods) if M.dim == T.dim and hom_space(T, M)]
        if len(hits) != 1:
            return None
        perm.append(hits[0])
    return perm


def symmetry_audit(spec, report):
    """The Dynkin swap s <-> t is an automorphism and permutes D's rows and columns consistently."""
    from .cde import Audit

    A = hecke_algebra(spec, check=False)
    perm = swap_permutation(spec)
    auto = is_automorphism(A, perm)
    pK = _match(report.K_modules, [twist(M, perm) for M in report.K_modules])
    pk = _match(report.k_modules, [twist(S, perm) for S in report.k_modules])
    ok = auto and pK is not None and pk is not None
    D = report.D
    if ok:
        permuted = [[D[pk[i]][pK[j]] for j in range(len(pK))] for i in range(len(pk))]
        ok = permuted == D
    else:
        permuted = None
    return Audit("s<->t symmetry permutes D", ok, D, permuted,
                 f"automorphism={auto}, K-permutation={pK}, k-permutation={pk}")
