"""Truncated deformed category O for sl2.

Weights live in a window Gamma - 2j (0 <= j <= N). With deformation, each
gamma is shifted by t, the weight of h in the deformation direction. Modules
are stored at basis level: each basis vector has a window position and sparse
e- and f-images. Maps leaving the window are dropped (truncation).

The projective P(lam) is U(n^-) tensor Q(lam) where Q(lam) has basis e^m q for
the weights lam + 2m still in the window; its basis vector (j, m) stands for
f^j e^m q and has weight lam + 2m - 2j.
"""

from dataclasses import dataclass, field

from . import linalg as L
from .algebra import Algebra, Subspace, primitive_idempotents
from .lattices import saturate
from .errors import (
    AuditError,
    DualityMismatchError,
    InputError,
    NonIntegralSolutionError,
    WeightOutsideWindowError,
    WindowError,
)
from .scalars import FunctionField, RatFunc, parse_scalar, residue_field


# -- windows ------------------------------------------------------------------


class WeightWindow:
    """Retained weights gamma - 2j for gamma in Gamma and 0 <= j <= depth."""

    def __init__(self, gammas, depth, deform, order=1):
        k = residue_field(order)
        self.order = order
        self.depth = depth
        self.deform = deform
        self.gammas = [k(g) for g in gammas]
        self.pairs = [(a, j) for a in range(len(self.gammas)) for j in range(depth + 1)]
        self.reduced = [self.gammas[a] - 2 * j for a, j in self.pairs]
        K = FunctionField(order)
        shift = K.t if deform else K.zero
        self.values = [K(r) + shift for r in self.reduced]
        self.position = {r: p for p, r in enumerate(self.reduced)}
        self.up = [self.position.get(r + 2) for r in self.reduced]
        self.down = [self.position.get(r - 2) for r in self.reduced]

    def __len__(self):
        return len(self.pairs)

    def weight(self, p, tag):
        return self.reduced[p] if tag == "k" else self.values[p]

    def locate(self, lam):
        """Window position of a weight given as a k-value, an R-value, an int or a string."""
        if isinstance(lam, str):
            lam = parse_scalar(lam, self.order)
        if isinstance(lam, RatFunc):
            if not lam.is_integral():
                raise WeightOutsideWindowError(f"weight {lam} is not in R")
            p = self.position.get(lam.at_zero())
            # a constant names either itself or, in a deformed window, its lift
            if p is None or not (lam.is_constant() or lam == self.values[p]):
                raise WeightOutsideWindowError(f"weight {lam} is not in the window")
            return p
        p = self.position.get(residue_field(self.order)(lam))
        if p is None:
            raise WeightOutsideWindowError(f"weight {lam} is not in the window")
        return p

    def to_json(self):
        return {"gamma": [str(g) for g in self.gammas], "depth": self.depth, "deform": self.deform}


def validate_window(gammas, deform=True, depth=1, order=1):
    """Check that distinct retained (gamma, j) pairs have distinct residues mod t."""
    if depth < 1:
        raise InputError("depth must be at least 1")
    if not gammas:
        raise InputError("the weight window needs at least one gamma")
    k = residue_field(order)
    seen = {}
    for a, g in enumerate(gammas):
        for j in range(depth + 1):
            r = k(g) - 2 * j
            if r in seen:
                b, i = seen[r]
                raise WindowError(
                    f"weights {gammas[b]}-2*{i} and {g}-2*{j} are congruent mod t "
                    f"(both reduce to {r})")
            seen[r] = (a, j)
    return WeightWindow(gammas, depth, deform, order)


# -- graded modules -------------------------------------------------------------


def _field(tag, order):
    return residue_field(order) if tag == "k" else FunctionField(order)


class GradedModule:
    """Basis-level weight module: ``pos[b]`` is the window position of basis vector b."""

    def __init__(self, window, tag, pos, e_act, f_act, label=None):
        self.window = window
        self.tag = tag
        self.field = _field(tag, window.order)
        self.pos = list(pos)
        self.e_act = e_act
        self.f_act = f_act
        self.label = label
        self._by_pos = {}
        for b, p in enumerate(self.pos):
            self._by_pos.setdefault(p, []).append(b)

    @property
    def dim(self):
        return len(self.pos)

    def basis_at(self, p):
        return self._by_pos.get(p, [])

    def rank(self, p):
        return len(self._by_pos.get(p, ()))

    def graded_ranks(self):
        return [self.rank(p) for p in range(len(self.window))]

    def weight_of(self, b):
        return self.window.weight(self.pos[b], self.tag)

    def apply(self, act, v):
        out = {}
        zero = self.field.zero
        for b, c in v.items():
            for b2, d in act[b].items():
                x = out.get(b2, zero) + c * d
                if x:
                    out[b2] = x
                else:
                    out.pop(b2, None)
        return out

    def e(self, v):
        return self.apply(self.e_act, v)

    def f(self, v):
        return self.apply(self.f_act, v)

    def matrix(self, act, p, q):
        """Dense matrix of ``act`` from weight position p to q."""
        src, dst = self.basis_at(p), self.basis_at(q)
        index = {b: i for i, b in enumerate(dst)}
        zero = self.field.zero
        m = [[zero] * len(src) for _ in dst]
        for c, b in enumerate(src):
            for b2, x in act[b].items():
                m[index[b2]][c] = x
        return m

    def e_matrix(self, p):
        q = self.window.up[p]
        return self.matrix(self.e_act, p, q) if q is not None else []

    def f_matrix(self, p):
        q = self.window.down[p]
        return self.matrix(self.f_act, p, q) if q is not None else []

    def map_scalars(self, fn, tag):
        conv = [{b: fn(c) for b, c in d.items()} for d in self.e_act]
        e_act = [{b: c for b, c in d.items() if c} for d in conv]
        conv = [{b: fn(c) for b, c in d.items()} for d in self.f_act]
        f_act = [{b: c for b, c in d.items() if c} for d in conv]
        return self._rebuild(tag, e_act, f_act)

    def _rebuild(self, tag, e_act, f_act):
        return GradedModule(self.window, tag, self.pos, e_act, f_act, self.label)

    def __repr__(self):
        return f"GradedModule({self.label!r}, tag={self.tag!r}, dim={self.dim})"


def bracket_defects(M):
    """Basis vectors where [e,f] = h fails; the bottom of the window is exempt (truncation)."""
    bad = []
    for b in range(M.dim):
        p = M.pos[b]
        if M.window.down[p] is None:
            continue
        v = {b: M.field.one}
        lhs = M.e(M.f(v))
        rhs = M.f(M.e(v))
        diff = dict(lhs)
        for k_, c in rhs.items():
            diff[k_] = diff.get(k_, M.field.zero) - c
        diff[b] = diff.get(b, M.field.zero) - M.weight_of(b)
        if any(diff.values()):
            bad.append(b)
    return bad


def check_brackets(M):
    bad = bracket_defects(M)
    if bad:
        raise AuditError("sl2 bracket [e,f]=h", len(bad), 0, f"fails at basis vectors {bad[:5]}")
    return True


def _lam_scalar(window, p, tag):
    return window.weight(p, tag)


def verma(lam, window, tag="R"):
    """Z(lam): basis v_j at lam - 2j, f v_j = v_{j+1}, e v_j = j(lam - j + 1) v_{j-1}."""
    p0 = window.locate(lam)
    lamv = window.weight(p0, tag)
    F = _field(tag, window.order)
    pos = [p0]
    while window.down[pos[-1]] is not None:
        pos.append(window.down[pos[-1]])
    n = len(pos)
    e_act = [{}] + [{j - 1: (lamv - (j - 1)) * j} for j in range(1, n)]
    e_act = [{b: c for b, c in d.items() if c} for d in e_act]
    f_act = [{j + 1: F.one} for j in range(n - 1)] + [{}]
    return GradedModule(window, tag, pos, e_act, f_act, f"Z({lamv})")


class Projective(GradedModule):
    """P(lam) with basis (j, m) standing for f^j e^m q; also keeps lam's position."""

    def __init__(self, window, tag, lam_pos, labels, pos, e_act, f_act, label=None):
        super().__init__(window, tag, pos, e_act, f_act, label)
        self.lam_pos = lam_pos
        self.labels = labels
        self.index = {lab: b for b, lab in enumerate(labels)}
        self.top_m = max(m for _, m in labels)

    @property
    def lam(self):
        return self.window.weight(self.lam_pos, self.tag)

    def _rebuild(self, tag, e_act, f_act):
        return Projective(self.window, tag, self.lam_pos, self.labels, self.pos, e_act, f_act, self.label)

    def generator_space(self):
        """Basis indices of the lam-weight space, beta_m = (m, m) for m = 0..M."""
        return [self.index[(m, m)] for m in range(self.top_m + 1)]


def build_projective(lam, window, tag="R"):
    """P(lam) = U(n^-) tensor Q(lam), Q(lam) = span of e^m q with lam + 2m in the window."""
    p0 = window.locate(lam)
    lamv = window.weight(p0, tag)
    F = _field(tag, window.order)
    qpos = [p0]
    while window.up[qpos[-1]] is not None:
        qpos.append(window.up[qpos[-1]])
    top_m = len(qpos) - 1
    labels, pos = [], []
    for m, pm in enumerate(qpos):
        p, j = pm, 0
        while p is not None:
            labels.append((j, m))
            pos.append(p)
            p = window.down[p]
            j += 1
    index = {lab: b for b, lab in enumerate(labels)}
    e_act, f_act = [], []
    for (j, m) in labels:
        act = {}
        if m + 1 <= top_m:
            act[index[(j, m + 1)]] = F.one
        if j >= 1:
            c = (lamv + (2 * m - j + 1)) * j
            if c:
                act[index[(j - 1, m)]] = c
        e_act.append(act)
        nxt = index.get((j + 1, m))
        f_act.append({nxt: F.one} if nxt is not None else {})
    return Projective(window, tag, p0, labels, pos, e_act, f_act, f"P({lamv})")


def verma_filtration(P):
    """Highest weights of the Verma quotients of P(lam), from lam + 2M down to lam."""
    w = P.window
    return [w.weight(P.pos[P.index[(0, m)]], P.tag) for m in range(P.top_m, -1, -1)]


def extend_to_K(M):
    if M.tag == "k":
        raise InputError("extend_to_K needs a module over R")
    return M.map_scalars(lambda c: c, "K")


def reduce_mod_t(M):
    if M.tag == "k":
        return M
    return M.map_scalars(lambda c: c.at_zero(), "k")


def direct_sum(*mods):
    w = mods[0].window
    pos, e_act, f_act = [], [], []
    off = 0
    for M in mods:
        pos += M.pos
        e_act += [{b + off: c for b, c in d.items()} for d in M.e_act]
        f_act += [{b + off: c for b, c in d.items()} for d in M.f_act]
        off += M.dim
    return GradedModule(w, mods[0].tag, pos, e_act, f_act, " + ".join(str(M.label) for M in mods))


# -- submodules and intertwiners --------------------------------------------------


def generated_submodule(M, vectors, label=None):
    """The submodule generated by sparse vectors (each homogeneous), as a GradedModule."""
    zero = M.field.zero
    spans = {}
    local = {}

    def loc(p, v):
        idx = local.setdefault(p, {b: i for i, b in enumerate(M.basis_at(p))})
        out = [zero] * len(idx)
        for b, c in v.items():
            out[idx[b]] = c
        return out

    def pos_of(v):
        return M.pos[next(iter(v))]

    frontier = [v for v in vectors if v]
    for v in frontier:
        spans.setdefault(pos_of(v), Subspace(M.rank(pos_of(v))))
    frontier = [v for v in frontier if spans[pos_of(v)].add(loc(pos_of(v), v))]
    while frontier:
        new = []
        for v in frontier:
            for w in (M.e(v), M.f(v)):
                if not w:
                    continue
                p = pos_of(w)
                s = spans.setdefault(p, Subspace(M.rank(p)))
                if s.add(loc(p, w)):
                    new.append(w)
        frontier = new
    return _restrict(M, spans, label)


def _restrict(M, spans, label):
    zero = M.field.zero
    basis, pos = [], []
    for p in sorted(spans):
        for vec in spans[p].basis(zero):
            basis.append({M.basis_at(p)[i]: c for i, c in enumerate(vec) if c})
            pos.append(p)
    offsets = {}
    for b, p in enumerate(pos):
        offsets.setdefault(p, b)

    def coords(v):
        if not v:
            return {}
        p = M.pos[next(iter(v))]
        s = spans[p]
        idx = {b: i for i, b in enumerate(M.basis_at(p))}
        dense = [zero] * len(idx)
        for b, c in v.items():
            dense[idx[b]] = c
        cs = s.coords(dense)
        return {offsets[p] + i: c for i, c in enumerate(cs) if c}

    e_act = [coords(M.e(v)) for v in basis]
    f_act = [coords(M.f(v)) for v in basis]
    sub = GradedModule(M.window, M.tag, pos, e_act, f_act, label)
    sub.embedding = basis
    return sub


def _hom_system(M, N):
    """Unknown blocks F_p : M_p -> N_p; rows of the linear system F e = e F, F f = f F."""
    w = M.window
    offs, total = {}, 0
    for p in range(len(w)):
        offs[p] = total
        total += M.rank(p) * N.rank(p)
    zero = M.field.zero
    rows = []
    for p in range(len(w)):
        rm = M.rank(p)
        if rm == 0:
            continue
        for q, act_m, act_n in ((w.up[p], M.e_act, N.e_act), (w.down[p], M.f_act, N.f_act)):
            if q is None:
                continue
            sm, sn = M.basis_at(p), N.basis_at(p)
            tm, tn = M.basis_at(q), N.basis_at(q)
            if not tn:
                continue
            im = {b: i for i, b in enumerate(tm)}
            rmq = len(tm)
            # for each source basis c of M_p and target row r of N_q:
            # sum_k F_q[r][k] * act_m(c)[k]  -  sum_s act_n(s)[r] * F_p[s][c] = 0
            for c, bm in enumerate(sm):
                for r, bn_target in enumerate(tn):
                    row = {}
                    for bk, x in act_m[bm].items():
                        k_ = im[bk]
                        idx = offs[q] + r * rmq + k_
                        row[idx] = row.get(idx, zero) + x
                    for s, bn in enumerate(sn):
                        y = act_n[bn].get(bn_target)
                        if y:
                            idx = offs[p] + s * rm + c
                            row[idx] = row.get(idx, zero) - y
                    row = {i: v for i, v in row.items() if v}
                    if row:
                        rows.append(row)
    return rows, total, offs


def graded_hom(M, N):
    """Basis of weight-preserving maps commuting with e and f, as dicts p -> matrix."""
    rows, total, offs = _hom_system(M, N)
    if total == 0:
        return []
    sols = L.nullspace(rows, total, M.field.zero, M.field.one)
    out = []
    for v in sols:
        blocks = {}
        for p, o in offs.items():
            rm, rn = M.rank(p), N.rank(p)
            if rm and rn:
                blocks[p] = [v[o + s * rm:o + (s + 1) * rm] for s in range(rn)]
        out.append(blocks)
    return out


def graded_hom_dim(M, N):
    rows, total, _ = _hom_system(M, N)
    if total == 0:
        return 0
    if M.tag == "k":
        return total - len(L.echelon(rows, total))
    dense = []
    for r in rows:
        d = [M.field.zero] * total
        for i, c in r.items():
            d[i] = c
        dense.append(d)
    return total - L.rank_over_K(dense) if dense else total


def graded_hom_lattice(M, N):
    """R-basis of the intertwiners M -> N (modules over R) with R-integral blocks, flattened."""
    if M.tag != "R" or N.tag != "R":
        raise InputError("graded_hom_lattice needs modules over R")
    sols = graded_hom(extend_to_K(M), extend_to_K(N))
    flat = [[x for p in sorted(F) for row in F[p] for x in row] for F in sols]
    return saturate(flat)


def scalar_extension_dims(M, N):
    """(rank of the R-lattice of intertwiners, dim over K, dim over k) for modules over R."""
    return (len(graded_hom_lattice(M, N)),
            graded_hom_dim(extend_to_K(M), extend_to_K(N)),
            graded_hom_dim(reduce_mod_t(M), reduce_mod_t(N)))


def graded_dual(M):
    """Weight-wise dual twisted by e <-> f: new e at mu is the transpose of f out of mu + 2."""
    e_act = [dict() for _ in range(M.dim)]
    f_act = [dict() for _ in range(M.dim)]
    for c in range(M.dim):
        for b, x in M.f_act[c].items():
            e_act[b][c] = x
        for b, x in M.e_act[c].items():
            f_act[b][c] = x
    D = GradedModule(M.window, M.tag, M.pos, e_act, f_act, f"dual({M.label})")
    return D


# -- generic semisimplicity ------------------------------------------------------


def _depth_from_top(window, p):
    d = 0
    while window.up[p] is not None:
        p = window.up[p]
        d += 1
    return d


def contravariant_gram(Z, j):
    """Gram determinant of the contravariant form on the depth-j space of a Verma module.

    The space is one-dimensional, so this is the scalar c with e^j f^j v_0 = c v_0,
    computed by applying the module's own e and f.
    """
    one = Z.field.one
    v = {0: one}
    for _ in range(j):
        v = Z.f(v)
        if not v:
            raise InputError(f"depth {j} lies outside the truncated Verma module")
    for _ in range(j):
        v = Z.e(v)
    return v.get(0, Z.field.zero)


def gram_formula(lam, j):
    """prod_{s=1}^{j} s (lam - s + 1)."""
    acc = lam - lam + 1
    for s in range(1, j + 1):
        acc = acc * (lam - s + 1) * s
    return acc


def generic_verma_multiplicities(M):
    """Multiplicities n(lam) with M ~ sum n(lam) Z(lam)' over K, from the top weight down.

    Solved from graded ranks, then confirmed by the dimension of the e-kernel
    (highest-weight vectors) at each weight.
    """
    if M.tag != "K":
        raise InputError("generic_verma_multiplicities needs a module over K")
    w = M.window
    n = {}
    for p in sorted(range(len(w)), key=lambda p: _depth_from_top(w, p)):
        above = 0
        q = w.up[p]
        while q is not None:
            above += n.get(q, 0)
            q = w.up[q]
        val = M.rank(p) - above
        if val < 0:
            raise NonIntegralSolutionError(str(w.values[p]), val)
        n[p] = val
    for p, val in n.items():
        if not val:
            continue
        r = M.rank(p)
        up = w.up[p]
        if up is None:
            kernel = r
        else:
            em = M.e_matrix(p)
            kernel = r - (L.rank_over_K(em) if em and em[0] else 0)
        if kernel != val:
            raise NonIntegralSolutionError(str(w.values[p]), f"e-kernel dimension {kernel} != {val}")
    return {w.values[p]: v for p, v in n.items() if v}


# -- endomorphisms and decomposition of projectives ---------------------------------


def endomorphism_algebra_projective(P):
    """End(P) as P_lam: beta_a * beta_b := phi_a o phi_b corresponds to f^b e^b beta_a."""
    gens = P.generator_space()
    col = {b: i for i, b in enumerate(gens)}
    n = len(gens)
    zero = P.field.zero
    table = []
    for a in range(n):
        row = []
        for b in range(n):
            v = {gens[a]: P.field.one}
            for _ in range(b):
                v = P.e(v)
            for _ in range(b):
                v = P.f(v)
            vec = [zero] * n
            for k_, c in v.items():
                vec[col[k_]] = c
            row.append(vec)
        table.append(row)
    tag = "k" if P.tag == "k" else "K"
    return Algebra(tag, P.window.order, table, 0, [f"beta{m}" for m in range(n)], check=False)


def character_value(lam, m, j, tag, order):
    """chi_{lam+2m}(beta_j): the scalar by which f^j e^j acts on v_m of Z(lam + 2m).

    Computed from the Verma action rather than the closed product formula.
    """
    nu = lam + 2 * m
    acc = _field(tag, order).one
    if j > m:
        return acc - acc
    for s in range(j):
        i = m - s
        acc = acc * (nu - (i - 1)) * i
    return acc


def _top_candidates(P):
    """Weights lam + 2m whose simple quotient V(lam + 2m) has a nonzero lam-weight space."""
    lam = P.lam
    out = []
    for m in range(P.top_m + 1):
        g = gram_formula(lam + 2 * m, m)
        if g:
            out.append(m)
    return out


@dataclass
class Summand:
    label_m: int  # top weight is lam + 2 * label_m
    weight: object
    idempotent: list
    module: GradedModule


def decompose_projective(P):
    """Indecomposable summands of P(lam) over k, each labelled by the highest weight of its top."""
    if P.tag != "k":
        raise InputError("decompose_projective works over k; reduce the projective first")
    E = endomorphism_algebra_projective(P)
    idems = primitive_idempotents(E)
    cands = _top_candidates(P)
    lam = P.lam
    gens = P.generator_space()
    out = []
    for eps in idems.elements:
        labels = []
        for m in cands:
            val = sum((eps[j] * character_value(lam, m, j, "k", P.window.order) for j in range(len(eps))),
                      P.field.zero)
            if val == 1:
                labels.append(m)
            elif val != 0:
                raise AuditError("summand character", str(val), "0 or 1", f"for top lam+{2 * m}")
        if len(labels) != 1:
            raise AuditError("summand labelling", labels, "exactly one top", "")
        m = labels[0]
        vec = {gens[j]: c for j, c in enumerate(eps) if c}
        mod = generated_submodule(P, [vec], f"I({lam + 2 * m})")
        out.append(Summand(m, lam + 2 * m, eps, mod))
    out.sort(key=lambda s: s.label_m)
    seen = [s.label_m for s in out]
    if len(set(seen)) != len(seen):
        raise AuditError("summand labelling", seen, "distinct tops", "each simple top occurs once in P(lam)")
    return out


def indecomposable_summand(P, mu_m=0):
    """The summand of P(lam) whose top has highest weight lam + 2*mu_m (default: lam itself)."""
    for s in decompose_projective(P):
        if s.label_m == mu_m:
            return s
    raise AuditError("summand lookup", mu_m, "a summand with that top", "")


def o_jh_multiplicity(Z, mu, window=None):
    """[Z : V(mu)] = dim Hom(I(mu), Z) over k."""
    window = window or Z.window
    if Z.tag != "k":
        Z = reduce_mod_t(Z)
    P = build_projective(mu, window, "k")
    I = indecomposable_summand(P).module
    return graded_hom_dim(I, Z)


# -- the duality table -------------------------------------------------------------


def _r_side_attachment(window, mu_pos, eps_bar):
    """Verma layers of P(mu) attached to the summand with k-idempotent eps_bar, via an exact R-idempotent.

    Returns (S, eps) where S lists the m with chi_{mu+2m}(eps) = 1 and eps is the
    exact idempotent of End(P(mu)') with those characters; eps is certified
    R-integral with reduction eps_bar.
    """
    order = window.order
    K = FunctionField(order)
    mu = window.values[mu_pos]
    size = len(eps_bar)
    X = [[character_value(mu, m, j, "K", order) for j in range(size)] for m in range(size)]
    S = []
    for m in range(size):
        val = sum((X[m][j].at_zero() * eps_bar[j] for j in range(size)), residue_field(order).zero)
        if val == 1:
            S.append(m)
        elif val != 0:
            raise AuditError("R-lift character", str(val), "0 or 1", f"layer m={m}")
    target = [K.one if m in S else K.zero for m in range(size)]
    eps = L.solve(X, target, K.zero, K.one)
    if eps is None:
        raise AuditError("R-lift solve", "inconsistent", "solvable", "character matrix is singular over K")
    if not all(c.is_integral() for c in eps):
        raise AuditError("R-lift integrality", [str(c) for c in eps], "R-integral", "")
    if [c.at_zero() for c in eps] != list(eps_bar):
        raise AuditError("R-lift reduction", [str(c.at_zero()) for c in eps], [str(c) for c in eps_bar], "")
    return S, eps


def _trace_character(P, eps):
    """Rank of phi_eps on each weight space of P(mu)' (trace of an idempotent)."""
    gens = P.generator_space()
    v0 = {gens[j]: c for j, c in enumerate(eps) if c}
    tr = {}
    for m in range(P.top_m + 1):
        v = v0
        for _ in range(m):
            v = P.e(v)
        diag = v.get(P.index[(0, m)], P.field.zero)
        for (j, mm), b in P.index.items():
            if mm == m:
                p = P.pos[b]
                tr[p] = tr.get(p, P.field.zero) + diag
    return tr


def verma_character_counts(M):
    """Verma multiplicities read off from graded ranks, solved from the top weight down.

    Valid over any of R, K, k, since the Verma modules have rank one in every
    weight below their highest weight. Returns {window position: count}.
    """
    window = M.window
    counts = {}
    for p in sorted(range(len(window)), key=lambda p: _depth_from_top(window, p)):
        above = 0
        q = window.up[p]
        while q is not None:
            above += counts.get(q, 0)
            q = window.up[q]
        counts[p] = M.rank(p) - above
        if counts[p] < 0:
            raise NonIntegralSolutionError(str(window.reduced[p]), counts[p])
    return {p: c for p, c in counts.items() if c}


@dataclass
class DualityReport:
    window: WeightWindow
    pairs: list = field(default_factory=list)
    audits: list = field(default_factory=list)

    @property
    def passed(self):
        return all(p["equal"] for p in self.pairs) and all(a["passed"] for a in self.audits)

    def cell(self, lam, mu):
        for p in self.pairs:
            if p["lambda"] == str(lam) and p["mu"] == str(mu):
                return p
        raise KeyError((lam, mu))

    def to_json(self):
        return {"window": self.window.to_json(), "pairs": self.pairs, "audits": self.audits,
                "passed": self.passed}

    def table(self):
        ws = [str(r) for r in self.window.reduced]
        width = max(len(x) for x in ws) + 1
        lines = ["lambda\\mu".ljust(width + 4) + "".join(x.rjust(width + 4) for x in ws)]
        grid = {(p["lambda"], p["mu"]): p for p in self.pairs}
        for lam in ws:
            row = lam.ljust(width + 4)
            for mu in ws:
                p = grid[(lam, mu)]
                cell = f"{p['lhs']}={p['rhs']}" if p["equal"] else f"{p['lhs']}!{p['rhs']}"
                row += cell.rjust(width + 4)
            lines.append(row)
        return "\n".join(lines)


def duality_report(gammas, depth, deform=True, order=1, raise_on_mismatch=True):
    """[Z(lam) : V(mu)] against [I(mu) : Z(lam)] for every pair of window weights over k."""
    window = validate_window(gammas, deform, depth, order)
    n = len(window)
    Zbar = [verma(window.reduced[p], window, "k") for p in range(n)]
    report = DualityReport(window)
    lhs = [[0] * n for _ in range(n)]
    rhs = [[0] * n for _ in range(n)]
    for mu in range(n):
        Pbar = build_projective(window.reduced[mu], window, "k")
        summand = indecomposable_summand(Pbar)
        I = summand.module
        for lam in range(n):
            lhs[lam][mu] = graded_hom_dim(I, Zbar[lam])
        if deform:
            S, eps = _r_side_attachment(window, mu, summand.idempotent)
            for m in S:
                q = mu
                for _ in range(m):
                    q = window.up[q]
                rhs[q][mu] += 1
            P = build_projective(window.values[mu], window, "K")
            tr = _trace_character(P, eps)
            want = {}
            for m in S:
                q = mu
                for _ in range(m):
                    q = window.up[q]
                while q is not None:
                    want[q] = want.get(q, 0) + 1
                    q = window.down[q]
            got = {p: v for p, v in tr.items() if v}
            ok = all(got.get(p, 0) == want.get(p, 0) for p in set(got) | set(want))
            report.audits.append({"name": f"K-character of I({window.values[mu]})'", "passed": ok,
                                  "lhs": {str(window.values[p]): str(v) for p, v in sorted(got.items())},
                                  "rhs": {str(window.values[p]): v for p, v in sorted(want.items())}})
        else:
            counts = verma_character_counts(I)
            for lam in range(n):
                rhs[lam][mu] = counts.get(lam, 0)
    bad = []
    for lam in range(n):
        for mu in range(n):
            cell = {"lambda": str(window.reduced[lam]), "mu": str(window.reduced[mu]),
                    "lhs": lhs[lam][mu], "rhs": rhs[lam][mu], "equal": lhs[lam][mu] == rhs[lam][mu]}
            report.pairs.append(cell)
            if not cell["equal"]:
                bad.append(cell)
    if raise_on_mismatch:
        if bad:
            raise DualityMismatchError(bad)
        for a in report.audits:
            if not a["passed"]:
                raise AuditError(a["name"], a["lhs"], a["rhs"])
    return report
