import pytest

from cdelab import linalg as L
from cdelab.algebra import (
    Algebra,
    Representation,
    composition_series_oracle,
    direct_sum,
    endomorphism_algebra,
    extend_scalars,
    hom_space,
    indecomposable_projectives,
    is_local_endoring,
    jh_multiplicity,
    make_algebra,
    primitive_idempotents,
    radical,
    regular_module,
    simple_modules,
    top,
    zero_module,
)
from cdelab.deformations import random_split_algebra
from cdelab.errors import AssociativityError, InputError, UnitLawError
from cdelab.scalars import FunctionField, parse_scalar, residue_field

from oracles import brauer_column, character

k = residue_field(1)
K = FunctionField(1)


def kk():
    """k x k in the basis 1 = (1,1), e = (1,0)."""
    o, z = k.one, k.zero
    return Algebra("k", 1, [[[o, z], [z, o]], [[z, o], [z, o]]], 0)


# -- construction ----------------------------------------------------------------------


def test_trivial_algebra():
    A = make_algebra([[[K.one]]])
    assert A.dim == 1 and A.one() == [K.one]
    assert extend_scalars(A, "k").table == [[[k.one]]]


def test_hecke_a1_over_R_and_reduction(a1_m1):
    A = a1_m1.A
    q = parse_scalar("-1 + t")
    assert A.dim == 2
    assert A.table[1][1] == [q, q - 1]
    # reduction: sigma^2 = -2 sigma - 1
    assert a1_m1.Abar.table[1][1] == [k(-1), k(-2)]


def test_broken_structure_constant_is_not_associative():
    # sigma^2 = sigma + 1 is fine; break a_{12}^1 so that 1 * sigma picks up a 1-component
    o, z = K.one, K.zero
    table = [[[o, z], [o, o]], [[z, o], [o, o]]]
    with pytest.raises((AssociativityError, UnitLawError)):
        make_algebra(table)


def test_nonassociative_table_rejected():
    o, z = K.one, K.zero
    # basis 1, a, b with a*b = a, b*a = 0, a*a = b, b*b = 0: (a a) b = b b = 0 but a (a b) = a a = b
    table = [
        [[o, z, z], [z, o, z], [z, z, o]],
        [[z, o, z], [z, z, o], [z, o, z]],
        [[z, z, o], [z, z, z], [z, z, z]],
    ]
    with pytest.raises(AssociativityError):
        make_algebra(table)


def test_unit_law_checked():
    o, z = K.one, K.zero
    with pytest.raises(UnitLawError):
        make_algebra([[[z, o], [o, z]], [[o, z], [z, o]]], unit=1)


def test_extend_scalars_needs_R():
    with pytest.raises(InputError):
        extend_scalars(kk(), "K")


def test_a2_over_K_is_six_dimensional(a2_z3):
    assert a2_z3.AK.dim == 6 and a2_z3.AK.tag == "K"


# -- regular module -------------------------------------------------------------------


def test_regular_module_is_left_multiplication(a1_m1):
    M = regular_module(a1_m1.A)
    q = parse_scalar("-1 + t")
    # sigma * 1 = sigma, sigma * sigma = q + (q - 1) sigma
    assert M.mats[1] == [[K.zero, q], [K.one, q - 1]]
    assert M.mats[0] == L.identity(2, K.zero, K.one)


def test_regular_module_a2(a2_z3):
    M = regular_module(a2_z3.AK)
    assert M.dim == 6
    for i in range(6):
        for j in range(6):
            lhs = L.matmul(M.mats[i], M.mats[j], K.zero)
            rhs = M.action(a2_z3.AK.mul(a2_z3.AK.basis(i), a2_z3.AK.basis(j)))
            assert lhs == rhs


# -- radical, idempotents, projectives ----------------------------------------------------


def test_radical_hecke_a1_at_minus_one(a1_m1):
    J = radical(a1_m1.Abar)
    assert len(J) == 1
    v = J[0]
    assert v[0] == v[1] and v[0]  # spanned by 1 + sigma


def test_radical_generic_a2_is_zero(a2_z3):
    assert radical(a2_z3.AK) == []


def test_radical_trivial():
    assert radical(extend_scalars(make_algebra([[[K.one]]]), "k")) == []


def test_local_algebra_has_only_the_unit(a1_m1):
    idems = primitive_idempotents(a1_m1.Abar)
    assert len(idems) == 1 and idems.elements[0] == a1_m1.Abar.one()


def test_product_algebra_idempotents():
    A = kk()
    idems = primitive_idempotents(A)
    got = {tuple(e) for e in idems.elements}
    assert got == {(k.zero, k.one), (k.one, -k.one)}


def test_a2_zeta3_blocks(a2_z3):
    idems = primitive_idempotents(a2_z3.Abar)
    A = a2_z3.Abar
    # orthogonal, complete, primitive
    total = A.zero()
    for e in idems.elements:
        assert A.mul(e, e) == e
        total = A.add(total, e)
    assert total == A.one()
    for i, e in enumerate(idems.elements):
        for j, f in enumerate(idems.elements):
            if i != j:
                assert A.mul(e, f) == A.zero()
    assert sorted(P.dim for P in indecomposable_projectives(A)) == [3, 3]


def test_a2_q0_projectives(a2_t):
    assert sorted(P.dim for P in indecomposable_projectives(a2_t.Abar)) == [1, 1, 2, 2]


def test_a1_projective_is_regular(a1_m1):
    Ps = indecomposable_projectives(a1_m1.Abar)
    assert [P.dim for P in Ps] == [2]


def test_top_of_regular_a1(a1_m1):
    S = top(regular_module(a1_m1.Abar))
    assert S.dim == 1 and S.mats[1] == [[k(-1)]]


def test_top_of_sign_projective_a2(a2_z3):
    for P in indecomposable_projectives(a2_z3.Abar):
        S = top(P)
        if S.mats[1] == [[k(-1)]]:
            assert S.mats[2] == [[k(-1)]] and P.dim == 3
            break
    else:
        pytest.fail("no projective with the sign top")


def test_top_of_trivial():
    A = extend_scalars(make_algebra([[[K.one]]]), "k")
    assert top(regular_module(A)).dim == 1


# -- Hom and multiplicities --------------------------------------------------------------


def test_schur(a2_z3):
    S = simple_modules(a2_z3.Abar)
    assert len(hom_space(S[0], S[0])) == 1
    assert len(hom_space(S[0], S[1])) == 0


def test_hom_between_projectives_is_cartan_entry(a2_z3):
    P = indecomposable_projectives(a2_z3.Abar)
    assert len(hom_space(P[0], P[1])) == 1
    assert len(hom_space(P[0], P[0])) == 2


def test_hom_space_elements_intertwine(a2_t):
    P = indecomposable_projectives(a2_t.Abar)
    R = regular_module(a2_t.Abar)
    for F in hom_space(P[2], R):
        for g in range(6):
            assert L.matmul(F, P[2].mats[g], k.zero) == L.matmul(R.mats[g], F, k.zero)


def test_jh_a1(a1_m1):
    assert jh_multiplicity(regular_module(a1_m1.Abar), 0) == 2
    assert composition_series_oracle(regular_module(a1_m1.Abar)) == [2]


def test_jh_a2_projective(a2_z3):
    P = indecomposable_projectives(a2_z3.Abar)
    assert jh_multiplicity(P[0], 0) == 2
    assert composition_series_oracle(P[0]) == [2, 1]


def test_jh_zero_module(a2_z3):
    Z = zero_module(a2_z3.Abar)
    assert jh_multiplicity(Z, 0) == 0


def test_composition_series_of_simple(a2_z3):
    S = simple_modules(a2_z3.Abar)
    assert composition_series_oracle(S[1]) == [0, 1]


def test_local_endoring(a2_z3):
    S = simple_modules(a2_z3.Abar)
    P = indecomposable_projectives(a2_z3.Abar)
    assert is_local_endoring(S[0])
    assert all(is_local_endoring(p) for p in P)
    assert not is_local_endoring(direct_sum(S[0], S[1]))


def test_endomorphism_algebras(a2_z3):
    S = simple_modules(a2_z3.Abar)
    P = indecomposable_projectives(a2_z3.Abar)
    assert endomorphism_algebra(S[0]).dim == 1
    assert endomorphism_algebra(direct_sum(S[0], S[0])).dim == 4
    E = endomorphism_algebra(P[0])
    assert E.dim == 2 == len(hom_space(P[0], P[0]))
    assert len(radical(E)) == 1


def test_non_split_simple_detected():
    """Q(i) as an algebra over Q: no k-simple is absolutely simple."""
    from cdelab.errors import NonSplitError

    o, z = k.one, k.zero
    A = Algebra("k", 1, [[[o, z], [z, o]], [[z, o], [-o, z]]], 0)
    with pytest.raises(NonSplitError):
        primitive_idempotents(A)


# -- oracle equivalence on many modules --------------------------------------------------


def _modules_for(A):
    Abar = extend_scalars(A, "k")
    mods = [regular_module(Abar)] + indecomposable_projectives(Abar) + simple_modules(Abar)
    mods.append(direct_sum(*indecomposable_projectives(Abar)))
    return Abar, mods


@pytest.mark.parametrize("seed", range(12))
def test_jh_multiplicity_matches_both_oracles(seed):
    A, _ = random_split_algebra(seed)
    Abar, mods = _modules_for(A)
    S = simple_modules(Abar)
    chars = [character(s) for s in S]
    for M in mods:
        assert M.dim <= 60
        fast = [jh_multiplicity(M, i) for i in range(len(S))]
        assert fast == composition_series_oracle(M)
        assert fast == brauer_column(character(M), chars)


def test_representation_checks_homomorphism(a1_m1):
    with pytest.raises(InputError):
        Representation(a1_m1.Abar, [[[k.one]], [[k(2)]]])
