"""Algebras and lattice families shared across test modules."""

from cdelab.algebra import direct_sum, extend_scalars, hom_space, regular_module
from cdelab.hecke import HeckeSpec, hecke_algebra, hecke_k_simples
from cdelab.lattices import hom_lattice, reduce_lattice, spin_lattice, standard_lattice
from cdelab.scalars import FunctionField

K = FunctionField(1)


class HeckeCase:
    def __init__(self, type_, q, order):
        self.spec = HeckeSpec.parse(type_, q, order)
        self.A = hecke_algebra(self.spec)
        self.AK = extend_scalars(self.A, "K")
        self.Abar = extend_scalars(self.A, "k")

    @property
    def simples(self):
        return hecke_k_simples(self.spec)


def lattice_pool(case):
    """Several seeds in each simple, the regular lattice and a sum of two simples."""
    t = K.t
    o, z = K.one, K.zero
    pool = []
    for M in case.simples:
        pool.append(standard_lattice(M))
        if M.dim > 1:
            pool.append(spin_lattice(M, [[o, o], [t, z]]))
            pool.append(spin_lattice(M, [[z, o]]))
        pool.append(spin_lattice(M, [[K(3) + t] + [z] * (M.dim - 1)] + [
            [o if i == j else z for i in range(M.dim)] for j in range(1, M.dim)]))
    pool.append(standard_lattice(regular_module(case.AK)))
    S = direct_sum(case.simples[0], case.simples[-1])
    pool.append(standard_lattice(S))
    pool.append(spin_lattice(S, [[o] * S.dim]))
    if len(pool) < 10:
        for c in (K(2), t + 1, K(5) - t, t * t + 3, K(-7)):
            pool.append(spin_lattice(case.simples[0], [[c] + [z] * (case.simples[0].dim - 1)]))
    return pool


def three_dims(P, M):
    """(rank over R, dim over K, dim over k) of the intertwiners P -> M."""
    return (len(hom_lattice(P, M)),
            len(hom_space(P.representation(), M.representation())),
            len(hom_space(reduce_lattice(P), reduce_lattice(M))))
