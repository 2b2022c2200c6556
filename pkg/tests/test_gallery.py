import ast
import itertools
import logging

import hypothesis
import hypothesis.strategies as st
import pytest

from fincat.adjoint import is_equivalence
from fincat.completion import split_idempotent
from fincat.core import Functor, identity_functor
from fincat.errors import NotABasis, NotCentralIdempotent, ValidationError
from fincat.gallery import (
    RingMorphism,
    RingTable,
    all_functors,
    bimodule_retraction_search,
    central_idempotent_nat,
    chain,
    dual_numbers_f2,
    element,
    f2,
    f2xf2,
    f4,
    find_basis,
    finite_sets,
    free_module_cat,
    identity_ring_morphism,
    induction_functor,
    module_cat,
    monoid,
    product_cat,
    restriction_functor,
    separability_idempotent_search,
    split_retract,
    terminal,
    unit_map,
    walking_arrow,
    walking_idempotent,
    zero_ring,
)

import oracles


def test_small_categories():
    assert walking_idempotent().n_mor == 2
    Z2 = monoid("Z2")
    assert Z2.n_mor == 2 and all(Z2.is_iso(f) for f in Z2.morphisms)
    C = split_retract()
    P = product_cat(terminal(), C)
    proj = Functor(P, C, list(C.objects), list(C.morphisms))
    assert is_equivalence(proj)


def test_free_modules_over_f2():
    C = free_module_cat(f2(), 1)
    assert (C.n_obj, C.n_mor) == (2, 5)
    assert len(C.hom(1, 1)) == 2
    zero = free_module_cat(f2(), 0)
    assert (zero.n_obj, zero.n_mor) == (1, 1)
    assert len(free_module_cat(f2xf2(), 1).hom(1, 1)) == 4


def test_central_idempotents():
    R = f2xf2()
    e = central_idempotent_nat(R, 1, R.one)
    C = free_module_cat(R, 1)
    assert e.components == tuple(C.ident)
    z = element(R, (1, 0))
    for rank in (1, 2):
        e = central_idempotent_nat(R, rank, z)
        C = free_module_cat(R, rank)
        assert split_idempotent(C, e[1]) is None
        assert not oracles.splits(C, e[1])
    e0 = central_idempotent_nat(R, 1, R.zero)
    y, p, i = split_idempotent(free_module_cat(R, 1), e0[1])
    assert y == 0


def test_non_idempotent_scalar_rejected():
    D = dual_numbers_f2()
    with pytest.raises(NotCentralIdempotent):
        central_idempotent_nat(D, 1, element(D, (0, 1)))


def test_induction():
    R = f2()
    assert induction_functor(identity_ring_morphism(R), 1) == identity_functor(free_module_cat(R, 1))
    phi = unit_map(f2xf2())
    F = induction_functor(phi, 1)
    M = module_cat(f2xf2(), 1)
    one_R = free_module_cat(R, 1).hom(1, 1)[1]
    assert M.matrix[F.mor[one_R]] == (element(f2xf2(), (1, 1)),)


def test_induction_to_zero_ring_is_flagged(caplog):
    phi = RingMorphism(f2(), zero_ring(), (0, 0))
    with caplog.at_level(logging.WARNING):
        induction_functor(phi, 1)
    assert "zero ring" in caplog.text


def test_restriction():
    R = f2()
    Id = restriction_functor(identity_ring_morphism(R), (R.one,), 1)
    assert Id.mor == tuple(free_module_cat(R, 1).morphisms)
    phi = unit_map(f2xf2())
    basis = find_basis(phi)
    assert len(basis) == 2
    Res = restriction_functor(phi, basis, 1)
    assert Res.ob == (0, 2)
    proj = RingMorphism(f2xf2(), f2(), tuple(ast.literal_eval(s)[0] for s in f2xf2().elements))
    with pytest.raises(NotABasis):
        find_basis(proj)


def test_bimodule_retractions():
    R = f2()
    assert bimodule_retraction_search(identity_ring_morphism(R)) == (0, 1)
    phi = unit_map(f2xf2())
    E = bimodule_retraction_search(phi)
    assert all(E[phi(r)] == r for r in range(R.size))
    for S in (f4(), dual_numbers_f2()):
        phi = unit_map(S)
        found = bimodule_retraction_search(phi)
        brute = [E for E in itertools.product(range(2), repeat=S.size)
                 if all(E[S.add[s][t]] == (E[s] + E[t]) % 2 for s in range(S.size) for t in range(S.size))
                 and E[phi(1)] == 1 and E[phi(0)] == 0]
        assert (found is not None) == bool(brute)


def test_separability_idempotents():
    R = f2()
    assert separability_idempotent_search(identity_ring_morphism(R), (R.one,)) == (R.one,)
    S = f2xf2()
    phi = unit_map(S)
    basis = (element(S, (1, 0)), element(S, (0, 1)))
    assert separability_idempotent_search(phi, basis) == basis
    D = dual_numbers_f2()
    assert separability_idempotent_search(unit_map(D), find_basis(unit_map(D))) is None


def test_bad_ring_rejected():
    with pytest.raises(ValidationError):
        RingTable("bad", ("0", "1"), ((0, 1), (1, 1)), ((0, 0), (0, 1)), 0, 1)


def test_finite_sets():
    C = finite_sets([0, 1, 2])
    assert C.n_mor == 1 + 1 + 1 + 0 + 1 + 2 + 0 + 1 + 4
    assert len(C.hom(2, 2)) == 4


SMALL = [terminal(), walking_idempotent(), walking_arrow(), monoid("Z2"), monoid("nil2"),
         split_retract(), chain(3)]


@hypothesis.settings(max_examples=40, deadline=None)
@hypothesis.given(st.sampled_from(SMALL), st.sampled_from(SMALL))
def test_functor_enumeration_matches_oracle(C, D):
    found = [(F.ob, F.mor) for F in all_functors(C, D)]
    assert found == sorted(oracles.all_functor_tables(C, D))
