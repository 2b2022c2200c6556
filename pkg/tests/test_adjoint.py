import hypothesis
import hypothesis.strategies as st
import pytest

from fincat.adjoint import (
    Adjunction,
    charact_coreflection_utr,
    charact_reflection_utr,
    find_left_adjoint,
    find_right_adjoint,
    identity_adjunction,
    is_bireflection,
    is_bireflection_utr,
    is_coreflection,
    is_coreflection_utr,
    is_equivalence,
    is_equivalence_utr,
    opposite_adjunction,
    quasi_inverse,
    semiadjunction_from_right_semiadjoint,
    trinat_witness,
    validate_adjunction,
    validate_semiadjunction,
)
from fincat.coident import coidentifier, quotient_semiadjunction
from fincat.completion import complete_functor, is_idempotent_complete, karoubi, upsilon
from fincat.core import NatTrans, compose_functors, identity_functor
from fincat.errors import TriangleFailure, ValidationError
from fincat.gallery import chain, split_retract
from fincat.natsearch import iso_of_functors
from fincat import suite

import oracles


def test_identity_adjunction(E):
    Id = identity_functor(E)
    eta = NatTrans(Id, Id, [0])
    assert validate_adjunction(Id, Id, eta, eta) == identity_adjunction(E)


def one_e_data(point, collapse):
    C, D = point.source, point.target
    unit = NatTrans(identity_functor(C), compose_functors(collapse, point), [0], check=False)
    counit = NatTrans(compose_functors(point, collapse), identity_functor(D), [0], check=False)
    return unit, counit


def test_point_and_collapse_with_identity_unit_and_counit_form_an_adjunction(point, collapse):
    # expected to fail: the counit id is not natural (ε∘FG(e) = id but e∘ε = e)
    unit, counit = one_e_data(point, collapse)
    validate_adjunction(point, collapse, unit, counit)


def test_point_and_collapse_admit_no_adjunction(point, collapse, E):
    unit, counit = one_e_data(point, collapse)
    with pytest.raises(ValidationError) as exc:
        validate_adjunction(point, collapse, unit, counit)
    assert exc.value.diagnostics[0].kind == "NotNatural"
    forced = NatTrans(counit.source, counit.target, [E.mor("e")])
    with pytest.raises(TriangleFailure):
        validate_adjunction(point, collapse, unit, forced)
    assert find_left_adjoint(collapse) is None
    assert find_right_adjoint(collapse) is None
    assert not oracles.has_left_adjoint(collapse)


def test_collapse_has_left_adjoint_picking_the_point(collapse):
    # expected to fail: c↓G has no initial object since Hom(∗, ∗) has two elements
    A = find_left_adjoint(collapse)
    assert A is not None and A.F.ob == (0,) and A.unit.components == (0,)


def test_left_adjoint_examples(E):
    Id = identity_functor(E)
    assert find_left_adjoint(Id).F == Id
    q = coidentifier(E, NatTrans(Id, Id, [1]))
    Hn = complete_functor(q.H)
    A = find_left_adjoint(Hn)
    assert A.F.ob == (karoubi(E).obj_of(0, 1),)


def test_isos(E, collapse, point):
    Id = identity_functor(E)
    assert iso_of_functors(Id, Id).components == (0,)
    e_const = compose_functors(point, collapse)
    assert iso_of_functors(Id, e_const) is None


def test_reflection_examples(E, collapse):
    Id = identity_functor(E)
    assert is_bireflection(Id)
    assert not is_bireflection(collapse)
    C = split_retract()
    assert is_idempotent_complete(C)
    iota = karoubi(C).iota
    assert is_equivalence(iota)
    assert quasi_inverse(iota) is not None
    q = coidentifier(E, NatTrans(Id, Id, [1]))
    assert is_bireflection_utr(q.H)
    assert is_equivalence_utr(karoubi(E).iota)
    assert is_coreflection_utr(collapse) and not is_equivalence_utr(collapse)


def test_semiadjunction_from_adjunction_is_unchanged(E):
    A = identity_adjunction(E)
    Fp, S, e = semiadjunction_from_right_semiadjoint(A.F, A.G, A.unit, A.counit)
    assert (Fp.ob, Fp.mor) == (A.F.ob, A.F.mor) and e == list(E.ident)


def test_upsilon_iota_semiadjunction_reproduces_itself(E):
    u = upsilon(E)
    S = u.upsilon_iota
    Fp, S2, e = semiadjunction_from_right_semiadjoint(S.F, S.G, S.unit, S.counit)
    assert Fp.mor == S.F.mor


@pytest.mark.parametrize("item", suite.categories(), ids=lambda it: it.label)
def test_upsilon_iota_is_a_semiadjunction(item):
    u = upsilon(item.value)
    S = u.upsilon_iota
    validate_semiadjunction(S.F, S.G, S.unit, S.counit)


def test_coreflection_mechanisms(E):
    Id = identity_functor(E)
    q = coidentifier(E, NatTrans(Id, Id, [1]))
    S = quotient_semiadjunction(q)
    v = charact_coreflection_utr(S)
    assert v and v.witness.components == tuple(q.cat.ident)
    A = identity_adjunction(E)
    assert charact_coreflection_utr(A).witness.components == (0,)
    assert charact_reflection_utr(A).witness.components == (0,)
    assert trinat_witness(A.F, A.G, A.unit, A.counit).components == (0,)


SMALL_FUNCTORS = [it.value for it in suite.tiny_functors()
                  if it.value.source.n_mor <= 6 and it.value.target.n_mor <= 6]


@pytest.mark.parametrize("G", SMALL_FUNCTORS[:60])
def test_left_adjoint_existence_matches_oracle(G):
    assert (find_left_adjoint(G) is not None) == oracles.has_left_adjoint(G)


ADJ = [it.value for it in suite.adjunctions()]


@hypothesis.settings(max_examples=80, deadline=None)
@hypothesis.given(st.sampled_from(ADJ))
def test_hom_set_bijection(A):
    C, D, F, G = A.C, A.D, A.F, A.G
    for c in C.objects:
        for d in D.objects:
            image = sorted(C.table[(G.mor[f], A.unit[c])] for f in D.hom(F.ob[c], d))
            assert image == sorted(C.hom(c, G.ob[d]))
    op = opposite_adjunction(opposite_adjunction(A))
    assert (op.F.mor, op.G.mor, op.unit.components) == (F.mor, G.mor, A.unit.components)


@hypothesis.settings(max_examples=40, deadline=None)
@hypothesis.given(st.sampled_from(ADJ))
def test_coreflection_iff_unit_iso(A):
    assert bool(is_coreflection(A.G)) == (A.unit.is_iso() and find_left_adjoint(A.G) is not None)


def test_isinstance_of_adjunction():
    assert isinstance(identity_adjunction(chain(2)), Adjunction)
