import hypothesis
import hypothesis.strategies as st
import pytest

from fincat.adjoint import identity_adjunction, opposite_adjunction
from fincat.classify import is_semiseparable, is_separable
from fincat.completion import karoubi
from fincat.core import compose_functors, identity_functor
from fincat.gallery import finite_sets, monoid
from fincat.monadics import (
    Monad,
    audit,
    comonad_of,
    comparison,
    em_category,
    is_separable_monad,
    iter_monads,
    kleisli_category,
    kleisli_comparison,
    monad_of,
)
from fincat import suite

import oracles


def test_identity_adjunction_gives_identity_monad(E):
    M = monad_of(identity_adjunction(E))
    assert M.T == identity_functor(E)
    assert M.mult.components == (0,) and M.unit.components == (0,)
    assert is_separable_monad(M).components == (0,)


def test_identity_monad_constructions(E, one):
    for C in (one, E):
        M = monad_of(identity_adjunction(C))
        em = em_category(M)
        assert em.objs == tuple((x, C.ident[x]) for x in C.objects)
        assert em.cat.n_mor == C.n_mor
        kl = kleisli_category(M, em)
        assert kl.cat.n_mor == C.n_mor
        assert kl.J.ob == tuple(range(C.n_obj))
        assert comparison(identity_adjunction(C)).K.mor == tuple(C.morphisms)


def test_terminal_to_envelope_of_e(E):
    A = suite.one_to_karoubi_e()
    M = monad_of(A)
    assert M.T == identity_functor(A.C)
    assert is_separable_monad(M) is not None
    K = comparison(A).K
    assert K.source == karoubi(E).cat and K.target.n_obj == 1
    assert K.mor == A.G.mor
    L = kleisli_comparison(A)
    assert L.ob == (karoubi(E).obj_of(0, 1),)
    W = comonad_of(A)
    assert W.unit.components == A.counit.components


def test_audit_of_identity_passes(E):
    rep = audit(identity_adjunction(E))
    assert rep.ok and all(c.holds for c in rep.clauses)


def test_audit_flags_for_terminal_to_envelope_of_e():
    rep = audit(suite.one_to_karoubi_e())
    assert rep.ok
    f = rep.facts
    assert (f["G_semisep"], f["G_sep"], f["monad_sep"], f["K_biref_utr"], f["K_equiv_utr"]) == (
        True, False, True, True, False)


def test_report_json_is_stable():
    a = audit(suite.one_to_karoubi_e()).to_json()
    b = audit(suite.one_to_karoubi_e()).to_json()
    assert a == b and "elapsed" not in a["clauses"][0]


MONAD_CATS = [it for it in suite.categories() if oracles.is_tiny_for_monads(it.value)]
MONAD_CATS.append(suite.Item("finite_sets(0,1,2)", finite_sets([0, 1, 2])))


@pytest.mark.parametrize("item", MONAD_CATS, ids=lambda it: it.label)
def test_every_monad_is_idempotent_and_separable(item):
    C = item.value
    count = 0
    for M in iter_monads(C):
        count += 1
        assert all(C.is_iso(m) for m in M.mult.components)
        sigma = is_separable_monad(M)
        assert sigma is not None
        inverse = tuple(C.inverse(m) for m in M.mult.components)
        assert oracles.monad_separable(M.T.ob, M.T.mor, M.mult.components, C) is not None
        assert all(C.table[(M.mult[x], s)] == C.ident[M.T.ob[x]] for x, s in enumerate(sigma.components))
        assert sigma.components == inverse
    assert count >= 1


def test_no_non_separable_monad_on_two_object_categories():
    seen = 0
    for item in suite.categories():
        C = item.value
        if C.n_obj != 2 or not oracles.is_tiny_for_monads(C):
            continue
        for M in iter_monads(C):
            seen += 1
            assert is_separable_monad(M) is not None
    assert seen > 0


ADJ = [it.value for it in suite.adjunctions()]


@hypothesis.settings(max_examples=60, deadline=None)
@hypothesis.given(st.sampled_from(ADJ))
def test_monad_laws_and_comparison(A):
    M = monad_of(A)
    Monad(M.T, M.mult, M.unit)
    cmp = comparison(A)
    assert compose_functors(cmp.em.U, cmp.K) == A.G
    assert compose_functors(cmp.K, A.F) == cmp.em.V
    kl = kleisli_category(M, cmp.em)
    L = kleisli_comparison(A, kl)
    assert compose_functors(cmp.K, L) == kl.J


@hypothesis.settings(max_examples=40, deadline=None)
@hypothesis.given(st.sampled_from(ADJ))
def test_audit_sides_are_independent_decisions(A):
    rep = audit(A)
    assert rep.ok
    assert rep.facts["G_semisep"] == bool(is_semiseparable(A.G))
    assert rep.facts["G_sep"] == bool(is_separable(A.G))


@pytest.mark.parametrize("A", ADJ[:40])
def test_audit_of_opposite_adjunction(A):
    assert audit(opposite_adjunction(A)).ok


def test_monoid_monads_are_identities():
    for name in ("Z2", "nil2", "semilattice"):
        C = monoid(name)
        for M in iter_monads(C):
            assert M.T.ob == (0,)
