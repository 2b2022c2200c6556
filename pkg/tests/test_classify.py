import hypothesis
import hypothesis.strategies as st
import pytest

from fincat.classify import (
    associated_idempotent,
    classify,
    enumerate_hom_retractions,
    is_conservative,
    is_dual_maschke,
    is_faithful,
    is_full,
    is_fully_faithful,
    is_maschke,
    is_semiseparable,
    is_separable,
    is_surjective_utr,
    raw_candidate_count,
    search_hom_retraction,
)
from fincat.completion import karoubi
from fincat.config import budget
from fincat.core import Functor, compose_functors, compose_hom_retractions, hom_retraction_diagnostics, identity_functor
from fincat.errors import BudgetExceeded
from fincat.gallery import all_functors, chain, monoid
from fincat import suite

import oracles


def test_faithful_full_examples(E, collapse):
    Id = identity_functor(E)
    assert is_faithful(Id) and is_full(Id)
    assert is_full(collapse) and not is_faithful(collapse)
    assert is_fully_faithful(karoubi(E).iota)


def test_identity_separable_with_identity_family(E):
    P = search_hom_retraction(identity_functor(E), "sep")
    assert P.maps == {(0, 0): {0: 0, 1: 1}}


def test_collapse_semiseparable_uniquely(collapse, E):
    all_semi = enumerate_hom_retractions(collapse, "semisep")
    assert len(all_semi) == 1 and all_semi[0](0, 0, 0) == E.mor("e")
    assert search_hom_retraction(collapse, "sep") is None
    assert len(enumerate_hom_retractions(identity_functor(collapse.target), "semisep")) == 1


def test_inclusion_into_envelope_count_matches_oracle(arrow):
    iota = karoubi(arrow).iota
    for mode in ("semisep", "sep", "natfull"):
        assert len(enumerate_hom_retractions(iota, mode)) == len(oracles.brute_retractions(iota, mode))


def test_associated_idempotents(E, collapse):
    P = search_hom_retraction(collapse, "semisep")
    assert associated_idempotent(collapse, P).components == (E.mor("e"),)
    Id = identity_functor(E)
    assert associated_idempotent(Id, search_hom_retraction(Id, "sep")).components == (0,)


def test_reflecting_properties(E, collapse):
    Id = identity_functor(E)
    assert is_maschke(Id) and is_dual_maschke(Id) and is_conservative(Id)
    v = is_conservative(collapse)
    assert not v and v.witness == E.mor("e")


def test_surjectivity_up_to_retracts(E, one):
    assert is_surjective_utr(identity_functor(E))
    assert is_surjective_utr(karoubi(E).iota)
    two = chain(2)
    pick = Functor(one, two, [0], [two.ident[0]])
    v = is_surjective_utr(pick)
    assert not v and v.witness == 1


def test_report_aggregates(collapse):
    rep = classify(collapse)
    assert rep.semiseparable and not rep.separable and rep.naturally_full
    assert rep.full and not rep.faithful and not rep.conservative and rep.surjective_utr
    assert rep.witnesses["idempotent"].components == (1,)


def test_budget_is_enforced(one):
    L = monoid("left_zero")
    G = Functor(L, one, [0], [0, 0, 0])
    with budget(2):
        with pytest.raises(BudgetExceeded):
            search_hom_retraction(G, "semisep")
    assert search_hom_retraction(Functor(L, one, [0], [0, 0, 0]), "semisep") is None


SMALL = [it for it in suite.functors() if raw_candidate_count(it.value) <= oracles.RAW_LIMIT]


@pytest.mark.parametrize("item", SMALL, ids=lambda it: it.label)
def test_search_matches_brute_force(item):
    F = item.value
    assert raw_candidate_count(F) == oracles.raw_count(F)
    for mode in ("semisep", "sep", "natfull"):
        brute = oracles.brute_retractions(F, mode)
        found = search_hom_retraction(F, mode)
        assert (found is not None) == bool(brute)
        if brute:
            assert found.values() == brute[0]
            assert [P.values() for P in enumerate_hom_retractions(F, mode)] == brute
    assert bool(is_faithful(F)) == oracles.faithful(F)
    assert bool(is_full(F)) == oracles.full(F)


def test_every_small_suite_functor_is_covered():
    assert len(SMALL) >= 250


TINY = [it.value for it in suite.tiny_functors()]


@hypothesis.settings(max_examples=80, deadline=None)
@hypothesis.given(st.sampled_from(TINY), st.data())
def test_composite_witnesses(F, data):
    Gs = all_functors(F.target, F.target, limit=30)
    G = data.draw(st.sampled_from(Gs))
    for mode in ("sep", "semisep", "natfull"):
        PF, PG = search_hom_retraction(F, mode), search_hom_retraction(G, mode)
        if PF is None or PG is None:
            continue
        P = compose_hom_retractions(PF, PG)
        if mode == "semisep":
            # composites of semiseparable functors need not be semiseparable; only naturality is kept
            assert hom_retraction_diagnostics(P) == []
        else:
            assert hom_retraction_diagnostics(P, mode) == []
            assert search_hom_retraction(compose_functors(G, F), mode) is not None


@hypothesis.settings(max_examples=80, deadline=None)
@hypothesis.given(st.sampled_from(TINY))
def test_separable_iff_trivial_idempotent(F):
    P = search_hom_retraction(F, "semisep")
    if P is None:
        assert not is_separable(F)
        return
    e = associated_idempotent(F, P)
    assert bool(is_separable(F)) == (e.components == tuple(F.source.ident))
    assert bool(is_semiseparable(F))
