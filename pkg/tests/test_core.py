import hypothesis
import hypothesis.strategies as st
import pytest

from fincat.core import (
    FinCat,
    Functor,
    NatTrans,
    compose_functors,
    hom_set,
    identity_functor,
    identity_nat,
    nat_vertical,
    nat_whisker,
    opposite,
    sample_associativity,
    validate_category,
)
from fincat.errors import BoundaryMismatch, UnknownObject, ValidationError
from fincat.gallery import all_functors, chain, monoid, split_retract, walking_arrow
from fincat.serialize import category_to_json

import oracles


def e_table(ee="e"):
    return (["*"], [("id", "*", "*"), ("e", "*", "*")], {"*": "id"},
            [["id", "id", "id"], ["id", "e", "e"], ["e", "id", "e"], ["e", "e", ee]])


def test_walking_idempotent_is_valid():
    C = validate_category(*e_table())
    assert (C.n_obj, C.n_mor) == (1, 2)


def test_walking_idempotent_triples_match_oracle():
    assert oracles.category_violations(*e_table()) == []


def test_terminal_is_valid(one):
    doc = category_to_json(one)
    assert validate_category(doc["objects"], [(m["name"], m["dom"], m["cod"]) for m in doc["morphisms"]],
                             doc["identities"], doc["composition"]) == one


def test_e_squared_identity_is_the_group_of_order_two():
    # with e∘e = id every law still holds: this is Z/2, so no violation is reported
    assert oracles.category_violations(*e_table("id")) == []
    C = validate_category(*e_table("id"))
    assert C.inverse(C.mor("e")) == C.mor("e")


def test_validation_reports_every_problem():
    objs, mors, ids, comp = e_table()
    with pytest.raises(ValidationError) as exc:
        validate_category(objs + ["*"], mors + [("e", "*", "nowhere")], ids, comp + [["id", "q", "e"]])
    kinds = {d.kind for d in exc.value.diagnostics}
    assert kinds == {"DuplicateName", "DanglingReference"}


def test_missing_composite_and_unit_failure():
    objs, mors, ids, comp = e_table()
    with pytest.raises(ValidationError) as exc:
        validate_category(objs, mors, ids, comp[:-1])
    assert [d.kind for d in exc.value.diagnostics] == ["MissingComposite"]
    bad = [["id", "id", "id"], ["id", "e", "id"], ["e", "id", "e"], ["e", "e", "e"]]
    with pytest.raises(ValidationError) as exc:
        validate_category(objs, mors, ids, bad)
    assert "LeftUnitLaw" in {d.kind for d in exc.value.diagnostics}


def test_opposites(one, E):
    assert opposite(one) == one
    assert opposite(E) == E
    op = opposite(walking_arrow())
    assert (op.n_obj, op.n_mor) == (2, 3)
    a = op.mor("a")
    assert (op.dom[a], op.cod[a]) == (1, 0)
    assert opposite(opposite(split_retract())) == split_retract()


def test_hom_sets(E, one, arrow):
    assert hom_set(E, "*", "*") == [0, 1]
    assert hom_set(one, 0, 0) == [0]
    assert hom_set(arrow, "1", "0") == []
    with pytest.raises(UnknownObject):
        hom_set(arrow, "2", "0")


def test_identity_composition_and_whiskering(collapse, point, one):
    assert compose_functors(identity_functor(collapse.target), collapse) == collapse
    assert compose_functors(collapse, point) == identity_functor(one)
    idn = identity_nat(collapse)
    assert nat_whisker(identity_functor(one), idn) == identity_nat(compose_functors(identity_functor(one), collapse))
    assert nat_whisker(idn, identity_functor(collapse.source)).components == idn.components
    assert nat_vertical(idn, idn) == idn


def test_boundary_mismatch(collapse):
    with pytest.raises(BoundaryMismatch):
        compose_functors(collapse, collapse)


def test_functor_validation(E, one):
    with pytest.raises(ValidationError) as exc:
        Functor(one, E, [0], [1])
    assert exc.value.diagnostics[0].kind == "IdentityNotPreserved"


def test_naturality_checked(E):
    Id = identity_functor(E)
    assert NatTrans(Id, Id, [1]).is_seminatural()
    L = monoid("left_zero")
    IdL = identity_functor(L)
    with pytest.raises(ValidationError) as exc:
        NatTrans(IdL, IdL, [L.mor("x")])
    assert exc.value.diagnostics[0].kind == "NotNatural"


def test_sampled_associativity_is_clean():
    assert sample_associativity(chain(4), samples=200) == []


@st.composite
def monoid_tables(draw):
    n = draw(st.integers(1, 3))
    cells = draw(st.lists(st.integers(0, n - 1), min_size=n * n, max_size=n * n))
    rows = [cells[i * n:(i + 1) * n] for i in range(n)]
    for i in range(n):
        rows[0][i] = i
        rows[i][0] = i
    names = [f"m{i}" for i in range(n)]
    comp = [[names[g], names[f], names[rows[g][f]]] for g in range(n) for f in range(n)]
    return ["*"], [(m, "*", "*") for m in names], {"*": names[0]}, comp


@hypothesis.settings(max_examples=150, deadline=None)
@hypothesis.given(monoid_tables())
def test_validator_agrees_with_oracle(table):
    expected_ok = oracles.category_violations(*table) == []
    try:
        validate_category(*table)
        ok = True
    except ValidationError:
        ok = False
    assert ok == expected_ok


SMALL = [monoid("Z2"), monoid("nil2"), split_retract(), chain(2), walking_arrow()]


@hypothesis.settings(max_examples=60, deadline=None)
@hypothesis.given(st.sampled_from(SMALL), st.sampled_from(SMALL), st.sampled_from(SMALL),
                  st.data())
def test_functor_composition_is_associative(A, B, C, data):
    fs = [all_functors(A, B), all_functors(B, C)]
    hypothesis.assume(all(fs))
    F = data.draw(st.sampled_from(fs[0]))
    G = data.draw(st.sampled_from(fs[1]))
    H = identity_functor(C)
    assert compose_functors(H, compose_functors(G, F)) == compose_functors(compose_functors(H, G), F)
    assert compose_functors(G, identity_functor(B)) == G


def test_equality_is_by_table(E):
    other = FinCat(["*"], [("id", 0, 0), ("e", 0, 0)], [0], dict(E.table))
    assert other == E and hash(other) == hash(E)
