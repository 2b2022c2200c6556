"""The standard corpus of categories, functors and adjunctions, and the checks run over it."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .adjoint import (
    Adjunction,
    charact_coreflection_utr,
    counit_section,
    find_left_adjoint,
    find_right_adjoint,
    has_left_adjoint,
    has_right_adjoint,
    identity_adjunction,
    is_bireflection,
    is_coreflection,
    is_coreflection_utr,
    is_equivalence,
    is_equivalence_utr,
    is_reflection,
    opposite_adjunction,
    quasi_inverse,
    trinat_witness,
    unit_retraction,
)
from .classify import (
    associated_idempotent,
    enumerate_hom_retractions,
    is_dual_maschke,
    is_faithful,
    is_full,
    is_fully_faithful,
    is_maschke,
    is_naturally_full,
    is_semiseparable,
    is_separable,
    is_surjective_utr,
    search_hom_retraction,
)
from .coident import (
    canonical_factorization,
    coidentifier,
    coidentifier_lifts_idempotents,
    factor_through_coidentifier,
    factor_through_quotient,
    factors,
    idempotent_nats,
    quotient_semiadjunction,
)
from .completion import (
    complete_adjunction,
    complete_functor,
    complete_hom_retraction,
    is_idempotent_complete,
    karoubi,
    split_idempotent,
    upsilon,
)
from .config import limits
from .core import (
    FinCat,
    Functor,
    compose_functors,
    compose_hom_retractions,
    hom_retraction_diagnostics,
    identity_functor,
)
from .errors import BudgetExceeded, FinCatError
from .gallery import (
    MONOIDS,
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
    free_module_cat,
    induction_functor,
    restriction_functor,
    separability_idempotent_search,
    monoid,
    parallel_pair,
    product_cat,
    split_retract,
    terminal,
    unit_map,
    walking_arrow,
    walking_idempotent,
)
from .monadics import (
    audit,
    coid_vs_em,
    comparison,
    is_separable_monad,
    kleisli_category,
    kleisli_comparison,
    transported_adjunction_dual,
)

MAX_OBJECTS = 6
MAX_MORPHISMS = 64


@dataclass(frozen=True)
class Item:
    label: str
    value: object


def is_tiny(C: FinCat) -> bool:
    return C.n_obj <= 3 and all(len(C.hom(x, y)) <= 3 for x in C.objects for y in C.objects)


def _fits(C: FinCat) -> bool:
    return C.n_obj <= MAX_OBJECTS and C.n_mor <= MAX_MORPHISMS


# categories whose functors among each other are enumerated exhaustively
TINY = ("terminal", "walking_idempotent", "walking_arrow", "Z2", "split_retract",
        "parallel_pair", "semilattice", "nil2")


@lru_cache(maxsize=None)
def categories() -> tuple[Item, ...]:
    base = [
        ("terminal", terminal()),
        ("walking_idempotent", walking_idempotent()),
        ("walking_arrow", walking_arrow()),
        ("parallel_pair", parallel_pair()),
        ("split_retract", split_retract()),
        ("chain3", chain(3)),
        ("arrow_squared", product_cat(walking_arrow(), walking_arrow())),
    ]
    base += [(name, monoid(name)) for name in MONOIDS]
    base += [
        ("free(F2,1)", free_module_cat(f2(), 1)),
        ("free(F2,2)", free_module_cat(f2(), 2)),
        ("free(F2xF2,1)", free_module_cat(f2xf2(), 1)),
    ]
    out = [Item(label, C) for label, C in base if _fits(C)]
    for label in ("walking_idempotent", "split_retract", "semilattice", "nil2", "left_zero",
                  "free(F2,1)"):
        C = dict(base)[label]
        K = karoubi(C).cat
        if _fits(K):
            out.append(Item(f"karoubi({label})", K))
    return tuple(out)


def category(label: str) -> FinCat:
    return next(it.value for it in categories() if it.label == label)


@lru_cache(maxsize=None)
def idempotent_pairs() -> tuple[Item, ...]:
    """Every (C, e) with e an idempotent natural endotransformation of Id_C."""
    out = []
    for it in categories():
        for k, e in enumerate(idempotent_nats(it.value)):
            out.append(Item(f"{it.label}/e{k}", (it.value, e)))
    return tuple(out)


@lru_cache(maxsize=None)
def functors() -> tuple[Item, ...]:
    out: list[Item] = []
    seen: set = set()

    def add(label, F):
        key = (F.source.key, F.target.key, F.ob, F.mor)
        if key not in seen:
            seen.add(key)
            out.append(Item(label, F))

    one = terminal()
    for it in categories():
        C = it.value
        add(f"id[{it.label}]", identity_functor(C))
        add(f"{it.label}->terminal", Functor(C, one, [0] * C.n_obj, [0] * C.n_mor))
        for x in C.objects:
            add(f"terminal->{it.label}@{C.ob_names[x]}", Functor(one, C, [x], [C.ident[x]]))
        K = karoubi(C)
        if _fits(K.cat):
            add(f"iota[{it.label}]", K.iota)
    for it in idempotent_pairs():
        C, e = it.value
        add(f"H[{it.label}]", coidentifier(C, e).H)
    tiny = [it for it in categories() if it.label in TINY]
    for a in tiny:
        for b in tiny:
            for k, F in enumerate(all_functors(a.value, b.value)):
                add(f"{a.label}->{b.label}#{k}", F)
    # ring instances
    R = f2xf2()
    z = element(R, (1, 0))
    add("H[free(F2xF2,1)/z=(1,0)]", coidentifier(free_module_cat(R, 1),
                                                 central_idempotent_nat(R, 1, z)).H)
    add("induction[F2->F2xF2,1]", induction_functor(unit_map(R), 1))
    return tuple(out)


def tiny_functors() -> tuple[Item, ...]:
    return tuple(it for it in functors()
                 if is_tiny(it.value.source) and is_tiny(it.value.target))


def _adjunction_key(A: Adjunction):
    return (A.F.source.key, A.F.target.key, A.F.ob, A.F.mor, A.G.ob, A.G.mor,
            A.unit.components, A.counit.components)


def one_to_karoubi_e() -> Adjunction:
    """L ⊣ G♮ for the collapse G: E → 𝟙; L picks the object (∗, e)."""
    E = walking_idempotent()
    G = Functor(E, terminal(), [0], [0, 0], name="G")
    A = find_left_adjoint(complete_functor(G))
    assert A is not None
    return A


@lru_cache(maxsize=None)
def adjunctions() -> tuple[Item, ...]:
    out: list[Item] = []
    seen: set = set()

    def add(label, A):
        if A is None:
            return
        key = _adjunction_key(A)
        if key not in seen:
            seen.add(key)
            out.append(Item(label, A))

    add("terminal<->karoubi(walking_idempotent)", one_to_karoubi_e())
    for it in categories():
        add(f"id[{it.label}]", identity_adjunction(it.value))
    for it in functors():
        F = it.value
        try:
            add(f"left_of[{it.label}]", find_left_adjoint(F))
            add(f"right_of[{it.label}]", find_right_adjoint(F))
        except BudgetExceeded:
            continue
    return tuple(out)


def suite_summary() -> dict:
    return {
        "categories": [it.label for it in categories()],
        "idempotent_pairs": len(idempotent_pairs()),
        "functors": len(functors()),
        "tiny_functors": len(tiny_functors()),
        "adjunctions": len(adjunctions()),
        "limits": {"max_objects": MAX_OBJECTS, "max_morphisms": MAX_MORPHISMS,
                   "envelope_objects": limits.max_envelope_objects,
                   "envelope_morphisms": limits.max_envelope_morphisms},
    }


# checks

class Tally:
    """Counts checks and collects mismatches for one criterion."""

    def __init__(self):
        self.checked = 0
        self.mismatches: list[dict] = []

    def check(self, item: str, ok: bool, what: str) -> bool:
        self.checked += 1
        if not ok:
            self.mismatches.append({"item": item, "check": what})
        return ok

    def guard(self, item: str, fn) -> None:
        try:
            fn()
        except FinCatError as exc:
            self.checked += 1
            self.mismatches.append({"item": item, "check": "error", "error": exc.kind,
                                    "detail": str(exc)})


def _implies(a: bool, b: bool) -> bool:
    return (not a) or b


def check_envelopes(t: Tally, details: dict) -> None:
    for it in categories():
        def one(it=it):
            C = it.value
            K = karoubi(C)
            t.check(it.label, bool(is_idempotent_complete(K.cat)), "envelope idempotent complete")
            t.check(it.label, bool(is_fully_faithful(K.iota)), "iota fully faithful")
            t.check(it.label, bool(is_equivalence(K.iota)) == bool(is_idempotent_complete(C)),
                    "iota equivalence iff idempotent complete")
        t.guard(it.label, one)
    KE = karoubi(walking_idempotent()).cat
    details["karoubi(walking_idempotent)"] = {"objects": KE.n_obj, "morphisms": KE.n_mor}
    t.check("karoubi(walking_idempotent)", (KE.n_obj, KE.n_mor) == (2, 5), "2 objects, 5 morphisms")


SIX = (("faithful", is_faithful), ("full", is_full), ("fully_faithful", is_fully_faithful),
       ("semiseparable", is_semiseparable), ("separable", is_separable),
       ("naturally_full", is_naturally_full))


def check_completion_transfer(t: Tally, details: dict) -> None:
    count = 0
    for it in functors():
        def one(it=it):
            nonlocal count
            F = it.value
            Fn = complete_functor(F)
            for name, pred in SIX:
                t.check(it.label, bool(pred(F)) == bool(pred(Fn)), f"{name} agrees with completion")
            P = search_hom_retraction(F, "semisep")
            if P is not None:
                diags = hom_retraction_diagnostics(complete_hom_retraction(P), "semisep")
                t.check(it.label, not diags, "transported witness accepted")
            count += 1
        t.guard(it.label, one)
    details["functors_compared"] = count
    t.check("suite", count >= 10, "at least 10 functors")


def _composable_pairs():
    by_source: dict = {}
    for it in functors():
        by_source.setdefault(it.value.source.key, []).append(it)
    for f in functors():
        for g in by_source.get(f.value.target.key, ()):
            yield f, g


def check_classification_algebra(t: Tally, details: dict) -> None:
    for it in functors():
        def one(it=it):
            F = it.value
            ss = bool(is_semiseparable(F))
            t.check(it.label, bool(is_separable(F)) == (ss and bool(is_faithful(F))),
                    "separable iff semiseparable and faithful")
            t.check(it.label, bool(is_naturally_full(F)) == (ss and bool(is_full(F))),
                    "naturally full iff semiseparable and full")
            if is_separable(F):
                t.check(it.label, bool(is_maschke(F)) and bool(is_dual_maschke(F)),
                        "separable implies Maschke and dual Maschke")
        t.guard(it.label, one)
    pairs = 0
    for f, g in _composable_pairs():
        label = f"{g.label} o {f.label}"

        def one(F=f.value, G=g.value, label=label):
            nonlocal pairs
            pairs += 1
            GF = compose_functors(G, F)
            F_ss, G_ss, GF_ss = (bool(is_semiseparable(F)), bool(is_semiseparable(G)),
                                 bool(is_semiseparable(GF)))
            G_sep = bool(is_separable(G))
            t.check(label, _implies(F_ss and G_sep, GF_ss), "F semisep, G sep => GF semisep")
            t.check(label, _implies(bool(is_naturally_full(F)) and G_ss, GF_ss),
                    "F natfull, G semisep => GF semisep")
            t.check(label, _implies(GF_ss and bool(is_faithful(G)), F_ss),
                    "GF semisep, G faithful => F semisep")
            if G_sep and F_ss:
                PF = search_hom_retraction(F, "semisep")
                PG = search_hom_retraction(G, "sep")
                W = compose_hom_retractions(PF, PG)
                t.check(label, associated_idempotent(GF, W) == associated_idempotent(F, PF),
                        "idempotent of GF equals idempotent of F")
        t.guard(label, one)
    details["composable_pairs"] = pairs


def check_associated_idempotent(t: Tally, details: dict) -> None:
    n = 0
    for it in tiny_functors():
        def one(it=it):
            nonlocal n
            F = it.value
            Ps = enumerate_hom_retractions(F, "semisep")
            t.check(it.label, bool(Ps) == bool(is_semiseparable(F)), "enumeration agrees with search")
            if not Ps:
                return
            n += 1
            es = {associated_idempotent(F, P).components for P in Ps}
            t.check(it.label, len(es) == 1, "every witness gives the same idempotent")
            e = associated_idempotent(F, Ps[0])
            t.check(it.label, bool(factors(F, e)), "Fe = Id_F")
            is_id = e.components == tuple(F.source.ident)
            t.check(it.label, is_id == bool(is_separable(F)), "e = Id iff separable")
        t.guard(it.label, one)
    details["semiseparable_tiny_functors"] = n


def check_factorization(t: Tally, details: dict) -> None:
    counts = {"factored": 0, "bireflection_utr": 0, "upgraded": 0, "quotient_pairs": 0}
    for it in functors():
        def one(it=it):
            F = it.value
            P = search_hom_retraction(F, "semisep")
            if P is None:
                return
            fac = canonical_factorization(F, P)
            counts["factored"] += 1
            t.check(it.label, compose_functors(fac.Fe, fac.H) == F, "F = F_e o H")
            t.check(it.label, bool(is_separable(fac.Fe)), "F_e separable")
            q = fac.quotient
            t.check(it.label, bool(is_full(q.H)) and set(q.H.ob) == set(q.cat.objects),
                    "H full and surjective on objects")
            if is_idempotent_complete(F.source):
                t.check(it.label, bool(is_idempotent_complete(q.cat)),
                        "quotient of idempotent complete is idempotent complete")
            coidentifier_lifts_idempotents(q)
            if bool(is_bireflection(complete_functor(F))):
                counts["bireflection_utr"] += 1
                t.check(it.label, bool(is_equivalence_utr(fac.Fe)), "F_e equivalence u.t.r.")
                if is_idempotent_complete(F.source):
                    counts["upgraded"] += 1
                    t.check(it.label, bool(is_equivalence(fac.Fe)), "F_e equivalence")
        t.guard(it.label, one)
    # F = S o N with S separable, N naturally full
    for n, s in _composable_pairs():
        N, S = n.value, s.value
        label = f"{s.label} o {n.label}"

        def one(N=N, S=S, label=label):
            if not (is_separable(S) and is_naturally_full(N)):
                return
            counts["quotient_pairs"] += 1
            F = compose_functors(S, N)
            fac = canonical_factorization(F, search_hom_retraction(F, "semisep"))
            v = factor_through_quotient(N, S, fac.quotient, fac.Fe)
            t.check(label, bool(v), "unique fully faithful N_e with S o N_e = F_e")
        t.guard(label, one)
    details.update(counts)


def _splits_everywhere(C, e) -> bool:
    return all(split_idempotent(C, e[x]) is not None for x in C.objects)


def check_quotient_functor(t: Tally, details: dict) -> None:
    for it in idempotent_pairs():
        def one(it=it):
            C, e = it.value
            H = coidentifier(C, e).H
            t.check(it.label, bool(is_bireflection(complete_functor(H))), "H bireflection u.t.r.")
            t.check(it.label, bool(is_bireflection(H)) == _splits_everywhere(C, e),
                    "H bireflection iff e splits")
        t.guard(it.label, one)
    R = f2xf2()
    z = element(R, (1, 0))
    inst = {}

    def ring_case():
        C1 = free_module_cat(R, 1)
        H1 = coidentifier(C1, central_idempotent_nat(R, 1, z)).H
        inst["rank1_bireflection_utr"] = bool(is_bireflection(complete_functor(H1)))
        inst["rank1_bireflection"] = bool(is_bireflection(H1))
        C2 = free_module_cat(R, 2)
        e2 = central_idempotent_nat(R, 2, z)
        inst["rank2_splits"] = _splits_everywhere(C2, e2)
        inst["rank2_bireflection"] = bool(is_bireflection(coidentifier(C2, e2).H))
        t.check("F2xF2/z=(1,0)", inst["rank1_bireflection_utr"], "bireflection u.t.r.")
        t.check("F2xF2/z=(1,0)", not inst["rank1_bireflection"], "not a bireflection")
        t.check("F2xF2/z=(1,0)", not inst["rank2_splits"], "e does not split at rank 2")
        t.check("F2xF2/z=(1,0)", not inst["rank2_bireflection"], "not a bireflection at rank 2")
    t.guard("F2xF2/z=(1,0)", ring_case)
    details["F2xF2/z=(1,0)"] = inst


AUDITED_FACTS = ("G_semisep", "G_sep", "monad_sep", "K_biref_utr", "K_equiv_utr")


def check_monadic_audit(t: Tally, details: dict) -> None:
    failed = []
    for it in adjunctions():
        def one(it=it):
            r = audit(it.value)
            for c in r.clauses:
                if not t.check(it.label, c.status == "ok", c.id):
                    failed.append(it.label)
        t.guard(it.label, one)
    r = audit(one_to_karoubi_e())
    details["terminal<->karoubi(walking_idempotent)"] = {k: r.facts.get(k) for k in AUDITED_FACTS}
    details["adjunctions"] = len(adjunctions())


def _dual_instance() -> Item:
    """First suite adjunction whose left adjoint is semiseparable, preferring non-separable."""
    cands = [it for it in adjunctions() if is_semiseparable(it.value.F)]
    strict = [it for it in cands if not is_separable(it.value.F)]
    return (strict or cands)[0]


def check_dual_clauses(t: Tally, details: dict) -> None:
    it = _dual_instance()
    details["instance"] = it.label
    A = it.value

    def one():
        Aop = opposite_adjunction(A)
        t.check(it.label, bool(is_semiseparable(A.F)) == bool(is_semiseparable(Aop.G)),
                "semiseparability is self-dual")
        r = audit(Aop)
        for cid in ("semisep_iff_monad_sep_and_K_natfull",
                    "semisep_iff_monad_sep_and_K_bireflection_utr",
                    "sep_iff_monad_sep_and_K_fully_faithful"):
            t.check(it.label, r.clause(cid).status == "ok", f"dual {cid}")
        P = search_hom_retraction(Aop.G, "semisep")
        ce = coid_vs_em(Aop, P)
        t.check(it.label, ce.equivalence_utr, "dual coidentifier comparison equivalence u.t.r.")
        e = associated_idempotent(A.F, search_hom_retraction(A.F, "semisep"))
        q = coidentifier(A.F.source, e)
        Fe = factor_through_coidentifier(A.F, q).witness
        tr = transported_adjunction_dual(q, Fe, A)
        t.check(it.label, tr.same_monad and tr.same_comparison, "dual transported adjunction")
        details["comonad_separable"] = r.facts.get("monad_sep")
    t.guard(it.label, one)


def check_kleisli(t: Tally, details: dict) -> None:
    counts = {"separable_monads": 0, "semiseparable_right_adjoints": 0}
    for it in adjunctions():
        def one(it=it):
            A = it.value
            c = comparison(A)
            kl = kleisli_category(c.monad, c.em)
            if is_separable_monad(c.monad) is not None:
                counts["separable_monads"] += 1
                t.check(it.label, bool(is_fully_faithful(kl.J)) and bool(is_surjective_utr(kl.J)),
                        "J fully faithful and surjective u.t.r.")
            P = search_hom_retraction(A.G, "semisep")
            if P is None:
                return
            counts["semiseparable_right_adjoints"] += 1
            L = kleisli_comparison(A, kl)
            ce = coid_vs_em(A, P)
            for name, Fn in (("HL", compose_functors(ce.quotient.H, L)), ("KL", kl.J)):
                qi = quasi_inverse(complete_functor(Fn))
                t.check(it.label, qi is not None, f"completed {name} is an equivalence")
            Ke = complete_functor(ce.Ke)
            t.check(it.label, quasi_inverse(Ke) is not None, "completed K_e is an equivalence")
        t.guard(it.label, one)
    details.update(counts)


def check_up_to_retracts(t: Tally, details: dict) -> None:
    for it in functors():
        def one(it=it):
            F = it.value
            Fn = complete_functor(F)
            cor, ref = bool(is_coreflection(F)), bool(is_reflection(F))
            bi, eq = bool(is_bireflection(F)), bool(is_equivalence(F))
            cor_u, ref_u = bool(is_coreflection(Fn)), bool(is_reflection(Fn))
            bi_u, eq_u = bool(is_bireflection(Fn)), bool(is_equivalence(Fn))
            left, right = has_left_adjoint(F), has_right_adjoint(F)
            ss, nf, ff = bool(is_semiseparable(F)), bool(is_naturally_full(F)), bool(is_fully_faithful(F))
            surj = bool(is_surjective_utr(F))
            L = it.label
            t.check(L, _implies(cor_u and left, cor), "coreflection utr with left adjoint")
            t.check(L, _implies(cor_u and right, ref), "coreflection utr with right adjoint")
            t.check(L, _implies(ref_u and right, ref), "reflection utr with right adjoint")
            t.check(L, _implies(ref_u and left, cor), "reflection utr with left adjoint")
            t.check(L, _implies(bi_u and (left or right), bi), "bireflection utr with an adjoint")
            t.check(L, _implies(eq_u and (left or right), eq), "equivalence utr with an adjoint")
            if is_idempotent_complete(F.source):
                t.check(L, (cor_u, ref_u, bi_u, eq_u) == (cor, ref, bi, eq),
                        "idempotent complete source: utr equals plain")
            t.check(L, _implies(cor_u or ref_u, surj), "(co)reflection utr is surjective utr")
            t.check(L, (ss and cor) == (nf and cor) == bi, "frobenius for coreflections")
            t.check(L, (ss and ref) == (nf and ref) == bi, "frobenius for reflections")
            t.check(L, eq == (ff and bi), "equivalence iff fully faithful bireflection")
            t.check(L, eq_u == (ff and surj) == (ff and bi_u),
                    "equivalence utr iff ff and surjective utr iff ff bireflection utr")
            t.check(L, bi_u == (ss and cor_u) == (nf and cor_u) == (ss and ref_u) == (nf and ref_u),
                    "bireflection utr characterizations")
            t.check(L, _implies(eq, eq_u) and _implies(cor, cor_u) and _implies(ref, ref_u)
                    and _implies(bi, bi_u), "plain implies up to retracts")
            t.check(L, _implies(eq_u, cor_u and ref_u), "equivalence utr is reflection and coreflection utr")
        t.guard(it.label, one)
    for g, u in _composable_pairs():
        label = f"{u.label} o {g.label}"

        def one(G=g.value, U=u.value, label=label):
            if not is_separable(U):
                return
            UG = complete_functor(compose_functors(U, G))
            eq_u = bool(is_equivalence(complete_functor(U)))
            if is_coreflection(complete_functor(G)):
                t.check(label, eq_u == bool(is_coreflection(UG)), "composite coreflection utr")
            if is_reflection(complete_functor(G)):
                t.check(label, eq_u == bool(is_reflection(UG)), "composite reflection utr")
        t.guard(label, one)
    for it in adjunctions():
        def one(it=it):
            A = it.value
            L = it.label
            t.check(L, bool(is_maschke(A.F)) == bool(is_surjective_utr(A.G)),
                    "F Maschke iff G surjective utr")
            t.check(L, bool(is_dual_maschke(A.G)) == bool(is_surjective_utr(A.F)),
                    "G dual Maschke iff F surjective utr")
            t.check(L, bool(is_separable(A.G)) == (counit_section(A) is not None),
                    "G separable iff counit has a natural section")
            t.check(L, bool(is_separable(A.F)) == (unit_retraction(A) is not None),
                    "F separable iff unit has a natural retraction")
            if trinat_witness(A.F, A.G, A.unit, A.counit) is not None:
                t.check(L, bool(is_coreflection_utr(A.G)), "trinat witness gives coreflection utr")
            complete_adjunction(A)
        t.guard(it.label, one)
    for it in categories():
        def one(it=it):
            U = upsilon(it.value)
            t.check(it.label, bool(charact_coreflection_utr(U.upsilon_iota)) ==
                    bool(is_coreflection_utr(U.iota)), "nu search agrees for (upsilon, iota)")
        t.guard(it.label, one)
    for it in idempotent_pairs():
        def one(it=it):
            C, e = it.value
            S = quotient_semiadjunction(coidentifier(C, e))
            v = charact_coreflection_utr(S)
            t.check(it.label, bool(v) and all(m == S.C.ident[x] for x, m in enumerate(v.witness.components)),
                    "(L, H) semiadjunction with nu = Id")
            t.check(it.label, bool(v) == bool(is_coreflection_utr(S.G)), "nu search agrees for H")
        t.guard(it.label, one)


def check_rings(t: Tally, details: dict) -> None:
    for label, S in (("F2->F2xF2", f2xf2()), ("F2->F2[x]/(x^2)", dual_numbers_f2()),
                     ("F2->F4", f4())):
        info: dict = {}

        def one(S=S, label=label, info=info):
            phi = unit_map(S)
            basis = find_basis(phi)
            ind = induction_functor(phi, 2)
            res = restriction_functor(phi, basis, 1)
            E = bimodule_retraction_search(phi)
            Ereg = bimodule_retraction_search(phi, regular=True)
            sigma = separability_idempotent_search(phi, basis)
            info.update(
                bimodule_retraction=E is not None,
                induction_separable=bool(is_separable(ind)),
                regular=Ereg is not None,
                induction_semiseparable=bool(is_semiseparable(ind)),
                separability_idempotent=sigma is not None,
                restriction_separable=bool(is_separable(res)),
            )
            t.check(label, info["bimodule_retraction"] == info["induction_separable"],
                    "split bimodule mono iff induction separable")
            t.check(label, info["regular"] == info["induction_semiseparable"],
                    "regular iff induction semiseparable")
            t.check(label, info["separability_idempotent"] == info["restriction_separable"],
                    "separability idempotent iff restriction separable")
        t.guard(label, one)
        details[label] = info
    d = details.get("F2->F2xF2", {})
    t.check("F2->F2xF2", d.get("induction_separable") is True and d.get("restriction_separable") is True,
            "separable both ways")
    d = details.get("F2->F2[x]/(x^2)", {})
    t.check("F2->F2[x]/(x^2)", d.get("separability_idempotent") is False,
            "separability idempotent absent")


CRITERIA = {
    1: ("envelope completeness", check_envelopes),
    2: ("completion transfer", check_completion_transfer),
    3: ("classification algebra", check_classification_algebra),
    4: ("associated idempotent", check_associated_idempotent),
    5: ("factorization", check_factorization),
    6: ("quotient functor", check_quotient_functor),
    7: ("monadic theorems", check_monadic_audit),
    8: ("dual clauses", check_dual_clauses),
    9: ("kleisli", check_kleisli),
    10: ("up-to-retracts logic", check_up_to_retracts),
    11: ("ring and module analogues", check_rings),
}


def run_criterion(n: int) -> dict:
    title, fn = CRITERIA[n]
    t, details = Tally(), {}
    fn(t, details)
    return {"criterion": n, "title": title, "passed": not t.mismatches, "checked": t.checked,
            "mismatches": t.mismatches, "details": details}


def run_suite(workers: int = 1, criteria=None) -> dict:
    """Run the chosen criteria; the report does not depend on ``workers``."""
    ids = sorted(criteria or CRITERIA)
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_criterion, ids))
    else:
        results = [run_criterion(n) for n in ids]
    return {"suite": suite_summary(), "criteria": results}
