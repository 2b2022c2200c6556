"""The Karoubi envelope and transport of functors, transformations and witnesses along it."""
from __future__ import annotations

from dataclasses import dataclass

from .config import limits
from .core import (
    FinCat,
    Functor,
    HomRetraction,
    NatTrans,
    Semifunctor,
    Verdict,
    compose_functors,
    nat_vertical,
)
from .errors import BoundaryMismatch, BudgetExceeded, InternalInconsistency, NotIdempotent


@dataclass
class Karoubi:
    base: FinCat
    cat: FinCat
    objs: tuple            # (X, e) per envelope object, lexicographic
    under: tuple           # underlying base morphism per envelope morphism
    index: dict            # (X, e) -> object id
    mor_at: dict           # (i, j, f) -> morphism id
    iota: Functor

    def obj_of(self, x: int, e: int) -> int:
        return self.index[(x, e)]


_envelopes: dict = {}


def karoubi(C: FinCat) -> Karoubi:
    """Objects (X, e) for idempotent e, Hom((X,e),(X',e')) = {f : f = e'∘f∘e}."""
    cached = _envelopes.get(C)
    if cached is not None:
        return cached
    t = C.table
    objs = [(x, e) for x in C.objects for e in C.hom(x, x) if t[(e, e)] == e]
    if len(objs) > limits.max_envelope_objects:
        raise BudgetExceeded(f"envelope would have {len(objs)} objects")
    index = {o: i for i, o in enumerate(objs)}
    names = [f"({C.ob_names[x]},{C.mor_names[e]})" for x, e in objs]
    mors, under, mor_at = [], [], {}
    for i, (x, e) in enumerate(objs):
        for j, (y, d) in enumerate(objs):
            for f in C.hom(x, y):
                if t[(d, t[(f, e)])] == f:
                    mor_at[(i, j, f)] = len(mors)
                    mors.append((f"{C.mor_names[f]}:{names[i]}->{names[j]}", i, j))
                    under.append(f)
                    if len(mors) > limits.max_envelope_morphisms:
                        raise BudgetExceeded("envelope morphism cap exceeded")
    ident = [mor_at[(i, i, e)] for i, (x, e) in enumerate(objs)]
    table = {}
    for f, (_, i, j) in enumerate(mors):
        uf = under[f]
        for k in range(len(objs)):
            for g_u in C.hom(objs[j][0], objs[k][0]):
                g = mor_at.get((j, k, g_u))
                if g is not None:
                    table[(g, f)] = mor_at[(i, k, t[(g_u, uf)])]
    K = FinCat(names, mors, ident, table, check=False)
    iota_ob = [index[(x, C.ident[x])] for x in C.objects]
    iota_mor = [mor_at[(iota_ob[C.dom[f]], iota_ob[C.cod[f]], f)] for f in C.morphisms]
    iota = Functor(C, K, iota_ob, iota_mor, check=False, name="ι")
    kar = Karoubi(C, K, tuple(objs), tuple(under), index, mor_at, iota)
    _envelopes[C] = kar
    return kar


def split_idempotent(C: FinCat, q: int):
    """First splitting (Y, p, i) with i∘p = q and p∘i = Id_Y, or None.

    Identities split through themselves; otherwise Y, p, i run in id order.
    """
    if not C.is_idempotent(q):
        raise NotIdempotent(C.mor_names[q])
    x = C.dom[q]
    if q == C.ident[x]:
        return (x, q, q)
    t = C.table
    for y in C.objects:
        iy = C.ident[y]
        for p in C.hom(x, y):
            for i in C.hom(y, x):
                if t[(i, p)] == q and t[(p, i)] == iy:
                    return (y, p, i)
    return None


def is_idempotent_complete(C: FinCat) -> Verdict:
    splittings = {}
    for x in C.objects:
        for e in C.idempotents(x):
            s = split_idempotent(C, e)
            if s is None:
                return Verdict(False, witness=e)
            splittings[e] = s
    return Verdict(True, witness=splittings)


def complete_functor(F: Functor) -> Functor:
    """F♮(X, e) = (FX, Fe), F♮(f) = Ff; a genuine functor even for semifunctors."""
    cached = F.cache.get("completion")
    if cached is not None:
        return cached
    KC, KD = karoubi(F.source), karoubi(F.target)
    ob = [KD.index[(F.ob[x], F.mor[e])] for x, e in KC.objs]
    mor = []
    for f in KC.cat.morphisms:
        i, j = KC.cat.dom[f], KC.cat.cod[f]
        mor.append(KD.mor_at[(ob[i], ob[j], F.mor[KC.under[f]])])
    Fn = Functor(KC.cat, KD.cat, ob, mor, check=False, name=(F.name + "♮") if F.name else "")
    if not F.semi:
        if compose_functors(KD.iota, F) != compose_functors(Fn, KC.iota):
            raise InternalInconsistency("ι_D∘F != F♮∘ι_C for a functor")
    F.cache["completion"] = Fn
    return Fn


complete_semifunctor = complete_functor


def complete_nat(alpha: NatTrans) -> NatTrans:
    """α♮_(X,e) = α_X∘Fe."""
    F, G = alpha.source, alpha.target
    Fn, Gn = complete_functor(F), complete_functor(G)
    KC, KD = karoubi(F.source), karoubi(F.target)
    t = F.target.table
    comps = []
    for i, (x, e) in enumerate(KC.objs):
        u = t[(alpha.components[x], F.mor[e])]
        comps.append(KD.mor_at[(Fn.ob[i], Gn.ob[i], u)])
    return NatTrans(Fn, Gn, comps, check=False)


def complete_hom_retraction(P: HomRetraction) -> HomRetraction:
    """Transported witness: 𝒫♮_{(C,c),(C',c')}(g) = 𝒫_{C,C'}(g)."""
    F = P.functor
    Fn = complete_functor(F)
    KC, KD = karoubi(F.source), karoubi(F.target)
    maps = {}
    for i, (x, _) in enumerate(KC.objs):
        for j, (y, _) in enumerate(KC.objs):
            maps[(i, j)] = {h: KC.mor_at[(i, j, P(x, y, KD.under[h]))]
                            for h in KD.cat.hom(Fn.ob[i], Fn.ob[j])}
    return HomRetraction(Fn, maps)


@dataclass
class Upsilon:
    kar: Karoubi
    upsilon: Semifunctor      # C♮ → C
    iota: Functor             # C → C♮
    upsilon_iota: object      # Semiadjunction (υ, ι) with unit η, counit Id
    iota_upsilon: object      # Semiadjunction (ι, υ) with unit Id, counit ν
    eta: NatTrans
    nu: NatTrans


def upsilon(C: FinCat) -> Upsilon:
    from .adjoint import Semiadjunction
    from .core import identity_functor, identity_nat

    kar = karoubi(C)
    K = kar.cat
    ups = Semifunctor(K, C, [x for x, _ in kar.objs], kar.under, check=False, name="υ")
    iota = kar.iota
    iu = compose_functors(iota, ups)          # C♮ → C♮
    ui = compose_functors(ups, iota)          # equals Id_C as tables
    idK, idC = identity_functor(K), identity_functor(C)
    eta = NatTrans(idK, iu, [kar.mor_at[(i, iota.ob[x], e)] for i, (x, e) in enumerate(kar.objs)])
    eps = NatTrans(ui, idC, [C.ident[x] for x in C.objects])
    unit2 = NatTrans(idC, ui, [C.ident[x] for x in C.objects])
    nu = NatTrans(iu, idK, [kar.mor_at[(iota.ob[x], i, e)] for i, (x, e) in enumerate(kar.objs)])
    s1 = Semiadjunction(ups, iota, eta, eps)
    s2 = Semiadjunction(iota, ups, unit2, nu)
    if nat_vertical(eta, nu) != identity_nat(iu) or nat_vertical(nu, eta) != identity_nat(idK):
        raise InternalInconsistency("η∘ν or ν∘η identity failed")
    return Upsilon(kar, ups, iota, s1, s2, eta, nu)


def restrict_semifunctor(G: Functor, C: FinCat, D: FinCat):
    """F = υ_D∘G∘ι_C together with an iso F♮ ≅ G and whether it is the only one."""
    from .natsearch import iter_isos
    from .errors import IsoNotFound

    KC, KD = karoubi(C), karoubi(D)
    if G.source != KC.cat or G.target != KD.cat:
        raise BoundaryMismatch("G must map karoubi(C) to karoubi(D)")
    ob = [KD.objs[G.ob[KC.iota.ob[x]]][0] for x in C.objects]
    mor = [KD.under[G.mor[KC.iota.mor[f]]] for f in C.morphisms]
    F = Semifunctor(C, D, ob, mor)
    Fn = complete_functor(F)
    isos = []
    for iso in iter_isos(Fn, G):
        isos.append(iso)
        if len(isos) == 2:
            break
    if not isos:
        raise IsoNotFound("no iso F♮ ≅ G")
    return F, isos[0], len(isos) == 1


def restrict_nat(alpha: NatTrans, F: Functor, G: Functor) -> NatTrans:
    """β = υ_D α ι_C, a seminatural F → G with β♮ = α."""
    KC, KD = karoubi(F.source), karoubi(F.target)
    comps = [KD.under[alpha.components[KC.iota.ob[x]]] for x in F.source.objects]
    beta = NatTrans(F, G, comps)
    if not beta.is_seminatural():
        raise InternalInconsistency("restricted family is not seminatural")
    if complete_nat(beta) != alpha:
        raise InternalInconsistency("β♮ != α")
    return beta


def complete_adjunction(A):
    """(F♮, G♮, η♮, ε♮) with η♮_(C,c) = η_C∘c and ε♮_(D,d) = d∘ε_D."""
    from .adjoint import Adjunction
    return Adjunction(complete_functor(A.F), complete_functor(A.G),
                      complete_nat(A.unit), complete_nat(A.counit))
