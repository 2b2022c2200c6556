"""The coidentifier quotient C_e of an idempotent natural e: Id → Id."""
from __future__ import annotations

from dataclasses import dataclass

from .classify import associated_idempotent, check_idempotent_nat, is_fully_faithful
from .core import (
    FinCat,
    Functor,
    HomRetraction,
    NatTrans,
    Verdict,
    compose_functors,
    hom_retraction_diagnostics,
    identity_functor,
)
from .errors import InternalInconsistency, PreconditionFailed, WitnessInvalid


@dataclass
class Coidentifier:
    base: FinCat
    e: NatTrans
    cat: FinCat
    H: Functor
    cls: tuple          # base morphism -> class id
    reps: tuple         # class id -> least member
    P: HomRetraction    # 𝒫_{A,B}(f̄) = e_B∘f, witnessing that H is naturally full

    def members(self, k: int) -> list[int]:
        return [f for f, c in enumerate(self.cls) if c == k]


_quotients: dict = {}


def coidentifier(C: FinCat, e: NatTrans) -> Coidentifier:
    """f ∼ g iff e_B∘f = e_B∘g; representatives are least morphism ids."""
    key = (C, e.components)
    if key in _quotients:
        return _quotients[key]
    check_idempotent_nat(e)
    t = C.table
    rep_of: dict = {}
    for f in C.morphisms:
        rep_of.setdefault((C.dom[f], C.cod[f], t[(e[C.cod[f]], f)]), f)
    reps = sorted(set(rep_of.values()))
    cid = {r: k for k, r in enumerate(reps)}
    cls = tuple(cid[rep_of[(C.dom[f], C.cod[f], t[(e[C.cod[f]], f)])]] for f in C.morphisms)
    mors = [(C.mor_names[r], C.dom[r], C.cod[r]) for r in reps]
    table = {}
    for (g, f), h in t.items():
        k = (cls[g], cls[f])
        if table.setdefault(k, cls[h]) != cls[h]:
            raise InternalInconsistency("composition in the quotient is not well defined")
    Ce = FinCat(C.ob_names, mors, [cls[i] for i in C.ident], table, check=False)
    H = Functor(C, Ce, list(C.objects), cls, name="H")
    maps = {}
    for a in C.objects:
        for b in C.objects:
            maps[(a, b)] = {k: t[(e[b], reps[k])] for k in Ce.hom(a, b)}
    P = HomRetraction(H, maps)
    diags = hom_retraction_diagnostics(P, "natfull")
    if diags:
        raise InternalInconsistency(f"H is not naturally full via e∘f: {diags[:3]}")
    if associated_idempotent(H, P).components != e.components:
        raise InternalInconsistency("associated idempotent of H differs from e")
    out = Coidentifier(C, e, Ce, H, cls, tuple(reps), P)
    _quotients[key] = out
    return out


def idempotent_nats(C: FinCat) -> list[NatTrans]:
    """All idempotent natural e: Id_C → Id_C, in canonical order."""
    from .natsearch import iter_families
    ident = identity_functor(C)
    return [NatTrans(ident, ident, comps, check=False)
            for comps in iter_families(ident, ident, allowed=lambda x, m: C.is_idempotent(m))]


def quotient_semiadjunction(q: Coidentifier):
    """(L, H) with L(f̄) = e_Y∘f, unit Id and counit e."""
    from .adjoint import Semiadjunction
    from .core import Semifunctor

    C, Ce, e = q.base, q.cat, q.e
    L = Semifunctor(Ce, C, list(C.objects),
                    [C.table[(e[C.cod[r]], r)] for r in q.reps], name="L")
    HL = compose_functors(q.H, L)
    LH = compose_functors(L, q.H)
    unit = NatTrans(identity_functor(Ce), HL, [Ce.ident[x] for x in Ce.objects])
    counit = NatTrans(LH, identity_functor(C), e.components)
    return Semiadjunction(L, q.H, unit, counit)


def factors(F: Functor, e: NatTrans) -> Verdict:
    """Whether Fe = Id_F; the witness on failure is an object with F e_x ≠ Id."""
    D = F.target
    for x in F.source.objects:
        if F.mor[e[x]] != D.ident[F.ob[x]]:
            return Verdict(False, witness=x)
    return Verdict(True)


def factor_through_coidentifier(F: Functor, q: Coidentifier) -> Verdict:
    """F_e with F = F_e∘H when Fe = Id_F; the verdict's witness is F_e or the bad object."""
    if F.source != q.base:
        raise PreconditionFailed("F must start at the quotiented category")
    v = factors(F, q.e)
    if not v:
        return v
    Fe = Functor(q.cat, F.target, F.ob, [F.mor[r] for r in q.reps], name=(F.name or "F") + "_e")
    if compose_functors(Fe, q.H) != F:
        raise InternalInconsistency("F != F_e∘H")
    return Verdict(True, witness=Fe)


def factor_nat(beta: NatTrans, q: Coidentifier, Fe: Functor, Fpe: Functor) -> NatTrans:
    """β_e with the same components as β, so that β = β_e H."""
    if not (factors(beta.source, q.e) and factors(beta.target, q.e)):
        raise PreconditionFailed("both functors must satisfy Fe = Id_F")
    return NatTrans(Fe, Fpe, beta.components)


@dataclass
class Factorization:
    e: NatTrans
    quotient: Coidentifier
    H: Functor
    Fe: Functor
    Pe: HomRetraction


def canonical_factorization(F: Functor, P: HomRetraction) -> Factorization:
    """F = F_e∘H with F_e separable via 𝒫^{F_e}_{HX,HY} = ℱ^H∘𝒫^F."""
    e = associated_idempotent(F, P)
    q = coidentifier(F.source, e)
    v = factor_through_coidentifier(F, q)
    if not v:
        raise WitnessInvalid("F does not factor through its own coidentifier")
    Fe = v.witness
    maps = {}
    for x in F.source.objects:
        for y in F.source.objects:
            maps[(x, y)] = {h: q.cls[P(x, y, h)] for h in F.target.hom(F.ob[x], F.ob[y])}
    Pe = HomRetraction(Fe, maps)
    diags = hom_retraction_diagnostics(Pe, "sep")
    if diags:
        raise WitnessInvalid(f"transported witness does not make F_e separable: {diags[:3]}")
    return Factorization(e, q, q.H, Fe, Pe)


def coidentifier_lifts_idempotents(q: Coidentifier) -> dict:
    """For each idempotent class h̄ in C_e, the idempotent q = e_C∘h with Hq = h̄."""
    C, Ce = q.base, q.cat
    lifts = {}
    for x in Ce.objects:
        for k in Ce.idempotents(x):
            lift = C.table[(q.e[x], q.reps[k])]
            if not C.is_idempotent(lift) or q.cls[lift] != k:
                raise InternalInconsistency("lifted idempotent is wrong")
            lifts[k] = lift
    return lifts


def factor_through_quotient(N: Functor, S: Functor, q: Coidentifier, Fe: Functor) -> Verdict:
    """Given F = S∘N (S separable, N naturally full), the unique fully faithful N_e.

    Uniqueness: any M with M∘H = N is forced class by class, so it exists and
    is unique exactly when N is constant on every class.
    """
    images = {}
    for f, k in enumerate(q.cls):
        images.setdefault(k, set()).add(N.mor[f])
    unique = all(len(v) == 1 for v in images.values())
    v = factor_through_coidentifier(N, q)
    if v.holds != unique:
        raise InternalInconsistency("factorization and uniqueness search disagree")
    if not v:
        return v
    Ne = v.witness
    ok = bool(is_fully_faithful(Ne)) and compose_functors(S, Ne) == Fe
    return Verdict(ok, witness=Ne)
