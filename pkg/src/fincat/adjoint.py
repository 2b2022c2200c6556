"""Adjunctions and semiadjunctions, adjoint search, and the reflection hierarchy."""
from __future__ import annotations

from .classify import is_fully_faithful, is_semiseparable, is_surjective_utr
from .completion import complete_functor
from .config import Counter
from .core import (
    FinCat,
    Functor,
    NatTrans,
    Semifunctor,
    Verdict,
    compose_functors,
    identity_functor,
    nat_diagnostics,
    opposite_functor,
)
from .errors import InternalInconsistency, PreconditionFailed, TriangleFailure, ValidationError
from .natsearch import first_family, inverse_nat, iso_of_functors, iter_families, iter_isos


def _check_pair(F: Functor, G: Functor, unit: NatTrans, counit: NatTrans) -> None:
    C, D = F.source, F.target
    if G.source != D or G.target != C:
        raise PreconditionFailed("F and G must go in opposite directions")
    if unit.source != identity_functor(C) or unit.target != compose_functors(G, F):
        raise PreconditionFailed("unit must be Id → GF")
    if counit.source != compose_functors(F, G) or counit.target != identity_functor(D):
        raise PreconditionFailed("counit must be FG → Id")
    for alpha in (unit, counit):
        diags = nat_diagnostics(alpha)
        if diags:
            raise ValidationError(diags)


def _triangles(F, G, unit, counit, semi: bool) -> None:
    C, D = F.source, F.target
    for d in D.objects:
        # Gε_d ∘ η_{Gd}
        lhs = C.table[(G.mor[counit[d]], unit[G.ob[d]])]
        rhs = G.mor[D.ident[d]] if semi else C.ident[G.ob[d]]
        if lhs != rhs:
            raise TriangleFailure(f"Gε∘ηG fails at {D.ob_names[d]}")
    for c in C.objects:
        lhs = D.table[(counit[F.ob[c]], F.mor[unit[c]])]
        rhs = F.mor[C.ident[c]] if semi else D.ident[F.ob[c]]
        if lhs != rhs:
            raise TriangleFailure(f"εF∘Fη fails at {C.ob_names[c]}")


class Adjunction:
    """F ⊣ G with F: C → D, G: D → C, unit Id_C → GF and counit FG → Id_D."""

    semi = False

    def __init__(self, F: Functor, G: Functor, unit: NatTrans, counit: NatTrans,
                 *, check: bool = True):
        self.F, self.G, self.unit, self.counit = F, G, unit, counit
        if check:
            _check_pair(F, G, unit, counit)
            _triangles(F, G, unit, counit, self.semi)

    @property
    def C(self) -> FinCat:
        return self.F.source

    @property
    def D(self) -> FinCat:
        return self.F.target

    def __eq__(self, other) -> bool:
        return (isinstance(other, Adjunction) and self.F == other.F and self.G == other.G
                and self.unit == other.unit and self.counit == other.counit)

    def __hash__(self) -> int:
        return hash((self.F, self.G))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.F!r} ⊣ {self.G!r})"


class Semiadjunction(Adjunction):
    """Identities Gε∘ηG = G·Id and εF∘Fη = F·Id."""

    semi = True


def validate_adjunction(F, G, unit, counit) -> Adjunction:
    return Adjunction(F, G, unit, counit)


def validate_semiadjunction(F, G, unit, counit) -> Semiadjunction:
    return Semiadjunction(F, G, unit, counit)


def opposite_adjunction(A: Adjunction) -> Adjunction:
    """(G^op ⊣ F^op) with unit ε^op and counit η^op."""
    Fo, Go = opposite_functor(A.F), opposite_functor(A.G)
    unit = NatTrans(identity_functor(Go.source), compose_functors(Fo, Go), A.counit.components,
                    check=False)
    counit = NatTrans(compose_functors(Go, Fo), identity_functor(Fo.source), A.unit.components,
                      check=False)
    return type(A)(Go, Fo, unit, counit, check=False)


def identity_adjunction(C: FinCat) -> Adjunction:
    Id = identity_functor(C)
    eta = NatTrans(Id, Id, C.ident)
    return Adjunction(Id, Id, eta, eta)


# adjoint search

def comma_initial(G: Functor, c: int, counter: Counter | None = None):
    """First (d, η) with η: c → Gd initial in c↓G, or None."""
    C, D = G.target, G.source
    counter = counter or Counter()
    t = C.table
    for d in D.objects:
        for eta in C.hom(c, G.ob[d]):
            ok = True
            for d2 in D.objects:
                counter.tick()
                targets = C.hom(c, G.ob[d2])
                hs = D.hom(d, d2)
                if len(hs) != len(targets):
                    ok = False
                    break
                if len({t[(G.mor[g], eta)] for g in hs}) != len(targets):
                    ok = False
                    break
            if ok:
                return d, eta
    return None


def find_left_adjoint(G: Functor) -> Adjunction | None:
    """Left adjoint of G from initial objects of the comma categories c↓G."""
    if "left_adjoint" in G.cache:
        return G.cache["left_adjoint"]
    C, D = G.target, G.source
    t = C.table
    counter = Counter()
    ob, unit = [], []
    for c in C.objects:
        found = comma_initial(G, c, counter)
        if found is None:
            G.cache["left_adjoint"] = None
            return None
        ob.append(found[0])
        unit.append(found[1])

    def factor(c, target_d, arrow):
        # unique g: ob[c] → target_d with G g ∘ η_c = arrow
        for g in D.hom(ob[c], target_d):
            if t[(G.mor[g], unit[c])] == arrow:
                return g
        raise InternalInconsistency("universal arrow does not factor")

    mor = [factor(C.dom[h], ob[C.cod[h]], t[(unit[C.cod[h]], h)]) for h in C.morphisms]
    F = Functor(C, D, ob, mor, name="L")
    counit = [factor(G.ob[d], d, C.ident[G.ob[d]]) for d in D.objects]
    A = Adjunction(F, G, NatTrans(identity_functor(C), compose_functors(G, F), unit),
                   NatTrans(compose_functors(F, G), identity_functor(D), counit))
    G.cache["left_adjoint"] = A
    return A


def find_right_adjoint(F: Functor) -> Adjunction | None:
    """Right adjoint of F, found as the left adjoint of F^op."""
    if "right_adjoint" in F.cache:
        return F.cache["right_adjoint"]
    Lop = find_left_adjoint(opposite_functor(F))
    if Lop is None:
        F.cache["right_adjoint"] = None
        return None
    A = opposite_adjunction(Lop)
    # A is (F^op^op ⊣ L^op); rebuild over the original categories with checks
    G = Functor(A.G.source, A.G.target, A.G.ob, A.G.mor, name="R")
    C, D = F.source, F.target
    unit = NatTrans(identity_functor(C), compose_functors(G, F), A.unit.components)
    counit = NatTrans(compose_functors(F, G), identity_functor(D), A.counit.components)
    out = Adjunction(F, G, unit, counit)
    F.cache["right_adjoint"] = out
    return out


# equivalences and reflections

def is_essentially_surjective(F: Functor) -> Verdict:
    D = F.target
    hits = []
    for d in D.objects:
        hit = None
        for x in F.source.objects:
            for f in D.hom(F.ob[x], d):
                if D.is_iso(f):
                    hit = (x, f)
                    break
            if hit:
                break
        if hit is None:
            return Verdict(False, witness=d)
        hits.append(hit)
    return Verdict(True, witness=hits)


def is_equivalence(F: Functor) -> Verdict:
    ff = is_fully_faithful(F)
    if not ff:
        return Verdict(False, witness=("not fully faithful", ff.witness))
    es = is_essentially_surjective(F)
    if not es:
        return Verdict(False, witness=("not essentially surjective", es.witness))
    return Verdict(True, witness=es.witness)


def quasi_inverse(F: Functor):
    """Materialize Q with isos F∘Q ≅ Id and Q∘F ≅ Id, or None if F is no equivalence."""
    v = is_equivalence(F)
    if not v:
        return None
    C, D = F.source, F.target
    picks = v.witness                                  # d ↦ (x, θ_d: F x → d)
    ob = [x for x, _ in picks]
    inv = [D.inverse(th) for _, th in picks]
    mor = []
    for g in D.morphisms:
        d, d2 = D.dom[g], D.cod[g]
        want = D.compose(inv[d2], g, picks[d][1])
        mor.append(next(f for f in C.hom(ob[d], ob[d2]) if F.mor[f] == want))
    Q = Functor(D, C, ob, mor, name="Q")
    counit = iso_of_functors(compose_functors(F, Q), identity_functor(D))
    unit = iso_of_functors(identity_functor(C), compose_functors(Q, F))
    if counit is None or unit is None:
        raise InternalInconsistency("quasi-inverse isos not found")
    return Q, unit, counit


def is_coreflection(G: Functor) -> Verdict:
    """G has a fully faithful left adjoint; cross-checked against the unit being iso."""
    A = find_left_adjoint(G)
    if A is None:
        return Verdict(False, witness="no left adjoint")
    ff = bool(is_fully_faithful(A.F))
    if ff != A.unit.is_iso():
        raise InternalInconsistency("left adjoint fully faithful disagrees with unit iso")
    return Verdict(ff, witness=A)


def is_reflection(F: Functor) -> Verdict:
    """F has a fully faithful right adjoint; cross-checked against the counit being iso."""
    A = find_right_adjoint(F)
    if A is None:
        return Verdict(False, witness="no right adjoint")
    ff = bool(is_fully_faithful(A.G))
    if ff != A.counit.is_iso():
        raise InternalInconsistency("right adjoint fully faithful disagrees with counit iso")
    return Verdict(ff, witness=A)


def is_bireflection(G: Functor) -> Verdict:
    """Equal fully faithful left and right adjoint F with η^r∘ε^l = Id_FG.

    The right adjunction is transported along every iso from the found right
    adjoint to the found left adjoint; this covers every right adjunction
    structure on the left adjoint functor.
    """
    Al = find_left_adjoint(G)
    if Al is None:
        return Verdict(False, witness="no left adjoint")
    if not is_fully_faithful(Al.F):
        return Verdict(False, witness="left adjoint not fully faithful")
    Ar = find_right_adjoint(G)
    if Ar is None:
        return Verdict(False, witness="no right adjoint")
    F, Fr = Al.F, Ar.G
    if not is_fully_faithful(Fr):
        return Verdict(False, witness="right adjoint not fully faithful")
    D = G.source
    eps_l = Al.counit.components
    for theta in iter_isos(F, Fr):
        inv = inverse_nat(theta).components
        eta = [D.table[(inv[G.ob[d]], Ar.unit[d])] for d in D.objects]
        if all(D.table[(eta[d], eps_l[d])] == D.ident[F.ob[G.ob[d]]] for d in D.objects):
            C = G.target
            right = Adjunction(G, F, NatTrans(identity_functor(D), compose_functors(F, G), eta),
                               NatTrans(compose_functors(G, F), identity_functor(C),
                                        [C.table[(Ar.counit[c], G.mor[theta[c]])]
                                         for c in C.objects]))
            path = "equal" if (F == Fr and theta.components == tuple(
                D.ident[F.ob[c]] for c in C.objects)) else "transported"
            return Verdict(True, witness=(Al, right), path=path)
    return Verdict(False, witness="coherence fails for every right adjunction structure")


def is_coreflection_utr(G: Functor) -> Verdict:
    return is_coreflection(complete_functor(G))


def is_reflection_utr(F: Functor) -> Verdict:
    return is_reflection(complete_functor(F))


def is_bireflection_utr(G: Functor) -> Verdict:
    v = is_bireflection(complete_functor(G))
    # semiseparable ∧ coreflection u.t.r. is an equivalent criterion
    other = bool(is_semiseparable(G)) and bool(is_coreflection_utr(G))
    if other != v.holds:
        raise InternalInconsistency("bireflection u.t.r. criteria disagree")
    return v


def is_equivalence_utr(F: Functor) -> Verdict:
    v = is_equivalence(complete_functor(F))
    other = bool(is_fully_faithful(F)) and bool(is_surjective_utr(F))
    if other != v.holds:
        raise InternalInconsistency("equivalence u.t.r. criteria disagree")
    return v


def has_left_adjoint(G: Functor) -> bool:
    return find_left_adjoint(G) is not None


def has_right_adjoint(F: Functor) -> bool:
    return find_right_adjoint(F) is not None


# semiadjunctions

def semiadjunction_from_right_semiadjoint(F: Functor, G: Functor, unit: NatTrans,
                                          counit: NatTrans):
    """F' f = Ff∘e_X with e = εF∘Fη; returns (F', Semiadjunction(F', G, η, ε), e)."""
    C, D = F.source, F.target
    for d in D.objects:
        if C.table[(G.mor[counit[d]], unit[G.ob[d]])] != G.map_id(d):
            raise PreconditionFailed(f"Gε∘ηG != Id_G at {D.ob_names[d]}")
    e = [D.table[(counit[F.ob[c]], F.mor[unit[c]])] for c in C.objects]
    Fp = Semifunctor(C, D, F.ob, [D.table[(F.mor[f], e[C.dom[f]])] for f in C.morphisms],
                     name="F'")
    eta = NatTrans(unit.source, compose_functors(G, Fp), unit.components)
    eps = NatTrans(compose_functors(Fp, G), counit.target, counit.components)
    S = Semiadjunction(Fp, G, eta, eps)
    for d in D.objects:
        if D.table[(counit[d], e[G.ob[d]])] != counit[d]:
            raise InternalInconsistency("ε∘eG != ε")
    for c in C.objects:
        if C.table[(G.mor[e[c]], unit[c])] != unit[c]:
            raise InternalInconsistency("Ge∘η != η")
    return Fp, S, e


def charact_coreflection_utr(S: Adjunction) -> Verdict:
    """Search ν: GF → Id with η∘ν = GF·Id and ν∘η = Id.

    Prefers seminatural ν; when only a merely natural one exists the verdict
    is still false and ``data['natural_only']`` records it.
    """
    F, G, eta = S.F, S.G, S.unit
    C = F.source
    GF = compose_functors(G, F)
    Id = identity_functor(C)
    t = C.table

    def eqs(x, m):
        return (t[(eta[x], m)] == GF.map_id(x) and t[(m, eta[x])] == C.ident[x])

    def semi(x, m):
        return eqs(x, m) and t[(m, GF.map_id(x))] == m

    nu = first_family(GF, Id, allowed=semi)
    if nu is not None:
        return Verdict(True, witness=nu)
    plain = first_family(GF, Id, allowed=eqs)
    return Verdict(False, natural_only=plain)


def opposite_semiadjunction(S: Adjunction) -> Adjunction:
    return opposite_adjunction(S)


def charact_reflection_utr(S: Adjunction) -> Verdict:
    """γ: Id → FG with γ∘ε = FG·Id and ε∘γ = Id, via the opposite semiadjunction."""
    v = charact_coreflection_utr(opposite_adjunction(S))
    if v.witness is None:
        return v
    nu = v.witness
    FG = compose_functors(S.F, S.G)
    gamma = NatTrans(identity_functor(S.D), FG, nu.components, check=False)
    return Verdict(True, witness=gamma)


def trinat_witness(F: Functor, G: Functor, unit: NatTrans, counit: NatTrans) -> NatTrans | None:
    """ν: GF → Id natural with ν∘η = Id and νG = Gε."""
    C, D = F.source, F.target
    t = C.table
    forced: dict = {}
    for d in D.objects:
        x = G.ob[d]
        v = G.mor[counit[d]]
        if forced.setdefault(x, v) != v:
            return None

    def allowed(x, m):
        if t[(m, unit[x])] != C.ident[x]:
            return False
        return forced.get(x, m) == m

    return first_family(compose_functors(G, F), identity_functor(C), allowed=allowed)


def counit_section(A: Adjunction) -> NatTrans | None:
    """ξ: Id_D → FG with ε∘ξ = Id."""
    D = A.D
    eps = A.counit
    return first_family(identity_functor(D), compose_functors(A.F, A.G),
                        allowed=lambda d, m: D.table[(eps[d], m)] == D.ident[d])


def unit_retraction(A: Adjunction) -> NatTrans | None:
    """ρ: GF → Id_C with ρ∘η = Id."""
    C = A.C
    eta = A.unit
    return first_family(compose_functors(A.G, A.F), identity_functor(C),
                        allowed=lambda c, m: C.table[(m, eta[c])] == C.ident[c])


__all__ = [
    "Adjunction", "Semiadjunction", "charact_coreflection_utr", "charact_reflection_utr",
    "comma_initial", "counit_section", "find_left_adjoint", "find_right_adjoint",
    "has_left_adjoint", "has_right_adjoint", "identity_adjunction", "is_bireflection",
    "is_bireflection_utr", "is_coreflection", "is_coreflection_utr", "is_equivalence",
    "is_equivalence_utr", "is_essentially_surjective", "is_reflection", "is_reflection_utr",
    "iso_of_functors", "opposite_adjunction", "quasi_inverse",
    "semiadjunction_from_right_semiadjoint", "trinat_witness", "unit_retraction",
    "validate_adjunction", "validate_semiadjunction", "iter_families",
]
