"""Decision procedures for functor classes and the associated idempotent.

The hom-retraction search treats every value 𝒫_{X,Y}(h) as a variable with
domain Hom(X, Y).  Assigning one value forces its whole naturality orbit
𝒫(Fb∘h∘Fa) = b∘𝒫(h)∘a, so propagation does most of the work.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterator

from .config import Counter
from .core import (
    MODES,
    Functor,
    HomRetraction,
    NatTrans,
    Verdict,
    hom_retraction_diagnostics,
    identity_functor,
)
from .errors import WitnessInvalid


def is_faithful(F: Functor) -> Verdict:
    C = F.source
    for x in C.objects:
        for y in C.objects:
            seen = {}
            for f in C.hom(x, y):
                g = seen.setdefault(F.mor[f], f)
                if g != f:
                    return Verdict(False, witness=(g, f))
    return Verdict(True)


def is_full(F: Functor) -> Verdict:
    C, D = F.source, F.target
    for x in C.objects:
        for y in C.objects:
            image = {F.mor[f] for f in C.hom(x, y)}
            for h in D.hom(F.ob[x], F.ob[y]):
                if h not in image:
                    return Verdict(False, witness=(x, y, h))
    return Verdict(True)


def is_fully_faithful(F: Functor) -> Verdict:
    v = is_faithful(F)
    if not v:
        return v
    return is_full(F)


class _Problem:
    """Variables, domains and the propagation engine for one (F, mode) pair."""

    def __init__(self, F: Functor, mode: str):
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}")
        self.F = F
        C, D = F.source, F.target
        self.vars = [(x, y, h) for x in C.objects for y in C.objects
                     for h in D.hom(F.ob[x], F.ob[y])]
        self.index = {v: i for i, v in enumerate(self.vars)}
        allowed = []
        for x, y, h in self.vars:
            homs = C.hom(x, y)
            if mode == "natfull":
                allowed.append([p for p in homs if F.mor[p] == h])
            elif mode == "semisep" and any(F.mor[f] == h for f in homs):
                allowed.append([p for p in homs if F.mor[p] == h])
            else:
                allowed.append(list(homs))
        self.consistent = True
        if mode == "sep":
            for f in C.morphisms:
                v = self.index[(C.dom[f], C.cod[f], F.mor[f])]
                allowed[v] = [p for p in allowed[v] if p == f]
        if any(not a for a in allowed):
            self.consistent = False
        self.allowed = allowed
        self.allowed_sets = [frozenset(a) for a in allowed]

    def raw_count(self) -> int:
        """Number of unconstrained candidate families."""
        C = self.F.source
        n = 1
        for x, y, _ in self.vars:
            n *= len(C.hom(x, y))
        return n

    def solutions(self, counter: Counter) -> Iterator[list]:
        if not self.consistent:
            return
        F = self.F
        C, D = F.source, F.target
        s, t, Fm = C.table, D.table, F.mor
        index, vars_, allowed_sets = self.index, self.vars, self.allowed_sets
        val = [None] * len(vars_)
        into = [[(a, C.dom[a], Fm[a]) for a in C.into(x)] for x in C.objects]
        outs = [[(b, C.cod[b], Fm[b]) for b in C.out_of(y)] for y in C.objects]

        def assign(v0, p0, trail):
            stack = [(v0, p0)]
            while stack:
                v, p = stack.pop()
                cur = val[v]
                if cur is not None:
                    if cur != p:
                        return False
                    continue
                if p not in allowed_sets[v]:
                    return False
                val[v] = p
                trail.append(v)
                x, y, h = vars_[v]
                for a, xa, Fa in into[x]:
                    ha = t[(h, Fa)]
                    pa = s[(p, a)]
                    for b, yb, Fb in outs[y]:
                        stack.append((index[(xa, yb, t[(Fb, ha)])], s[(b, pa)]))
            return True

        n = len(vars_)

        def rec(start):
            v = start
            while v < n and val[v] is not None:
                v += 1
            if v == n:
                yield list(val)
                return
            for p in self.allowed[v]:
                counter.tick()
                trail = []
                if assign(v, p, trail):
                    yield from rec(v + 1)
                for u in trail:
                    val[u] = None

        yield from rec(0)

    def to_retraction(self, values: list) -> HomRetraction:
        maps: dict = {}
        C = self.F.source
        for x in C.objects:
            for y in C.objects:
                maps[(x, y)] = {}
        for (x, y, h), p in zip(self.vars, values):
            maps[(x, y)][h] = p
        return HomRetraction(self.F, maps)


def iter_hom_retractions(F: Functor, mode: str, counter: Counter | None = None
                         ) -> Iterator[HomRetraction]:
    prob = _Problem(F, mode)
    for values in prob.solutions(counter or Counter()):
        yield prob.to_retraction(values)


def search_hom_retraction(F: Functor, mode: str, counter: Counter | None = None
                          ) -> HomRetraction | None:
    """First 𝒫 in canonical order satisfying the mode equation, or None if none exists.

    Raises BudgetExceeded when the node budget runs out before a decision.
    """
    key = ("retraction", mode)
    if key in F.cache:
        return F.cache[key]
    found = None
    for P in iter_hom_retractions(F, mode, counter):
        found = P
        break
    if found is not None:
        diags = hom_retraction_diagnostics(found, mode)
        if diags:
            raise WitnessInvalid(f"search produced an invalid witness: {diags[:3]}")
    F.cache[key] = found
    return found


def enumerate_hom_retractions(F: Functor, mode: str, limit: int | None = None,
                              counter: Counter | None = None) -> list[HomRetraction]:
    out = []
    for P in iter_hom_retractions(F, mode, counter):
        out.append(P)
        if limit is not None and len(out) >= limit:
            break
    return out


def raw_candidate_count(F: Functor) -> int:
    return _Problem(F, "semisep").raw_count()


def is_semiseparable(F: Functor) -> Verdict:
    P = search_hom_retraction(F, "semisep")
    return Verdict(P is not None, witness=P)


def is_separable(F: Functor) -> Verdict:
    P = search_hom_retraction(F, "sep")
    return Verdict(P is not None, witness=P)


def is_naturally_full(F: Functor) -> Verdict:
    P = search_hom_retraction(F, "natfull")
    return Verdict(P is not None, witness=P)


def associated_idempotent(F: Functor, P: HomRetraction) -> NatTrans:
    """e_X = 𝒫_{X,X}(Id_FX), validated together with Fe = Id_F and the universal property."""
    C, D = F.source, F.target
    if P.functor != F:
        raise WitnessInvalid("witness belongs to another functor")
    comps = [P(x, x, D.ident[F.ob[x]]) for x in C.objects]
    Id = identity_functor(C)
    e = NatTrans(Id, Id, comps, check=False)
    check_idempotent_nat(e)
    for x in C.objects:
        if F.mor[comps[x]] != D.ident[F.ob[x]]:
            raise WitnessInvalid(f"F e_{C.ob_names[x]} is not an identity")
    t = C.table
    for x in C.objects:
        for y in C.objects:
            hs = C.hom(x, y)
            for f in hs:
                for g in hs:
                    if (F.mor[f] == F.mor[g]) != (t[(comps[y], f)] == t[(comps[y], g)]):
                        raise WitnessInvalid("universal property of e fails")
    return e


def check_idempotent_nat(e: NatTrans) -> None:
    from .core import nat_diagnostics
    from .errors import NotIdempotentNat

    C = e.cat
    if e.source != identity_functor(C) or e.target != identity_functor(C):
        raise NotIdempotentNat("not an endo-transformation of the identity functor")
    if nat_diagnostics(e):
        raise NotIdempotentNat("not natural")
    for x in C.objects:
        if C.table[(e[x], e[x])] != e[x]:
            raise NotIdempotentNat(f"component at {C.ob_names[x]} is not idempotent")


def _split_mono(D, f):
    x, y = D.dom[f], D.cod[f]
    ix = D.ident[x]
    return any(D.table[(r, f)] == ix for r in D.hom(y, x))


def _split_epi(D, f):
    x, y = D.dom[f], D.cod[f]
    iy = D.ident[y]
    return any(D.table[(f, s)] == iy for s in D.hom(y, x))


def is_maschke(F: Functor) -> Verdict:
    """F reflects split monomorphisms."""
    C, D = F.source, F.target
    for f in C.morphisms:
        if _split_mono(D, F.mor[f]) and not _split_mono(C, f):
            return Verdict(False, witness=f)
    return Verdict(True)


def is_dual_maschke(F: Functor) -> Verdict:
    """F reflects split epimorphisms."""
    C, D = F.source, F.target
    for f in C.morphisms:
        if _split_epi(D, F.mor[f]) and not _split_epi(C, f):
            return Verdict(False, witness=f)
    return Verdict(True)


def is_conservative(F: Functor) -> Verdict:
    C, D = F.source, F.target
    for f in C.morphisms:
        if D.is_iso(F.mor[f]) and not C.is_iso(f):
            return Verdict(False, witness=f)
    return Verdict(True)


def is_surjective_utr(F: Functor) -> Verdict:
    """Every target object is a retract of some F x; witness is (x, i, p) per object."""
    C, D = F.source, F.target
    t = D.table
    found = []
    for d in D.objects:
        hit = None
        for x in C.objects:
            fx = F.ob[x]
            for i in D.hom(d, fx):
                for p in D.hom(fx, d):
                    if t[(p, i)] == D.ident[d]:
                        hit = (x, i, p)
                        break
                if hit:
                    break
            if hit:
                break
        if hit is None:
            return Verdict(False, witness=d)
        found.append(hit)
    return Verdict(True, witness=found)


@dataclass
class FunctorReport:
    faithful: bool
    full: bool
    fully_faithful: bool
    semiseparable: bool
    separable: bool
    naturally_full: bool
    maschke: bool
    dual_maschke: bool
    conservative: bool
    surjective_utr: bool
    witnesses: dict = field(default_factory=dict)
    search_stats: dict = field(default_factory=dict)

    FLAGS = ("faithful", "full", "fully_faithful", "semiseparable", "separable",
             "naturally_full", "maschke", "dual_maschke", "conservative", "surjective_utr")

    def flags(self) -> dict:
        return {k: getattr(self, k) for k in self.FLAGS}


def classify(F: Functor) -> FunctorReport:
    counter = Counter()
    start = time.perf_counter()
    P = search_hom_retraction(F, "semisep", counter)
    sep = search_hom_retraction(F, "sep", counter)
    nf = search_hom_retraction(F, "natfull", counter)
    witnesses: dict = {}
    if P is not None:
        witnesses["retraction"] = P
        witnesses["idempotent"] = associated_idempotent(F, P)
    surj = is_surjective_utr(F)
    if surj:
        witnesses["retracts"] = surj.witness
    rep = FunctorReport(
        faithful=is_faithful(F).holds, full=is_full(F).holds,
        fully_faithful=is_fully_faithful(F).holds,
        semiseparable=P is not None, separable=sep is not None, naturally_full=nf is not None,
        maschke=is_maschke(F).holds, dual_maschke=is_dual_maschke(F).holds,
        conservative=is_conservative(F).holds, surjective_utr=surj.holds,
        witnesses=witnesses,
        search_stats={"nodes": counter.nodes, "elapsed": time.perf_counter() - start},
    )
    return rep
