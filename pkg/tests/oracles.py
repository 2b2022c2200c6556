"""Brute-force reference implementations, written against raw tables only.

Nothing here calls the search code under test; each oracle enumerates every
candidate with itertools and checks the defining equations directly.
"""
from __future__ import annotations

import itertools

RAW_LIMIT = 10 ** 6


def hom(C, x, y):
    return [f for f in C.morphisms if C.dom[f] == x and C.cod[f] == y]


def comp(C, g, f):
    return C.table[(g, f)]


# categories

def category_violations(objects, morphisms, identities, composition):
    """Every violated law of a name-based table, as a sorted list of (law, names)."""
    dom = {m: d for m, d, _ in morphisms}
    cod = {m: c for m, _, c in morphisms}
    table = {(g, f): h for g, f, h in composition}
    out = []
    for x in objects:
        i = identities.get(x)
        if i is None or dom.get(i) != x or cod.get(i) != x:
            out.append(("identity", x))
    for f in dom:
        for g in dom:
            if cod[f] == dom[g] and (g, f) not in table:
                out.append(("missing", g, f))
    if out:
        return sorted(out)
    for f in dom:
        if table[(identities[cod[f]], f)] != f or table[(f, identities[dom[f]])] != f:
            out.append(("unit", f))
    for f, g, h in itertools.product(dom, repeat=3):
        if cod[f] == dom[g] and cod[g] == dom[h]:
            if table[(h, table[(g, f)])] != table[(table[(h, g)], f)]:
                out.append(("assoc", h, g, f))
    return sorted(out)


def envelope_size(C):
    """(objects, morphisms) of the idempotent completion, counted directly."""
    idems = [(x, e) for x in C.objects for e in hom(C, x, x) if comp(C, e, e) == e]
    n = 0
    for (x, e), (y, d) in itertools.product(idems, repeat=2):
        n += sum(1 for f in hom(C, x, y) if comp(C, d, comp(C, f, e)) == f)
    return len(idems), n


def splits(C, q):
    x = C.dom[q]
    return any(comp(C, i, p) == q and comp(C, p, i) == C.ident[y]
               for y in C.objects for p in hom(C, x, y) for i in hom(C, y, x))


def idempotent_complete(C):
    return all(splits(C, e) for x in C.objects for e in hom(C, x, x) if comp(C, e, e) == e)


# functors

def functor_laws_hold(C, D, ob, mor):
    for f in C.morphisms:
        if D.dom[mor[f]] != ob[C.dom[f]] or D.cod[mor[f]] != ob[C.cod[f]]:
            return False
    if any(mor[C.ident[x]] != D.ident[ob[x]] for x in C.objects):
        return False
    return all(D.table[(mor[g], mor[f])] == mor[h] for (g, f), h in C.table.items())


def all_functor_tables(C, D):
    """Every (ob, mor) pair satisfying the functor laws, by full product enumeration."""
    out = []
    for ob in itertools.product(D.objects, repeat=C.n_obj):
        choices = [hom(D, ob[C.dom[f]], ob[C.cod[f]]) for f in C.morphisms]
        for mor in itertools.product(*choices):
            if functor_laws_hold(C, D, ob, mor):
                out.append((ob, mor))
    return out


def faithful(F):
    C = F.source
    return all(F.mor[f] != F.mor[g] for f in C.morphisms for g in C.morphisms
               if f < g and C.dom[f] == C.dom[g] and C.cod[f] == C.cod[g])


def full(F):
    C, D = F.source, F.target
    return all(set(hom(D, F.ob[x], F.ob[y])) <= {F.mor[f] for f in hom(C, x, y)}
               for x in C.objects for y in C.objects)


# hom retractions

def retraction_variables(F):
    C, D = F.source, F.target
    return [(x, y, h) for x in C.objects for y in C.objects for h in hom(D, F.ob[x], F.ob[y])]


def raw_count(F):
    C = F.source
    n = 1
    for x, y, _ in retraction_variables(F):
        n *= len(hom(C, x, y))
    return n


def _is_witness(F, vars_, values, mode):
    C, D = F.source, F.target
    P = dict(zip(vars_, values))
    for (x, y, h), p in P.items():
        for a in C.morphisms:
            if C.cod[a] != x:
                continue
            for b in C.morphisms:
                if C.dom[b] != y:
                    continue
                k = (C.dom[a], C.cod[b], D.table[(F.mor[b], D.table[(h, F.mor[a])])])
                if P[k] != C.table[(b, C.table[(p, a)])]:
                    return False
    for f in C.morphisms:
        p = P[(C.dom[f], C.cod[f], F.mor[f])]
        if mode == "sep" and p != f:
            return False
        if mode == "semisep" and F.mor[p] != F.mor[f]:
            return False
    if mode == "natfull" and any(F.mor[p] != h for (_, _, h), p in P.items()):
        return False
    return True


def brute_retractions(F, mode):
    """All witnesses as value tuples in canonical variable order, lexicographically sorted."""
    vars_ = retraction_variables(F)
    if raw_count(F) > RAW_LIMIT:
        raise ValueError("too many candidates for brute force")
    domains = [hom(F.source, x, y) for x, y, _ in vars_]
    return [vals for vals in itertools.product(*domains) if _is_witness(F, vars_, vals, mode)]


# natural transformations, adjunctions, monads

def natural_families(F, G):
    """All natural α: F ⇒ G by product enumeration over components."""
    C, D = F.source, F.target
    out = []
    for comps in itertools.product(*[hom(D, F.ob[x], G.ob[x]) for x in C.objects]):
        if all(D.table[(G.mor[f], comps[C.dom[f]])] == D.table[(comps[C.cod[f]], F.mor[f])]
               for f in C.morphisms):
            out.append(comps)
    return out


def has_left_adjoint(G):
    """Hom-set bijection test: some F and unit η make f ↦ Gf∘η_c bijective everywhere."""
    C, D = G.target, G.source
    for ob, mor in all_functor_tables(C, D):
        for unit in itertools.product(*[hom(C, c, G.ob[ob[c]]) for c in C.objects]):
            if all(len({C.table[(G.mor[f], unit[c])] for f in hom(D, ob[c], d)})
                   == len(hom(D, ob[c], d)) == len(hom(C, c, G.ob[d]))
                   for c in C.objects for d in D.objects):
                return True
    return False


def monad_separable(T_ob, T_mor, mult, C):
    """σ: T ⇒ TT with m∘σ = Id, and the two bimodule squares, by enumeration."""
    t = C.table
    TT_ob = [T_ob[T_ob[x]] for x in C.objects]
    for sig in itertools.product(*[hom(C, T_ob[x], TT_ob[x]) for x in C.objects]):
        if any(t[(mult[x], sig[x])] != C.ident[T_ob[x]] for x in C.objects):
            continue
        nat = all(t[(T_mor[T_mor[f]], sig[C.dom[f]])] == t[(sig[C.cod[f]], T_mor[f])]
                  for f in C.morphisms)
        left = all(t[(T_mor[mult[x]], sig[T_ob[x]])] == t[(sig[x], mult[x])] for x in C.objects)
        right = all(t[(mult[T_ob[x]], T_mor[sig[x]])] == t[(sig[x], mult[x])] for x in C.objects)
        if nat and left and right:
            return sig
    return None


def is_tiny_for_monads(C):
    """Small enough that enumerating every endofunctor stays under a second."""
    return C.n_obj <= 3 and C.n_mor <= 9
