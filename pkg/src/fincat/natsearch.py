"""Backtracking search for natural families between two (semi)functors.

Objects are assigned in id order and candidate components in morphism-id
order, so solutions come out in lexicographic (canonical) order.
"""
from __future__ import annotations

from typing import Callable, Iterator, Sequence

from .config import Counter
from .core import Functor, NatTrans
from .errors import BoundaryMismatch

Allowed = Callable[[int, int], bool]
Relation = tuple[Sequence[int], Callable[[list], bool]]


def iter_families(F: Functor, G: Functor, *, allowed: Allowed | None = None,
                  relations: Sequence[Relation] = (), natural: bool = True,
                  counter: Counter | None = None) -> Iterator[tuple[int, ...]]:
    """Yield component tuples α with α_x: Fx → Gx.

    ``allowed(x, m)`` filters candidate components, ``relations`` are extra
    constraints checked once all their objects are assigned.
    """
    if F.source != G.source or F.target != G.target:
        raise BoundaryMismatch("families need parallel functors")
    C, D = F.source, F.target
    t = D.table
    counter = counter or Counter()
    n = C.n_obj
    domains = []
    for x in C.objects:
        cands = D.hom(F.ob[x], G.ob[x])
        if allowed is not None:
            cands = [m for m in cands if allowed(x, m)]
        if not cands:
            return
        domains.append(cands)
    # morphisms to check when object x is assigned: both ends among 0..x
    checks = [[] for _ in C.objects]
    if natural:
        for f in C.morphisms:
            checks[max(C.dom[f], C.cod[f])].append((f, C.dom[f], C.cod[f], F.mor[f], G.mor[f]))
    rel_at = [[] for _ in C.objects]
    for objs, pred in relations:
        rel_at[max(objs)].append(pred)
    assign = [None] * n

    def rec(x):
        if x == n:
            yield tuple(assign)
            return
        for m in domains[x]:
            counter.tick()
            assign[x] = m
            ok = True
            for f, a, b, Ff, Gf in checks[x]:
                if t[(assign[b], Ff)] != t[(Gf, assign[a])]:
                    ok = False
                    break
            if ok:
                for pred in rel_at[x]:
                    if not pred(assign):
                        ok = False
                        break
            if ok:
                yield from rec(x + 1)
        assign[x] = None

    yield from rec(0)


def first_family(F: Functor, G: Functor, **kw) -> NatTrans | None:
    for comps in iter_families(F, G, **kw):
        return NatTrans(F, G, comps, check=False)
    return None


def iter_isos(F: Functor, G: Functor, counter: Counter | None = None) -> Iterator[NatTrans]:
    D = F.target
    for comps in iter_families(F, G, allowed=lambda x, m: D.is_iso(m), counter=counter):
        yield NatTrans(F, G, comps, check=False)


def iso_of_functors(F: Functor, G: Functor) -> NatTrans | None:
    """First invertible natural transformation F → G in canonical order."""
    if F.source != G.source or F.target != G.target:
        return None
    for iso in iter_isos(F, G):
        return iso
    return None


def inverse_nat(alpha: NatTrans) -> NatTrans:
    D = alpha.source.target
    return NatTrans(alpha.target, alpha.source, [D.inverse(a) for a in alpha.components],
                    check=False)
