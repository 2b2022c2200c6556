"""Finite categories, (semi)functors and (semi)natural transformations as tables.

Objects and morphisms are integer ids assigned in input order; names are kept
only for I/O.  Composition is a dict keyed by ``(g, f)`` meaning ``g∘f``.
"""
from __future__ import annotations

import random
from typing import Iterable, Sequence

from .errors import (
    BoundaryMismatch,
    Diagnostic,
    UnknownObject,
    ValidationError,
)


class Verdict:
    """A decision with optional witness data; truthy iff the property holds."""

    def __init__(self, holds: bool, witness=None, **data):
        self.holds = bool(holds)
        self.witness = witness
        self.data = data

    def __bool__(self) -> bool:
        return self.holds

    def __repr__(self) -> str:
        return f"Verdict({self.holds}, witness={self.witness!r})"


class FinCat:
    """A finite category given by explicit tables."""

    def __init__(self, objects: Sequence[str], morphisms: Sequence[tuple[str, int, int]],
                 identity: Sequence[int], table: dict, *, check: bool = True):
        self.ob_names = tuple(objects)
        self.mor_names = tuple(m[0] for m in morphisms)
        self.dom = tuple(m[1] for m in morphisms)
        self.cod = tuple(m[2] for m in morphisms)
        self.ident = tuple(identity)
        self.table = dict(table)
        self._key = None
        self.cache: dict = {}
        homs: dict = {}
        outs = [[] for _ in self.ob_names]
        ins = [[] for _ in self.ob_names]
        for f, (d, c) in enumerate(zip(self.dom, self.cod)):
            homs.setdefault((d, c), []).append(f)
            outs[d].append(f)
            ins[c].append(f)
        self._homs = {k: tuple(v) for k, v in homs.items()}
        self._out = tuple(map(tuple, outs))
        self._in = tuple(map(tuple, ins))
        if check:
            diags = category_diagnostics(self)
            if diags:
                raise ValidationError(diags)

    # sizes and lookups
    @property
    def n_obj(self) -> int:
        return len(self.ob_names)

    @property
    def n_mor(self) -> int:
        return len(self.mor_names)

    @property
    def objects(self) -> range:
        return range(len(self.ob_names))

    @property
    def morphisms(self) -> range:
        return range(len(self.mor_names))

    def hom(self, x: int, y: int) -> tuple[int, ...]:
        return self._homs.get((x, y), ())

    def out_of(self, x: int) -> tuple[int, ...]:
        return self._out[x]

    def into(self, y: int) -> tuple[int, ...]:
        return self._in[y]

    def obj(self, name: str) -> int:
        try:
            return self.ob_names.index(name)
        except ValueError:
            raise UnknownObject(name) from None

    def mor(self, name: str) -> int:
        try:
            return self.mor_names.index(name)
        except ValueError:
            raise UnknownObject(name) from None

    def compose(self, *fs: int) -> int:
        """``compose(h, g, f)`` is h∘g∘f."""
        out = fs[-1]
        for g in reversed(fs[:-1]):
            out = self.table[(g, out)]
        return out

    def is_idempotent(self, f: int) -> bool:
        return self.dom[f] == self.cod[f] and self.table[(f, f)] == f

    def idempotents(self, x: int) -> list[int]:
        return [f for f in self.hom(x, x) if self.table[(f, f)] == f]

    def inverse(self, f: int) -> int | None:
        x, y = self.dom[f], self.cod[f]
        for g in self.hom(y, x):
            if self.table[(g, f)] == self.ident[x] and self.table[(f, g)] == self.ident[y]:
                return g
        return None

    def is_iso(self, f: int) -> bool:
        return self.inverse(f) is not None

    # equality is strict table equality
    @property
    def key(self) -> tuple:
        if self._key is None:
            self._key = (self.ob_names, self.mor_names, self.dom, self.cod, self.ident,
                         tuple(sorted(self.table.items())))
        return self._key

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, FinCat):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"FinCat({self.n_obj} objects, {self.n_mor} morphisms)"

    def __getstate__(self):
        state = dict(self.__dict__)
        state["cache"] = {}
        return state


def category_diagnostics(C: FinCat) -> list[Diagnostic]:
    """Every violated category law, in a deterministic order."""
    diags: list[Diagnostic] = []
    n, m = C.n_obj, C.n_mor
    name = C.mor_names
    for x in C.objects:
        i = C.ident[x] if x < len(C.ident) else None
        if i is None or not 0 <= i < m or C.dom[i] != x or C.cod[i] != x:
            diags.append(Diagnostic("BadIdentity", (C.ob_names[x],)))
    for (g, f), h in C.table.items():
        if not (0 <= g < m and 0 <= f < m and 0 <= h < m):
            diags.append(Diagnostic("DanglingReference", ("composition", g, f, h)))
            continue
        if C.dom[g] != C.cod[f]:
            diags.append(Diagnostic("IllTypedComposite", (name[g], name[f])))
        elif C.dom[h] != C.dom[f] or C.cod[h] != C.cod[g]:
            diags.append(Diagnostic("IllTypedComposite", (name[g], name[f], name[h])))
    if diags:
        return diags
    for f in C.morphisms:
        for g in C.out_of(C.cod[f]):
            if (g, f) not in C.table:
                diags.append(Diagnostic("MissingComposite", (name[g], name[f])))
    if diags:
        return diags
    for f in C.morphisms:
        if C.table[(C.ident[C.cod[f]], f)] != f:
            diags.append(Diagnostic("LeftUnitLaw", (name[f],)))
        if C.table[(f, C.ident[C.dom[f]])] != f:
            diags.append(Diagnostic("RightUnitLaw", (name[f],)))
    t = C.table
    for f in C.morphisms:
        for g in C.out_of(C.cod[f]):
            gf = t[(g, f)]
            for h in C.out_of(C.cod[g]):
                if t[(h, gf)] != t[(t[(h, g)], f)]:
                    diags.append(Diagnostic("NonAssociative", (name[h], name[g], name[f])))
    return diags


def validate_category(objects: Sequence[str], morphisms: Sequence[tuple[str, str, str]],
                      identities: dict, composition: Iterable[Sequence[str]]) -> FinCat:
    """Build a FinCat from name-based tables, reporting every problem at once."""
    diags: list[Diagnostic] = []
    obj_ix: dict[str, int] = {}
    for o in objects:
        if o in obj_ix:
            diags.append(Diagnostic("DuplicateName", ("object", o)))
        obj_ix.setdefault(o, len(obj_ix))
    mor_ix: dict[str, int] = {}
    mors = []
    for name, d, c in morphisms:
        if name in mor_ix:
            diags.append(Diagnostic("DuplicateName", ("morphism", name)))
            continue
        for end in (d, c):
            if end not in obj_ix:
                diags.append(Diagnostic("DanglingReference", ("morphism", name, end)))
        mor_ix[name] = len(mors)
        mors.append((name, obj_ix.get(d, -1), obj_ix.get(c, -1)))
    ident = []
    for o in objects:
        i = identities.get(o)
        if i is None:
            diags.append(Diagnostic("BadIdentity", (o,)))
            ident.append(-1)
        elif i not in mor_ix:
            diags.append(Diagnostic("DanglingReference", ("identity", o, i)))
            ident.append(-1)
        else:
            ident.append(mor_ix[i])
    for o in identities:
        if o not in obj_ix:
            diags.append(Diagnostic("DanglingReference", ("identity", o)))
    table = {}
    for entry in composition:
        g, f, h = entry
        bad = [x for x in (g, f, h) if x not in mor_ix]
        if bad:
            diags.append(Diagnostic("DanglingReference", ("composition", g, f, h)))
            continue
        k = (mor_ix[g], mor_ix[f])
        if k in table:
            diags.append(Diagnostic("DuplicateComposite", (g, f)))
        table[k] = mor_ix[h]
    if diags:
        raise ValidationError(diags)
    return FinCat(list(obj_ix), mors, ident, table)


def sample_associativity(C: FinCat, samples: int = 1000, seed: int = 0) -> list[tuple]:
    """Re-check randomly sampled composable triples; returns the failures."""
    rng = random.Random(seed)
    bad = []
    if C.n_mor == 0:
        return bad
    for _ in range(samples):
        f = rng.randrange(C.n_mor)
        g = rng.choice(C.out_of(C.cod[f]))
        h = rng.choice(C.out_of(C.cod[g]))
        if C.compose(h, C.compose(g, f)) != C.compose(C.compose(h, g), f):
            bad.append((h, g, f))
    return bad


def hom_set(C: FinCat, x, y) -> list[int]:
    """Morphisms x → y in input order; objects may be given by id or name."""
    def ix(o):
        if isinstance(o, str):
            return C.obj(o)
        if not 0 <= o < C.n_obj:
            raise UnknownObject(o)
        return o
    return list(C.hom(ix(x), ix(y)))


def opposite(C: FinCat) -> FinCat:
    """Same ids with dom/cod swapped and comp_op(g, f) = comp(f, g)."""
    cached = C.cache.get("opposite")
    if cached is not None:
        return cached
    mors = [(n, c, d) for n, d, c in zip(C.mor_names, C.dom, C.cod)]
    table = {(f, g): h for (g, f), h in C.table.items()}
    D = FinCat(C.ob_names, mors, C.ident, table, check=False)
    D.cache["opposite"] = C
    C.cache["opposite"] = D
    return D


def full_subcategory(C: FinCat, objs: Sequence[int]) -> tuple[FinCat, list[int]]:
    """Full subcategory on ``objs``; returns it and the list of ambient morphism ids."""
    objs = list(objs)
    pos = {x: i for i, x in enumerate(objs)}
    keep = [f for f in C.morphisms if C.dom[f] in pos and C.cod[f] in pos]
    new = {f: i for i, f in enumerate(keep)}
    mors = [(C.mor_names[f], pos[C.dom[f]], pos[C.cod[f]]) for f in keep]
    table = {(new[g], new[f]): new[h] for (g, f), h in C.table.items() if g in new and f in new}
    D = FinCat([C.ob_names[x] for x in objs], mors, [new[C.ident[x]] for x in objs], table,
               check=False)
    return D, keep


class Functor:
    """Object and morphism maps between finite categories."""

    semi = False

    def __init__(self, source: FinCat, target: FinCat, ob: Sequence[int], mor: Sequence[int],
                 *, check: bool = True, name: str = ""):
        self.source = source
        self.target = target
        self.ob = tuple(ob)
        self.mor = tuple(mor)
        self.name = name
        self.cache: dict = {}
        if check:
            diags = functor_diagnostics(self)
            if diags:
                raise ValidationError(diags)

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, Functor):
            return NotImplemented
        return (self.semi == other.semi and self.ob == other.ob and self.mor == other.mor
                and self.source == other.source and self.target == other.target)

    def __hash__(self) -> int:
        return hash((self.ob, self.mor))

    def __repr__(self) -> str:
        kind = type(self).__name__
        return f"{kind}({self.name or '?'}: {self.source!r} -> {self.target!r})"

    def __getstate__(self):
        state = dict(self.__dict__)
        state["cache"] = {}
        return state

    def map_id(self, x: int) -> int:
        """F(Id_x); equals the identity of F x for a functor."""
        return self.mor[self.source.ident[x]]


class Semifunctor(Functor):
    """Like a functor, but identities need only go to idempotents."""

    semi = True


def functor_diagnostics(F: Functor) -> list[Diagnostic]:
    C, D = F.source, F.target
    diags = []
    if len(F.ob) != C.n_obj or len(F.mor) != C.n_mor:
        return [Diagnostic("DanglingReference", ("functor table size",))]
    for x in C.objects:
        if not 0 <= F.ob[x] < D.n_obj:
            diags.append(Diagnostic("DanglingReference", ("object", C.ob_names[x])))
    for f in C.morphisms:
        if not 0 <= F.mor[f] < D.n_mor:
            diags.append(Diagnostic("DanglingReference", ("morphism", C.mor_names[f])))
    if diags:
        return diags
    for f in C.morphisms:
        g = F.mor[f]
        if D.dom[g] != F.ob[C.dom[f]] or D.cod[g] != F.ob[C.cod[f]]:
            diags.append(Diagnostic("BoundaryMismatch", (C.mor_names[f],)))
    if diags:
        return diags
    for x in C.objects:
        fi = F.mor[C.ident[x]]
        if not F.semi and fi != D.ident[F.ob[x]]:
            diags.append(Diagnostic("IdentityNotPreserved", (C.ob_names[x],)))
        elif F.semi and D.table[(fi, fi)] != fi:
            diags.append(Diagnostic("IdentityImageNotIdempotent", (C.ob_names[x],)))
    for (g, f), h in C.table.items():
        if D.table[(F.mor[g], F.mor[f])] != F.mor[h]:
            diags.append(Diagnostic("CompositionNotPreserved", (C.mor_names[g], C.mor_names[f])))
    return diags


def identity_functor(C: FinCat) -> Functor:
    return Functor(C, C, C.objects, C.morphisms, check=False, name="Id")


def compose_functors(G: Functor, F: Functor) -> Functor:
    """G∘F; a semifunctor if either factor is one."""
    if F.target != G.source:
        raise BoundaryMismatch("compose_functors: F.target != G.source")
    cls = Semifunctor if (F.semi or G.semi) else Functor
    return cls(F.source, G.target, [G.ob[x] for x in F.ob], [G.mor[f] for f in F.mor],
               check=False, name=f"{G.name}{F.name}" if G.name and F.name else "")


def opposite_functor(F: Functor) -> Functor:
    return type(F)(opposite(F.source), opposite(F.target), F.ob, F.mor, check=False,
                   name=F.name + "^op" if F.name else "")


class NatTrans:
    """A family of components F x → F' x; naturality is checked on construction."""

    def __init__(self, source: Functor, target: Functor, components: Sequence[int],
                 *, check: bool = True):
        self.source = source
        self.target = target
        self.components = tuple(components)
        if check:
            diags = nat_diagnostics(self)
            if diags:
                raise ValidationError(diags)

    def __getitem__(self, x: int) -> int:
        return self.components[x]

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, NatTrans):
            return NotImplemented
        return (self.components == other.components and self.source == other.source
                and self.target == other.target)

    def __hash__(self) -> int:
        return hash(self.components)

    def __repr__(self) -> str:
        return f"NatTrans({self.components})"

    @property
    def cat(self) -> FinCat:
        return self.source.source

    def is_seminatural(self) -> bool:
        F, D = self.source, self.source.target
        return all(D.table[(a, F.map_id(x))] == a for x, a in enumerate(self.components))

    def is_iso(self) -> bool:
        D = self.source.target
        return all(D.is_iso(a) for a in self.components)


def nat_diagnostics(alpha: NatTrans) -> list[Diagnostic]:
    F, G = alpha.source, alpha.target
    if F.source != G.source or F.target != G.target:
        return [Diagnostic("BoundaryMismatch", ("functors differ in source or target",))]
    C, D = F.source, F.target
    a = alpha.components
    if len(a) != C.n_obj:
        return [Diagnostic("DanglingReference", ("component count",))]
    diags = []
    for x in C.objects:
        if not 0 <= a[x] < D.n_mor or D.dom[a[x]] != F.ob[x] or D.cod[a[x]] != G.ob[x]:
            diags.append(Diagnostic("BadComponent", (C.ob_names[x],)))
    if diags:
        return diags
    t = D.table
    for f in C.morphisms:
        x, y = C.dom[f], C.cod[f]
        if t[(a[y], F.mor[f])] != t[(G.mor[f], a[x])]:
            diags.append(Diagnostic("NotNatural", (C.mor_names[f],)))
    return diags


def identity_nat(F: Functor) -> NatTrans:
    """Id_F; for a semifunctor the components are F(Id_x)."""
    return NatTrans(F, F, [F.map_id(x) for x in F.source.objects], check=False)


def functor_id_family(F: Functor) -> NatTrans:
    """The family F·Id with components F(Id_x)."""
    return identity_nat(F)


def nat_vertical(beta: NatTrans, alpha: NatTrans) -> NatTrans:
    """β∘α."""
    if alpha.target != beta.source:
        raise BoundaryMismatch("nat_vertical: alpha.target != beta.source")
    D = alpha.source.target
    comps = [D.table[(b, a)] for b, a in zip(beta.components, alpha.components)]
    return NatTrans(alpha.source, beta.target, comps, check=False)


def nat_whisker(first, second) -> NatTrans:
    """``nat_whisker(H, α)`` is Hα and ``nat_whisker(α, K)`` is αK."""
    if isinstance(first, Functor) and isinstance(second, NatTrans):
        H, alpha = first, second
        if alpha.source.target != H.source:
            raise BoundaryMismatch("nat_whisker: H.source != alpha's target category")
        return NatTrans(compose_functors(H, alpha.source), compose_functors(H, alpha.target),
                        [H.mor[a] for a in alpha.components], check=False)
    if isinstance(first, NatTrans) and isinstance(second, Functor):
        alpha, K = first, second
        if K.target != alpha.source.source:
            raise BoundaryMismatch("nat_whisker: K.target != alpha's source category")
        return NatTrans(compose_functors(alpha.source, K), compose_functors(alpha.target, K),
                        [alpha.components[K.ob[x]] for x in K.source.objects], check=False)
    raise TypeError("nat_whisker expects (Functor, NatTrans) or (NatTrans, Functor)")


def opposite_nat(alpha: NatTrans) -> NatTrans:
    """α^op: G^op → F^op with the same components."""
    return NatTrans(opposite_functor(alpha.target), opposite_functor(alpha.source),
                    alpha.components, check=False)


class HomRetraction:
    """A pair-indexed family of maps Hom(FX, FY) → Hom(X, Y).

    ``maps[(x, y)]`` is a dict from target morphism ids to source morphism ids.
    """

    def __init__(self, functor: Functor, maps: dict):
        self.functor = functor
        self.maps = maps

    def __call__(self, x: int, y: int, h: int) -> int:
        return self.maps[(x, y)][h]

    def __eq__(self, other) -> bool:
        return (isinstance(other, HomRetraction) and self.functor == other.functor
                and self.maps == other.maps)

    def values(self) -> tuple:
        """Flat value vector in canonical variable order (used for ordering witnesses)."""
        F = self.functor
        C, D = F.source, F.target
        return tuple(self.maps[(x, y)][h] for x in C.objects for y in C.objects
                     for h in D.hom(F.ob[x], F.ob[y]))


MODES = ("semisep", "sep", "natfull")


def hom_retraction_diagnostics(P: HomRetraction, mode: str | None = None) -> list[Diagnostic]:
    F = P.functor
    C, D = F.source, F.target
    diags = []
    for x in C.objects:
        for y in C.objects:
            m = P.maps.get((x, y))
            hs = D.hom(F.ob[x], F.ob[y])
            if m is None or set(m) != set(hs):
                diags.append(Diagnostic("BadDomain", (x, y)))
                continue
            for h, p in m.items():
                if C.dom[p] != x or C.cod[p] != y:
                    diags.append(Diagnostic("BadValue", (x, y, h)))
    if diags:
        return diags
    t, s = D.table, C.table
    for x in C.objects:
        for y in C.objects:
            for h, p in P.maps[(x, y)].items():
                for a in C.into(x):
                    ha = t[(h, F.mor[a])]
                    pa = s[(p, a)]
                    for b in C.out_of(y):
                        lhs = P.maps[(C.dom[a], C.cod[b])][t[(F.mor[b], ha)]]
                        if lhs != s[(b, pa)]:
                            diags.append(Diagnostic("NotNatural", (x, y, h, a, b)))
                            if len(diags) > 50:
                                return diags
    if mode is not None:
        diags.extend(mode_diagnostics(P, mode))
    return diags


def mode_diagnostics(P: HomRetraction, mode: str) -> list[Diagnostic]:
    F = P.functor
    C = F.source
    diags = []
    for f in C.morphisms:
        x, y = C.dom[f], C.cod[f]
        p = P(x, y, F.mor[f])
        if mode == "sep" and p != f:
            diags.append(Diagnostic("ModeSep", (f,)))
        elif mode == "semisep" and F.mor[p] != F.mor[f]:
            diags.append(Diagnostic("ModeSemisep", (f,)))
    if mode == "natfull":
        for (x, y), m in P.maps.items():
            for h, p in m.items():
                if F.mor[p] != h:
                    diags.append(Diagnostic("ModeNatfull", (x, y, h)))
    return diags


def compose_hom_retractions(PF: HomRetraction, PG: HomRetraction) -> HomRetraction:
    """The witness 𝒫^F∘𝒫^G for the composite G∘F."""
    F, G = PF.functor, PG.functor
    GF = compose_functors(G, F)
    maps = {}
    for x in F.source.objects:
        for y in F.source.objects:
            fx, fy = F.ob[x], F.ob[y]
            maps[(x, y)] = {h: PF(x, y, PG(fx, fy, h)) for h in GF.target.hom(GF.ob[x], GF.ob[y])}
    return HomRetraction(GF, maps)
