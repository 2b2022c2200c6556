"""Deterministic generators: small categories, finite rings and free-module categories."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Sequence

from .config import limits
from .core import FinCat, Functor, NatTrans, identity_functor, nat_diagnostics
from .errors import BudgetExceeded, NotABasis, NotCentralIdempotent, ValidationError


def from_composition(objects: Sequence[str], morphisms: Sequence[tuple[str, int, int]],
                     identity: Sequence[int], compose: Callable[[int, int], int]) -> FinCat:
    """Build and validate a category from a composition function on ids."""
    cod = [m[2] for m in morphisms]
    dom = [m[1] for m in morphisms]
    table = {}
    for f in range(len(morphisms)):
        for g in range(len(morphisms)):
            if dom[g] == cod[f]:
                table[(g, f)] = compose(g, f)
    return FinCat(objects, morphisms, identity, table)


def terminal() -> FinCat:
    return FinCat(["*"], [("id", 0, 0)], [0], {(0, 0): 0})


def walking_idempotent() -> FinCat:
    """One object, morphisms id and e with e∘e = e."""
    return FinCat(["*"], [("id", 0, 0), ("e", 0, 0)], [0],
                  {(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 1})


def walking_arrow() -> FinCat:
    return FinCat(["0", "1"], [("id0", 0, 0), ("id1", 1, 1), ("a", 0, 1)], [0, 1],
                  {(0, 0): 0, (1, 1): 1, (2, 0): 2, (1, 2): 2})


def monoid_cat(elements: Sequence[str], mul: Sequence[Sequence[int]], unit: int = 0) -> FinCat:
    """One-object category; g∘f is the product g·f, i.e. ``mul[g][f]``."""
    mors = [(name, 0, 0) for name in elements]
    return from_composition(["*"], mors, [unit], lambda g, f: mul[g][f])


def cyclic_group(n: int) -> FinCat:
    names = ["id"] + [f"g{k}" for k in range(1, n)]
    return monoid_cat(names, [[(a + b) % n for b in range(n)] for a in range(n)])


def poset_cat(elements: Sequence[str], leq: Callable[[int, int], bool]) -> FinCat:
    """Thin category with a morphism x → y iff x ≤ y; ``leq`` must be a partial order."""
    n = len(elements)
    mors, at = [], {}
    for x in range(n):
        for y in range(n):
            if leq(x, y):
                at[(x, y)] = len(mors)
                mors.append((f"{elements[x]}<={elements[y]}", x, y))
    ident = [at[(x, x)] for x in range(n)]
    return from_composition(list(elements), mors, ident,
                            lambda g, f: at[(mors[f][1], mors[g][2])])


def chain(n: int) -> FinCat:
    return poset_cat([str(i) for i in range(n)], lambda x, y: x <= y)


def product_cat(C: FinCat, D: FinCat) -> FinCat:
    objs = [(x, y) for x in C.objects for y in D.objects]
    oix = {o: i for i, o in enumerate(objs)}
    mors, mix = [], {}
    for f in C.morphisms:
        for g in D.morphisms:
            mix[(f, g)] = len(mors)
            mors.append((f"({C.mor_names[f]},{D.mor_names[g]})",
                         oix[(C.dom[f], D.dom[g])], oix[(C.cod[f], D.cod[g])]))
    pairs = list(mix)
    ident = [mix[(C.ident[x], D.ident[y])] for x, y in objs]
    names = [f"({C.ob_names[x]},{D.ob_names[y]})" for x, y in objs]

    def comp(b, a):
        (f2, g2), (f1, g1) = pairs[b], pairs[a]
        return mix[(C.table[(f2, f1)], D.table[(g2, g1)])]
    return from_composition(names, mors, ident, comp)


def parallel_pair() -> FinCat:
    return FinCat(["0", "1"], [("id0", 0, 0), ("id1", 1, 1), ("f", 0, 1), ("g", 0, 1)],
                  [0, 1], {(0, 0): 0, (1, 1): 1, (2, 0): 2, (3, 0): 3, (1, 2): 2, (1, 3): 3})


def split_retract() -> FinCat:
    """X with a retract Y: p: X→Y, i: Y→X, p∘i = Id_Y and e = i∘p."""
    names = ["idX", "idY", "p", "i", "e"]
    mors = [("idX", 0, 0), ("idY", 1, 1), ("p", 0, 1), ("i", 1, 0), ("e", 0, 0)]
    rule = {("p", "i"): "idY", ("i", "p"): "e", ("e", "e"): "e", ("p", "e"): "p",
            ("e", "i"): "i"}

    def comp(g, f):
        a, b = names[g], names[f]
        if a.startswith("id"):
            return f
        if b.startswith("id"):
            return g
        return names.index(rule[(a, b)])
    return from_composition(["X", "Y"], mors, [0, 1], comp)


def finite_sets(sizes: Sequence[int]) -> FinCat:
    """Full subcategory of finite sets on {0..n-1} for each n in ``sizes``; g∘f is g after f."""
    sizes = list(sizes)
    mors, at = [], {}
    for i, m in enumerate(sizes):
        for j, n in enumerate(sizes):
            for fn in itertools.product(range(n), repeat=m):
                at[(i, j, fn)] = len(mors)
                mors.append((f"{m}->{n}:{''.join(map(str, fn))}", i, j))
    ident = [at[(i, i, tuple(range(m)))] for i, m in enumerate(sizes)]
    keys = list(at)

    def comp(g, f):
        (_, k, gf), (i, _, ff) = keys[g], keys[f]
        return at[(i, k, tuple(gf[v] for v in ff))]
    return from_composition([str(n) for n in sizes], mors, ident, comp)


def all_functors(C: FinCat, D: FinCat, limit: int | None = None):
    """Every functor C → D, in lexicographic order of (object map, morphism map)."""
    out = []
    u = D.table
    touching = {f: [] for f in C.morphisms}
    for (g, h), gh in C.table.items():
        for f in {g, h, gh}:
            touching[f].append((g, h, gh))
    order = list(C.morphisms)
    for ob in itertools.product(D.objects, repeat=C.n_obj):
        mor = [None] * C.n_mor

        def consistent(f):
            for g, h, gh in touching[f]:
                if mor[g] is None or mor[h] is None or mor[gh] is None:
                    continue
                if u[(mor[g], mor[h])] != mor[gh]:
                    return False
            return True

        def extend(k):
            if limit is not None and len(out) >= limit:
                return
            if k == len(order):
                out.append(Functor(C, D, ob, list(mor), check=False))
                return
            f = order[k]
            x, y = C.dom[f], C.cod[f]
            cands = [D.ident[ob[x]]] if f == C.ident[x] else D.hom(ob[x], ob[y])
            for m in cands:
                mor[f] = m
                if consistent(f):
                    extend(k + 1)
                mor[f] = None
        extend(0)
    return out


# Three-element monoids used throughout the corpus; element 0 is the unit.
MONOIDS = {
    "Z2": (["id", "g"], [[0, 1], [1, 0]]),
    "Z3": (["id", "g", "g2"], [[0, 1, 2], [1, 2, 0], [2, 0, 1]]),
    "nil2": (["id", "a", "z"], [[0, 1, 2], [1, 2, 2], [2, 2, 2]]),
    "semilattice": (["id", "e", "z"], [[0, 1, 2], [1, 1, 2], [2, 2, 2]]),
    "left_zero": (["id", "x", "y"], [[0, 1, 2], [1, 1, 1], [2, 2, 2]]),
    "right_zero": (["id", "x", "y"], [[0, 1, 2], [1, 1, 2], [2, 1, 2]]),
}


def monoid(name: str) -> FinCat:
    elements, mul = MONOIDS[name]
    return monoid_cat(elements, mul)


# rings

@dataclass(frozen=True)
class RingTable:
    name: str
    elements: tuple
    add: tuple
    mul: tuple
    zero: int
    one: int

    def __post_init__(self):
        problems = ring_diagnostics(self)
        if problems:
            raise ValidationError(problems)

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def is_zero(self) -> bool:
        return self.size == 1

    def neg(self, a: int) -> int:
        return next(b for b in range(self.size) if self.add[a][b] == self.zero)

    def sum(self, items) -> int:
        out = self.zero
        for a in items:
            out = self.add[out][a]
        return out

    def is_central(self, z: int) -> bool:
        return all(self.mul[z][a] == self.mul[a][z] for a in range(self.size))


def ring_diagnostics(R: RingTable) -> list:
    from .errors import Diagnostic
    n = len(R.elements)
    rng = range(n)
    out = []
    A, M = R.add, R.mul
    for a in rng:
        if A[R.zero][a] != a or M[R.one][a] != a or M[a][R.one] != a:
            out.append(Diagnostic("RingUnit", (R.elements[a],)))
        if not any(A[a][b] == R.zero for b in rng):
            out.append(Diagnostic("RingNegative", (R.elements[a],)))
        for b in rng:
            if A[a][b] != A[b][a]:
                out.append(Diagnostic("RingAddCommutative", (a, b)))
            for c in rng:
                if A[A[a][b]][c] != A[a][A[b][c]] or M[M[a][b]][c] != M[a][M[b][c]]:
                    out.append(Diagnostic("RingAssociative", (a, b, c)))
                if M[a][A[b][c]] != A[M[a][b]][M[a][c]] or M[A[a][b]][c] != A[M[a][c]][M[b][c]]:
                    out.append(Diagnostic("RingDistributive", (a, b, c)))
    return out


def ring_from_ops(name: str, elements: Sequence, add: Callable, mul: Callable, zero, one) -> RingTable:
    els = list(elements)
    ix = {e: i for i, e in enumerate(els)}
    return RingTable(name, tuple(str(e) for e in els),
                     tuple(tuple(ix[add(a, b)] for b in els) for a in els),
                     tuple(tuple(ix[mul(a, b)] for b in els) for a in els),
                     ix[zero], ix[one])


def f2() -> RingTable:
    return ring_from_ops("F2", [0, 1], lambda a, b: (a + b) % 2, lambda a, b: a * b, 0, 1)


def f2xf2() -> RingTable:
    els = [(a, b) for a in (0, 1) for b in (0, 1)]
    return ring_from_ops("F2xF2", els, lambda x, y: ((x[0] + y[0]) % 2, (x[1] + y[1]) % 2),
                         lambda x, y: (x[0] * y[0], x[1] * y[1]), (0, 0), (1, 1))


def dual_numbers_f2() -> RingTable:
    """𝔽₂[x]/(x²); elements a + b x written as pairs (a, b)."""
    els = [(a, b) for a in (0, 1) for b in (0, 1)]
    return ring_from_ops("F2[x]/(x^2)", els,
                         lambda x, y: ((x[0] + y[0]) % 2, (x[1] + y[1]) % 2),
                         lambda x, y: (x[0] * y[0] % 2, (x[0] * y[1] + x[1] * y[0]) % 2),
                         (0, 0), (1, 0))


def f4() -> RingTable:
    """𝔽₄ = 𝔽₂[w]/(w² + w + 1); elements a + b w as pairs (a, b)."""
    els = [(a, b) for a in (0, 1) for b in (0, 1)]

    def mul(x, y):
        a, b = x
        c, d = y
        # (a + bw)(c + dw) = ac + (ad + bc) w + bd w², with w² = w + 1
        return ((a * c + b * d) % 2, (a * d + b * c + b * d) % 2)
    return ring_from_ops("F4", els, lambda x, y: ((x[0] + y[0]) % 2, (x[1] + y[1]) % 2),
                         mul, (0, 0), (1, 0))


def zero_ring() -> RingTable:
    return ring_from_ops("0", [0], lambda a, b: 0, lambda a, b: 0, 0, 0)


RINGS = {"F2": f2, "F2xF2": f2xf2, "F2[x]/(x^2)": dual_numbers_f2, "F4": f4, "0": zero_ring}


@dataclass(frozen=True)
class RingMorphism:
    source: RingTable
    target: RingTable
    map: tuple

    def __post_init__(self):
        R, S, m = self.source, self.target, self.map
        ok = m[R.one] == S.one and all(
            m[R.add[a][b]] == S.add[m[a]][m[b]] and m[R.mul[a][b]] == S.mul[m[a]][m[b]]
            for a in range(R.size) for b in range(R.size))
        if not ok:
            from .errors import Diagnostic
            raise ValidationError([Diagnostic("NotARingMorphism", (R.name, S.name))])

    def __call__(self, a: int) -> int:
        return self.map[a]


def identity_ring_morphism(R: RingTable) -> RingMorphism:
    return RingMorphism(R, R, tuple(range(R.size)))


def unit_map(S: RingTable) -> RingMorphism:
    """The unique ring morphism 𝔽₂ → S (S must have characteristic 2)."""
    return RingMorphism(f2(), S, (S.zero, S.one))


def element(R: RingTable, name) -> int:
    return R.elements.index(str(name))


# truncated free-module categories

@dataclass(frozen=True)
class ModuleCatSpec:
    ring: RingTable
    max_rank: int


def _matrices(R: RingTable, m: int, n: int):
    return itertools.product(range(R.size), repeat=m * n)


def _matmul(R: RingTable, A, B, m, n, k):
    """(m×n)·(n×k) over R with flat row-major tuples."""
    out = []
    for i in range(m):
        for j in range(k):
            out.append(R.sum(R.mul[A[i * n + l]][B[l * k + j]] for l in range(n)))
    return tuple(out)


def _matrix_name(R: RingTable, m: int, n: int, A) -> str:
    rows = ["[" + ",".join(R.elements[A[i * n + j]] for j in range(n)) + "]" for i in range(m)]
    return f"{m}x{n}:" + "".join(rows)


class ModuleCat:
    """A truncated free-module category with matrix lookup.

    A morphism R^m → R^n is an m×n matrix acting on row vectors, x ↦ xA, so
    g∘f is the matrix product A_f·A_g.  This is the left-module convention and
    agrees with column matrices for commutative rings.
    """

    def __init__(self, R: RingTable, max_rank: int):
        total = sum(R.size ** (m * n) for m in range(max_rank + 1) for n in range(max_rank + 1))
        if total > limits.max_envelope_morphisms * 64:
            raise BudgetExceeded(f"free module category would have {total} morphisms")
        self.ring, self.max_rank = R, max_rank
        ranks = range(max_rank + 1)
        mors, self.at, self.matrix = [], {}, []
        for m in ranks:
            for n in ranks:
                for A in _matrices(R, m, n):
                    self.at[(m, n, A)] = len(mors)
                    mors.append((_matrix_name(R, m, n, A), m, n))
                    self.matrix.append(A)
        ident = [self.at[(m, m, self.identity_matrix(m))] for m in ranks]
        table = {}
        for f, (_, m, n) in enumerate(mors):
            A = self.matrix[f]
            for k in ranks:
                for B in _matrices(R, n, k):
                    g = self.at[(n, k, B)]
                    table[(g, f)] = self.at[(m, k, _matmul(R, A, B, m, n, k))]
        self.cat = FinCat([f"R^{m}" for m in ranks], mors, ident, table, check=False)

    def identity_matrix(self, m: int):
        R = self.ring
        return tuple(R.one if i == j else R.zero for i in range(m) for j in range(m))

    def scalar(self, m: int, z: int) -> int:
        R = self.ring
        return self.at[(m, m, tuple(z if i == j else R.zero for i in range(m) for j in range(m)))]


_module_cats: dict = {}


def module_cat(R: RingTable, max_rank: int) -> ModuleCat:
    key = (R, max_rank)
    if key not in _module_cats:
        _module_cats[key] = ModuleCat(R, max_rank)
    return _module_cats[key]


def free_module_cat(spec: ModuleCatSpec | RingTable, max_rank: int | None = None) -> FinCat:
    if isinstance(spec, ModuleCatSpec):
        return module_cat(spec.ring, spec.max_rank).cat
    return module_cat(spec, max_rank).cat


def central_idempotent_nat(R: RingTable, max_rank: int, z: int) -> NatTrans:
    """Components are the scalar matrices z·I."""
    if not (R.is_central(z) and R.mul[z][z] == z):
        raise NotCentralIdempotent(R.elements[z])
    M = module_cat(R, max_rank)
    Id = identity_functor(M.cat)
    e = NatTrans(Id, Id, [M.scalar(m, z) for m in range(max_rank + 1)], check=False)
    if nat_diagnostics(e):
        raise NotCentralIdempotent("scalar family is not natural")
    return e


def induction_functor(phi: RingMorphism, max_rank: int) -> Functor:
    """R^n ↦ S^n with matrices mapped entrywise; this is S⊗_R(−) on free modules."""
    if phi.target.is_zero:
        import logging
        logging.getLogger(__name__).warning("induction to the zero ring: every module collapses")
    MR, MS = module_cat(phi.source, max_rank), module_cat(phi.target, max_rank)
    mor = []
    for f, (_, m, n) in enumerate(zip(MR.cat.mor_names, MR.cat.dom, MR.cat.cod)):
        A = MR.matrix[f]
        mor.append(MS.at[(m, n, tuple(phi(a) for a in A))])
    return Functor(MR.cat, MS.cat, list(MR.cat.objects), mor, name="φ*")


def left_coordinates(phi: RingMorphism, basis: Sequence[int]) -> dict:
    """s ↦ (c_i) with s = Σ φ(c_i) b_i; raises NotABasis unless this is a bijection."""
    R, S = phi.source, phi.target
    coords = {}
    for c in itertools.product(range(R.size), repeat=len(basis)):
        s = S.sum(S.mul[phi(ci)][b] for ci, b in zip(c, basis))
        if s in coords:
            raise NotABasis(f"two coordinate vectors give {S.elements[s]}")
        coords[s] = c
    if len(coords) != S.size:
        raise NotABasis("basis does not span")
    return coords


def right_coordinates(phi: RingMorphism, basis: Sequence[int]) -> dict:
    """s ↦ (c_i) with s = Σ b_i φ(c_i)."""
    R, S = phi.source, phi.target
    coords = {}
    for c in itertools.product(range(R.size), repeat=len(basis)):
        s = S.sum(S.mul[b][phi(ci)] for ci, b in zip(c, basis))
        if s in coords:
            raise NotABasis(f"two right coordinate vectors give {S.elements[s]}")
        coords[s] = c
    if len(coords) != S.size:
        raise NotABasis("basis does not span on the right")
    return coords


def find_basis(phi: RingMorphism) -> tuple[int, ...]:
    """The first left basis of S over R, shortest first, in element order."""
    S = phi.target
    for k in range(1, S.size + 1):
        for basis in itertools.combinations(range(S.size), k):
            try:
                left_coordinates(phi, basis)
            except NotABasis:
                continue
            return basis
    raise NotABasis("S is not free over R")


def restriction_functor(phi: RingMorphism, basis: Sequence[int], max_rank_s: int) -> Functor:
    """S^n ↦ R^{nk}; an S-matrix expands blockwise into right-multiplication matrices."""
    R, S = phi.source, phi.target
    k = len(basis)
    coords = left_coordinates(phi, basis)
    # M(a)[i][l] = l-th coordinate of b_i·a
    rmat = {a: [coords[S.mul[b][a]] for b in basis] for a in range(S.size)}
    MS, MR = module_cat(S, max_rank_s), module_cat(R, max_rank_s * k)
    mor = []
    for f in MS.cat.morphisms:
        m, n = MS.cat.dom[f], MS.cat.cod[f]
        A = MS.matrix[f]
        big = []
        for i in range(m):
            for u in range(k):
                for j in range(n):
                    big.extend(rmat[A[i * n + j]][u])
        mor.append(MR.at[(m * k, n * k, tuple(big))])
    return Functor(MS.cat, MR.cat, [m * k for m in MS.cat.objects], mor, name="φ_*")


def bimodule_retraction_search(phi: RingMorphism, regular: bool = False):
    """First additive R-bilinear E: S → R with E∘φ = Id (or φ∘E∘φ = φ when ``regular``)."""
    R, S = phi.source, phi.target
    if R.size ** S.size > 10 ** 6:
        raise BudgetExceeded("too many candidate maps S → R")
    for E in itertools.product(range(R.size), repeat=S.size):
        if not all(E[S.add[s][t]] == R.add[E[s]][E[t]] for s in range(S.size) for t in range(S.size)):
            continue
        if not all(E[S.mul[S.mul[phi(r)][s]][phi(q)]] == R.mul[R.mul[r][E[s]]][q]
                   for r in range(R.size) for q in range(R.size) for s in range(S.size)):
            continue
        if regular:
            if all(phi(E[phi(r)]) == phi(r) for r in range(R.size)):
                return E
        elif all(E[phi(r)] == r for r in range(R.size)):
            return E
    return None


def separability_idempotent_search(phi: RingMorphism, basis: Sequence[int]):
    """A central element of S⊗_R S with multiplication image 1, as a tuple (t_i) = Σ b_i⊗t_i.

    The tuple realization needs unique right coordinates s = Σ b_i φ(c_i), so
    that s⊗t = Σ b_i⊗φ(c_i)t.
    """
    R, S = phi.source, phi.target
    left_coordinates(phi, basis)
    rc = right_coordinates(phi, basis)
    k = len(basis)
    if S.size ** k > 10 ** 6:
        raise BudgetExceeded("too many tensors")
    m = S.mul

    def left_act(a, tau):
        out = [S.zero] * k
        for i, t in enumerate(tau):
            c = rc[m[a][basis[i]]]
            for l in range(k):
                out[l] = S.add[out[l]][m[phi(c[l])][t]]
        return tuple(out)

    for tau in itertools.product(range(S.size), repeat=k):
        if S.sum(m[b][t] for b, t in zip(basis, tau)) != S.one:
            continue
        if all(left_act(a, tau) == tuple(m[t][a] for t in tau) for a in range(S.size)):
            return tau
    return None


# named items for the command line

def _ring(name: str) -> RingTable:
    return RINGS[name]()


GALLERY: dict[str, Callable[..., FinCat]] = {
    "terminal": terminal,
    "walking_idempotent": walking_idempotent,
    "walking_arrow": walking_arrow,
    "parallel_pair": parallel_pair,
    "split_retract": split_retract,
    "chain": lambda n="3": chain(int(n)),
    "cyclic_group": lambda n="2": cyclic_group(int(n)),
    "monoid": lambda name="Z2": monoid(name),
    "finite_sets": lambda *sizes: finite_sets([int(n) for n in sizes] or [0, 1, 2]),
    "free_module": lambda ring="F2", rank="1": free_module_cat(_ring(ring), int(rank)),
}
