"""JSON documents for categories, functors, transformations, adjunctions and rings.

Every value is written by name; ids are reassigned in file order on reading, so
``loads(dumps(v)) == v`` and ``dumps(loads(s)) == s`` for canonical text ``s``.
Nested documents may be given inline or as a path relative to the enclosing file.
"""
from __future__ import annotations

import json
from pathlib import Path

from .adjoint import Adjunction, Semiadjunction
from .core import (
    FinCat,
    Functor,
    NatTrans,
    Semifunctor,
    compose_functors,
    identity_functor,
    validate_category,
)
from .errors import Diagnostic, FinCatError, ValidationError
from .gallery import RingTable


class SchemaError(ValidationError):
    """The document does not have the expected shape."""

    kind = "SchemaError"


def _bad(*detail) -> SchemaError:
    return SchemaError([Diagnostic("SchemaError", tuple(str(d) for d in detail))])


def dumps(doc: dict) -> str:
    """Canonical text: two-space indent, UTF-8 kept literal, trailing newline."""
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def read_text(path: str) -> tuple[str, Path]:
    """Read a file, or standard input for ``-``; returns the text and the base directory."""
    if path == "-":
        import sys
        return sys.stdin.read(), Path.cwd()
    p = Path(path)
    try:
        return p.read_text(encoding="utf-8"), p.resolve().parent
    except OSError as exc:
        raise _bad("unreadable file", path, exc.strerror) from None


def load_json(path: str) -> tuple[dict, Path]:
    text, base = read_text(path)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _bad("malformed JSON", path, f"line {exc.lineno} column {exc.colno}") from None
    if not isinstance(doc, dict):
        raise _bad("top level must be an object", path)
    return doc, base


def _resolve(ref, base: Path | None) -> tuple[dict, Path | None]:
    if isinstance(ref, str):
        if base is None:
            raise _bad("file reference without a base directory", ref)
        return load_json(str(base / ref))
    if not isinstance(ref, dict):
        raise _bad("expected an object or a file name")
    return ref, base


def _field(doc: dict, key: str, kind: type):
    if key not in doc:
        raise _bad("missing key", key)
    val = doc[key]
    if not isinstance(val, kind):
        raise _bad("wrong type for key", key)
    return val


# categories

def category_to_json(C: FinCat) -> dict:
    name = C.mor_names
    return {
        "objects": list(C.ob_names),
        "morphisms": [{"name": name[f], "dom": C.ob_names[C.dom[f]], "cod": C.ob_names[C.cod[f]]}
                      for f in C.morphisms],
        "identities": {C.ob_names[x]: name[C.ident[x]] for x in C.objects},
        "composition": [[name[g], name[f], name[h]] for (g, f), h in sorted(C.table.items())],
    }


def category_from_json(doc: dict, base: Path | None = None) -> FinCat:
    doc, base = _resolve(doc, base)
    objects = _field(doc, "objects", list)
    morphisms = []
    for m in _field(doc, "morphisms", list):
        if not isinstance(m, dict) or not all(isinstance(m.get(k), str) for k in ("name", "dom", "cod")):
            raise _bad("morphism entries need string name, dom and cod")
        morphisms.append((m["name"], m["dom"], m["cod"]))
    identities = _field(doc, "identities", dict)
    composition = _field(doc, "composition", list)
    for entry in composition:
        if not (isinstance(entry, list) and len(entry) == 3):
            raise _bad("composition entries are [g, f, g∘f]")
    if not all(isinstance(o, str) for o in objects):
        raise _bad("object names must be strings")
    return validate_category(objects, morphisms, identities, composition)


# functors and transformations

def functor_to_json(F: Functor) -> dict:
    C, D = F.source, F.target
    out = {
        "source": category_to_json(C),
        "target": category_to_json(D),
        "objects": {C.ob_names[x]: D.ob_names[F.ob[x]] for x in C.objects},
        "morphisms": {C.mor_names[f]: D.mor_names[F.mor[f]] for f in C.morphisms},
    }
    if F.semi:
        out["semi"] = True
    return out


def _lookup(table: dict, names: tuple, what: str, index) -> list[int]:
    missing = [n for n in names if n not in table]
    extra = [k for k in table if k not in names]
    if missing or extra:
        raise _bad(f"{what} map must list every source {what} exactly once",
                   *(missing + extra)[:5])
    out = []
    for n in names:
        try:
            out.append(index(table[n]))
        except FinCatError:
            raise _bad(f"unknown target {what}", table[n]) from None
    return out


def functor_from_json(doc: dict, base: Path | None = None) -> Functor:
    doc, base = _resolve(doc, base)
    C = category_from_json(_field(doc, "source", (dict, str)), base)
    D = category_from_json(_field(doc, "target", (dict, str)), base)
    ob = _lookup(_field(doc, "objects", dict), C.ob_names, "object", D.obj)
    mor = _lookup(_field(doc, "morphisms", dict), C.mor_names, "morphism", D.mor)
    cls = Semifunctor if doc.get("semi") else Functor
    return cls(C, D, ob, mor)


def components_to_json(alpha: NatTrans) -> dict:
    C, D = alpha.cat, alpha.source.target
    return {C.ob_names[x]: D.mor_names[a] for x, a in enumerate(alpha.components)}


def _components(doc: dict, F: Functor) -> list[int]:
    C, D = F.source, F.target
    return _lookup(_field(doc, "components", dict), C.ob_names, "object", D.mor)


def nat_to_json(alpha: NatTrans) -> dict:
    return {"from": functor_to_json(alpha.source), "to": functor_to_json(alpha.target),
            "components": components_to_json(alpha)}


def nat_from_json(doc: dict, base: Path | None = None, *, source: Functor | None = None,
                  target: Functor | None = None) -> NatTrans:
    """A transformation; ``from``/``to`` may be omitted when the caller supplies them."""
    doc, base = _resolve(doc, base)
    F = source if "from" not in doc else functor_from_json(doc["from"], base)
    G = target if "to" not in doc else functor_from_json(doc["to"], base)
    if F is None or G is None:
        raise _bad("transformation needs 'from' and 'to'")
    return NatTrans(F, G, _components(doc, F))


def endo_nat_from_json(doc: dict, C: FinCat, base: Path | None = None) -> NatTrans:
    """A transformation Id_C → Id_C; ``from``/``to`` are optional."""
    Id = identity_functor(C)
    return nat_from_json(doc, base, source=Id, target=Id)


# adjunctions

def adjunction_to_json(A: Adjunction) -> dict:
    out = {"F": functor_to_json(A.F), "G": functor_to_json(A.G),
           "unit": {"components": components_to_json(A.unit)},
           "counit": {"components": components_to_json(A.counit)}}
    if A.semi:
        out["semi"] = True
    return out


def adjunction_from_json(doc: dict, base: Path | None = None) -> Adjunction:
    """F ⊣ G; unit and counit give components only, their functors are implied."""
    doc, base = _resolve(doc, base)
    F = functor_from_json(_field(doc, "F", (dict, str)), base)
    G = functor_from_json(_field(doc, "G", (dict, str)), base)
    if F.target != G.source or G.target != F.source:
        raise _bad("F and G must run in opposite directions between the same categories")
    C, D = F.source, F.target
    GF, FG = compose_functors(G, F), compose_functors(F, G)
    unit_doc, ub = _resolve(_field(doc, "unit", (dict, str)), base)
    counit_doc, cb = _resolve(_field(doc, "counit", (dict, str)), base)
    unit = NatTrans(identity_functor(C), GF, _components(unit_doc, identity_functor(C)))
    counit = NatTrans(FG, identity_functor(D), _components(counit_doc, FG))
    cls = Semiadjunction if doc.get("semi") else Adjunction
    return cls(F, G, unit, counit)


# rings

def ring_to_json(R: RingTable) -> dict:
    return {"name": R.name, "elements": list(R.elements),
            "zero": R.elements[R.zero], "one": R.elements[R.one],
            "add": [list(row) for row in R.add], "mul": [list(row) for row in R.mul]}


def ring_from_json(doc: dict) -> RingTable:
    els = tuple(_field(doc, "elements", list))
    try:
        return RingTable(str(doc.get("name", "")), els,
                         tuple(map(tuple, _field(doc, "add", list))),
                         tuple(map(tuple, _field(doc, "mul", list))),
                         els.index(doc["zero"]), els.index(doc["one"]))
    except (KeyError, ValueError, IndexError, TypeError):
        raise _bad("ring needs elements, add, mul, zero and one") from None


# dispatch on shape

def document_kind(doc: dict) -> str:
    if "F" in doc and "G" in doc:
        return "adjunction"
    if "components" in doc:
        return "transformation"
    if "source" in doc and "target" in doc:
        return "functor"
    if "composition" in doc:
        return "category"
    if "add" in doc and "mul" in doc:
        return "ring"
    raise _bad("cannot tell what kind of document this is")


READERS = {
    "category": category_from_json,
    "functor": functor_from_json,
    "transformation": nat_from_json,
    "adjunction": adjunction_from_json,
    "ring": lambda doc, base=None: ring_from_json(doc),
}


def to_json(value) -> dict:
    if isinstance(value, FinCat):
        return category_to_json(value)
    if isinstance(value, Functor):
        return functor_to_json(value)
    if isinstance(value, NatTrans):
        return nat_to_json(value)
    if isinstance(value, Adjunction):
        return adjunction_to_json(value)
    if isinstance(value, RingTable):
        return ring_to_json(value)
    raise TypeError(f"cannot serialize {type(value).__name__}")


def from_json(doc: dict, base: Path | None = None):
    return READERS[document_kind(doc)](doc, base)


def loads(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _bad("malformed JSON", f"line {exc.lineno} column {exc.colno}") from None
    if not isinstance(doc, dict):
        raise _bad("top level must be an object")
    return from_json(doc)


def serialize(value) -> str:
    return dumps(to_json(value))
