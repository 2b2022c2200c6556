"""Command-line front end.

Every subcommand reads JSON documents, calls the library and writes one JSON
document to standard output.  Problems go to standard error as JSON lines.

Exit codes: 0 success or property holds, 1 property fails, 2 invalid input,
3 search budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import gallery, serialize
from .adjoint import Adjunction, find_left_adjoint, find_right_adjoint
from .classify import classify
from .coident import coidentifier
from .completion import complete_functor, is_idempotent_complete, karoubi
from .config import limits
from .core import Functor
from .errors import BudgetExceeded, FinCatError, ValidationError

OK, FAILS, INVALID, BUDGET = 0, 1, 2, 3


class Exit(Exception):
    def __init__(self, code: int, doc: dict | None = None):
        self.code = code
        self.doc = doc


def _emit_diag(kind: str, message: str, detail=None) -> None:
    line = {"level": "error", "kind": kind, "message": message}
    if detail is not None:
        line["detail"] = detail
    sys.stderr.write(json.dumps(line, ensure_ascii=False) + "\n")


def _load(path: str, kind: str | None = None):
    doc, base = serialize.load_json(path)
    found = serialize.document_kind(doc)
    if kind is not None and found != kind:
        raise serialize._bad(f"expected a {kind} document, got a {found}", path)
    return found, serialize.READERS[found](doc, base)


def _retraction_json(P) -> list:
    F = P.functor
    C, D = F.source, F.target
    return [[C.ob_names[x], C.ob_names[y], D.mor_names[h], C.mor_names[f]]
            for (x, y), m in sorted(P.maps.items()) for h, f in sorted(m.items())]


# subcommands

def cmd_validate(args) -> dict:
    kind, value = _load(args.file)
    out = {"kind": kind, "valid": True}
    if kind == "category":
        out.update(objects=value.n_obj, morphisms=value.n_mor)
    elif kind == "ring":
        out.update(elements=value.size)
    elif kind == "adjunction":
        out.update(semi=value.semi)
    return out


def cmd_complete(args) -> dict:
    if args.functor:
        _, F = _load(args.functor, "functor")
        return serialize.functor_to_json(complete_functor(F))
    if not args.file:
        raise serialize._bad("give a category file or --functor")
    _, C = _load(args.file, "category")
    kar = karoubi(C)
    assert is_idempotent_complete(kar.cat)
    return serialize.category_to_json(kar.cat)


def cmd_classify(args) -> dict:
    _, F = _load(args.functor, "functor")
    rep = classify(F)
    out = {"seed": args.seed, **rep.flags()}
    w = rep.witnesses
    wit = {}
    if "retraction" in w:
        wit["retraction"] = _retraction_json(w["retraction"])
        wit["idempotent"] = serialize.components_to_json(w["idempotent"])
    if "retracts" in w:
        C, D = F.source, F.target
        wit["retracts"] = {D.ob_names[d]: [C.ob_names[x], D.mor_names[i], D.mor_names[p]]
                           for d, (x, i, p) in enumerate(w["retracts"])}
    out["witnesses"] = wit
    out["nodes"] = rep.search_stats["nodes"]
    return out


def cmd_quotient(args) -> dict:
    _, C = _load(args.category, "category")
    doc, base = serialize.load_json(args.idempotent)
    e = serialize.endo_nat_from_json(doc, C, base)
    q = coidentifier(C, e)
    return {"category": serialize.category_to_json(q.cat),
            "H": serialize.functor_to_json(q.H)}


def cmd_adjoint(args) -> dict:
    _, F = _load(args.functor, "functor")
    A = find_right_adjoint(F) if args.right else find_left_adjoint(F)
    if A is None:
        side = "right" if args.right else "left"
        raise Exit(FAILS, {"exists": False, "side": side})
    return serialize.adjunction_to_json(A)


def cmd_monad(args) -> dict:
    from .monadics import comparison, is_separable_monad, kleisli_category, kleisli_comparison, monad_of
    _, A = _load(args.adjunction, "adjunction")
    M = monad_of(A)
    if args.construction == "separable":
        sigma = is_separable_monad(M)
        out = {"seed": args.seed, "separable": sigma is not None}
        if sigma is None:
            raise Exit(FAILS, out)
        out["sigma"] = serialize.components_to_json(sigma)
        return out
    if args.construction == "em":
        cmp = comparison(A)
        return {"category": serialize.category_to_json(cmp.em.cat),
                "U": serialize.functor_to_json(cmp.em.U),
                "V": serialize.functor_to_json(cmp.em.V),
                "K": serialize.functor_to_json(cmp.K)}
    kl = kleisli_category(M)
    return {"category": serialize.category_to_json(kl.cat),
            "U": serialize.functor_to_json(kl.U),
            "V": serialize.functor_to_json(kl.V),
            "L": serialize.functor_to_json(kleisli_comparison(A, kl))}


def cmd_audit(args) -> dict:
    from .monadics import audit
    _, A = _load(args.adjunction, "adjunction")
    rep = audit(A)
    out = {"seed": args.seed, "ok": rep.ok, **rep.to_json()}
    if rep.budget_exceeded:
        raise Exit(BUDGET, out)
    if not rep.ok:
        raise Exit(FAILS, out)
    return out


def cmd_suite(args) -> dict:
    from .suite import run_suite
    crit = [int(c) for c in args.criteria.split(",")] if args.criteria else None
    report = run_suite(workers=args.workers, criteria=crit)
    report["seed"] = args.seed
    if not all(c["passed"] for c in report["criteria"]):
        raise Exit(FAILS, report)
    return report


# gallery

def _collapse_e() -> Functor:
    E = gallery.walking_idempotent()
    return Functor(E, gallery.terminal(), [0], [0, 0], name="G")


def _pick_e() -> Functor:
    E = gallery.walking_idempotent()
    return Functor(gallery.terminal(), E, [0], [0], name="F")


def _terminal_karoubi_e() -> Adjunction:
    from .suite import one_to_karoubi_e
    return one_to_karoubi_e()


EXTRA_ITEMS = {
    "collapse_walking_idempotent": _collapse_e,
    "point_walking_idempotent": _pick_e,
    "terminal_karoubi_walking_idempotent": _terminal_karoubi_e,
    "ring": lambda name="F2": gallery.RINGS[name](),
}


def gallery_names() -> list[str]:
    return sorted(gallery.GALLERY) + sorted(EXTRA_ITEMS)


def cmd_gallery(args) -> dict:
    maker = gallery.GALLERY.get(args.name) or EXTRA_ITEMS.get(args.name)
    if maker is None:
        raise serialize._bad("unknown gallery item", args.name, "known: " + ", ".join(gallery_names()))
    try:
        value = maker(*args.params)
    except (TypeError, KeyError, ValueError) as exc:
        raise serialize._bad("bad parameters for", args.name, exc) from None
    return serialize.to_json(value)


# driver

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=None,
                        help="cap on search nodes per decision (default from FINCAT_BUDGET)")
    common.add_argument("--seed", type=int, default=None,
                        help="accepted and recorded; every algorithm is deterministic")
    common.add_argument("--pretty", action="store_true", help="human-readable summary")
    common.add_argument("-o", "--output", default=None, help="write the document here")

    p = argparse.ArgumentParser(prog="fincat", parents=[common],
                                description="Finite category computations.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", parents=[common], help="check any document")
    s.add_argument("file")
    s.set_defaults(run=cmd_validate)

    s = sub.add_parser("complete", parents=[common], help="idempotent completion")
    s.add_argument("file", nargs="?")
    s.add_argument("--functor")
    s.set_defaults(run=cmd_complete)

    s = sub.add_parser("classify", parents=[common], help="separability flags of a functor")
    s.add_argument("--functor", required=True)
    s.set_defaults(run=cmd_classify)

    s = sub.add_parser("quotient", parents=[common], help="coidentifier of an idempotent")
    s.add_argument("--category", required=True)
    s.add_argument("--idempotent", required=True)
    s.set_defaults(run=cmd_quotient)

    s = sub.add_parser("adjoint", parents=[common], help="find a left (or right) adjoint")
    s.add_argument("--functor", required=True)
    s.add_argument("--right", action="store_true")
    s.set_defaults(run=cmd_adjoint)

    s = sub.add_parser("monad", parents=[common], help="monad constructions of an adjunction")
    s.add_argument("--adjunction", required=True)
    s.add_argument("construction", choices=["em", "kleisli", "separable"])
    s.set_defaults(run=cmd_monad)

    s = sub.add_parser("audit", parents=[common], help="check the monadic characterizations")
    s.add_argument("--adjunction", required=True)
    s.set_defaults(run=cmd_audit)

    s = sub.add_parser("gallery", parents=[common], help="emit a named example")
    s.add_argument("name")
    s.add_argument("params", nargs="*")
    s.set_defaults(run=cmd_gallery)

    s = sub.add_parser("suite", parents=[common], help="run the acceptance suite")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--criteria", default=None, help="comma-separated criterion ids")
    s.set_defaults(run=cmd_suite)
    return p


def _pretty(doc, indent: str = "") -> str:
    lines = []
    for k, v in doc.items():
        if isinstance(v, dict) and v and all(not isinstance(x, (dict, list)) for x in v.values()):
            lines.append(f"{indent}{k}:")
            lines.append(_pretty(v, indent + "  "))
        elif isinstance(v, (dict, list)):
            size = len(v)
            lines.append(f"{indent}{k}: <{size} {'entries' if isinstance(v, dict) else 'items'}>")
        else:
            lines.append(f"{indent}{k}: {v}")
    return "\n".join(lines)


def _write(doc: dict, args) -> None:
    text = _pretty(doc) + "\n" if args.pretty else serialize.dumps(doc)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    budget = args.budget
    if budget is None and os.environ.get("FINCAT_BUDGET"):
        try:
            budget = int(os.environ["FINCAT_BUDGET"])
        except ValueError:
            _emit_diag("SchemaError", "FINCAT_BUDGET must be an integer")
            return INVALID
    old = limits.budget
    if budget is not None:
        limits.budget = budget
    try:
        doc = args.run(args)
        code = OK
    except Exit as ex:
        doc, code = ex.doc, ex.code
    except BudgetExceeded as exc:
        _emit_diag(exc.kind, str(exc))
        return BUDGET
    except ValidationError as exc:
        for d in exc.diagnostics:
            _emit_diag(d.kind, str(d), d.to_json()["detail"])
        return INVALID
    except FinCatError as exc:
        _emit_diag(exc.kind, str(exc))
        return INVALID
    finally:
        limits.budget = old
    if doc is not None:
        _write(doc, args)
    return code


if __name__ == "__main__":
    sys.exit(main())
