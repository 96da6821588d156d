"""Command-line interface: JSON specs in, deterministic reports out.

Subcommands mirror the library: ``classify``, ``flourish`` (with DOT
export), ``dims``, ``member``, ``verify``, ``reflect``, ``probe`` and
``catalog``.  Data goes to stdout, per-degree progress to stderr.  Exit
codes: 0 on success, 2 when a verification FAILs, 1 on any error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog
from .braidings import (SpecError, diagonal_from_json, spec_from_json,
                        spec_to_json)
from .flourished import (FiniteGK, FlourishedError, InfiniteGK, Unknown,
                         build_flourished, classify, is_admissible)
from .freealgebra import ElementError, expression_degree, parse_element, \
    print_element
from .nichols import (DEFAULT_BUDGET, NicholsError, Presentation,
                      compute_truncation, infinite_probe, is_zero_in_nichols,
                      verify_presentation)
from .scalars import ScalarError, print_scalar
from .weyl import WeylError, reflect

_ERRORS = (SpecError, FlourishedError, ElementError, NicholsError,
           ScalarError, WeylError, catalog.CatalogError,
           OSError, ValueError, KeyError)


class _Parser(argparse.ArgumentParser):
    """argparse that exits 1 on usage errors (2 is reserved for FAIL)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(1)


def _emit(obj):
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _progress(msg):
    print(msg, file=sys.stderr)


def _load_json(path):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _load_spec(path):
    return spec_from_json(_load_json(path))


def _parse_params(items):
    """Entry parameters from ``--params`` tokens: one JSON object or
    repeated key=value pairs (values JSON-decoded when possible)."""
    params = {}
    for item in items:
        if item.lstrip().startswith("{"):
            params.update(json.loads(item))
            continue
        if "=" not in item:
            raise ValueError(f"bad parameter {item!r}: expected key=value")
        key, _, raw = item.partition("=")
        try:
            params[key] = json.loads(raw)
        except json.JSONDecodeError:
            params[key] = raw
    return params


def _verdict_json(v):
    if isinstance(v, FiniteGK):
        return {
            "verdict": "finite",
            "gk": v.gk,
            "decomposition": [{"component": list(comp), "entry": entry,
                               "gk": gk} for comp, entry, gk in
                              v.decomposition],
            "is_domain": v.is_domain,
            "conjecture_dependent": False,
            "violations": [],
        }
    if isinstance(v, InfiniteGK):
        return {
            "verdict": "infinite",
            "gk": None,
            "decomposition": [],
            "is_domain": False,
            "conjecture_dependent": v.conjecture_dependent,
            "violations": [{"code": r.code, "detail": r.detail,
                            "conjecture_dependent": r.conjecture_dependent}
                           for r in v.reasons],
        }
    if isinstance(v, Unknown):
        return {"verdict": "unknown", "reason": v.reason}
    raise ValueError(f"unrecognized verdict {v!r}")


def _pbw_json(pbw):
    """Serialize (label, degree, height) triples; infinite height -> 0."""
    return [{"label": label, "degree": degree,
             "height": 0 if height is None else height}
            for label, degree, height in pbw]


def _presentation_json(p: Presentation):
    return {
        "name": p.name,
        "params": p.params,
        "gk": p.gk,
        "is_domain": p.is_domain,
        "macros": dict(p.macros),
        "relations": list(p.relations),
        "pbw": _pbw_json(p.pbw),
    }


def _presentation_from_json(obj) -> Presentation:
    pbw = []
    for entry in obj["pbw"]:
        if isinstance(entry, dict):
            label, degree, height = entry["label"], entry["degree"], \
                entry["height"]
        else:
            label, degree, height = entry
        pbw.append((label, degree, None if height == 0 else height))
    return Presentation(
        name=obj.get("name", "presentation"),
        relations=list(obj["relations"]),
        pbw=pbw,
        gk=obj.get("gk", 0),
        macros=dict(obj.get("macros", {})),
        is_domain=bool(obj.get("is_domain", False)),
        params=dict(obj.get("params", {})),
    )


def _graph_json(g):
    out = {
        "blocks": [{"index": k + 1, "sign": g.signs[k]}
                   for k in range(g.t)],
        "points": [{"index": j, "label": print_scalar(g.label(j))}
                   for j in range(g.t + 1, g.theta + 1)],
        "block_point_edges": [
            {"block": k, "point": j, "ghost": str(data["ghost"]),
             "mild": data["mild"], "strong": data["strong"]}
            for (k, j), data in sorted(g.block_point.items())],
        "point_point_edges": [
            {"points": [a, b], "qtilde": print_scalar(qt)}
            for (a, b), qt in sorted(g.point_point.items())],
    }
    violations = is_admissible(g)
    out["admissible"] = not violations
    out["violations"] = [{"code": v.code, "detail": v.detail,
                          "conjecture_dependent": v.conjecture_dependent}
                         for v in violations]
    return out


def _graded_truncation(spec, max_degree, budget):
    """Extend degree by degree so progress can be streamed."""
    trunc = compute_truncation(spec, min(1, max_degree), budget)
    _progress(f"degree 0: dim 1")
    if max_degree >= 1:
        _progress(f"degree 1: dim {trunc.dims[1]}")
    for n in range(2, max_degree + 1):
        trunc.extend(n)
        _progress(f"degree {n}: dim {trunc.dims[n]}")
    return trunc


# ---------------------------------------------------------------------------
# subcommands


def _cmd_classify(args):
    spec = _load_spec(args.spec)
    _emit(_verdict_json(classify(spec)))
    return 0


def _cmd_flourish(args):
    spec = _load_spec(args.spec)
    g = build_flourished(spec)
    _emit(_graph_json(g))
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(g.to_dot() + "\n")
    return 0


def _cmd_dims(args):
    spec = _load_spec(args.spec)
    trunc = _graded_truncation(spec, args.max_degree, args.budget)
    _emit(trunc.dims[: args.max_degree + 1])
    return 0


def _cmd_member(args):
    spec = _load_spec(args.spec)
    degree = expression_degree(args.element, spec)
    e = parse_element(args.element, spec)
    trunc = _graded_truncation(spec, degree, args.budget)
    zero, witness = is_zero_in_nichols(e, trunc)
    _emit({"element": args.element, "degree": degree, "zero": zero,
           "witness": None if witness is None else print_element(witness)})
    return 0


def _cmd_verify(args):
    if args.name:
        params = _parse_params(args.params or [])
        spec, pres = catalog.instantiate(args.name, params)
    else:
        if not args.spec or not args.presentation:
            raise ValueError(
                "verify needs --name <entry> or <spec.json> --presentation")
        spec = _load_spec(args.spec)
        pres = _presentation_from_json(_load_json(args.presentation))
    report = verify_presentation(pres, spec, args.max_degree, args.budget,
                                 progress=_progress)
    report["pbw"] = _pbw_json(pres.pbw)
    _emit(report)
    return 0 if report["pass"] else 2


def _cmd_reflect(args):
    d = diagonal_from_json(_load_json(args.diagonal))
    r = reflect(d, args.vertex)
    _emit({"ring": {"cyclotomic_order": r.ring.cyclotomic_order,
                    "params": list(r.ring.params)},
           "q": [[print_scalar(v) for v in row] for row in r.matrix]})
    return 0


def _cmd_probe(args):
    spec = _load_spec(args.spec)
    i = spec.letter(args.i).idx
    j = spec.letter(args.j).idx
    report = infinite_probe(spec, i, j, args.count, args.max_degree,
                            args.budget)
    _emit(report)
    return 0


def _cmd_catalog(args):
    if args.action == "list":
        for name in catalog.list_entries():
            print(name)
        return 0
    if not args.name:
        raise ValueError("catalog show needs an entry name")
    params = _parse_params(args.params or [])
    spec, pres = catalog.instantiate(args.name, params)
    out = _presentation_json(pres)
    out["spec"] = spec_to_json(spec)
    _emit(out)
    return 0


# ---------------------------------------------------------------------------
# argument wiring


def _add_budget(p):
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="monomial cap per degree (default 10^6)")


def build_parser() -> _Parser:
    parser = _Parser(prog="gknichols",
                     description="Finite GK-dimension Nichols algebra "
                                 "toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a braided space spec")
    p.add_argument("spec")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("flourish", help="decorated graph of a spec")
    p.add_argument("spec")
    p.add_argument("--dot", help="write a DOT file")
    p.set_defaults(func=_cmd_flourish)

    p = sub.add_parser("dims", help="graded dimensions of the Nichols "
                                    "algebra")
    p.add_argument("spec")
    p.add_argument("--max-degree", type=int, required=True)
    _add_budget(p)
    p.set_defaults(func=_cmd_dims)

    p = sub.add_parser("member", help="test an element for ideal membership")
    p.add_argument("spec")
    p.add_argument("--element", required=True)
    _add_budget(p)
    p.set_defaults(func=_cmd_member)

    p = sub.add_parser("verify", help="verify a presentation degree by "
                                      "degree")
    p.add_argument("spec", nargs="?")
    p.add_argument("--name", help="catalog entry name")
    p.add_argument("--params", action="append",
                   help="entry parameters: JSON object or key=value")
    p.add_argument("--presentation", help="presentation JSON file")
    p.add_argument("--max-degree", type=int, required=True)
    _add_budget(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("reflect", help="reflect a diagonal braiding at a "
                                       "vertex")
    p.add_argument("diagonal")
    p.add_argument("--vertex", type=int, required=True)
    p.set_defaults(func=_cmd_reflect)

    p = sub.add_parser("probe", help="evidence probe for infinite GK")
    p.add_argument("spec")
    p.add_argument("--i", required=True, help="letter name, e.g. x1")
    p.add_argument("--j", required=True, help="letter name, e.g. x2")
    p.add_argument("--count", type=int, default=4)
    p.add_argument("--max-degree", type=int, required=True)
    _add_budget(p)
    p.set_defaults(func=_cmd_probe)

    p = sub.add_parser("catalog", help="browse the presentation catalog")
    p.add_argument("action", choices=["list", "show"])
    p.add_argument("name", nargs="?")
    p.add_argument("--params", action="append",
                   help="entry parameters: JSON object or key=value")
    p.set_defaults(func=_cmd_catalog)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _ERRORS as exc:
        print(f"gknichols: error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
