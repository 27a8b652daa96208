"""Command-line front end.

Every verb prints one JSON report on stdout.  Exit codes: 0 check passed or
decision true, 1 check failed or decision false, 2 usage or parse error,
3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__, catalog, serialize
from .comodule import (
    Coaction, can_map_comodule, check_comodule_algebra, coarser_morphism, comodule_support_equiv,
    detect_grading, grading_to_coaction, support_coalgebra, universal_hopf_presentation,
)
from .errors import BudgetExceeded, HopfeqError, InvalidStructure
from .exactlin import Field, Matrix
from .grading import (
    Grading, check_grading, grading_equivalent, grading_finer, presentation_order, universal_group,
)
from .hident import _check_budget, codim_series, graded_codim, growth_check, row_budget
from .modulealg import (
    GroupAction, ModuleStructure, can_map_module, check_group_action, check_module_algebra,
    classify_dual_numbers, cocommutative_data, cocommutativity_obstruction, correspondence,
    finer_modules, group_action_equiv, obstruction_search, regular_action_on_dual, support_equiv_modules,
)
from .reports import Report, jsonable
from .structconst import (
    FinAlgebra, FinCoalgebra, FinHopf, FiniteGroup, check_algebra, check_coalgebra, check_group, check_hopf,
    require_isomorphism,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ----------------------------------------------------------------------------
# helpers

def _load(args, path, kind=None):
    return serialize.load(path, kind or getattr(args, "kind", None), args.field)


def _load_iso(spec, field: Field):
    if spec is None or spec == "identity":
        return None
    with open(spec) as fh:
        d = json.load(fh)
    rows = d["matrix"] if isinstance(d, dict) else d
    return Matrix(field, rows)


def _field_of(obj) -> Field:
    if isinstance(obj, FiniteGroup):
        return None
    return obj.field


def _check(obj) -> Report:
    if isinstance(obj, FinHopf):
        return check_hopf(obj)
    if isinstance(obj, FinAlgebra):
        return check_algebra(obj)
    if isinstance(obj, FinCoalgebra):
        return check_coalgebra(obj)
    if isinstance(obj, FiniteGroup):
        return check_group(obj)
    if isinstance(obj, Grading):
        return check_grading(obj)
    if isinstance(obj, ModuleStructure):
        return check_module_algebra(obj)
    if isinstance(obj, Coaction):
        return check_comodule_algebra(obj)
    if isinstance(obj, GroupAction):
        return check_group_action(obj)
    raise TypeError(type(obj).__name__)


def _require_valid(obj):
    rep = _check(obj)
    if not rep.ok:
        raise InvalidStructure(f"input fails its {rep.name} check", rep)


def _as_coaction(obj) -> Coaction:
    if isinstance(obj, Grading):
        return grading_to_coaction(obj)
    if isinstance(obj, Coaction):
        return obj
    raise UsageError("expected a coaction or grading file")


def _module(obj) -> ModuleStructure:
    if not isinstance(obj, ModuleStructure):
        raise UsageError("expected a module file")
    return obj


def _index(name_or_idx: str, names) -> int:
    if name_or_idx in names:
        return list(names).index(name_or_idx)
    try:
        i = int(name_or_idx)
    except ValueError:
        raise UsageError(f"unknown basis element {name_or_idx!r}") from None
    if not 0 <= i < len(names):
        raise UsageError(f"basis index {i} out of range")
    return i


def _named(vec, names) -> dict:
    return {names[i]: x for i, x in enumerate(vec) if x}


# ----------------------------------------------------------------------------
# verbs: each returns (ok, report dict)

def cmd_check(args):
    obj = _load(args, args.file)
    rep = _check(obj)
    return rep.ok, {"kind": serialize.kind_of(obj), "report": rep.to_json()}, _field_of(obj)


def cmd_equiv(args):
    a = _load(args, args.first)
    b = _load(args, args.second)
    _require_valid(a)
    _require_valid(b)
    phi = _load_iso(args.iso, a.field)
    if isinstance(a, Grading):
        dec = grading_equivalent(a, b, phi)
    elif isinstance(a, ModuleStructure):
        dec = support_equiv_modules(a, b, phi)
    elif isinstance(a, Coaction):
        dec = comodule_support_equiv(a, b, phi)
    elif isinstance(a, GroupAction):
        dec = group_action_equiv(a, b, phi)
    else:
        raise UsageError("equiv takes gradings, modules, coactions or group actions")
    return dec.value, {"kind": serialize.kind_of(a), "equivalent": dec.value, "certificate": dec.certificate}, a.field


def cmd_finer(args):
    a = _load(args, args.first)
    b = _load(args, args.second)
    _require_valid(a)
    _require_valid(b)
    phi = _load_iso(args.iso, a.field)
    out = {"kind": serialize.kind_of(a)}
    if isinstance(a, Grading):
        val = grading_finer(a, b, phi)
    elif isinstance(a, ModuleStructure):
        val = finer_modules(a, b, phi)
    elif isinstance(a, Coaction):
        if phi is not None:
            phi, phi_inv = require_isomorphism(a.algebra, b.algebra, phi)
            a = a.transport(phi, phi_inv, b.algebra)
        tau = coarser_morphism(a, b)
        val = tau is not None
        if val:
            out["tau"] = tau
    elif isinstance(a, GroupAction):
        phi, phi_inv = require_isomorphism(a.algebra, b.algebra, phi)
        from .modulealg import conjugate_span
        val = conjugate_span(phi, phi_inv, a.image_span(), a.algebra.dim).contains(b.image_span())
    else:
        raise UsageError("finer takes gradings, modules, coactions or group actions")
    out["finer"] = val
    return val, out, a.field


def cmd_support_coalgebra(args):
    rho = _as_coaction(_load(args, args.file))
    _require_valid(rho)
    sc = support_coalgebra(rho)
    from .comodule import grouplike_basis
    gl = grouplike_basis(sc)
    out = sc.to_json()
    out["grouplike_basis"] = gl
    return sc.report.ok if sc.report else True, out, rho.field


def cmd_universal_group(args):
    gr = _load(args, args.file, "grading")
    _require_valid(gr)
    pres = universal_group(gr)
    order = presentation_order(pres, args.max_cosets)
    out = {"presentation": pres.to_json(), "order": order}
    return True, out, gr.field


def cmd_universal_hopf(args):
    rho = _as_coaction(_load(args, args.file))
    _require_valid(rho)
    pres = universal_hopf_presentation(rho)
    counits = [pres.counit_value(r) for r in pres.relations]
    ok = all(c == 0 for c in counits) and all(v for v in pres.checks.values() if isinstance(v, bool))
    out = pres.to_json()
    out["relation_counits"] = counits
    return ok, out, rho.field


def cmd_detect_grading(args):
    rho = _as_coaction(_load(args, args.file))
    _require_valid(rho)
    res = detect_grading(rho)
    if res is None:
        return False, {"grading": None}, rho.field
    pres, gr = res
    return True, {"grading": gr.to_json(), "universal_group": pres.to_json()}, rho.field


def cmd_can(args):
    obj = _load(args, args.file)
    _require_valid(obj)
    if isinstance(obj, ModuleStructure):
        rep = can_map_module(obj)
    elif isinstance(obj, (Coaction, Grading)):
        rep = can_map_comodule(_as_coaction(obj))
    else:
        raise UsageError("can takes a module or coaction file")
    return rep.ok, {"report": rep.to_json()}, obj.field


def cmd_correspondence(args):
    obj = _load(args, args.file)
    if not isinstance(obj, (ModuleStructure, Coaction)):
        raise UsageError("correspondence takes a module or coaction file")
    other = correspondence(obj)
    back = correspondence(other)
    rep = _check(other)
    out = {"result": other.to_json(), "roundtrip_identity": back == obj, "check": rep.to_json()}
    return rep.ok and back == obj, out, obj.field


def cmd_cocomm_data(args):
    obj = _load(args, args.file)
    if not isinstance(obj, (ModuleStructure, GroupAction)):
        raise UsageError("cocomm-data takes a module or group-action file")
    _require_valid(obj)
    data = cocommutative_data(obj, args.budget or 10 ** 6)
    return True, data.to_json(), obj.field


def cmd_obstruction(args):
    z = _module(_load(args, args.file, "module"))
    _require_valid(z)
    H, A = z.hopf, z.algebra
    if args.h is None and args.a is None and args.b is None:
        hit = obstruction_search(z)
        if hit is None:
            return False, {"found": False}, z.field
        (k, i, j), (p, q) = hit
    elif None in (args.h, args.a, args.b):
        raise UsageError("give all of --h, --a, --b or none")
    else:
        k = _index(args.h, H.basis_names)
        i = _index(args.a, A.basis_names)
        j = _index(args.b, A.basis_names)
        p, q = cocommutativity_obstruction(z, H.basis_vector(k), A.basis_vector(i), A.basis_vector(j))
    names = A.basis_names
    out = {
        "h": H.basis_names[k], "a": names[i], "b": names[j],
        "first": p, "second": q,
        "first_named": _named(p, names), "second_named": _named(q, names),
        "differ": p != q,
    }
    return p != q, out, z.field


def cmd_classify_dual(args):
    z = _module(_load(args, args.file, "module"))
    res = classify_dual_numbers(z)
    return True, res, z.field


def cmd_codim(args):
    z = _module(_load(args, args.file, "module"))
    _require_valid(z)
    budget = args.budget or row_budget()
    _check_budget(args.n, z.hopf.dim, budget)
    rep = codim_series(z, args.n, budget=budget, shard_size=args.shard_size)
    out = rep.to_json()
    out["budget"] = budget
    if rep.partial:
        raise BudgetExceeded(f"budget exceeded at n = {rep.stopped_at}")
    if rep.d is not None and len(rep.values) >= 2:
        out["growth"] = growth_check(rep)
    return True, out, z.field


def cmd_graded_codim(args):
    gr = _load(args, args.file, "grading")
    _require_valid(gr)
    budget = args.budget or row_budget()
    rows = [graded_codim(gr, n, budget) for n in range(1, args.n + 1)]
    ok = all(r["equal"] for r in rows)
    return ok, {"values": rows}, gr.field


def cmd_example(args):
    if args.list:
        return True, {"examples": {n: catalog.kind_of(n) for n in catalog.names()}}, None
    if not args.name:
        raise UsageError("example needs a name (or --list)")
    obj = catalog.builtin(args.name, args.field)
    if args.out:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        path = out_dir / f"{args.name}.json"
        serialize.dump(obj, path)
        return True, {"name": args.name, "kind": catalog.kind_of(args.name), "path": str(path)}, _field_of(obj)
    return True, {"name": args.name, "structure": obj.to_json()}, _field_of(obj)


def cmd_regular_dual(args):
    H = _load(args, args.file, "hopf")
    _require_valid(H)
    z, rep = regular_action_on_dual(H)
    return rep.ok, {"module": z.to_json(), "report": rep.to_json()}, H.field


VERBS = {
    "check": cmd_check,
    "equiv": cmd_equiv,
    "finer": cmd_finer,
    "support-coalgebra": cmd_support_coalgebra,
    "universal-group": cmd_universal_group,
    "universal-hopf": cmd_universal_hopf,
    "detect-grading": cmd_detect_grading,
    "can": cmd_can,
    "correspondence": cmd_correspondence,
    "cocomm-data": cmd_cocomm_data,
    "obstruction": cmd_obstruction,
    "classify-dual": cmd_classify_dual,
    "codim": cmd_codim,
    "graded-codim": cmd_graded_codim,
    "example": cmd_example,
    "regular-dual": cmd_regular_dual,
}

KIND_CHOICES = sorted(serialize.KINDS)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hopfeq", description="Checks and invariants for (co)module algebra structures.")
    p.add_argument("--version", action="version", version=f"hopfeq {__version__}")
    sub = p.add_subparsers(dest="verb", parser_class=_Parser)
    sub.required = True

    def verb(name, help_text, files=("file",), kind=True, iso=False):
        s = sub.add_parser(name, help=help_text)
        for f in files:
            s.add_argument(f)
        s.add_argument("--field", type=Field.parse, default=None, help="Q or Fp:<p>")
        s.add_argument("--out", default=None, help="write the report here instead of stdout")
        if kind:
            s.add_argument("--kind", choices=KIND_CHOICES, default=None)
        if iso:
            s.add_argument("--iso", default=None, help="'identity' or a JSON matrix file")
        return s

    verb("check", "run the axiom checker for a structure file")
    verb("equiv", "support equivalence of two structures", ("first", "second"), iso=True)
    verb("finer", "is the first structure finer than the second", ("first", "second"), iso=True)
    verb("support-coalgebra", "support coalgebra of a coaction or grading")
    s = verb("universal-group", "presentation and order of the universal group", kind=False)
    s.add_argument("--max-cosets", type=int, default=10 ** 4)
    verb("universal-hopf", "presentation of the universal Hopf algebra")
    verb("detect-grading", "grading induced by a coaction, if any")
    verb("can", "canonical Galois map of a module or coaction")
    verb("correspondence", "module over H <-> comodule over H*")
    s = verb("cocomm-data", "L0, G0 and the smash-product description")
    s.add_argument("--budget", type=int, default=None)
    s = verb("obstruction", "compare (h1 a)(h2 b) with (h2 a)(h1 b)", kind=False)
    s.add_argument("--h", default=None)
    s.add_argument("--a", default=None)
    s.add_argument("--b", default=None)
    verb("classify-dual", "which of the three dual-numbers cases a module is", kind=False)
    for name, help_text in (("codim", "codimension sequence c_1..c_n"),
                            ("graded-codim", "graded codimensions against the dual action")):
        s = verb(name, help_text, kind=False)
        s.add_argument("--n", type=int, required=True)
        s.add_argument("--budget", type=int, default=None, help="row budget (default HOPFEQ_BUDGET or 200000)")
        if name == "codim":
            s.add_argument("--shard-size", type=int, default=None)
    s = sub.add_parser("example", help="emit a builtin structure")
    s.add_argument("name", nargs="?")
    s.add_argument("--list", action="store_true")
    s.add_argument("--field", type=Field.parse, default=None)
    s.add_argument("--out", default=None, help="directory for the JSON file")
    verb("regular-dual", "H acting on H* by the dual of right multiplication", kind=False)
    return p


def _emit(report: dict, out: str | None, verb: str) -> None:
    text = json.dumps(jsonable(report), sort_keys=True, indent=2) + "\n"
    if out and verb != "example":
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    base = {"version": __version__}
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        _emit({**base, "status": "usage-error", "error": str(e)}, None, "")
        return 2
    except SystemExit as e:  # --help / --version
        return int(e.code or 0)
    verb = args.verb
    base["verb"] = verb
    try:
        ok, body, field = VERBS[verb](args)
    except UsageError as e:
        _emit({**base, "status": "usage-error", "error": str(e)}, None, verb)
        return 2
    except BudgetExceeded as e:
        _emit({**base, "status": "budget-exceeded", "error": str(e)}, None, verb)
        return 3
    except InvalidStructure as e:
        rep = {**base, "status": "fail", "error": str(e)}
        if e.report is not None:
            rep["report"] = e.report.to_json()
        _emit(rep, None, verb)
        return 1
    except (HopfeqError, ValueError, KeyError, TypeError, OSError, json.JSONDecodeError) as e:
        _emit({**base, "status": "parse-error", "error": f"{type(e).__name__}: {e}"}, None, verb)
        return 2
    report = {**base, "field": field.to_json() if field else None, "status": "pass" if ok else "fail", **body}
    _emit(report, args.out, verb)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
