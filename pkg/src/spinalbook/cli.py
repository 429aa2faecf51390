"""Command-line front end.

Exit codes: 0 success, 1 domain violation or failed check, 2 usage or parse
error. JSON output is canonical (sorted keys, dense zero-based ids).
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path
from typing import Any, Optional, Sequence

import sympy as sp

from . import forms, zoo
from .circle_bundles import (InternalInconsistency, InvalidMulticurve, build_sob, circle_bundle_verdicts,
                             has_torsion_directly, inverts_orientations, self_glued_curves)
from .covers import SearchBoundExceeded
from .io import (ParseError, dumps, flags_from_json, lefschetz_from_json, loads, multicurve_from_json,
                 sob_from_json, sob_to_json)
from .lefschetz import InvalidDescriptor, boundary_sob
from .obstructions import (DEFAULT_MAX_BASE_GENUS, ExactnessFlags, find_planar_torsion, is_lefschetz_amenable,
                           is_symmetric, is_uniform, verdict)
from .sob import InvalidBook, SpinalOpenBook, validate
from .surgery import HandleRecord, SurgeryError, binding_sum, blow_up, fiber_sum_pages, spine_remove

BOUND_EXCEEDED = "bound-exceeded"


class DomainError(Exception):
    pass


# ---------------------------------------------------------------- helpers

def _read_json(path: str) -> Any:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return loads(text)


def _read_book(path: str) -> SpinalOpenBook:
    try:
        return sob_from_json(_read_json(path))
    except (ValueError, TypeError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc)) from exc


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()] if text.strip() else []
    except ValueError as exc:
        raise ParseError(f"expected a list of integers, got {text!r}") from exc


def _render_text(obj: Any, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(f"{pad}- {_scalar(x)}" if not isinstance(x, (dict, list))
                         else f"{pad}-\n{_render_text(x, indent + 1)}" for x in obj)
    return pad + _scalar(obj)


def _scalar(v: Any) -> str:
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, dict)):
        return "[]" if isinstance(v, list) else "{}"
    return str(v)


def _emit(args, obj: Any) -> None:
    if getattr(args, "output", "json") == "text":
        sys.stdout.write(_render_text(obj) + "\n")
    else:
        sys.stdout.write(dumps(obj))


# ---------------------------------------------------------------- classify

def classify(sob: SpinalOpenBook, flags: Optional[ExactnessFlags] = None,
             max_base_genus: int = DEFAULT_MAX_BASE_GENUS) -> dict:
    """All classification predicates and verdicts for a closed or bordered book."""
    if sob.generalized:
        raise DomainError("classification is undefined for generalized books")
    report = validate(sob)
    if report:
        raise InvalidBook(report)
    flags = flags or ExactnessFlags.disk_rule(sob)
    symmetric = bool(is_symmetric(sob))
    try:
        uniform: Any = bool(is_uniform(sob, max_base_genus)) if symmetric else False
        amenable: Any = bool(is_lefschetz_amenable(sob, max_base_genus)) if uniform else False
    except SearchBoundExceeded:
        uniform = amenable = BOUND_EXCEEDED
    torsion = find_planar_torsion(sob, flags)
    return {
        "symmetric": symmetric,
        "uniform": uniform,
        "amenable": amenable,
        "torsion": torsion.to_json() if torsion else None,
        "verdicts": [v.to_json() for v in verdict(sob, flags)],
    }


def cmd_validate(args) -> int:
    sob = _read_book(args.file)
    report = validate(sob)
    _emit(args, {"valid": not report, "violations": [v.to_json() for v in report]})
    return 0 if not report else 1


def cmd_classify(args) -> int:
    sob = _read_book(args.file)
    flags = flags_from_json(_read_json(args.flags), sob) if args.flags else None
    _emit(args, classify(sob, flags, args.max_base_genus))
    return 0


def cmd_surgery(args) -> int:
    sob = _read_book(args.file)
    record: Optional[HandleRecord] = None
    if args.op == "spine-remove":
        out, record = spine_remove(sob, _int_list(args.ids))
    elif args.op == "blow-up":
        out = blow_up(sob, _int_list(args.ids))
    elif args.op == "binding-sum":
        out = binding_sum(sob, args.c1, args.c2)
    else:
        out = fiber_sum_pages(sob, args.j0, args.j1, _int_list(args.ident), args.order)
    result = sob_to_json(out)
    if record is not None:
        result["handle_record"] = record.to_json()
    for note in out.notes:
        print(f"warning: {note}", file=sys.stderr)
    _emit(args, result)
    return 0


def cmd_lefschetz_boundary(args) -> int:
    lf = lefschetz_from_json(_read_json(args.file))
    _emit(args, sob_to_json(boundary_sob(lf)))
    return 0


def cmd_circle_bundle(args) -> int:
    mc = multicurve_from_json(_read_json(args.file))
    if args.op == "build":
        _emit(args, sob_to_json(build_sob(mc)))
        return 0
    inverts = inverts_orientations(mc)
    if not inverts:
        raise DomainError("region orientations must alternate across every two-sided curve")
    _emit(args, {
        "inverts_orientations": inverts,
        "torsion_direct": has_torsion_directly(mc),
        "self_glued_curves": self_glued_curves(mc),
        "verdicts": [v.to_json() for v in circle_bundle_verdicts(mc)],
    })
    return 0


# ---------------------------------------------------------------- forms

def _forms_report(args) -> forms.CheckReport:
    K, m, n = args.K, args.m, args.grid
    two_pi = (0.0, 2 * math.pi, True)
    s, t, rho = sp.Symbol("s"), sp.Symbol("t"), sp.Symbol("rho")
    if args.model == "collar":
        return forms.collar_model_check(K, m, forms.collar_chart(n))
    if args.model == "contact-collar":
        chart = forms.Chart.build({"phi": two_pi, "t": (-1.0, 0.0), "theta": two_pi}, n)
        return forms.contact_check(chart, forms.ChartForm(1, {(0,): K, (2,): sp.exp(t)}))
    if args.model == "horizontal":
        chart = forms.Chart.build({"s": (-1.0, 0.0), "phi": two_pi, "theta": two_pi}, n)
        return forms.contact_check(chart, forms.ChartForm(1, {(1,): K * sp.exp(s), (2,): 1}))
    if args.model == "handle":
        return forms.symplectic_check(forms.collar_chart(n), forms.handle_form(K))
    if args.model in ("boundary-profile", "giroux-interface"):
        if not (args.f and args.g):
            raise ParseError(f"--f and --g CSV profiles are required for {args.model}")
        coord = "t" if args.model == "boundary-profile" else "rho"
        f = forms.Profile.from_csv(args.f, coord)
        g = forms.Profile.from_csv(args.g, coord)
        if args.model == "boundary-profile":
            return forms.boundary_profile_check(f, g, args.delta)
        lo, hi = max(f.xs[0], g.xs[0]), min(f.xs[-1], g.xs[-1])
        chart = forms.Chart.build({"rho": (lo, hi), "phi": two_pi, "theta": two_pi}, (max(n, 64), 4, 4))
        return forms.giroux_interface_check(f, g, chart)
    raise ParseError(f"unknown model {args.model!r}")


def cmd_verify_forms(args) -> int:
    if args.model == "thurston":
        chart = forms.Chart.build({"s": (-1.0, 0.0), "phi": (0.0, 2 * math.pi, True),
                                   "theta": (0.0, 2 * math.pi, True)}, args.grid)
        s = sp.Symbol("s")
        th = forms.thurston_threshold(lambda K: forms.ChartForm(1, {(1,): args.A * s + K * sp.exp(s), (2,): 1}),
                                      chart, args.K_max)
        _emit(args, th.to_json())
        return 0 if not th.unbounded else 1
    rep = _forms_report(args)
    _emit(args, rep.to_json())
    return 0 if rep.passed else 1


def cmd_zoo(args) -> int:
    if args.name is None:
        _emit(args, {name: {"kind": e.kind, "citation": e.citation} for name, e in zoo.ENTRIES.items()})
        return 0
    if args.name not in zoo.ENTRIES:
        raise ParseError(f"no zoo entry {args.name!r}")
    sys.stdout.write(zoo.load_text(args.name))
    return 0


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spinalbook", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("json", "text"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check the incidence invariants of a book")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("classify", parents=[common], help="symmetry, uniformity, torsion and verdicts")
    p.add_argument("file")
    p.add_argument("--max-base-genus", type=int, default=DEFAULT_MAX_BASE_GENUS)
    p.add_argument("--flags", help="JSON exactness flags for the vertebrae")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("surgery", parents=[common], help="spine removal, blow-up, binding sum, fiber sum")
    ops = p.add_subparsers(dest="op", required=True)
    for name in ("spine-remove", "blow-up"):
        q = ops.add_parser(name, parents=[common])
        q.add_argument("file")
        q.add_argument("--ids", default="", help="vertebra ids, comma separated")
    q = ops.add_parser("binding-sum", parents=[common])
    q.add_argument("file")
    q.add_argument("--c1", type=int, required=True)
    q.add_argument("--c2", type=int, required=True)
    q = ops.add_parser("fiber-sum", parents=[common])
    q.add_argument("file")
    q.add_argument("--j0", type=int, required=True)
    q.add_argument("--j1", type=int, required=True)
    q.add_argument("--ident", required=True, help="label of j1 for each label 1..b of j0, comma separated")
    q.add_argument("--order", choices=("j0j1", "j1j0"), default="j0j1")
    p.set_defaults(func=cmd_surgery)

    p = sub.add_parser("lefschetz-boundary", parents=[common], help="boundary book of a Lefschetz descriptor")
    p.add_argument("file")
    p.set_defaults(func=cmd_lefschetz_boundary)

    p = sub.add_parser("circle-bundle", parents=[common], help="circle bundles over multicurve-cut surfaces")
    p.add_argument("op", choices=("build", "verdicts"))
    p.add_argument("file")
    p.set_defaults(func=cmd_circle_bundle)

    p = sub.add_parser("verify-forms", parents=[common], help="grid checks of the model forms")
    p.add_argument("--model", required=True,
                   choices=("collar", "contact-collar", "horizontal", "handle", "boundary-profile",
                            "giroux-interface", "thurston"))
    p.add_argument("--K", type=float, default=1.0)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--grid", type=int, default=12)
    p.add_argument("--A", type=float, default=-2.0, help="linear coefficient of the thurston family")
    p.add_argument("--K-max", dest="K_max", type=float, default=20.0)
    p.add_argument("--f", help="CSV profile f")
    p.add_argument("--g", help="CSV profile g")
    p.add_argument("--delta", type=float, default=0.5)
    p.set_defaults(func=cmd_verify_forms)

    p = sub.add_parser("zoo", parents=[common], help="list or print bundled examples")
    p.add_argument("name", nargs="?")
    p.set_defaults(func=cmd_zoo)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvalidBook as exc:
        _emit(args, {"valid": False, "violations": [v.to_json() for v in exc.report]})
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (DomainError, SurgeryError, InvalidMulticurve, InvalidDescriptor, InternalInconsistency,
            ValueError, LookupError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
