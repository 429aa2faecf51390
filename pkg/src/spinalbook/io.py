"""JSON interchange for books, descriptors, multicurves and flags."""

from __future__ import annotations

import json
from typing import Any

from .circle_bundles import MulticurveData, OneSided, Region, TwoSided
from .lefschetz import CriticalPoint, HorizontalGroup, LefschetzDescriptor
from .obstructions import Exactness, ExactnessFlags
from .sob import BoundaryTorus, Orbit, PaperComponent, SpinalOpenBook, Target, Vertebra, canonicalize
from .surfaces import Surface


class ParseError(ValueError):
    """Input is not well-formed for the schema (as opposed to invalid data)."""


def dumps(obj: Any) -> str:
    """Canonical text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from exc


def _get(d: dict, key: str, kind=None):
    if not isinstance(d, dict) or key not in d:
        raise ParseError(f"missing field {key!r}")
    v = d[key]
    if kind is not None and not isinstance(v, kind) or isinstance(v, bool) and kind is int:
        raise ParseError(f"field {key!r} has the wrong type")
    return v


# ---------------------------------------------------------------- surfaces

def surface_to_json(s: Surface) -> dict:
    if s.orientable:
        return {"genus": s.genus, "boundary": s.boundary}
    return {"crosscaps": s.crosscaps, "boundary": s.boundary}


def surface_from_json(d: dict) -> Surface:
    boundary = _get(d, "boundary", int)
    try:
        if "crosscaps" in d:
            return Surface(0, boundary, orientable=False, crosscaps=_get(d, "crosscaps", int))
        return Surface(_get(d, "genus", int), boundary)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


# ---------------------------------------------------------------- books

def target_to_json(t: Target) -> dict:
    return {t.kind: t.id}


def target_from_json(d: dict) -> Target:
    if not isinstance(d, dict) or len(d) != 1 or next(iter(d)) not in ("circle", "torus"):
        raise ParseError(f"target must be {{'circle': id}} or {{'torus': id}}, got {d!r}")
    kind, i = next(iter(d.items()))
    if not isinstance(i, int):
        raise ParseError("target id must be an integer")
    return Target(kind, i)


def sob_to_json(sob: SpinalOpenBook, canonical: bool = True) -> dict:
    if canonical:
        sob = canonicalize(sob)
    out = {
        "generalized": sob.generalized,
        "vertebrae": [{"id": v.id, "surface": surface_to_json(v.surface), "circles": list(v.circles)}
                      for v in sob.vertebrae],
        "papers": [{"id": p.id, "page": surface_to_json(p.page), "sigma": list(p.sigma),
                    "orbits": [{"labels": list(o.labels), "target": target_to_json(o.target)} for o in p.orbits]}
                   for p in sob.papers],
        "boundary_tori": [{"id": t.id, "framing": t.framing} for t in sob.boundary_tori],
    }
    if sob.notes:
        out["notes"] = list(sob.notes)
    return out


def sob_from_json(d: dict) -> SpinalOpenBook:
    if not isinstance(d, dict):
        raise ParseError("a spinal open book must be a JSON object")
    try:
        vertebrae = tuple(Vertebra(_get(v, "id", int), surface_from_json(_get(v, "surface", dict)),
                                   tuple(_get(v, "circles", list)))
                          for v in _get(d, "vertebrae", list))
        papers = tuple(
            PaperComponent(_get(p, "id", int), surface_from_json(_get(p, "page", dict)), tuple(_get(p, "sigma", list)),
                           tuple(Orbit(tuple(_get(o, "labels", list)), target_from_json(_get(o, "target", dict)))
                                 for o in _get(p, "orbits", list)))
            for p in _get(d, "papers", list))
        tori = tuple(BoundaryTorus(_get(t, "id", int), t.get("framing", 0)) for t in d.get("boundary_tori", []))
    except (TypeError, AttributeError) as exc:
        raise ParseError(f"malformed book: {exc}") from exc
    return SpinalOpenBook(vertebrae, papers, tori, bool(d.get("generalized", False)), tuple(d.get("notes", ())))


# ---------------------------------------------------------------- Lefschetz

def lefschetz_to_json(lf: LefschetzDescriptor) -> dict:
    return {
        "base": surface_to_json(lf.base),
        "fiber": surface_to_json(lf.fiber),
        "critical_points": [{"trivial": c.homologically_trivial} for c in lf.critical_points],
        "groups": [{"labels": list(g.labels), "cover_total": surface_to_json(g.cover_total),
                    "mults": [list(m) for m in g.mults]} for g in lf.groups],
    }


def lefschetz_from_json(d: dict) -> LefschetzDescriptor:
    try:
        return LefschetzDescriptor(
            surface_from_json(_get(d, "base", dict)),
            surface_from_json(_get(d, "fiber", dict)),
            tuple(CriticalPoint(bool(c.get("trivial", False))) for c in d.get("critical_points", [])),
            tuple(HorizontalGroup(tuple(_get(g, "labels", list)), surface_from_json(_get(g, "cover_total", dict)),
                                  tuple(tuple(m) for m in _get(g, "mults", list)))
                  for g in _get(d, "groups", list)))
    except (TypeError, AttributeError) as exc:
        raise ParseError(f"malformed Lefschetz descriptor: {exc}") from exc


# ---------------------------------------------------------------- multicurves

def multicurve_to_json(mc: MulticurveData) -> dict:
    curves = []
    for c in mc.curves:
        if isinstance(c, TwoSided):
            curves.append({"two_sided": {"side_a": c.side_a, "side_b": c.side_b,
                                         "orientation_reversing_gluing": c.orientation_reversing_gluing}})
        else:
            curves.append({"one_sided": {"side": c.side}})
    out = {"base_orientable": mc.base_orientable,
           "regions": [{"surface": surface_to_json(r.surface), "sides": list(r.sides)} for r in mc.regions],
           "curves": curves}
    if mc.euler_number is not None:
        out["euler_number"] = mc.euler_number
    return out


def multicurve_from_json(d: dict) -> MulticurveData:
    try:
        regions = tuple(Region(surface_from_json(_get(r, "surface", dict)), tuple(_get(r, "sides", list)))
                        for r in _get(d, "regions", list))
        curves = []
        for c in _get(d, "curves", list):
            if "two_sided" in c:
                t = c["two_sided"]
                curves.append(TwoSided(_get(t, "side_a", int), _get(t, "side_b", int),
                                       bool(t.get("orientation_reversing_gluing", True))))
            elif "one_sided" in c:
                curves.append(OneSided(_get(c["one_sided"], "side", int)))
            else:
                raise ParseError(f"unknown curve {c!r}")
        return MulticurveData(bool(_get(d, "base_orientable", bool)), regions, tuple(curves), d.get("euler_number"))
    except (TypeError, AttributeError) as exc:
        raise ParseError(f"malformed multicurve: {exc}") from exc


# ---------------------------------------------------------------- flags

def flags_from_json(d: dict, sob: SpinalOpenBook) -> ExactnessFlags:
    """``{"default": "disk-rule" | "unknown", "flags": {"<vertebra id>": "Exact" | ...}}``."""
    try:
        given = {int(k): Exactness(v) for k, v in d.get("flags", {}).items()}
    except ValueError as exc:
        raise ParseError(f"bad exactness flag: {exc}") from exc
    default = d.get("default", "disk-rule")
    if default == "disk-rule":
        return ExactnessFlags.disk_rule(sob, given)
    if default == "unknown":
        base = ExactnessFlags.uniform(sob).flags
        base.update(given)
        return ExactnessFlags(base)
    raise ParseError(f"unknown flags default {default!r}")
