"""Circle bundles over surfaces cut by a multicurve.

A base surface ``B`` is described by the pieces of ``B`` minus the multicurve
(each a compact oriented surface whose boundary circles are "sides") and by
how the sides are glued back: a two-sided curve glues two sides, with a bit
saying whether the chosen region orientations disagree across it; a
one-sided curve is the core of a Moebius band and consumes a single side.

The induced spinal open book has one vertebra per region and one
annulus-page paper component per curve.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .obstructions import (NO_DISCONNECTED_SEMIFILLING, NO_NONSEPARATING_EMBEDDING, NOT_STRONGLY_FILLABLE,
                           ExactnessFlags, Verdict, verdict)
from .sob import Orbit, PaperComponent, SpinalOpenBook, Target, Vertebra
from .surfaces import ANNULUS, Surface


@dataclass(frozen=True)
class Region:
    surface: Surface
    sides: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "sides", tuple(self.sides))


@dataclass(frozen=True)
class TwoSided:
    side_a: int
    side_b: int
    orientation_reversing_gluing: bool = True


@dataclass(frozen=True)
class OneSided:
    side: int


Curve = Union[TwoSided, OneSided]


@dataclass(frozen=True)
class MulticurveData:
    base_orientable: bool
    regions: tuple[Region, ...]
    curves: tuple[Curve, ...]
    euler_number: Optional[int] = None  # carried along, never used

    def __post_init__(self) -> None:
        object.__setattr__(self, "regions", tuple(self.regions))
        object.__setattr__(self, "curves", tuple(self.curves))

    def side_owner(self) -> dict[int, int]:
        return {s: i for i, r in enumerate(self.regions) for s in r.sides}


class InvalidMulticurve(ValueError):
    pass


class InternalInconsistency(RuntimeError):
    """The direct criteria and the general torsion engine disagree."""


def _curve_sides(c: Curve) -> tuple[int, ...]:
    return (c.side_a, c.side_b) if isinstance(c, TwoSided) else (c.side,)


def computed_orientable(mc: MulticurveData) -> bool:
    """Whether the region orientations can be flipped so every gluing matches."""
    if any(isinstance(c, OneSided) for c in mc.curves):
        return False
    owner = mc.side_owner()
    adj: dict[int, list[tuple[int, int]]] = {i: [] for i in range(len(mc.regions))}
    for c in mc.curves:
        a, b = owner[c.side_a], owner[c.side_b]
        flip = 1 if c.orientation_reversing_gluing else 0
        adj[a].append((b, flip))
        adj[b].append((a, flip))
    colour: dict[int, int] = {}
    for start in adj:
        if start in colour:
            continue
        colour[start] = 0
        stack = [start]
        while stack:
            x = stack.pop()
            for y, flip in adj[x]:
                want = colour[x] ^ flip
                if y not in colour:
                    colour[y] = want
                    stack.append(y)
                elif colour[y] != want:
                    return False
    return True


def problems(mc: MulticurveData) -> list[str]:
    out = []
    if not mc.regions:
        out.append("no regions")
    if not mc.curves:
        out.append("the multicurve is empty")
    sides = [s for r in mc.regions for s in r.sides]
    if len(set(sides)) != len(sides):
        out.append("a side belongs to two regions")
    for i, r in enumerate(mc.regions):
        if not r.surface.orientable:
            out.append(f"region {i} is not orientable")
        if len(r.sides) != r.surface.boundary:
            out.append(f"region {i} lists {len(r.sides)} sides for {r.surface.boundary} boundary circles")
        if not r.sides:
            out.append(f"region {i} touches no curve")
    used = [s for c in mc.curves for s in _curve_sides(c)]
    for s in sorted(set(used) - set(sides)):
        out.append(f"dangling side {s}")
    for s in sorted(set(sides) - set(used)):
        out.append(f"side {s} is not glued")
    for s in sorted({s for s in used if used.count(s) > 1}):
        out.append(f"side {s} is glued more than once")
    if any(isinstance(c, TwoSided) and c.side_a == c.side_b for c in mc.curves):
        out.append("a two-sided curve needs two distinct sides")
    if mc.base_orientable and any(isinstance(c, OneSided) for c in mc.curves):
        out.append("one-sided curves need a non-orientable base")
    if not out and computed_orientable(mc) != mc.base_orientable:
        out.append(f"gluing data give an {'orientable' if computed_orientable(mc) else 'non-orientable'} base, "
                   f"but base_orientable = {mc.base_orientable}")
    return out


def require_valid(mc: MulticurveData) -> None:
    found = problems(mc)
    if found:
        raise InvalidMulticurve("; ".join(found))


def self_glued_curves(mc: MulticurveData) -> list[int]:
    """Indices of two-sided curves with both sides on one region."""
    owner = mc.side_owner()
    return [i for i, c in enumerate(mc.curves)
            if isinstance(c, TwoSided) and owner.get(c.side_a) == owner.get(c.side_b)]


def inverts_orientations(mc: MulticurveData) -> bool:
    """Region orientations flip across every two-sided curve."""
    require_valid(mc)
    return all(c.orientation_reversing_gluing for c in mc.curves if isinstance(c, TwoSided))


def build_sob(mc: MulticurveData) -> SpinalOpenBook:
    if not inverts_orientations(mc):
        raise InvalidMulticurve("region orientations must alternate across every two-sided curve")
    vertebrae = tuple(Vertebra(i, r.surface, r.sides) for i, r in enumerate(mc.regions))
    papers = []
    for j, c in enumerate(mc.curves):
        if isinstance(c, TwoSided):
            orbits = (Orbit((1,), Target.circle(c.side_a)), Orbit((2,), Target.circle(c.side_b)))
            papers.append(PaperComponent(j, ANNULUS, (1, 2), orbits))
        else:
            # the annulus family double covers the Moebius core, swapping its two ends
            papers.append(PaperComponent(j, ANNULUS, (2, 1), (Orbit((1, 2), Target.circle(c.side)),)))
    return SpinalOpenBook(vertebrae, tuple(papers))


def has_torsion_directly(mc: MulticurveData) -> bool:
    r = len(mc.regions)
    return r >= 3 or (r >= 2 and not mc.base_orientable)


def expected_symmetric(mc: MulticurveData) -> bool:
    """Symmetry read off the multicurve: one region, or two regions with every
    curve joining them."""
    r = len(mc.regions)
    if r == 1:
        return True
    owner = mc.side_owner()
    return r == 2 and all(isinstance(c, TwoSided) and owner[c.side_a] != owner[c.side_b] for c in mc.curves)


PARTIALLY_PLANAR_CITATION = "genus-zero pages and nonempty multicurve => partially planar domain"


def circle_bundle_verdicts(mc: MulticurveData) -> list[Verdict]:
    """Verdicts for the bundle, with the direct criteria cross-checked against
    the general engine."""
    sob = build_sob(mc)
    engine = verdict(sob, ExactnessFlags.disk_rule(sob))
    engine_torsion = any(v.verdict == NOT_STRONGLY_FILLABLE for v in engine)
    if engine_torsion != has_torsion_directly(mc):
        raise InternalInconsistency(
            f"direct criteria say torsion={has_torsion_directly(mc)}, engine says {engine_torsion}")
    out = list(engine)
    names = {v.verdict for v in out}
    witness = {"regions": len(mc.regions), "curves": len(mc.curves)}
    for name in (NO_NONSEPARATING_EMBEDDING, NO_DISCONNECTED_SEMIFILLING):
        if name not in names:
            out.append(Verdict(name, witness, PARTIALLY_PLANAR_CITATION))
    return out
