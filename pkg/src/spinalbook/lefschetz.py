"""Bordered Lefschetz fibrations, recorded combinatorially, and the spinal
open book they induce on their boundary.

The horizontal boundary is a union of connected covers of the base, one per
group of fiber boundary labels; a group of ``d`` labels is a ``d``-fold cover
whose boundary over the j-th base circle has components of degrees
``mults[j]``.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import perms as P
from .covers import CoverSpec, exists_cover
from .sob import Orbit, PaperComponent, SpinalOpenBook, Target, Vertebra
from .surfaces import Surface, euler


@dataclass(frozen=True)
class CriticalPoint:
    homologically_trivial: bool = False


@dataclass(frozen=True)
class HorizontalGroup:
    labels: tuple[int, ...]
    cover_total: Surface
    mults: tuple[tuple[int, ...], ...]  # one partition of the degree per base boundary circle

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(sorted(self.labels)))
        object.__setattr__(self, "mults", tuple(tuple(m) for m in self.mults))

    @property
    def degree(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class LefschetzDescriptor:
    base: Surface
    fiber: Surface
    critical_points: tuple[CriticalPoint, ...] = ()
    groups: tuple[HorizontalGroup, ...] = ()

    def cover_spec(self, group: HorizontalGroup) -> CoverSpec:
        return CoverSpec(self.base, group.degree, group.mults, unbranched=True)


class InvalidDescriptor(ValueError):
    def __init__(self, problems: list[str]):
        self.problems = problems
        super().__init__("; ".join(problems))


def problems(lf: LefschetzDescriptor) -> list[str]:
    """Everything wrong with ``lf``; empty means valid."""
    out = []
    for name, s in (("base", lf.base), ("fiber", lf.fiber)):
        if not s.orientable or s.boundary < 1:
            out.append(f"{name} must be orientable with nonempty boundary")
    if out:
        return out
    labels = sorted(l for g in lf.groups for l in g.labels)
    if labels != list(range(1, lf.fiber.boundary + 1)):
        out.append(f"groups must partition the fiber boundary labels 1..{lf.fiber.boundary}")
    for i, g in enumerate(lf.groups):
        if len(g.mults) != lf.base.boundary:
            out.append(f"group {i}: {len(g.mults)} multiplicity lists for {lf.base.boundary} base boundary circles")
            continue
        if any(sum(m) != g.degree or min(m, default=0) < 1 for m in g.mults):
            out.append(f"group {i}: multiplicities must be partitions of its degree {g.degree}")
            continue
        before = len(out)
        if euler(g.cover_total) != g.degree * euler(lf.base):
            out.append(f"group {i}: chi({g.cover_total}) != {g.degree} * chi({lf.base})")
        if g.cover_total.boundary != sum(len(m) for m in g.mults):
            out.append(f"group {i}: cover has {g.cover_total.boundary} boundary circles, "
                       f"multiplicities give {sum(len(m) for m in g.mults)}")
        if len(out) == before and not exists_cover(lf.cover_spec(g)):
            out.append(f"group {i}: no connected unbranched cover with these boundary degrees")
    return out


def require_valid(lf: LefschetzDescriptor) -> None:
    found = problems(lf)
    if found:
        raise InvalidDescriptor(found)


def is_allowable(lf: LefschetzDescriptor) -> bool:
    """No vanishing cycle is null-homologous in the fiber."""
    return not any(c.homologically_trivial for c in lf.critical_points)


def euler_total(lf: LefschetzDescriptor) -> int:
    return euler(lf.base) * euler(lf.fiber) + len(lf.critical_points)


def boundary_sob(lf: LefschetzDescriptor) -> SpinalOpenBook:
    """The spinal open book on the boundary of the total space.

    Vertebra ``i`` is the horizontal cover of group ``i``; paper ``j`` is the
    family of fibers over the j-th base boundary circle. The monodromy of
    that family on a group's labels is the cover's boundary monodromy there,
    so each of its cycles is one circle of the vertebra.
    """
    require_valid(lf)
    nb = lf.fiber.boundary
    sigmas = [[0] * nb for _ in range(lf.base.boundary)]
    orbits: list[list[Orbit]] = [[] for _ in range(lf.base.boundary)]
    vertebrae = []
    next_circle = 0
    for i, g in enumerate(lf.groups):
        cert = exists_cover(lf.cover_spec(g)).certificate
        circles = []
        for j, c in enumerate(cert.boundary):
            for x in range(g.degree):
                sigmas[j][g.labels[x] - 1] = g.labels[c[x]]
            for cyc in P.cycles(c):
                orbits[j].append(Orbit(tuple(g.labels[x] for x in cyc), Target.circle(next_circle)))
                circles.append(next_circle)
                next_circle += 1
        vertebrae.append(Vertebra(i, g.cover_total, tuple(circles)))
    papers = tuple(PaperComponent(j, lf.fiber, tuple(sigmas[j]), tuple(orbits[j])) for j in range(lf.base.boundary))
    return SpinalOpenBook(tuple(vertebrae), papers)
