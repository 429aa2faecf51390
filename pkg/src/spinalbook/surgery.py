"""Cut-and-paste operations on spinal open books.

All operations are pure and keep the ids of untouched parts, so results of
different operation orders can be compared directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .sob import (BoundaryTorus, InvalidBook, Orbit, PaperComponent, SpinalOpenBook, Target, Vertebra,
                  Violation, fresh_id, incident_orbit, require_valid, sigma_cycles, validate)
from .surfaces import ANNULUS, Surface, euler

CLOSED_PAGES_NOTE = "closed pages present: a Giroux form cannot exist in this case"


class SurgeryError(ValueError):
    pass


@dataclass(frozen=True)
class HandleRecord:
    """What spine removal attached: one disk cap per deleted page boundary label."""

    removed_vertebrae: tuple[int, ...] = ()
    capped_orbits: tuple[tuple[int, tuple[int, ...], int], ...] = ()  # (paper, old orbit labels, caps)
    euler_delta_pages: int = 0

    def to_json(self) -> dict:
        return {
            "removed_vertebrae": list(self.removed_vertebrae),
            "capped_orbits": [{"paper": p, "labels": list(l), "caps": n} for p, l, n in self.capped_orbits],
            "euler_delta_pages": self.euler_delta_pages,
        }


def _check_ids(sob: SpinalOpenBook, ids: Iterable[int]) -> list[int]:
    ids = sorted(set(ids))
    known = {v.id for v in sob.vertebrae}
    missing = [i for i in ids if i not in known]
    if missing:
        raise SurgeryError(f"unknown vertebra ids {missing}")
    return ids


def _relabel(paper: PaperComponent, keep: Sequence[int], page: Surface) -> PaperComponent:
    """Restrict ``paper`` to the labels in ``keep`` (a union of its cycles),
    renumbered 1.. in increasing order."""
    new = {old: i + 1 for i, old in enumerate(sorted(keep))}
    sigma = tuple(new[paper.sigma[old - 1]] for old in sorted(keep))
    orbits = tuple(Orbit(tuple(new[l] for l in o.labels), o.target)
                   for o in paper.orbits if o.labels[0] in new)
    return PaperComponent(paper.id, page, sigma, orbits)


def spine_remove(sob: SpinalOpenBook, ids: Iterable[int]) -> tuple[SpinalOpenBook, HandleRecord]:
    """Delete vertebrae and cap every page boundary component that met them by a disk."""
    require_valid(sob)
    ids = _check_ids(sob, ids)
    if not ids:
        return sob, HandleRecord()
    gone = {c for v in sob.vertebrae if v.id in ids for c in v.circles}
    papers, capped = [], []
    for p in sob.papers:
        dropped = [o for o in p.orbits if o.target.kind == "circle" and o.target.id in gone]
        if not dropped:
            papers.append(p)
            continue
        capped += [(p.id, o.labels, o.size) for o in dropped]
        keep = [l for o in p.orbits if o not in dropped for l in o.labels]
        page = Surface(p.page.genus, p.page.boundary - sum(o.size for o in dropped))
        papers.append(_relabel(p, keep, page))
    closed = any(p.page.boundary == 0 for p in papers)
    notes = tuple(sob.notes) + ((CLOSED_PAGES_NOTE,) if closed and CLOSED_PAGES_NOTE not in sob.notes else ())
    out = SpinalOpenBook(
        tuple(v for v in sob.vertebrae if v.id not in ids), tuple(papers), sob.boundary_tori,
        sob.generalized or closed, notes)
    record = HandleRecord(tuple(ids), tuple(capped), sum(n for _, _, n in capped))
    return out, record


def blow_up(sob: SpinalOpenBook, ids: Iterable[int]) -> SpinalOpenBook:
    """Replace disk vertebrae by boundary tori carrying the canonical meridian."""
    require_valid(sob)
    ids = _check_ids(sob, ids)
    for vid in ids:
        if not sob.vertebra(vid).surface.is_disk():
            raise SurgeryError(f"blow-up requires disk vertebrae; vertebra {vid} is {sob.vertebra(vid).surface}")
    if not ids:
        return sob
    next_torus = fresh_id(t.id for t in sob.boundary_tori)
    retarget: dict[Target, Target] = {}
    tori = list(sob.boundary_tori)
    for vid in ids:
        (c,) = sob.vertebra(vid).circles
        retarget[Target.circle(c)] = Target.torus(next_torus)
        tori.append(BoundaryTorus(next_torus, 0))
        next_torus += 1
    papers = tuple(PaperComponent(p.id, p.page, p.sigma,
                                  tuple(Orbit(o.labels, retarget.get(o.target, o.target)) for o in p.orbits))
                   for p in sob.papers)
    return SpinalOpenBook(tuple(v for v in sob.vertebrae if v.id not in ids), papers, tuple(tori),
                          sob.generalized, sob.notes)


def binding_sum(sob: SpinalOpenBook, c1: int, c2: int) -> SpinalOpenBook:
    """Replace the disk vertebrae bounded by ``c1`` and ``c2`` with one annulus."""
    require_valid(sob)
    if c1 == c2:
        raise SurgeryError("binding sum needs two distinct spine circles")
    owner = sob.circle_owner()
    for c in (c1, c2):
        if c not in owner:
            raise SurgeryError(f"unknown spine circle {c}")
        v = sob.vertebra(owner[c])
        if not v.surface.is_disk():
            raise SurgeryError(f"circle {c} lies on vertebra {v.id} of type {v.surface}, not a disk")
        m = incident_orbit(sob, Target.circle(c))[1].size
        if m != 1:
            raise SurgeryError(f"circle {c} has multiplicity {m}; binding sum needs multiplicity 1")
    v1, v2 = owner[c1], owner[c2]
    merged = Vertebra(min(v1, v2), ANNULUS, (c1, c2))
    vertebrae = tuple(v for v in sob.vertebrae if v.id not in (v1, v2)) + (merged,)
    return SpinalOpenBook(vertebrae, sob.papers, sob.boundary_tori, sob.generalized, sob.notes)


def _compose_sum(s0: Sequence[int], s1: Sequence[int], ident: Sequence[int], order: str) -> tuple[int, ...]:
    """Boundary permutation of the concatenated family, on the first paper's labels."""
    inv = {y: x for x, y in enumerate(ident, start=1)}
    n = len(s0)
    first = lambda x: s0[x - 1]
    second = lambda x: inv[s1[ident[x - 1] - 1]]
    if order == "j0j1":
        return tuple(second(first(x)) for x in range(1, n + 1))
    if order == "j1j0":
        return tuple(first(second(x)) for x in range(1, n + 1))
    raise SurgeryError(f"unknown concatenation order {order!r}")


def fiber_sum_pages(sob: SpinalOpenBook, j0: int, j1: int, ident: Sequence[int],
                    order: str = "j0j1") -> SpinalOpenBook:
    """Connected sum along a page of paper ``j0`` and a page of paper ``j1``.

    ``ident[l - 1]`` is the boundary label of ``j1`` identified with label
    ``l`` of ``j0``. Each label pair becomes a 1-handle between the spine
    circles they sit on; the new spine surfaces follow from Euler
    characteristic and the traced boundary, which leaves no freedom.
    """
    require_valid(sob)
    if j0 == j1:
        raise SurgeryError("self-sum (j0 == j1) is not supported")
    p0, p1 = sob.paper(j0), sob.paper(j1)
    if p0.page != p1.page:
        raise SurgeryError(f"page type mismatch: {p0.page} vs {p1.page}")
    b = p0.page.boundary
    if b == 0:
        raise SurgeryError("pages without boundary cannot be summed along the spine")
    ident = tuple(ident)
    if sorted(ident) != list(range(1, b + 1)):
        raise SurgeryError(f"ident must be a bijection of 1..{b}")
    for p in (p0, p1):
        if any(o.target.kind != "circle" for o in p.orbits):
            raise SurgeryError(f"paper {p.id} meets a boundary torus; only spine-attached pages are summed")

    owner = sob.circle_owner()
    sigma = _compose_sum(p0.sigma, p1.sigma, ident, order)
    circ0 = {l: p0.orbit_of(l).target.id for l in range(1, b + 1)}
    circ1 = {l: p1.orbit_of(l).target.id for l in range(1, b + 1)}

    parent = {v.id: v.id for v in sob.vertebrae}

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    for l in range(1, b + 1):
        a, c = find(owner[circ0[l]]), find(owner[circ1[ident[l - 1]]])
        if a != c:
            parent[max(a, c)] = min(a, c)

    consumed = set(circ0.values()) | set(circ1.values())
    touched = {owner[c] for c in consumed}
    groups: dict[int, list[Vertebra]] = {}
    for v in sob.vertebrae:
        if v.id in touched:
            groups.setdefault(find(v.id), []).append(v)

    next_circle = fresh_id(sob.spine_circles())
    cycles = sigma_cycles(sigma)
    new_targets, new_circles = [], {}
    for cyc in cycles:
        new_targets.append(Target.circle(next_circle))
        new_circles.setdefault(find(owner[circ0[cyc[0]]]), []).append(next_circle)
        next_circle += 1

    handles = {g: 0 for g in groups}
    for l in range(1, b + 1):
        handles[find(owner[circ0[l]])] += 1

    problems = []
    merged = []
    for g, members in sorted(groups.items()):
        chi = sum(euler(v.surface) for v in members) - handles[g]
        circles = tuple(c for v in members for c in v.circles if c not in consumed) + tuple(new_circles.get(g, ()))
        twice_genus = 2 - chi - len(circles)
        if twice_genus < 0 or twice_genus % 2:
            problems.append(Violation("INC-1", f"merged vertebrae {[v.id for v in members]} would need "
                                               f"chi={chi} with {len(circles)} boundary circles", (g,)))
            continue
        merged.append(Vertebra(g, Surface(twice_genus // 2, len(circles)), circles))
    if problems:
        raise InvalidBook(problems)

    new_paper = PaperComponent(j0, p0.page, sigma,
                               tuple(Orbit(c, t) for c, t in zip(cycles, new_targets)))
    out = SpinalOpenBook(
        tuple(v for v in sob.vertebrae if v.id not in touched) + tuple(merged),
        tuple(p for p in sob.papers if p.id not in (j0, j1)) + (new_paper,),
        sob.boundary_tori, sob.generalized, sob.notes)
    report = validate(out)
    if report:
        raise InvalidBook(report)
    return out
