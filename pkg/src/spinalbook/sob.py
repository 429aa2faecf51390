"""Combinatorial spinal open books.

A book is a list of vertebrae (compact oriented surfaces with boundary, each
boundary circle a spine circle), a list of paper components (a page type and
the permutation the monodromy induces on page boundary labels), and a list of
boundary tori. Every cycle of a paper's boundary permutation is an orbit
attached either to a spine circle or to a boundary torus; the orbit size is
the multiplicity there.

Everything here is an immutable value; operations return fresh books.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .surfaces import Surface, euler


@dataclass(frozen=True, order=True)
class Target:
    kind: str  # "circle" or "torus"
    id: int

    def __post_init__(self) -> None:
        if self.kind not in ("circle", "torus"):
            raise ValueError(f"unknown target kind {self.kind!r}")

    @classmethod
    def circle(cls, i: int) -> "Target":
        return cls("circle", i)

    @classmethod
    def torus(cls, i: int) -> "Target":
        return cls("torus", i)

    def __str__(self) -> str:
        return f"{self.kind}:{self.id}"


@dataclass(frozen=True)
class Orbit:
    """One cycle of a paper's boundary permutation and where it attaches."""

    labels: tuple[int, ...]
    target: Target

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(sorted(self.labels)))

    @property
    def size(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class Vertebra:
    id: int
    surface: Surface
    circles: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "circles", tuple(self.circles))


@dataclass(frozen=True)
class PaperComponent:
    """A connected component of the paper region.

    ``sigma`` is one-line notation on the page boundary labels ``1..b``:
    ``sigma[l - 1]`` is the label that ``l`` returns as after one turn.
    """

    id: int
    page: Surface
    sigma: tuple[int, ...]
    orbits: tuple[Orbit, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "sigma", tuple(self.sigma))
        object.__setattr__(self, "orbits", tuple(sorted(self.orbits, key=lambda o: o.labels)))

    @property
    def closed_pages(self) -> bool:
        return self.page.boundary == 0

    def orbit_of(self, label: int) -> Orbit:
        for o in self.orbits:
            if label in o.labels:
                return o
        raise KeyError(label)


@dataclass(frozen=True)
class BoundaryTorus:
    id: int
    framing: int = 0


@dataclass(frozen=True)
class SpinalOpenBook:
    vertebrae: tuple[Vertebra, ...] = ()
    papers: tuple[PaperComponent, ...] = ()
    boundary_tori: tuple[BoundaryTorus, ...] = ()
    generalized: bool = False
    notes: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertebrae", tuple(sorted(self.vertebrae, key=lambda v: v.id)))
        object.__setattr__(self, "papers", tuple(sorted(self.papers, key=lambda p: p.id)))
        object.__setattr__(self, "boundary_tori", tuple(sorted(self.boundary_tori, key=lambda t: t.id)))
        object.__setattr__(self, "notes", tuple(self.notes))

    # lookups; these assume unique ids, which validate() checks
    def vertebra(self, vid: int) -> Vertebra:
        for v in self.vertebrae:
            if v.id == vid:
                return v
        raise KeyError(f"no vertebra {vid}")

    def paper(self, pid: int) -> PaperComponent:
        for p in self.papers:
            if p.id == pid:
                return p
        raise KeyError(f"no paper component {pid}")

    def circle_owner(self) -> dict[int, int]:
        """Map spine circle id -> vertebra id."""
        return {c: v.id for v in self.vertebrae for c in v.circles}

    def spine_circles(self) -> list[int]:
        return [c for v in self.vertebrae for c in v.circles]

    def is_closed(self) -> bool:
        return not self.boundary_tori

    def spine_euler(self) -> int:
        return sum(euler(v.surface) for v in self.vertebrae)


# ---------------------------------------------------------------- building

def sigma_cycles(sigma: Sequence[int]) -> list[tuple[int, ...]]:
    """Cycles of a 1-based one-line permutation, ordered by least label."""
    seen: set[int] = set()
    out = []
    for start in range(1, len(sigma) + 1):
        if start in seen:
            continue
        cyc = []
        i = start
        while i not in seen:
            seen.add(i)
            cyc.append(i)
            i = sigma[i - 1]
        out.append(tuple(cyc))
    return out


def make_paper(pid: int, page: Surface, sigma: Sequence[int], targets: Sequence[Target]) -> PaperComponent:
    """Paper component whose orbits are the cycles of ``sigma``, attached to
    ``targets`` in order of least label."""
    cyc = sigma_cycles(sigma)
    if len(cyc) != len(targets):
        raise ValueError(f"sigma has {len(cyc)} cycles but {len(targets)} targets were given")
    return PaperComponent(pid, page, tuple(sigma), tuple(Orbit(c, t) for c, t in zip(cyc, targets)))


def identity_sigma(b: int) -> tuple[int, ...]:
    return tuple(range(1, b + 1))


# ---------------------------------------------------------------- validation

@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    ids: tuple = ()

    def to_json(self) -> dict:
        return {"code": self.code, "message": self.message, "ids": [str(i) for i in self.ids]}


class InvalidBook(ValueError):
    def __init__(self, report: list[Violation]):
        self.report = report
        super().__init__("; ".join(f"{v.code}: {v.message}" for v in report))


def validate(sob: SpinalOpenBook) -> list[Violation]:
    """Every violated structural invariant of ``sob``; empty means valid."""
    out: list[Violation] = []

    for kind, ids in (
        ("vertebra", [v.id for v in sob.vertebrae]),
        ("paper", [p.id for p in sob.papers]),
        ("torus", [t.id for t in sob.boundary_tori]),
        ("circle", sob.spine_circles()),
    ):
        dup = sorted(i for i, n in Counter(ids).items() if n > 1)
        if dup:
            out.append(Violation("ID", f"duplicate {kind} ids {dup}", tuple(dup)))

    for v in sob.vertebrae:
        s = v.surface
        if not s.orientable:
            out.append(Violation("VERT", f"vertebra {v.id} is not orientable", (v.id,)))
        if s.boundary < 1:
            out.append(Violation("VERT", f"vertebra {v.id} has empty boundary", (v.id,)))
        if len(v.circles) != s.boundary:
            out.append(Violation(
                "VERT", f"vertebra {v.id} lists {len(v.circles)} circles for {s.boundary} boundary components",
                (v.id,)))

    circles = set(sob.spine_circles())
    tori = {t.id for t in sob.boundary_tori}
    hits: Counter[Target] = Counter()

    for p in sob.papers:
        b = p.page.boundary
        if not p.page.orientable:
            out.append(Violation("SIGMA", f"paper {p.id} has a non-orientable page", (p.id,)))
        if sorted(p.sigma) != list(range(1, b + 1)):
            out.append(Violation("SIGMA", f"paper {p.id}: sigma is not a permutation of 1..{b}", (p.id,)))
        elif sorted(tuple(sorted(c)) for c in sigma_cycles(p.sigma)) != sorted(o.labels for o in p.orbits):
            out.append(Violation("ORBIT", f"paper {p.id}: orbits do not match the cycles of sigma", (p.id,)))
        if p.closed_pages and not sob.generalized:
            out.append(Violation("PAGE-1", f"paper {p.id} has closed pages in a non-generalized book", (p.id,)))
        for o in p.orbits:
            hits[o.target] += 1
            known = circles if o.target.kind == "circle" else tori
            if o.target.id not in known:
                out.append(Violation("INC-3", f"paper {p.id}: orbit {list(o.labels)} targets missing {o.target}",
                                     (p.id, str(o.target))))

    for c in sorted(circles):
        n = hits[Target.circle(c)]
        if n != 1:
            out.append(Violation("INC-1", f"spine circle {c} is the target of {n} orbits", (c,)))
    for t in sorted(tori):
        n = hits[Target.torus(t)]
        if n != 1:
            out.append(Violation("INC-2", f"boundary torus {t} is the target of {n} orbits", (t,)))
    return out


def require_valid(sob: SpinalOpenBook) -> None:
    report = validate(sob)
    if report:
        raise InvalidBook(report)


# ---------------------------------------------------------------- queries

def incident_orbit(sob: SpinalOpenBook, target: Target) -> tuple[PaperComponent, Orbit]:
    found = [(p, o) for p in sob.papers for o in p.orbits if o.target == target]
    if not found:
        raise LookupError(f"no incident orbit at {target}")
    if len(found) > 1:
        raise LookupError(f"{len(found)} orbits are incident to {target}")
    return found[0]


def multiplicity(sob: SpinalOpenBook, target: Target) -> int:
    return incident_orbit(sob, target)[1].size


@dataclass(frozen=True)
class Adjacency:
    """Bipartite vertebra/paper incidence: one edge per spine-attached orbit."""

    vertebrae: tuple[int, ...]
    papers: tuple[int, ...]
    edges: tuple[tuple[int, int, int, int], ...]  # (vertebra, paper, circle, multiplicity)
    components: int

    @property
    def connected(self) -> bool:
        return self.components <= 1


def adjacency(sob: SpinalOpenBook) -> Adjacency:
    require_valid(sob)
    owner = sob.circle_owner()
    edges = sorted(
        (owner[o.target.id], p.id, o.target.id, o.size)
        for p in sob.papers for o in p.orbits if o.target.kind == "circle"
    )
    return Adjacency(
        tuple(v.id for v in sob.vertebrae), tuple(p.id for p in sob.papers), tuple(edges),
        len(connected_components(sob)),
    )


def connected_components(sob: SpinalOpenBook) -> list[set[tuple[str, int]]]:
    """Connected pieces of the book as sets of ("vertebra"|"paper"|"torus", id) nodes."""
    nodes = ([("vertebra", v.id) for v in sob.vertebrae] + [("paper", p.id) for p in sob.papers]
             + [("torus", t.id) for t in sob.boundary_tori])
    parent = {n: n for n in nodes}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    owner = sob.circle_owner()
    for p in sob.papers:
        for o in p.orbits:
            other = ("vertebra", owner.get(o.target.id)) if o.target.kind == "circle" else ("torus", o.target.id)
            if other in parent:
                parent[find(other)] = find(("paper", p.id))
    groups: dict = {}
    for n in nodes:
        groups.setdefault(find(n), set()).add(n)
    return sorted(groups.values(), key=lambda g: min(g))


def interior_paper_components(sob: SpinalOpenBook) -> list[int]:
    return [p.id for p in sob.papers if all(o.target.kind == "circle" for o in p.orbits)]


def adjacent_vertebrae(sob: SpinalOpenBook, pid: int) -> list[int]:
    owner = sob.circle_owner()
    return sorted({owner[o.target.id] for o in sob.paper(pid).orbits if o.target.kind == "circle"})


# ---------------------------------------------------------------- renumbering

def canonicalize(sob: SpinalOpenBook) -> SpinalOpenBook:
    """Dense zero-based ids in the existing order (vertebrae, then their circles
    in listed order, papers, tori)."""
    vmap = {v.id: i for i, v in enumerate(sob.vertebrae)}
    cmap = {c: i for i, c in enumerate(sob.spine_circles())}
    pmap = {p.id: i for i, p in enumerate(sob.papers)}
    tmap = {t.id: i for i, t in enumerate(sob.boundary_tori)}

    def retarget(t: Target) -> Target:
        table = cmap if t.kind == "circle" else tmap
        return Target(t.kind, table.get(t.id, t.id))

    return SpinalOpenBook(
        tuple(Vertebra(vmap[v.id], v.surface, tuple(cmap[c] for c in v.circles)) for v in sob.vertebrae),
        tuple(PaperComponent(pmap[p.id], p.page, p.sigma, tuple(Orbit(o.labels, retarget(o.target)) for o in p.orbits))
              for p in sob.papers),
        tuple(BoundaryTorus(tmap[t.id], t.framing) for t in sob.boundary_tori),
        sob.generalized,
        sob.notes,
    )


def fresh_id(used: Iterable[int]) -> int:
    used = list(used)
    return max(used) + 1 if used else 0
