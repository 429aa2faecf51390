"""Classification predicates and fillability verdicts for spinal open books.

``symmetric`` compares how many page boundary components each paper family
puts on each vertebra; ``uniform`` asks for branched covers of one common base
surface realising those counts; ``amenable`` additionally forces every such
cover to be unbranched. Planar torsion (a non-symmetric book with an interior
genus-zero paper component) drives the verdict rules.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Optional

from .covers import (DEFAULT_MAX_DEGREE, Certificate, CoverSpec, SearchBoundExceeded,
                     exists_cover)
from .sob import SpinalOpenBook, adjacent_vertebrae, interior_paper_components, require_valid
from .surfaces import Surface, euler

DEFAULT_MAX_BASE_GENUS = 2


class Exactness(str, Enum):
    EXACT = "Exact"
    NOT_EXACT = "NotExact"
    UNKNOWN = "Unknown"


class Separation(str, Enum):
    OMEGA = "OmegaSeparating"
    FULLY_BY_DISK_RULE = "FullySeparatingByDiskRule"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class ExactnessFlags:
    """Whether the ambient closed 2-form is exact on each vertebra's neighbourhood."""

    flags: Mapping[int, Exactness]

    def __post_init__(self) -> None:
        object.__setattr__(self, "flags", {int(k): Exactness(v) for k, v in dict(self.flags).items()})

    @classmethod
    def disk_rule(cls, sob: SpinalOpenBook, overrides: Optional[Mapping[int, Exactness]] = None) -> "ExactnessFlags":
        """Disk vertebrae are solid tori, where every closed 2-form is exact."""
        flags = {v.id: Exactness.EXACT if v.surface.is_disk() else Exactness.UNKNOWN for v in sob.vertebrae}
        flags.update(overrides or {})
        return cls(flags)

    @classmethod
    def uniform(cls, sob: SpinalOpenBook, value: Exactness = Exactness.UNKNOWN) -> "ExactnessFlags":
        return cls({v.id: value for v in sob.vertebrae})

    def get(self, vid: int) -> Exactness:
        return self.flags.get(vid, Exactness.UNKNOWN)


# ---------------------------------------------------------------- symmetry

@dataclass(frozen=True)
class SymmetryResult:
    symmetric: bool
    reason: Optional[str] = None
    witness: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.symmetric


def page_counts(sob: SpinalOpenBook) -> dict[tuple[int, int], int]:
    """(paper id, vertebra id) -> number of page boundary components on that vertebra."""
    owner = sob.circle_owner()
    counts = {(p.id, v.id): 0 for p in sob.papers for v in sob.vertebrae}
    for p in sob.papers:
        for o in p.orbits:
            if o.target.kind == "circle":
                counts[p.id, owner[o.target.id]] += o.size
    return counts


def is_symmetric(sob: SpinalOpenBook) -> SymmetryResult:
    if sob.generalized:
        raise ValueError("symmetry undefined for generalized books")
    require_valid(sob)
    if sob.boundary_tori:
        return SymmetryResult(False, "boundary tori present", {"tori": [t.id for t in sob.boundary_tori]})
    papers = sob.papers
    for p in papers[1:]:
        if p.page != papers[0].page:
            return SymmetryResult(False, "pages not same type", {
                "papers": [papers[0].id, p.id], "pages": [str(papers[0].page), str(p.page)]})
    counts = page_counts(sob)
    for v in sob.vertebrae:
        for p in papers[1:]:
            a, b = counts[papers[0].id, v.id], counts[p.id, v.id]
            if a != b:
                return SymmetryResult(False, "unequal page counts at a vertebra", {
                    "vertebra": v.id, "papers": [papers[0].id, p.id], "counts": [a, b]})
    return SymmetryResult(True)


def brute_force_symmetry_oracle(sob: SpinalOpenBook) -> bool:
    """Symmetry by literal enumeration: every pair of papers, every vertebra,
    every page boundary label walked through sigma by hand."""
    if sob.generalized:
        raise ValueError("symmetry undefined for generalized books")
    if len(sob.boundary_tori) > 0:
        return False
    for p in sob.papers:
        for q in sob.papers:
            if (p.page.genus, p.page.boundary, p.page.orientable) != (q.page.genus, q.page.boundary, q.page.orientable):
                return False

    def label_target(paper, label):
        for orbit in paper.orbits:
            for x in orbit.labels:
                if x == label:
                    return orbit.target
        return None

    def on_vertebra(paper, vertebra):
        total = 0
        for label in range(1, paper.page.boundary + 1):
            t = label_target(paper, label)
            if t is not None and t.kind == "circle" and any(c == t.id for c in vertebra.circles):
                total += 1
        return total

    for v in sob.vertebrae:
        for p in sob.papers:
            for q in sob.papers:
                if on_vertebra(p, v) != on_vertebra(q, v):
                    return False
    return True


# ---------------------------------------------------------------- uniformity

@dataclass(frozen=True)
class BaseCandidate:
    base: Surface
    branching: dict[int, int]  # vertebra id -> total branching of its cover
    certificates: dict[int, Certificate]

    @property
    def total_branching(self) -> int:
        return sum(self.branching.values())


@dataclass(frozen=True)
class UniformResult:
    uniform: bool
    base: Optional[Surface] = None
    certificates: dict = field(default_factory=dict)
    admissible: tuple[BaseCandidate, ...] = ()
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.uniform


def cover_specs(sob: SpinalOpenBook, base: Surface) -> dict[int, CoverSpec]:
    """Per vertebra: the cover of ``base`` whose boundary over the j-th base
    circle has one component per circle attached to paper j, of that degree."""
    owner = sob.circle_owner()
    counts = page_counts(sob)
    out = {}
    for v in sob.vertebrae:
        k = counts[sob.papers[0].id, v.id]
        types = []
        for p in sob.papers:
            types.append(tuple(o.size for o in p.orbits
                               if o.target.kind == "circle" and owner[o.target.id] == v.id))
        b = k * euler(base) - euler(v.surface)
        out[v.id] = CoverSpec(base, k, tuple(types), unbranched=(b == 0), branching=None if b == 0 else b)
    return out


def admissible_bases(sob: SpinalOpenBook, max_base_genus: int = DEFAULT_MAX_BASE_GENUS,
                     max_degree: int = DEFAULT_MAX_DEGREE) -> list[BaseCandidate]:
    """Every common base (genus up to ``max_base_genus``) over which each
    vertebra is a branched cover with the required boundary behaviour."""
    counts = page_counts(sob)
    degrees = {v.id: counts[sob.papers[0].id, v.id] for v in sob.vertebrae}
    if any(k > max_degree for k in degrees.values()):
        raise SearchBoundExceeded(f"vertebra degree {max(degrees.values())} exceeds the search bound {max_degree}")
    found = []
    for g0 in range(max_base_genus + 1):
        base = Surface(g0, len(sob.papers))
        # Riemann-Hurwitz: branching must be non-negative
        if any(degrees[v.id] * euler(base) < euler(v.surface) for v in sob.vertebrae):
            continue
        branching, certs = {}, {}
        for vid, spec in cover_specs(sob, base).items():
            res = exists_cover(spec, max_degree=max_degree, max_genus=max(max_base_genus, g0))
            if not res or res.cover_type != sob.vertebra(vid).surface:
                break
            branching[vid], certs[vid] = res.branching, res.certificate
        else:
            found.append(BaseCandidate(base, branching, certs))
    return found


def is_uniform(sob: SpinalOpenBook, max_base_genus: int = DEFAULT_MAX_BASE_GENUS) -> UniformResult:
    """Uniformity. Among admissible bases the one needing the least total
    branching (then the least genus) is reported."""
    sym = is_symmetric(sob)
    if not sym:
        return UniformResult(False, reason="not symmetric")
    if not sob.papers:
        return UniformResult(False, reason="no paper components")
    cands = admissible_bases(sob, max_base_genus)
    if not cands:
        return UniformResult(False, reason=f"no common base of genus <= {max_base_genus}")
    best = min(cands, key=lambda c: (c.total_branching, c.base.genus))
    return UniformResult(True, best.base, best.certificates, tuple(cands))


@dataclass(frozen=True)
class AmenabilityResult:
    amenable: bool
    witness: Optional[dict] = None
    uniform: Optional[UniformResult] = None

    def __bool__(self) -> bool:
        return self.amenable


def is_lefschetz_amenable(sob: SpinalOpenBook, max_base_genus: int = DEFAULT_MAX_BASE_GENUS) -> AmenabilityResult:
    """Uniform, and no admissible base forces a branch point anywhere."""
    uni = is_uniform(sob, max_base_genus)
    if not uni:
        return AmenabilityResult(False, {"reason": uni.reason}, uni)
    for cand in uni.admissible:
        for vid, b in sorted(cand.branching.items()):
            if b:
                return AmenabilityResult(False, {"base": str(cand.base), "vertebra": vid, "branching": b}, uni)
    return AmenabilityResult(True, None, uni)


# ---------------------------------------------------------------- torsion

@dataclass(frozen=True)
class TorsionWitness:
    order: int
    piece: int
    adjacent_spines: tuple[int, ...]
    separating: Separation

    def to_json(self) -> dict:
        return {"order": self.order, "piece": self.piece, "adjacent_spines": list(self.adjacent_spines),
                "separating": self.separating.value}


def _separation(sob: SpinalOpenBook, adjacent: list[int], flags: ExactnessFlags) -> Separation:
    if all(sob.vertebra(v).surface.is_disk() for v in adjacent):
        return Separation.FULLY_BY_DISK_RULE
    if all(flags.get(v) is Exactness.EXACT for v in adjacent):
        return Separation.OMEGA
    return Separation.UNKNOWN


def planar_pieces(sob: SpinalOpenBook, flags: ExactnessFlags) -> list[TorsionWitness]:
    """Interior paper components with genus-zero pages, as candidate witnesses."""
    out = []
    for pid in interior_paper_components(sob):
        page = sob.paper(pid).page
        if page.is_planar() and page.boundary >= 1:
            adj = adjacent_vertebrae(sob, pid)
            out.append(TorsionWitness(page.boundary - 1, pid, tuple(adj), _separation(sob, adj, flags)))
    return sorted(out, key=lambda w: (w.order, w.piece))


def find_planar_torsion(sob: SpinalOpenBook, flags: Optional[ExactnessFlags] = None) -> Optional[TorsionWitness]:
    """Least-order planar torsion witness (ties: smallest paper id), or None."""
    if sob.generalized:
        raise ValueError("planar torsion is only defined for non-generalized books")
    flags = flags or ExactnessFlags.disk_rule(sob)
    if is_symmetric(sob):
        return None
    pieces = planar_pieces(sob, flags)
    return pieces[0] if pieces else None


# ---------------------------------------------------------------- verdicts

OVERTWISTED = "Overtwisted"
NOT_STRONGLY_FILLABLE = "NotStronglyFillable"
NOT_WEAKLY_FILLABLE = "NotWeaklyFillable"
NOT_WEAKLY_FILLABLE_FOR_CLASS = "NotWeaklyFillableForThisClass"
NO_NONSEPARATING_EMBEDDING = "NoNonSeparatingContactEmbedding"
NO_DISCONNECTED_SEMIFILLING = "NoDisconnectedSemifilling"

VERDICT_ORDER = (OVERTWISTED, NOT_STRONGLY_FILLABLE, NOT_WEAKLY_FILLABLE, NOT_WEAKLY_FILLABLE_FOR_CLASS,
                 NO_NONSEPARATING_EMBEDDING, NO_DISCONNECTED_SEMIFILLING)

CITATIONS = {
    OVERTWISTED: "planar 0-torsion <=> overtwisted",
    NOT_STRONGLY_FILLABLE: "planar torsion => not strongly fillable",
    NOT_WEAKLY_FILLABLE: "fully separating planar torsion (or overtwisted) => not weakly fillable",
    NOT_WEAKLY_FILLABLE_FOR_CLASS: "Omega-separating planar torsion => no weak filling with [omega|M] = [Omega]",
    NO_NONSEPARATING_EMBEDDING: "separating partially planar domain => no non-separating embedding",
    NO_DISCONNECTED_SEMIFILLING: "separating partially planar domain => no semifilling with disconnected boundary",
}


@dataclass(frozen=True)
class Verdict:
    verdict: str
    witness: dict
    citation: str

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "witness": self.witness, "citation": self.citation}


def verdict(sob: SpinalOpenBook, flags: Optional[ExactnessFlags] = None) -> list[Verdict]:
    """All obstructions the torsion rules certify, in a fixed order."""
    flags = flags or ExactnessFlags.disk_rule(sob)
    if sob.generalized:
        raise ValueError("verdicts are only defined for non-generalized books")
    if is_symmetric(sob):
        return []
    pieces = planar_pieces(sob, flags)
    if not pieces:
        return []
    best = pieces[0]
    fully = next((w for w in pieces if w.separating is Separation.FULLY_BY_DISK_RULE), None)
    omega = next((w for w in pieces if w.separating is Separation.OMEGA), None)
    separated = fully or omega
    out: dict[str, dict] = {}
    if best.order == 0:
        out[OVERTWISTED] = best.to_json()
        out[NOT_WEAKLY_FILLABLE] = best.to_json()
    out[NOT_STRONGLY_FILLABLE] = best.to_json()
    if fully is not None:
        out.setdefault(NOT_WEAKLY_FILLABLE, fully.to_json())
    if omega is not None:
        out[NOT_WEAKLY_FILLABLE_FOR_CLASS] = omega.to_json()
    if separated is not None:
        out[NO_NONSEPARATING_EMBEDDING] = separated.to_json()
        out[NO_DISCONNECTED_SEMIFILLING] = separated.to_json()
    return [Verdict(name, out[name], CITATIONS[name]) for name in VERDICT_ORDER if name in out]
