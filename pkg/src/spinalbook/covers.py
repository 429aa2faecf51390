"""Existence of (branched) covers of surfaces with boundary.

A degree-``k`` cover of a compact oriented surface of genus ``g`` with ``b``
boundary circles is a tuple ``(a_1, b_1, ..., a_g, b_g, c_1, ..., c_b)`` in
``S_k`` with ``prod [a_i, b_i] * prod c_j = 1``; ``c_j`` is the monodromy
around the j-th boundary circle, so its cycle type lists the degrees of the
cover's boundary circles over it. Interior branch points add further factors.
Connected covers are the transitive tuples.

The search is exhaustive but reduced:

* handle pairs are folded into a table of reachable (commutator product,
  orbit partition) states, one witness each;
* the first boundary monodromy is fixed up to conjugacy;
* in the unbranched case the last boundary monodromy is forced;
* with branching, a branch point of order ``r`` can always be split into
  ``r`` simple ones with the same orbits (and conversely), so the minimal
  total branching is a shortest path in the graph of (partial product,
  partition) states under right multiplication by transpositions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as cartesian
from typing import Optional

from . import perms as P
from .perms import Perm
from .surfaces import Surface, euler

DEFAULT_MAX_DEGREE = 5
DEFAULT_MAX_GENUS = 3


class SearchBoundExceeded(Exception):
    """The question is outside the brute-force bounds; this is not a 'no'."""


@dataclass(frozen=True)
class CoverSpec:
    base: Surface
    degree: int
    boundary_types: tuple[tuple[int, ...], ...]
    unbranched: bool = True
    require_connected: bool = True
    # exact total branching required when branching is allowed; None minimises it
    branching: Optional[int] = None

    def __post_init__(self) -> None:
        types = tuple(P.canonical_partition(t) for t in self.boundary_types)
        object.__setattr__(self, "boundary_types", types)
        if self.degree < 1:
            raise ValueError("degree must be positive")
        if not self.base.orientable or self.base.boundary < 1:
            raise ValueError("base must be orientable with nonempty boundary")
        if len(types) != self.base.boundary:
            raise ValueError(f"{len(types)} boundary types for {self.base.boundary} boundary circles")
        for t in types:
            if sum(t) != self.degree or any(m < 1 for m in t):
                raise ValueError(f"{list(t)} is not a partition of {self.degree}")
        if self.branching is not None and (self.branching < 0 or self.unbranched and self.branching):
            raise ValueError("inconsistent branching requirement")


@dataclass(frozen=True)
class Certificate:
    handles: tuple[tuple[Perm, Perm], ...]
    boundary: tuple[Perm, ...]
    branch_points: tuple[Perm, ...] = ()

    @property
    def degree(self) -> int:
        return len(self.boundary[0])

    def generators(self) -> list[Perm]:
        return [x for h in self.handles for x in h] + list(self.boundary) + list(self.branch_points)

    def relation(self) -> Perm:
        n = self.degree
        factors = [P.commutator(a, b) for a, b in self.handles] + list(self.boundary) + list(self.branch_points)
        return P.product(factors, n)

    def total_branching(self) -> int:
        return sum(P.branching(d) for d in self.branch_points)

    def is_transitive(self) -> bool:
        return P.is_transitive(self.generators(), self.degree)

    def to_json(self) -> dict:
        return {
            "handles": [[P.cycle_string(a), P.cycle_string(b)] for a, b in self.handles],
            "boundary": [P.cycle_string(c) for c in self.boundary],
            "branch_points": [P.cycle_string(d) for d in self.branch_points],
        }


@dataclass(frozen=True)
class CoverResult:
    exists: bool
    certificate: Optional[Certificate] = None
    cover_type: Optional[Surface] = None
    branching: Optional[int] = None

    def __bool__(self) -> bool:
        return self.exists


def riemann_hurwitz_unbranched_ok(base: Surface, k: int, candidate_total: Surface) -> bool:
    return euler(candidate_total) == k * euler(base)


def cover_surface(spec: CoverSpec, total_branching: int) -> Optional[Surface]:
    """Total space of a connected cover with the given branching, if it exists."""
    chi = spec.degree * euler(spec.base) - total_branching
    b = sum(len(t) for t in spec.boundary_types)
    try:
        return Surface.from_euler(chi, b)
    except ValueError:
        return None


# ---------------------------------------------------------------- search tables

@lru_cache(maxsize=None)
def _handle_states(k: int, g: int) -> dict[tuple[Perm, tuple[int, ...]], tuple[tuple[Perm, Perm], ...]]:
    """(prod of g commutators, orbit partition of the handle generators) -> witness."""
    if g == 0:
        return {(P.identity(k), P.discrete_partition(k)): ()}
    if g == 1:
        out: dict = {}
        for a in P.all_perms(k):
            for b in P.all_perms(k):
                key = (P.commutator(a, b), P.orbits_partition((a, b), k))
                out.setdefault(key, ((a, b),))
        return out
    out = {}
    one = sorted(_handle_states(k, 1).items())
    for (x1, blk1), w1 in sorted(_handle_states(k, g - 1).items()):
        for (x2, blk2), w2 in one:
            out.setdefault((P.mul(x1, x2), P.join(blk1, blk2)), w1 + w2)
    return out


@lru_cache(maxsize=None)
def _transposition_bfs(k: int, blocks: tuple[int, ...]) -> dict:
    """Shortest transposition words from (identity, blocks).

    Maps each reachable state (product, partition) to (distance, parent state,
    last transposition).
    """
    start = (P.identity(k), blocks)
    seen = {start: (0, None, None)}
    frontier = [start]
    while frontier:
        nxt = []
        for state in frontier:
            dist = seen[state][0]
            prod, part = state
            for t in P.transpositions(k):
                new = (P.mul(prod, t), P.join_perm(part, t))
                if new not in seen:
                    seen[new] = (dist + 1, state, t)
                    nxt.append(new)
        frontier = nxt
    return seen


@lru_cache(maxsize=None)
def _best_endpoints(k: int, blocks: tuple[int, ...], connected: bool) -> dict:
    """product -> the nearest admissible end state of the BFS from ``blocks``."""
    table = _transposition_bfs(k, blocks)
    best: dict = {}
    for state in sorted(table, key=lambda s: (table[s][0], s)):
        prod, part = state
        if connected and max(part, default=0) != 0:
            continue
        best.setdefault(prod, state)
    return best


def _shortest_factorization(k: int, blocks: tuple[int, ...], target: Perm, connected: bool):
    """Shortest transposition word with product ``target`` that, together with
    ``blocks``, is transitive (if ``connected``). Returns the word or None."""
    table = _transposition_bfs(k, blocks)
    best = _best_endpoints(k, blocks, connected).get(target)
    if best is None:
        return None
    word = []
    state = best
    while table[state][1] is not None:
        word.append(table[state][2])
        state = table[state][1]
    return tuple(reversed(word))


# ---------------------------------------------------------------- main entry

def exists_cover(spec: CoverSpec, max_degree: int = DEFAULT_MAX_DEGREE,
                 max_genus: int = DEFAULT_MAX_GENUS) -> CoverResult:
    """Decide whether the cover described by ``spec`` exists.

    In branched mode the total branching is minimised, or, when
    ``spec.branching`` is set, required to equal it exactly.

    Raises SearchBoundExceeded when degree or base genus is above the bounds.
    """
    k, g = spec.degree, spec.base.genus
    if k > max_degree:
        raise SearchBoundExceeded(f"degree {k} exceeds the search bound {max_degree}")
    if g > max_genus:
        raise SearchBoundExceeded(f"base genus {g} exceeds the search bound {max_genus}")
    if spec.unbranched:
        return _search_unbranched(spec)
    return _search_branched(spec)


def _search_unbranched(spec: CoverSpec) -> CoverResult:
    k = spec.degree
    types = spec.boundary_types
    # sign obstruction: commutators are even
    if sum(k - len(t) for t in types) % 2:
        return CoverResult(False)
    classes = [P.conjugacy_class(t) for t in types]
    first = P.representative(types[0])
    for (x, blocks), handles in sorted(_handle_states(k, spec.base.genus).items()):
        if len(types) == 1:
            middles = [()]
        else:
            middles = cartesian(*classes[1:-1])
        for middle in middles:
            cs = (P.inverse(x),) if len(types) == 1 else (first, *middle)
            partial = P.product((x, *cs), k)
            last = P.inverse(partial)
            if len(types) > 1:
                if P.cycle_type(last) != types[-1]:
                    continue
                cs = cs + (last,)
            elif P.cycle_type(cs[0]) != types[0]:
                continue
            if spec.require_connected:
                part = blocks
                for c in cs:
                    part = P.join_perm(part, c)
                if max(part) != 0:
                    continue
            cert = Certificate(handles, cs)
            transitive = cert.is_transitive()
            return CoverResult(True, cert, cover_surface(spec, 0) if transitive else None, 0)
    return CoverResult(False)


def _search_branched(spec: CoverSpec) -> CoverResult:
    k = spec.degree
    types = spec.boundary_types
    parity = sum(k - len(t) for t in types) % 2
    wanted = spec.branching
    if wanted is not None:
        if wanted % 2 != parity:
            return CoverResult(False)
        if k == 1 and wanted:
            return CoverResult(False)
    classes = [P.conjugacy_class(t) for t in types]
    first = P.representative(types[0])

    best = None  # (branching, handles, cs, word)
    for (x, blocks), handles in sorted(_handle_states(k, spec.base.genus).items()):
        for rest in cartesian(*classes[1:]):
            cs = (first, *rest)
            part = blocks
            for c in cs:
                part = P.join_perm(part, c)
            target = P.inverse(P.product((x, *cs), k))
            word = _shortest_factorization(k, part, target, spec.require_connected)
            if word is None:
                continue
            n = len(word)
            if wanted is not None:
                if n <= wanted:
                    best = (n, handles, cs, word)
                    break
            elif best is None or n < best[0]:
                best = (n, handles, cs, word)
                if n == parity:
                    break
        else:
            continue
        break

    if best is None:
        return CoverResult(False)
    n, handles, cs, word = best
    if wanted is not None and wanted > n:
        # pad with cancelling pairs of simple branch points; the partition is
        # already final, so this changes neither product nor orbits
        t = P.transpositions(k)[0]
        word = word + (t,) * (wanted - n)
        n = wanted
    cert = Certificate(handles, cs, word)
    transitive = cert.is_transitive()
    return CoverResult(True, cert, cover_surface(spec, n) if transitive else None, n)


def minimal_branching(base: Surface, degree: int, boundary_types, require_connected: bool = True,
                      **bounds) -> Optional[int]:
    res = exists_cover(CoverSpec(base, degree, tuple(boundary_types), unbranched=False,
                                 require_connected=require_connected), **bounds)
    return res.branching if res.exists else None
