"""Random valid instances for property tests and experiment scripts."""

from __future__ import annotations

import random
from typing import Optional

from . import perms as P
from .circle_bundles import MulticurveData, OneSided, Region, TwoSided
from .covers import CoverSpec
from .lefschetz import CriticalPoint, HorizontalGroup, LefschetzDescriptor
from .sob import BoundaryTorus, Orbit, PaperComponent, SpinalOpenBook, Target, Vertebra
from .surfaces import Surface, euler


def _perm_with_cycles(rng: random.Random, sizes: list[int]) -> tuple[int, ...]:
    """Random 1-based permutation whose cycles have the given sizes."""
    labels = list(range(1, sum(sizes) + 1))
    rng.shuffle(labels)
    sigma = [0] * len(labels)
    start = 0
    for m in sizes:
        cyc = labels[start:start + m]
        for i, x in enumerate(cyc):
            sigma[x - 1] = cyc[(i + 1) % m]
        start += m
    return tuple(sigma)


def _composition(rng: random.Random, n: int, max_part: int) -> list[int]:
    out = []
    while n:
        m = rng.randint(1, min(n, max_part))
        out.append(m)
        n -= m
    return out


def random_book(rng: random.Random, max_vertebrae: int = 4, max_papers: int = 4, max_page_genus: int = 2,
                max_page_boundary: int = 4, max_orbit: int = 3, symmetric_bias: float = 0.5,
                tori: bool = False, max_vertebra_genus: int = 1) -> SpinalOpenBook:
    """A valid book. With probability ``symmetric_bias`` it is built symmetric
    (then closed); otherwise orbits are attached at random, and to boundary
    tori too when ``tori`` is set."""
    n_papers = rng.randint(1, max_papers)
    if rng.random() < symmetric_bias:
        return _random_symmetric(rng, n_papers, max_vertebrae, max_page_genus, max_page_boundary, max_orbit,
                                 max_vertebra_genus)
    papers_sizes = []
    for _ in range(n_papers):
        page = Surface(rng.randint(0, max_page_genus), rng.randint(1, max_page_boundary))
        papers_sizes.append((page, _composition(rng, page.boundary, max_orbit)))
    n_orbits = sum(len(s) for _, s in papers_sizes)
    n_tori = rng.randint(0, n_orbits - 1) if tori and n_orbits > 1 else 0
    slots = list(range(n_orbits))
    rng.shuffle(slots)
    torus_slots = set(slots[:n_tori])
    n_circles = n_orbits - n_tori
    nv = rng.randint(1, min(max_vertebrae, n_circles))
    circles = list(range(n_circles))
    owner = [rng.randrange(nv) for _ in circles]
    for v in range(nv):
        owner[v] = v  # every vertebra gets a circle
    rng.shuffle(owner)
    vertebrae = []
    for v in range(nv):
        cs = tuple(c for c in circles if owner[c] == v)
        vertebrae.append(Vertebra(v, Surface(rng.randint(0, max_vertebra_genus), len(cs)), cs))
    papers, slot, next_circle, next_torus = [], 0, 0, 0
    for pid, (page, sizes) in enumerate(papers_sizes):
        sigma = _perm_with_cycles(rng, sizes)
        orbits = []
        for cyc in _cycles_of(sigma):
            if slot in torus_slots:
                orbits.append(Orbit(cyc, Target.torus(next_torus)))
                next_torus += 1
            else:
                orbits.append(Orbit(cyc, Target.circle(next_circle)))
                next_circle += 1
            slot += 1
        papers.append(PaperComponent(pid, page, sigma, tuple(orbits)))
    tori_list = tuple(BoundaryTorus(i, rng.randint(-2, 2)) for i in range(next_torus))
    return SpinalOpenBook(tuple(vertebrae), tuple(papers), tori_list)


def _cycles_of(sigma):
    seen, out = set(), []
    for s in range(1, len(sigma) + 1):
        if s in seen:
            continue
        cyc, x = [], s
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = sigma[x - 1]
        out.append(tuple(cyc))
    return out


def _random_symmetric(rng, n_papers, max_vertebrae, max_page_genus, max_page_boundary, max_orbit,
                      max_vertebra_genus) -> SpinalOpenBook:
    page = Surface(rng.randint(0, max_page_genus), rng.randint(1, max_page_boundary))
    nv = rng.randint(1, min(max_vertebrae, page.boundary))
    # page boundary components per vertebra, each at least 1
    k = [1] * nv
    for _ in range(page.boundary - nv):
        k[rng.randrange(nv)] += 1
    circles_of: list[list[int]] = [[] for _ in range(nv)]
    papers, next_circle = [], 0
    for pid in range(n_papers):
        per_vertebra = [_composition(rng, k[v], max_orbit) for v in range(nv)]
        sizes = [m for parts in per_vertebra for m in parts]
        which = [v for v, parts in enumerate(per_vertebra) for _ in parts]
        sigma = _perm_with_cycles(rng, sizes)
        # _perm_with_cycles lays cycles out in ``sizes`` order; recover that order by size matching
        cycles = _cycles_of(sigma)
        pool = list(zip(sizes, which))
        orbits = []
        for cyc in cycles:
            i = next(i for i, (m, _) in enumerate(pool) if m == len(cyc))
            _, v = pool.pop(i)
            orbits.append(Orbit(cyc, Target.circle(next_circle)))
            circles_of[v].append(next_circle)
            next_circle += 1
        papers.append(PaperComponent(pid, page, sigma, tuple(orbits)))
    vertebrae = tuple(Vertebra(v, Surface(rng.randint(0, max_vertebra_genus), len(cs)), tuple(cs))
                      for v, cs in enumerate(circles_of))
    return SpinalOpenBook(vertebrae, tuple(papers))


def random_partition(rng: random.Random, k: int) -> tuple[int, ...]:
    return P.canonical_partition(_composition(rng, k, k))


def random_cover_spec(rng: random.Random, max_degree: int = 4, max_genus: int = 1,
                      max_generators: Optional[int] = None, unbranched: bool = True) -> CoverSpec:
    """Small random spec; ``max_generators`` caps 2g + b (the size of the
    unreduced search space)."""
    k = rng.randint(1, max_degree)
    if max_generators is None:
        max_generators = 3 if k == 4 else 4
    g = rng.randint(0, min(max_genus, (max_generators - 1) // 2))
    b = rng.randint(1, max_generators - 2 * g)
    types = tuple(random_partition(rng, k) for _ in range(b))
    return CoverSpec(Surface(g, b), k, types, unbranched=unbranched, require_connected=rng.random() < 0.8)


def random_transitive_tuple(rng: random.Random, base: Surface, k: int):
    """Handles and boundary monodromies of a random connected cover of ``base``."""
    allp = P.all_perms(k)
    if base.genus == 0 and base.boundary == 1 and k > 1:
        raise ValueError("a disk has no connected cover of degree > 1")
    while True:
        handles = tuple((rng.choice(allp), rng.choice(allp)) for _ in range(base.genus))
        cs = [rng.choice(allp) for _ in range(base.boundary - 1)]
        partial = P.product([P.commutator(a, b) for a, b in handles] + cs, k)
        cs.append(P.inverse(partial))
        gens = [x for h in handles for x in h] + cs
        if P.is_transitive(gens, k):
            return handles, tuple(cs)


def random_lefschetz(rng: random.Random, max_base_genus: int = 1, max_base_boundary: int = 3,
                     max_groups: int = 3, max_degree: int = 3) -> LefschetzDescriptor:
    base = Surface(rng.randint(0, max_base_genus), rng.randint(1, max_base_boundary))
    n_groups = rng.randint(1, max_groups)
    top = 1 if base.is_disk() else max_degree
    degrees = [rng.randint(1, top) for _ in range(n_groups)]
    labels = list(range(1, sum(degrees) + 1))
    rng.shuffle(labels)
    groups, start = [], 0
    for d in degrees:
        _, cs = random_transitive_tuple(rng, base, d)
        mults = tuple(P.cycle_type(c) for c in cs)
        total = Surface.from_euler(d * euler(base), sum(len(m) for m in mults))
        groups.append(HorizontalGroup(tuple(labels[start:start + d]), total, mults))
        start += d
    fiber = Surface(rng.randint(0, 1), sum(degrees))
    crit = tuple(CriticalPoint(rng.random() < 0.2) for _ in range(rng.randint(0, 3)))
    return LefschetzDescriptor(base, fiber, crit, tuple(groups))


def random_multicurve(rng: random.Random, max_regions: int = 4, max_extra: int = 2,
                      orientable: Optional[bool] = None) -> MulticurveData:
    """Random multicurve data whose gluings all reverse region orientations,
    so the bundle construction applies."""
    r = rng.randint(1, max_regions)
    orientable = rng.random() < 0.5 if orientable is None else orientable
    colour = [0] * r
    edges: list[tuple[int, int]] = []
    for v in range(1, r):
        u = rng.randrange(v)
        edges.append((u, v))
        colour[v] = 1 - colour[u]
    one_sided: list[int] = []
    for _ in range(rng.randint(0, max_extra)):
        u, v = rng.randrange(r), rng.randrange(r)
        if colour[u] != colour[v]:
            edges.append((u, v))
    if not orientable:
        choice = rng.random()
        same = [(u, v) for u in range(r) for v in range(r) if colour[u] == colour[v]]
        if choice < 0.5:
            one_sided.append(rng.randrange(r))
        else:
            edges.append(rng.choice(same))
        for _ in range(rng.randint(0, 1)):
            one_sided.append(rng.randrange(r))
    if not edges and not one_sided:
        # a single region needs some curve
        if orientable:
            return random_multicurve(rng, max_regions, max_extra, orientable)
        one_sided.append(0)
    sides: list[list[int]] = [[] for _ in range(r)]
    curves = []
    next_side = 0
    for u, v in edges:
        sides[u].append(next_side)
        sides[v].append(next_side + 1)
        curves.append(TwoSided(next_side, next_side + 1, True))
        next_side += 2
    for u in one_sided:
        sides[u].append(next_side)
        curves.append(OneSided(next_side))
        next_side += 1
    if any(not s for s in sides):
        return random_multicurve(rng, max_regions, max_extra, orientable)
    regions = tuple(Region(Surface(rng.randint(0, 1), len(s)), tuple(s)) for s in sides)
    order = list(range(len(curves)))
    rng.shuffle(order)
    return MulticurveData(orientable, regions, tuple(curves[i] for i in order), rng.choice([None, 0, 1, -2]))
