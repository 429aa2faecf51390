"""Small-degree permutation helpers.

Permutations are tuples in one-line notation on ``0..n-1``. Products are
read left to right: ``mul(p, q)`` applies ``p`` first, then ``q``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterable, Sequence

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def mul(p: Perm, q: Perm) -> Perm:
    return tuple(q[i] for i in p)


def product(perms: Iterable[Perm], n: int) -> Perm:
    out = identity(n)
    for p in perms:
        out = mul(out, p)
    return out


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def commutator(a: Perm, b: Perm) -> Perm:
    return product((inverse(a), inverse(b), a, b), len(a))


def is_perm(p: Sequence[int], n: int) -> bool:
    return len(p) == n and sorted(p) == list(range(n))


def cycles(p: Perm) -> list[tuple[int, ...]]:
    """Cycles of ``p``, each starting at its least element, sorted by that element."""
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = p[i]
        out.append(tuple(cyc))
    return out


def cycle_type(p: Perm) -> tuple[int, ...]:
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def num_cycles(p: Perm) -> int:
    return len(cycles(p))


def branching(p: Perm) -> int:
    """Branching order of a local monodromy: ``n - #cycles``."""
    return len(p) - num_cycles(p)


def canonical_partition(parts: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(parts, reverse=True))


def representative(ctype: Sequence[int]) -> Perm:
    """The permutation with consecutive cycles of the given lengths."""
    n = sum(ctype)
    p = list(range(n))
    start = 0
    for m in canonical_partition(ctype):
        for i in range(m):
            p[start + i] = start + (i + 1) % m
        start += m
    return tuple(p)


@lru_cache(maxsize=None)
def all_perms(n: int) -> tuple[Perm, ...]:
    return tuple(permutations(range(n)))


@lru_cache(maxsize=None)
def conjugacy_class(ctype: tuple[int, ...]) -> tuple[Perm, ...]:
    ctype = canonical_partition(ctype)
    return tuple(p for p in all_perms(sum(ctype)) if cycle_type(p) == ctype)


@lru_cache(maxsize=None)
def transpositions(n: int) -> tuple[Perm, ...]:
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            p = list(range(n))
            p[i], p[j] = j, i
            out.append(tuple(p))
    return tuple(out)


# --- set partitions of the points, stored as restricted growth strings ---

def discrete_partition(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def normalize_blocks(labels: Sequence[int]) -> tuple[int, ...]:
    relabel: dict[int, int] = {}
    return tuple(relabel.setdefault(x, len(relabel)) for x in labels)


def join_perm(blocks: tuple[int, ...], p: Perm) -> tuple[int, ...]:
    """Coarsest common coarsening of ``blocks`` and the cycles of ``p``."""
    # restricted growth strings: block ids are < n, so they index ``parent``
    parent = list(range(len(blocks)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in enumerate(p):
        ri, rj = find(blocks[i]), find(blocks[j])
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
    return normalize_blocks([find(b) for b in blocks])


def join(blocks: tuple[int, ...], other: tuple[int, ...]) -> tuple[int, ...]:
    parent = list(range(len(blocks)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for labels in (blocks, other):
        first: dict[int, int] = {}
        for i, b in enumerate(labels):
            if b in first:
                ri, rj = find(first[b]), find(i)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
            else:
                first[b] = i
    return normalize_blocks([find(i) for i in range(len(blocks))])


def orbits_partition(gens: Iterable[Perm], n: int) -> tuple[int, ...]:
    blocks = discrete_partition(n)
    for g in gens:
        blocks = join_perm(blocks, g)
    return blocks


def is_transitive(gens: Iterable[Perm], n: int) -> bool:
    return n == 0 or max(orbits_partition(gens, n)) == 0


# --- 1-based one-line notation used for page boundary labels ---

def to_one_based(p: Perm) -> tuple[int, ...]:
    return tuple(i + 1 for i in p)


def from_one_based(p: Sequence[int]) -> Perm:
    return tuple(i - 1 for i in p)


def cycle_string(p: Perm) -> str:
    """Cycle notation with 1-based points, fixed points omitted; ``()`` for the identity."""
    parts = ["(" + " ".join(str(i + 1) for i in c) + ")" for c in cycles(p) if len(c) > 1]
    return "".join(parts) or "()"
