"""Compact surfaces up to diffeomorphism.

A compact surface is determined by orientability, genus (or number of
crosscaps) and the number of boundary circles, and that is all we keep.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class Surface:
    """Diffeomorphism type of a compact, connected surface.

    Orientable surfaces carry ``genus``; non-orientable ones carry
    ``crosscaps >= 1`` and have ``genus == 0``.
    """

    genus: int = 0
    boundary: int = 0
    orientable: bool = True
    crosscaps: int = 0

    def __post_init__(self) -> None:
        if self.genus < 0 or self.boundary < 0 or self.crosscaps < 0:
            raise ValueError(f"negative surface data: {self!r}")
        if self.orientable and self.crosscaps:
            raise ValueError("orientable surfaces have no crosscaps")
        if not self.orientable:
            if self.crosscaps < 1:
                raise ValueError("non-orientable surfaces need crosscaps >= 1")
            if self.genus:
                raise ValueError("non-orientable surfaces are described by crosscaps, not genus")

    @classmethod
    def from_euler(cls, chi: int, boundary: int) -> "Surface":
        """Orientable surface with the given Euler characteristic and boundary count."""
        twice_genus = 2 - chi - boundary
        if twice_genus < 0 or twice_genus % 2:
            raise ValueError(f"no orientable surface with chi={chi}, boundary={boundary}")
        return cls(genus=twice_genus // 2, boundary=boundary)

    def euler(self) -> int:
        return euler(self)

    def is_disk(self) -> bool:
        return self.orientable and self.genus == 0 and self.boundary == 1

    def is_planar(self) -> bool:
        return self.orientable and self.genus == 0

    def __str__(self) -> str:
        if self.orientable:
            return f"(g{self.genus},b{self.boundary})"
        return f"(c{self.crosscaps},b{self.boundary})"


DISK = Surface(0, 1)
ANNULUS = Surface(0, 2)
PANTS = Surface(0, 3)
SPHERE = Surface(0, 0)


def euler(s: Surface) -> int:
    if s.orientable:
        return 2 - 2 * s.genus - s.boundary
    return 2 - s.crosscaps - s.boundary


def same_type(a: Surface, b: Surface) -> bool:
    return a == b


def euler_total(surfaces) -> int:
    """Euler characteristic of a disjoint union."""
    return sum(euler(s) for s in surfaces)
