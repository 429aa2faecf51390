"""Combinatorial spinal open books: data model, surgeries, classification
predicates, fillability verdicts and numeric checks of model forms."""

from .covers import CoverSpec, SearchBoundExceeded, exists_cover, minimal_branching, riemann_hurwitz_unbranched_ok
from .obstructions import (ExactnessFlags, TorsionWitness, brute_force_symmetry_oracle, find_planar_torsion,
                           is_lefschetz_amenable, is_symmetric, is_uniform, verdict)
from .sob import (BoundaryTorus, Orbit, PaperComponent, SpinalOpenBook, Target, Vertebra, adjacency,
                  interior_paper_components, multiplicity, validate)
from .surfaces import Surface, euler, same_type

__version__ = "0.1.0"

__all__ = [
    "BoundaryTorus", "CoverSpec", "ExactnessFlags", "Orbit", "PaperComponent", "SearchBoundExceeded",
    "SpinalOpenBook", "Surface", "Target", "TorsionWitness", "Vertebra", "adjacency",
    "brute_force_symmetry_oracle", "euler", "exists_cover", "find_planar_torsion", "interior_paper_components",
    "is_lefschetz_amenable", "is_symmetric", "is_uniform", "minimal_branching", "multiplicity",
    "riemann_hurwitz_unbranched_ok", "same_type", "validate", "verdict",
]
