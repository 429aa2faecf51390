"""Named example books, multicurves and Lefschetz descriptors.

The JSON files next to this module are generated from the builders below by
``scripts/build_zoo.py``; tests check that the two agree byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Callable

from ..circle_bundles import MulticurveData, OneSided, Region, TwoSided, build_sob
from ..lefschetz import HorizontalGroup, LefschetzDescriptor
from ..sob import Orbit, PaperComponent, SpinalOpenBook, Target, Vertebra
from ..surfaces import ANNULUS, DISK, Surface


def ob_s3() -> SpinalOpenBook:
    """The trivial open book of the 3-sphere: disk pages, one binding circle."""
    return SpinalOpenBook((Vertebra(0, DISK, (0,)),), (PaperComponent(0, DISK, (1,), (Orbit((1,), Target.circle(0)),)),))


def ot() -> SpinalOpenBook:
    """An annulus vertebra with a disk-page family on one side and a
    genus-one family on the other."""
    return SpinalOpenBook(
        (Vertebra(0, ANNULUS, (0, 1)),),
        (PaperComponent(0, DISK, (1,), (Orbit((1,), Target.circle(0)),)),
         PaperComponent(1, Surface(1, 1), (1,), (Orbit((1,), Target.circle(1)),))),
    )


def cb3_multicurve() -> MulticurveData:
    """A genus-two base cut by two curves into a one-holed torus, an annulus
    and another one-holed torus."""
    return MulticurveData(
        True,
        (Region(Surface(1, 1), (0,)), Region(ANNULUS, (1, 2)), Region(Surface(1, 1), (3,))),
        (TwoSided(0, 1, True), TwoSided(2, 3, True)),
    )


def cb3() -> SpinalOpenBook:
    return build_sob(cb3_multicurve())


def mobius_multicurve() -> MulticurveData:
    """Projective plane: a disk region glued to the core of a Moebius band."""
    return MulticurveData(False, (Region(DISK, (0,)),), (OneSided(0),))


def two_region_multicurve() -> MulticurveData:
    """Genus-two base split symmetrically by one separating curve."""
    return MulticurveData(True, (Region(Surface(1, 1), (0,)), Region(Surface(1, 1), (1,))), (TwoSided(0, 1, True),))


def lefschetz_disk_annulus() -> LefschetzDescriptor:
    """Disk base, annulus fiber, trivial horizontal boundary."""
    return LefschetzDescriptor(
        DISK, ANNULUS, (),
        (HorizontalGroup((1,), DISK, ((1,),)), HorizontalGroup((2,), DISK, ((1,),))))


@dataclass(frozen=True)
class ZooEntry:
    name: str
    kind: str  # "book", "multicurve" or "lefschetz"
    build: Callable
    expected: dict
    citation: str


ENTRIES = {
    "ob_s3": ZooEntry("ob_s3", "book", ob_s3,
                      {"symmetric": True, "uniform": True, "amenable": True, "torsion": None, "verdicts": []},
                      "ordinary open books are uniform and Lefschetz-amenable"),
    "cb3": ZooEntry("cb3", "book", cb3,
                    {"symmetric": False, "torsion_order": 1, "verdicts": ["NotStronglyFillable"]},
                    "three regions give planar 1-torsion"),
    "ot": ZooEntry("ot", "book", ot,
                   {"symmetric": False, "torsion_order": 0,
                    "verdicts": ["Overtwisted", "NotStronglyFillable", "NotWeaklyFillable"]},
                   "planar 0-torsion is overtwistedness"),
    "cb3_multicurve": ZooEntry("cb3_multicurve", "multicurve", cb3_multicurve,
                               {"book": "cb3"}, "circle bundle over a genus-two surface"),
    "mobius_multicurve": ZooEntry("mobius_multicurve", "multicurve", mobius_multicurve,
                                  {"multiplicity": 2}, "one-sided curve gives a doubly covered circle"),
    "two_region_multicurve": ZooEntry("two_region_multicurve", "multicurve", two_region_multicurve,
                                      {"symmetric": True}, "two regions on an orientable base are symmetric"),
    "lefschetz_disk_annulus": ZooEntry("lefschetz_disk_annulus", "lefschetz", lefschetz_disk_annulus,
                                       {"vertebrae": 2}, "boundary of a Lefschetz fibration over the disk"),
}


def path(name: str):
    return resources.files(__name__).joinpath(f"{name}.json")


def load_text(name: str) -> str:
    return path(name).read_text()


def expected_classify_path(name: str):
    return resources.files(__name__).joinpath("expected", f"{name}.classify.json")
