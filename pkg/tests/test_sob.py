import random

import pytest
from hypothesis import given, settings, strategies as st

from spinalbook import zoo
from spinalbook.io import sob_from_json, sob_to_json
from spinalbook.sampling import random_book
from spinalbook.sob import (Orbit, PaperComponent, SpinalOpenBook, Target, Vertebra, adjacency,
                            interior_paper_components, make_paper, multiplicity, validate)
from spinalbook.surfaces import ANNULUS, DISK, Surface
from spinalbook.surgery import blow_up


def codes(sob):
    return {v.code for v in validate(sob)}


def test_ob_s3_is_valid():
    assert validate(zoo.ob_s3()) == []


def test_dangling_target_reports_inc3_and_inc1():
    ob = zoo.ob_s3()
    paper = PaperComponent(0, DISK, (1,), (Orbit((1,), Target.circle(5)),))
    broken = SpinalOpenBook(ob.vertebrae, (paper,))
    assert {"INC-3", "INC-1"} <= codes(broken)


def test_orbit_cycle_mismatch():
    paper = PaperComponent(0, ANNULUS, (2, 1), (Orbit((1,), Target.circle(0)), Orbit((2,), Target.circle(1))))
    sob = SpinalOpenBook((Vertebra(0, ANNULUS, (0, 1)),), (paper,))
    assert "ORBIT" in codes(sob)


def test_other_violations():
    assert "VERT" in codes(SpinalOpenBook((Vertebra(0, DISK, (0, 1)),), ()))
    doubled = SpinalOpenBook((Vertebra(0, DISK, (0,)),),
                             (make_paper(0, DISK, (1,), [Target.circle(0)]),
                              make_paper(1, DISK, (1,), [Target.circle(0)])))
    assert "INC-1" in codes(doubled)
    closed = SpinalOpenBook((), (PaperComponent(0, Surface(0, 0), (), ()),))
    assert "PAGE-1" in codes(closed)
    assert codes(SpinalOpenBook((), (PaperComponent(0, Surface(0, 0), (), ()),), generalized=True)) == set()
    assert "SIGMA" in codes(SpinalOpenBook((), (PaperComponent(0, DISK, (2,), ()),), generalized=True))
    torus = SpinalOpenBook((), (make_paper(0, DISK, (1,), [Target.torus(3)]),))
    assert "INC-3" in codes(torus)


def test_multiplicity():
    assert multiplicity(zoo.ob_s3(), Target.circle(0)) == 1
    assert multiplicity(zoo.cb3(), Target.circle(1)) == 1
    sob = SpinalOpenBook((Vertebra(0, DISK, (0,)),), (make_paper(0, PANTS3 := Surface(0, 3), (2, 3, 1),
                                                                 [Target.circle(0)]),))
    assert multiplicity(sob, Target.circle(0)) == 3
    with pytest.raises(LookupError, match="no incident orbit"):
        multiplicity(zoo.ob_s3(), Target.circle(9))


def test_adjacency_examples():
    a = adjacency(zoo.ob_s3())
    assert (len(a.vertebrae), len(a.papers), a.edges) == (1, 1, ((0, 0, 0, 1),))
    c = adjacency(zoo.cb3())
    assert (len(c.vertebrae), len(c.papers), len(c.edges)) == (3, 2, 4)
    assert c.connected
    assert adjacency(blow_up(zoo.ob_s3(), {0})).edges == ()


def test_interior_paper_components():
    assert interior_paper_components(zoo.ob_s3()) == [0]
    assert interior_paper_components(blow_up(zoo.ob_s3(), {0})) == []
    assert interior_paper_components(zoo.cb3()) == [0, 1]


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1), st.booleans())
def test_random_books_satisfy_invariants(seed, tori):
    sob = random_book(random.Random(seed), tori=tori)
    assert validate(sob) == []
    # orbit sizes account for every page boundary component
    assert sum(o.size for p in sob.papers for o in p.orbits) == sum(p.page.boundary for p in sob.papers)
    for c in sob.spine_circles():
        assert multiplicity(sob, Target.circle(c)) >= 1


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_round_trip_keeps_report(seed):
    rng = random.Random(seed)
    sob = random_book(rng, tori=True)
    # break it sometimes so the report is non-trivial
    if rng.random() < 0.5 and sob.papers:
        p = sob.papers[0]
        bad = PaperComponent(p.id, p.page, p.sigma, p.orbits[1:])
        sob = SpinalOpenBook(sob.vertebrae, (bad,) + sob.papers[1:], sob.boundary_tori)
    back = sob_from_json(sob_to_json(sob, canonical=False))
    assert back == sob
    assert validate(back) == validate(sob)
