import random

import pytest
from hypothesis import given, settings, strategies as st

from spinalbook import zoo
from spinalbook.circle_bundles import MulticurveData, Region, TwoSided, build_sob
from spinalbook.covers import SearchBoundExceeded
from spinalbook.obstructions import (NO_DISCONNECTED_SEMIFILLING, NO_NONSEPARATING_EMBEDDING, NOT_STRONGLY_FILLABLE,
                                     NOT_WEAKLY_FILLABLE, NOT_WEAKLY_FILLABLE_FOR_CLASS, OVERTWISTED, Exactness,
                                     ExactnessFlags, Separation, brute_force_symmetry_oracle, find_planar_torsion,
                                     is_lefschetz_amenable, is_symmetric, is_uniform, verdict)
from spinalbook.sampling import random_book
from spinalbook.sob import Orbit, PaperComponent, SpinalOpenBook, Target, Vertebra
from spinalbook.surfaces import ANNULUS, DISK, Surface
from spinalbook.surgery import blow_up

WEAK = {NOT_WEAKLY_FILLABLE, NOT_WEAKLY_FILLABLE_FOR_CLASS}


def names(vs):
    return [v.verdict for v in vs]


def two_vertebra_book(s0, s1):
    """Two vertebrae joined by two annulus families, each vertebra of degree one."""
    return build_sob(MulticurveData(True, (Region(s0, (0, 1)), Region(s1, (2, 3))),
                                    (TwoSided(0, 2), TwoSided(1, 3))))


def annulus_double_book():
    """One annulus vertebra whose two circles both meet a single annulus-page family."""
    paper = PaperComponent(0, ANNULUS, (1, 2), (Orbit((1,), Target.circle(0)), Orbit((2,), Target.circle(1))))
    return SpinalOpenBook((Vertebra(0, ANNULUS, (0, 1)),), (paper,))


# ---------------------------------------------------------------- symmetry

def test_symmetry_examples():
    assert is_symmetric(zoo.ob_s3())
    cb3 = is_symmetric(zoo.cb3())
    assert not cb3 and cb3.witness == {"vertebra": 0, "papers": [0, 1], "counts": [1, 0]}
    ot = is_symmetric(zoo.ot())
    assert not ot and ot.reason == "pages not same type"
    for name in ("ob_s3", "cb3", "ot"):
        sob = zoo.ENTRIES[name].build()
        assert brute_force_symmetry_oracle(sob) == bool(is_symmetric(sob))


def test_tori_break_symmetry_and_generalized_books_are_rejected():
    assert not is_symmetric(blow_up(zoo.ob_s3(), {0}))
    gen = SpinalOpenBook((), (PaperComponent(0, Surface(0, 0), (), ()),), generalized=True)
    with pytest.raises(ValueError, match="generalized"):
        is_symmetric(gen)
    with pytest.raises(ValueError, match="generalized"):
        brute_force_symmetry_oracle(gen)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_symmetry_matches_oracle(seed):
    sob = random_book(random.Random(seed), tori=seed % 5 == 0)
    assert bool(is_symmetric(sob)) == brute_force_symmetry_oracle(sob)


# ---------------------------------------------------------------- uniform, amenable

def test_uniform_examples():
    res = is_uniform(zoo.ob_s3())
    assert res and res.base == DISK and all(c.boundary == ((0,),) for c in res.certificates.values())
    g12 = Surface(1, 2)
    res = is_uniform(two_vertebra_book(g12, g12))
    assert res and res.base == g12
    assert not is_uniform(two_vertebra_book(g12, ANNULUS))
    assert not is_uniform(zoo.cb3()).uniform


def test_amenable_examples():
    assert is_lefschetz_amenable(zoo.ob_s3())
    assert is_lefschetz_amenable(two_vertebra_book(Surface(1, 2), Surface(1, 2)))
    res = is_lefschetz_amenable(annulus_double_book())
    assert res.uniform and not res
    assert res.witness["branching"] == 2 and res.witness["vertebra"] == 0


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_implication_chain(seed):
    sob = random_book(random.Random(seed), symmetric_bias=0.8, max_page_genus=1, max_page_boundary=3)
    try:
        amen = is_lefschetz_amenable(sob)
    except SearchBoundExceeded:
        return
    uni, sym = amen.uniform, is_symmetric(sob)
    assert not amen or uni
    assert not uni or sym
    if uni:
        for cand in uni.admissible:
            assert cand.base.boundary == len(sob.papers)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_degree_one_uniform_books_are_amenable(seed):
    rng = random.Random(seed)
    g = rng.randint(0, 2)
    b = rng.randint(1, 3)
    s = Surface(g, b)
    assert is_lefschetz_amenable(two_vertebra_book(Surface(g, 2), Surface(g, 2)))
    # single vertebra attached once to each of b identical families
    papers = tuple(PaperComponent(j, DISK, (1,), (Orbit((1,), Target.circle(j)),)) for j in range(b))
    sob = SpinalOpenBook((Vertebra(0, s, tuple(range(b))),), papers)
    res = is_lefschetz_amenable(sob)
    assert res and res.uniform.base == s


# ---------------------------------------------------------------- torsion and verdicts

def test_torsion_examples():
    assert find_planar_torsion(zoo.ob_s3()) is None
    w = find_planar_torsion(zoo.ot())
    assert (w.order, w.piece, w.separating) == (0, 0, Separation.UNKNOWN)
    w = find_planar_torsion(zoo.cb3())
    assert (w.order, w.piece, w.adjacent_spines) == (1, 0, (0, 1))
    exact = ExactnessFlags.uniform(zoo.cb3(), Exactness.EXACT)
    assert find_planar_torsion(zoo.cb3(), exact).separating is Separation.OMEGA


def test_disk_rule_separation():
    # three disk vertebrae: a pair of pants family and a disk family on the third
    pants = PaperComponent(0, Surface(0, 3), (1, 2, 3), tuple(Orbit((i + 1,), Target.circle(i)) for i in range(3)))
    disk = PaperComponent(1, DISK, (1,), (Orbit((1,), Target.circle(3)),))
    sob = SpinalOpenBook((Vertebra(0, DISK, (0,)), Vertebra(1, DISK, (1,)), Vertebra(2, ANNULUS, (2, 3))),
                         (pants, disk))
    w = find_planar_torsion(sob)
    assert w.piece == 1 and w.order == 0 and w.separating is Separation.UNKNOWN


def test_verdict_examples():
    assert verdict(zoo.ob_s3()) == []
    assert names(verdict(zoo.ot())) == [OVERTWISTED, NOT_STRONGLY_FILLABLE, NOT_WEAKLY_FILLABLE]
    assert names(verdict(zoo.cb3())) == [NOT_STRONGLY_FILLABLE]
    exact = names(verdict(zoo.cb3(), ExactnessFlags.uniform(zoo.cb3(), Exactness.EXACT)))
    assert exact[:2] == [NOT_STRONGLY_FILLABLE, NOT_WEAKLY_FILLABLE_FOR_CLASS]
    assert set(exact[2:]) == {NO_NONSEPARATING_EMBEDDING, NO_DISCONNECTED_SEMIFILLING}
    for v in verdict(zoo.ot()):
        assert v.witness["order"] == 0 and v.citation
        assert set(v.to_json()) == {"verdict", "witness", "citation"}


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(0, 2**32 - 1))
def test_not_exact_flags_never_add_weak_verdicts(seed, flag_seed):
    sob = random_book(random.Random(seed), symmetric_bias=0.2)
    rng = random.Random(flag_seed)
    flags = ExactnessFlags({v.id: rng.choice(list(Exactness)) for v in sob.vertebrae})
    before = set(names(verdict(sob, flags))) & WEAK
    worse = ExactnessFlags({vid: Exactness.NOT_EXACT if rng.random() < 0.5 else f
                            for vid, f in flags.flags.items()})
    after = set(names(verdict(sob, worse))) & WEAK
    assert after <= before


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_symmetric_books_have_no_torsion(seed):
    sob = random_book(random.Random(seed))
    if is_symmetric(sob):
        assert find_planar_torsion(sob) is None and verdict(sob) == []
    w = find_planar_torsion(sob)
    if w is not None:
        assert NOT_STRONGLY_FILLABLE in names(verdict(sob))
        assert (OVERTWISTED in names(verdict(sob))) == (w.order == 0)


def test_fully_separating_by_disk_rule():
    disk = PaperComponent(0, DISK, (1,), (Orbit((1,), Target.circle(0)),))
    ann = PaperComponent(1, ANNULUS, (1, 2), (Orbit((1,), Target.circle(1)), Orbit((2,), Target.circle(2))))
    sob = SpinalOpenBook(tuple(Vertebra(i, DISK, (i,)) for i in range(3)), (disk, ann))
    w = find_planar_torsion(sob)
    assert (w.piece, w.order, w.separating) == (0, 0, Separation.FULLY_BY_DISK_RULE)
    assert names(verdict(sob)) == [OVERTWISTED, NOT_STRONGLY_FILLABLE, NOT_WEAKLY_FILLABLE,
                                   NO_NONSEPARATING_EMBEDDING, NO_DISCONNECTED_SEMIFILLING]
