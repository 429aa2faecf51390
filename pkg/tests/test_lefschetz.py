import random

import pytest
from hypothesis import given, settings, strategies as st

from spinalbook import zoo
from spinalbook.lefschetz import (CriticalPoint, HorizontalGroup, InvalidDescriptor, LefschetzDescriptor,
                                  boundary_sob, euler_total, is_allowable, problems)
from spinalbook.obstructions import is_lefschetz_amenable, is_symmetric, is_uniform
from spinalbook.sampling import random_lefschetz
from spinalbook.sob import multiplicity, validate
from spinalbook.surfaces import ANNULUS, DISK, Surface


def trivial(base, fiber, crit=()):
    """Product fibration: one degree-one group per fiber boundary label."""
    mults = ((1,),) * base.boundary
    return LefschetzDescriptor(base, fiber, tuple(crit),
                               tuple(HorizontalGroup((l,), base, mults) for l in range(1, fiber.boundary + 1)))


def test_allowability():
    assert is_allowable(trivial(DISK, ANNULUS))
    assert not is_allowable(trivial(DISK, ANNULUS, [CriticalPoint(True)]))
    assert is_allowable(trivial(DISK, ANNULUS, [CriticalPoint(False)] * 3))


def test_euler_total():
    assert euler_total(trivial(DISK, DISK)) == 1
    assert euler_total(trivial(DISK, ANNULUS, [CriticalPoint()])) == 1
    assert euler_total(trivial(ANNULUS, Surface(2, 3), [CriticalPoint()] * 0)) == 0


def test_boundary_of_disk_base_is_an_open_book():
    sob = boundary_sob(zoo.lefschetz_disk_annulus())
    assert [v.surface for v in sob.vertebrae] == [DISK, DISK]
    assert [p.page for p in sob.papers] == [ANNULUS]
    assert validate(sob) == [] and is_lefschetz_amenable(sob)


def test_boundary_of_trivial_annulus_family():
    sob = boundary_sob(trivial(ANNULUS, ANNULUS))
    assert [v.surface for v in sob.vertebrae] == [ANNULUS, ANNULUS]
    assert [p.page for p in sob.papers] == [ANNULUS, ANNULUS]
    assert is_symmetric(sob) and is_uniform(sob).base == ANNULUS
    sob = boundary_sob(trivial(ANNULUS, DISK))
    assert [v.surface for v in sob.vertebrae] == [ANNULUS]
    assert [p.page for p in sob.papers] == [DISK, DISK]


def test_double_cover_group():
    lf = LefschetzDescriptor(ANNULUS, ANNULUS, (), (HorizontalGroup((1, 2), ANNULUS, ((2,), (2,))),))
    sob = boundary_sob(lf)
    assert all(p.sigma == (2, 1) for p in sob.papers)
    assert all(multiplicity(sob, o.target) == 2 for p in sob.papers for o in p.orbits)


def test_invalid_descriptors():
    assert problems(LefschetzDescriptor(Surface(1, 0), DISK))
    bad = LefschetzDescriptor(DISK, ANNULUS, (), (HorizontalGroup((1,), DISK, ((1,),)),))
    assert any("partition" in p for p in problems(bad))
    wrong_chi = LefschetzDescriptor(DISK, DISK, (), (HorizontalGroup((1,), ANNULUS, ((1,),)),))
    assert any("chi" in p for p in problems(wrong_chi))
    # chi and boundary count fit, but no permutations realise these boundary types
    impossible = LefschetzDescriptor(Surface(0, 3), Surface(0, 4), (),
                                     (HorizontalGroup((1, 2, 3, 4), Surface(0, 6), ((2, 2), (2, 2), (3, 1))),))
    assert any("no connected" in p for p in problems(impossible))
    with pytest.raises(InvalidDescriptor):
        boundary_sob(impossible)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_boundary_is_uniform_without_branching(seed):
    lf = random_lefschetz(random.Random(seed))
    sob = boundary_sob(lf)
    assert validate(sob) == [] and not sob.boundary_tori
    assert all(p.page == lf.fiber for p in sob.papers)
    res = is_uniform(sob)
    assert res and res.base == lf.base
    assert all(not c.branch_points for c in res.certificates.values())
    own = next(c for c in res.admissible if c.base == lf.base)
    assert own.total_branching == 0


def test_amenability_looks_at_every_admissible_base():
    # a genus-two double cover of a one-holed-twice torus is also a branched
    # cover of the annulus, so quantifying over all bases rejects it
    lf = LefschetzDescriptor(Surface(1, 2), Surface(0, 2), (),
                             (HorizontalGroup((1, 2), Surface(2, 2), ((2,), (2,))),))
    sob = boundary_sob(lf)
    assert is_uniform(sob).base == Surface(1, 2)
    res = is_lefschetz_amenable(sob)
    assert not res and res.witness["base"] == "(g0,b2)" and res.witness["branching"] == 4
