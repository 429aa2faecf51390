import pytest
from hypothesis import given, strategies as st

from spinalbook.surfaces import ANNULUS, DISK, PANTS, Surface, euler, euler_total, same_type


def test_euler_examples():
    assert euler(DISK) == 1
    assert euler(ANNULUS) == 0
    assert euler(PANTS) == -1


def test_non_orientable_euler():
    mobius = Surface(0, 1, orientable=False, crosscaps=1)
    assert euler(mobius) == 0
    assert euler(Surface(0, 0, orientable=False, crosscaps=2)) == 0


def test_same_type_examples():
    assert same_type(Surface(0, 1), Surface(0, 1))
    assert not same_type(Surface(0, 2), Surface(1, 2))
    assert same_type(Surface(1, 1), Surface(1, 1))


@pytest.mark.parametrize("kwargs", [
    dict(genus=-1), dict(boundary=-1), dict(orientable=True, crosscaps=1),
    dict(orientable=False, crosscaps=0), dict(genus=1, orientable=False, crosscaps=1),
])
def test_invalid_surfaces(kwargs):
    with pytest.raises(ValueError):
        Surface(**kwargs)


def test_from_euler():
    assert Surface.from_euler(0, 2) == ANNULUS
    assert Surface.from_euler(-2, 2) == Surface(1, 2)
    with pytest.raises(ValueError):
        Surface.from_euler(0, 1)
    with pytest.raises(ValueError):
        Surface.from_euler(3, 0)


surfaces = st.builds(Surface, st.integers(0, 4), st.integers(0, 5))


@given(st.lists(surfaces, max_size=5), st.lists(surfaces, max_size=5))
def test_euler_additive(a, b):
    assert euler_total(a + b) == euler_total(a) + euler_total(b)


@given(surfaces)
def test_one_handle_drops_euler_by_one(s):
    # a 1-handle joining two boundary circles of one surface: chi - 1, boundary - 1, genus + 1
    if s.boundary >= 2:
        assert euler(Surface(s.genus + 1, s.boundary - 1)) == euler(s) - 1


@given(surfaces, surfaces, surfaces)
def test_same_type_is_an_equivalence(a, b, c):
    assert same_type(a, a)
    assert same_type(a, b) == same_type(b, a)
    if same_type(a, b) and same_type(b, c):
        assert same_type(a, c)
