from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from torusfan import fixtures as fx
from torusfan.simplicial import (
    HomologyGroup,
    SimplicialComplex,
    StarCell,
    homology,
    is_connected,
    is_homology_sphere,
    is_pure,
    link,
    open_star_points,
    ridge_degrees,
    smith_diagonal,
)
from oracles import sympy_homology

TRIANGLE = fx.cycle(3)
PATH = SimplicialComplex.from_simplices([{1, 2}, {2, 3}])

COMPLEXES = {
    "triangle": TRIANGLE,
    "square": fx.cycle(4),
    "hexagon": fx.cycle(6),
    "path": PATH,
    "two_triangles": fx.two_triangles(),
    "tetrahedron": fx.simplex_boundary(3),
    "octahedron": fx.octahedron(),
    "icosahedron": fx.icosahedron(),
    "disk": fx.disk(),
    "simplex4": fx.simplex_boundary(4),
    "cp3_blowup": fx.blown_up_cp3().complex,
    "cp1_cubed": fx.cp1_cubed().complex,
}


def test_constructor_rejects_nested_facets():
    with pytest.raises(ValueError):
        SimplicialComplex(frozenset([frozenset({1, 2}), frozenset({1})]))
    assert SimplicialComplex.from_simplices([{1, 2}, {1}]).facets == {frozenset({1, 2})}


def test_link_examples():
    assert link(TRIANGLE, {1}).facets == {frozenset({2}), frozenset({3})}
    assert link(TRIANGLE, set()) == TRIANGLE
    oct_link = link(fx.octahedron(), {1})
    assert oct_link == SimplicialComplex.from_simplices([{2, 3}, {3, 5}, {5, 6}, {6, 2}])
    with pytest.raises(ValueError):
        link(TRIANGLE, {1, 2, 3})


def test_link_matches_coface_enumeration():
    K = fx.octahedron()
    for J in K.faces:
        expected = {I for I in K.faces if not (I & J) and (I | J) in K.faces}
        assert link(K, J).faces == frozenset(expected) | {frozenset()}


@pytest.mark.parametrize("name", sorted(COMPLEXES))
def test_iterated_link(name):
    K = COMPLEXES[name]
    for J1 in K.faces:
        L = link(K, J1)
        for J2 in L.faces:
            if not L.facets:
                continue
            assert link(L, J2).faces == link(K, J1 | J2).faces


def test_structure_checks():
    assert is_pure(TRIANGLE, 1) and is_connected(TRIANGLE)
    assert set(ridge_degrees(TRIANGLE).values()) == {2}
    two = fx.two_triangles()
    assert is_pure(two, 1) and not is_connected(two)
    assert ridge_degrees(PATH) == {frozenset({2}): 2, frozenset({1}): 1, frozenset({3}): 1}
    assert not is_pure(SimplicialComplex.from_simplices([{1, 2, 3}, {3, 4}]), 2)


def test_open_star_points():
    cells = list(open_star_points(TRIANGLE, 1))
    assert {c.base for c in cells} == {frozenset(), frozenset({2}), frozenset({3})}
    edge = StarCell(1, frozenset({2}))
    assert edge.point(0) == {1: 1}
    assert edge.point(Fraction(1, 2), {2: 1}) == {1: Fraction(1, 2), 2: Fraction(1, 2)}
    with pytest.raises(ValueError):
        edge.point(1)
    with pytest.raises(ValueError):
        list(open_star_points(TRIANGLE, 9))


@pytest.mark.parametrize("name, expected", [
    ("triangle", [HomologyGroup(1), HomologyGroup(1)]),
    ("octahedron", [HomologyGroup(1), HomologyGroup(0), HomologyGroup(1)]),
    ("two_triangles", [HomologyGroup(2), HomologyGroup(2)]),
    ("path", [HomologyGroup(1), HomologyGroup(0)]),
    ("disk", [HomologyGroup(1), HomologyGroup(0), HomologyGroup(0)]),
])
def test_homology_examples(name, expected):
    assert homology(COMPLEXES[name]) == expected


@pytest.mark.parametrize("name", sorted(COMPLEXES))
def test_homology_matches_sympy_snf(name):
    K = COMPLEXES[name]
    assert [(h.rank, h.torsion) for h in homology(K)] == sympy_homology(K)


@pytest.mark.parametrize("name", sorted(COMPLEXES))
def test_euler_characteristic(name):
    K = COMPLEXES[name]
    assert K.euler_characteristic() == sum((-1) ** k * h.rank for k, h in enumerate(homology(K)))


def test_torsion_projective_plane():
    # minimal 6-vertex triangulation of RP2
    rp2 = SimplicialComplex.from_simplices([
        {1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 2},
        {2, 3, 5}, {3, 4, 6}, {4, 5, 2}, {5, 6, 3}, {6, 2, 4}])
    assert homology(rp2) == [HomologyGroup(1), HomologyGroup(0, (2,)), HomologyGroup(0)]
    assert not is_homology_sphere(rp2, 2)


@given(st.lists(st.lists(st.integers(-5, 5), min_size=4, max_size=4), min_size=1, max_size=4))
def test_smith_diagonal_divisibility(m):
    d = smith_diagonal(m)
    assert all(b % a == 0 for a, b in zip(d, d[1:]))


@pytest.mark.parametrize("name, d, expected", [
    ("triangle", 1, True),
    ("octahedron", 2, True),
    ("path", 1, False),
    ("tetrahedron", 2, True),
    ("icosahedron", 2, True),
    ("square", 1, True),
    ("disk", 2, False),
    ("two_triangles", 1, False),
    ("simplex4", 3, True),
    ("cp3_blowup", 2, True),
])
def test_is_homology_sphere(name, d, expected):
    assert is_homology_sphere(COMPLEXES[name], d) is expected


def test_zero_sphere():
    K = SimplicialComplex.from_simplices([{1}, {2}])
    assert is_homology_sphere(K, 0)
    assert not is_homology_sphere(SimplicialComplex.from_simplices([{1}]), 0)
