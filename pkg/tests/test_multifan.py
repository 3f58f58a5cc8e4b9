import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from torusfan import exactmath as em
from torusfan import fixtures as fx
from torusfan.multifan import (
    MultiFan,
    angular_order,
    chamber_counts_2d,
    classify,
    cone_contains,
    intersect_simplicial_cones,
    is_complete,
    is_generic,
    is_nonsingular,
    is_ordinary_fan,
    restrict,
    sample_generic,
    stellar_subdivide,
    todd_genus,
    todd_samples,
    todd_v_independence,
    validate,
)
from oracles import box, in_cone_lattice

F0 = fx.line()
F1 = fx.projective_plane()
F2 = fx.double_wrap()
F3 = fx.hirzebruch(2)
CORPUS = fx.corpus()


def random_unimodular(n, rng, steps=8):
    m = [list(r) for r in em.identity(n)]
    for _ in range(steps):
        if n == 1:
            break
        i, j = rng.sample(range(n), 2)
        q = rng.choice([-2, -1, 1, 2])
        for row in m:
            row[j] += q * row[i]
    if rng.random() < 0.5:
        for row in m:
            row[0] = -row[0]
    return tuple(tuple(r) for r in m)


# --- validate ------------------------------------------------------------------


def test_validate_examples():
    assert validate(F1) == []
    bad = MultiFan.build({1: (2, 0), 2: (0, 1), 3: (-1, -1)}, F1.complex.facets)
    assert "non-primitive ray 1" in validate(bad)
    collinear = MultiFan.build({1: (1, 0), 2: (0, 1), 3: (-1, 0)}, F1.complex.facets)
    assert any("dependent generators" in p for p in validate(collinear))


def test_validate_structure():
    assert any("not pure" in p for p in validate(MultiFan.build({1: (1, 0), 2: (0, 1), 3: (-1, -1)},
                                                               [{1, 2}, {3}])))
    assert any("zero ray" in p for p in validate(MultiFan.build({1: (0,), 2: (-1,)}, [{1}, {2}])))
    assert any("weight" in p for p in validate(MultiFan.build(F1.rays, F1.complex.facets,
                                                              {frozenset({1, 2}): 0})))


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_corpus_is_valid(name):
    assert validate(CORPUS[name]) == []


# --- cones and genericity --------------------------------------------------------------


@pytest.mark.parametrize("I, v, expected", [
    ({1, 2}, (1, 1), True),
    ({1, 2}, (-1, 0), False),
    ({2, 3}, (-1, 0), True),
    (set(), (1, 0), False),
])
def test_cone_contains_examples(I, v, expected):
    assert cone_contains(F1, I, v) is expected


def test_cone_contains_rejects_non_simplex():
    with pytest.raises(ValueError):
        cone_contains(F1, {1, 2, 3}, (1, 1))


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_generators_belong_to_their_cones(name):
    f = CORPUS[name]
    for s in f.complex.faces:
        for i in s:
            assert cone_contains(f, s, f.rays[i])


@pytest.mark.parametrize("v, expected", [((1, 1), True), ((1, 0), False), ((2, 1), True), ((0, 0), False)])
def test_is_generic_examples(v, expected):
    assert is_generic(F1, v) is expected


def test_is_generic_sweep_matches_all_faces():
    # pure complexes only check ridge cones; compare with the full sweep
    f = fx.blown_up_cp3()
    for v in box(3, 2):
        full = any(cone_contains(f, s, v) for s in f.complex.faces if len(s) < f.dim)
        assert is_generic(f, v) == (any(v) and not full)


def test_sample_generic():
    v = sample_generic(F1, 0)
    assert is_generic(F1, v)
    assert sample_generic(F1, 0) == v
    assert is_generic(F1, sample_generic(F1, 1))
    w = sample_generic(F0, 0)
    assert w != (0,) and is_generic(F0, w)


def test_sample_generic_gives_up():
    with pytest.raises(RuntimeError, match="no generic vector found"):
        sample_generic(F1, 0, retries=0)


# --- Todd genus ----------------------------------------------------------------


def test_todd_examples():
    assert todd_genus(F1, (1, 1)) == 1
    assert todd_genus(F2, (1, 1)) == 2
    assert todd_genus(F0, (1,)) == 1
    with pytest.raises(ValueError, match="not generic"):
        todd_genus(F1, (1, 0))


def test_todd_brute_force_count():
    # count with cone_contains, independently of the cached inverse path
    for f in (F1, F2, F3, fx.cp2_cp1()):
        for v, t in todd_samples(f, 20, seed=3):
            assert t == sum(f.weights[s] for s in f.top_simplices if cone_contains(f, s, v))


def test_todd_v_independence_examples():
    assert todd_v_independence(F1, 50) == (1, True)
    assert todd_v_independence(F2, 50) == (2, True)
    assert todd_v_independence(fx.punctured_projective_plane(), 50).v_independent is False


def test_todd_samples_deterministic():
    assert todd_samples(F3, 10, seed=7) == todd_samples(F3, 10, seed=7)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_todd_agrees_across_seeds(name):
    f = CORPUS[name]
    values = {t for _, t in todd_samples(f, 100, seed=11)}
    assert len(values) == 1


# --- chamber oracle in the plane -----------------------------------------------------


def test_angular_order():
    assert angular_order([(0, -1), (-1, 0), (1, 1), (1, 0), (0, 1), (2, 2)]) == [
        (1, 0), (1, 1), (0, 1), (-1, 0), (0, -1)]


@pytest.mark.parametrize("f, expected", [(F1, [1, 1, 1]), (F2, [2, 2, 2]), (F3, [1, 1, 1, 1]),
                                         (fx.punctured_projective_plane(), [0, 1, 1])])
def test_chamber_counts(f, expected):
    chambers = chamber_counts_2d(f)
    assert [c.count for c in chambers] == expected
    for c in chambers:
        assert is_generic(f, c.representative)
        assert todd_genus(f, c.representative) == c.count


# --- fan structure -------------------------------------------------------------------


@pytest.mark.parametrize("f, expected", [(F1, True), (F2, False), (F3, True), (F0, True)])
def test_is_ordinary_fan_examples(f, expected):
    assert is_ordinary_fan(f) is expected


def test_overlapping_cones_are_not_a_fan():
    f = MultiFan.build({1: (1, 0), 2: (0, 1), 3: (1, 1), 4: (-1, 1)}, [{1, 2}, {3, 4}])
    assert intersect_simplicial_cones([(1, 0), (0, 1)], [(1, 1), (-1, 1)]) == {(1, 1), (0, 1)}
    assert not is_ordinary_fan(f)


def _lattice_meet(gens_a, gens_b, r):
    return {x for x in box(len(gens_a), r) if in_cone_lattice(gens_a, x) and in_cone_lattice(gens_b, x)}


def _lattice_cone(rays, r, n):
    if not rays:
        return {(0,) * n}
    return {x for x in box(n, r) if em.solve_nonneg(rays, x) is not None}


@pytest.mark.parametrize("name", ["CP2", "CP2_double_wrap", "F2_hirzebruch", "CP3", "CP3_blown_up"])
def test_cone_intersections_against_lattice_points(name):
    f = CORPUS[name]
    tops = f.top_simplices
    r = 3 if f.dim == 2 else 2
    for a in tops:
        for b in tops:
            meet_rays = intersect_simplicial_cones(f.generators(a), f.generators(b))
            assert _lattice_meet(f.generators(a), f.generators(b), r) == _lattice_cone(
                sorted(meet_rays), r, f.dim)


@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=4, max_size=4))
def test_intersection_property_plane(rs):
    a, b = rs[:2], rs[2:]
    if em.rank(a) < 2 or em.rank(b) < 2:
        return
    meet = intersect_simplicial_cones(a, b)
    assert _lattice_meet(a, b, 4) == _lattice_cone(sorted(meet), 4, 2)


def test_is_complete_examples():
    assert is_complete(F1)
    assert is_complete(F0)
    assert not is_complete(fx.punctured_projective_plane())
    with pytest.raises(ValueError, match="not an ordinary fan"):
        is_complete(F2)


def test_is_nonsingular_examples():
    assert is_nonsingular(F1) and is_nonsingular(F2)
    assert not is_nonsingular(MultiFan.build({1: (1, 0), 2: (1, 2), 3: (-1, -1)}, F1.complex.facets))


def test_classify_examples():
    r = classify(F1)
    assert (r.nonsingular, r.ordinary_fan, r.complete, r.unit_weights, r.todd) == (True, True, True, True, 1)
    r = classify(F2)
    assert not r.ordinary_fan and r.todd == 2
    r = classify(F3)
    assert r.is_toric_fan and r.todd == 1


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_corollary_equivalence(name):
    r = classify(CORPUS[name])
    assert r.v_independent
    assert (r.todd == 1) == r.is_toric_fan


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_gl_invariance(name):
    f = CORPUS[name]
    rng = random.Random(name)
    base = classify(f, 16)
    for _ in range(3):
        u = random_unimodular(f.dim, rng)
        g = f.transform(u)
        assert classify(g, 16) == base
        for v, t in todd_samples(f, 5, seed=2):
            assert todd_genus(g, em.mat_vec(u, v)) == t


# --- restriction ----------------------------------------------------------------------


def test_restrict_examples():
    g = restrict(F1, 1)
    assert sorted(g.rays.values()) == [(-1,), (1,)]
    assert g.rays[2] == (1,) and g.rays[3] == (-1,)
    assert classify(g).is_toric_fan and classify(g).todd == 1
    h = restrict(F3, 2)
    assert sorted(h.rays.values()) == [(-1,), (1,)]
    with pytest.raises(ValueError):
        restrict(F1, 7)


@pytest.mark.parametrize("name", sorted(fx.toric_corpus()))
def test_restriction_of_toric_fans(name):
    f = CORPUS[name]
    if f.dim < 2:
        return
    for i in sorted(f.complex.vertices):
        g = restrict(f, i)
        assert validate(g) == []
        assert set(g.weights.values()) == {1}
        r = classify(g, 16)
        assert r.is_toric_fan and r.todd == 1


def test_restriction_degenerate():
    # facet {1, 2, 3} is dependent: 1 and 2 collapse to the same line modulo ray 3
    f = MultiFan.build({1: (1, 0, 0), 2: (1, 0, 1), 3: (0, 0, 1)}, [{1, 2, 3}])
    assert validate(f)
    with pytest.raises(ValueError, match="restriction degenerate"):
        restrict(f, 3)


# --- stellar subdivision ------------------------------------------------------------------


@pytest.mark.parametrize("f, rays_after, todd", [(F1, 4, 1), (F3, 5, 1), (F2, 7, 2)])
def test_stellar_examples(f, rays_after, todd):
    g = stellar_subdivide(f, {1, 2}, (1, 1))
    assert len(g.rays) == rays_after
    assert validate(g) == []
    assert todd_v_independence(g, 30) == (todd, True)


def test_stellar_requires_interior_ray():
    with pytest.raises(ValueError):
        stellar_subdivide(F1, {1, 2}, (1, 0))
    with pytest.raises(ValueError):
        stellar_subdivide(F1, {1, 2}, (-1, 1))
    with pytest.raises(ValueError):
        stellar_subdivide(F1, {1}, (1, 0))


def test_stellar_inherits_weights():
    g = stellar_subdivide(fx.weighted_projective_plane(), {1, 2}, (1, 1))
    assert set(g.weights.values()) == {2}


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_stellar_preserves_todd(name):
    f = CORPUS[name]
    if f.dim < 2:
        return
    rng = random.Random(name)
    for s in rng.sample(sorted(f.complex.faces - {frozenset()}, key=sorted), 3):
        if len(s) < 2:
            continue
        ray = em.primitive([sum(c) for c in zip(*f.generators(s))])[0]
        g = stellar_subdivide(f, s, ray)
        for k in range(10):
            v = sample_generic(g, seed=k)
            assert is_generic(f, v)
            assert todd_genus(g, v) == todd_genus(f, v)
