"""Built-in multi-fans and simplicial complexes used by tests, scripts and docs."""

from __future__ import annotations

from itertools import combinations

from .multifan import MultiFan, stellar_subdivide
from .simplicial import SimplicialComplex


def cycle(n: int) -> SimplicialComplex:
    """Boundary of an ``n``-gon on vertices ``1..n``."""
    return SimplicialComplex.from_simplices({i, i % n + 1} for i in range(1, n + 1))


def simplex_boundary(d: int) -> SimplicialComplex:
    """Boundary of the ``d``-simplex on vertices ``1..d+1`` (a ``(d-1)``-sphere)."""
    return SimplicialComplex.from_simplices(combinations(range(1, d + 2), d))


def octahedron() -> SimplicialComplex:
    # antipodal pairs (1, 4), (2, 5), (3, 6)
    return SimplicialComplex.from_simplices(
        {a, b, c} for a in (1, 4) for b in (2, 5) for c in (3, 6))


def icosahedron() -> SimplicialComplex:
    """Apex 0, upper ring 1..5, lower ring 6..10, bottom 11."""
    up = [1, 2, 3, 4, 5]
    lo = [6, 7, 8, 9, 10]
    faces = []
    for i in range(5):
        j = (i + 1) % 5
        faces.append({0, up[i], up[j]})
        faces.append({11, lo[i], lo[j]})
        faces.append({up[i], up[j], lo[i]})
        faces.append({up[j], lo[i], lo[j]})
    return SimplicialComplex.from_simplices(faces)


def cone_over(K: SimplicialComplex, apex=0) -> SimplicialComplex:
    return SimplicialComplex.from_simplices(f | {apex} for f in K.facets)


def disk() -> SimplicialComplex:
    """Cone over a square: a triangulated disk."""
    return cone_over(cycle(4))


def two_triangles() -> SimplicialComplex:
    return SimplicialComplex.from_simplices([{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4}])


# --- multi-fans -------------------------------------------------------------


def line() -> MultiFan:
    """The fan of CP1."""
    return MultiFan.build({1: (1,), 2: (-1,)}, [{1}, {2}])


def projective_space(n: int) -> MultiFan:
    """Fan of CP^n: rays ``e_1..e_n`` and ``-(e_1 + ... + e_n)``."""
    rays = {i + 1: tuple(int(i == j) for j in range(n)) for i in range(n)}
    rays[n + 1] = (-1,) * n
    return MultiFan.build(rays, combinations(range(1, n + 2), n))


def projective_plane() -> MultiFan:
    return projective_space(2)


def wrapped(k: int) -> MultiFan:
    """The CP2 rays traversed ``k`` times around a ``3k``-cycle; Todd genus ``k``."""
    base = [(1, 0), (0, 1), (-1, -1)]
    rays = {i + 1: base[i % 3] for i in range(3 * k)}
    return MultiFan.build(rays, cycle(3 * k).facets)


def double_wrap() -> MultiFan:
    return wrapped(2)


def hirzebruch(a: int) -> MultiFan:
    return MultiFan.build({1: (1, 0), 2: (0, 1), 3: (-1, a), 4: (0, -1)}, cycle(4).facets)


def product(f: MultiFan, g: MultiFan) -> MultiFan:
    """Product multi-fan; vertices are renumbered ``1..``."""
    fi = {v: k + 1 for k, v in enumerate(sorted(f.rays))}
    gi = {v: len(fi) + k + 1 for k, v in enumerate(sorted(g.rays))}
    rays = {fi[v]: r + (0,) * g.dim for v, r in f.rays.items()}
    rays.update({gi[v]: (0,) * f.dim + r for v, r in g.rays.items()})
    facets, weights = [], {}
    for s in f.complex.facets:
        for t in g.complex.facets:
            u = frozenset(fi[v] for v in s) | frozenset(gi[v] for v in t)
            facets.append(u)
            weights[u] = f.weights[s] * g.weights[t]
    return MultiFan.build(rays, facets, weights, dim=f.dim + g.dim)


def cp1_cp1() -> MultiFan:
    return product(line(), line())


def cp1_cubed() -> MultiFan:
    return product(cp1_cp1(), line())


def cp2_cp1() -> MultiFan:
    return product(projective_plane(), line())


def blown_up_cp3() -> MultiFan:
    return stellar_subdivide(projective_space(3), {1, 2, 3}, (1, 1, 1))


def weighted_projective_plane() -> MultiFan:
    """CP2 rays with every fixed point counted twice."""
    f = projective_plane()
    return MultiFan(f.dim, f.complex, f.rays, {s: 2 for s in f.complex.facets})


def punctured_projective_plane() -> MultiFan:
    """CP2 fan with the cone on ``{1, 2}`` removed; not realisable, count depends on v."""
    return MultiFan.build({1: (1, 0), 2: (0, 1), 3: (-1, -1)}, [{2, 3}, {3, 1}])


def corpus() -> dict[str, MultiFan]:
    """Multi-fans of the kind that arise from torus manifolds (count independent of v)."""
    return {
        "CP1": line(),
        "CP2": projective_plane(),
        "CP2_double_wrap": double_wrap(),
        "CP2_triple_wrap": wrapped(3),
        "CP2_weight2": weighted_projective_plane(),
        "F0_hirzebruch": hirzebruch(0),
        "F1_hirzebruch": hirzebruch(1),
        "F2_hirzebruch": hirzebruch(2),
        "CP1xCP1": cp1_cp1(),
        "CP3": projective_space(3),
        "CP2xCP1": cp2_cp1(),
        "CP1^3": cp1_cubed(),
        "CP3_blown_up": blown_up_cp3(),
        "double_wrap_x_CP1": product(double_wrap(), line()),
    }


def toric_corpus() -> dict[str, MultiFan]:
    """The ordinary complete nonsingular fans of the corpus."""
    skip = {"CP2_double_wrap", "CP2_triple_wrap", "CP2_weight2", "double_wrap_x_CP1"}
    return {k: v for k, v in corpus().items() if k not in skip}
