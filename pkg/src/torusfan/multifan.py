"""Multi-fans: simplicial complex + ray assignment + weights on top simplices.

The Todd genus of a multi-fan is the weighted number of top cones that
contain a generic vector. A multi-fan has Todd genus one exactly when it is
an ordinary complete nonsingular fan with unit weights; ``classify`` reports
all of those ingredients separately.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Hashable, Iterable, Mapping, NamedTuple, Sequence

from . import exactmath as em
from .simplicial import (
    SimplicialComplex,
    facet_graph_connected,
    is_pure,
    link,
    ridge_degrees,
)

DEFAULT_SAMPLES = 64
DEFAULT_RETRIES = 2000


@dataclass(frozen=True, eq=False)
class MultiFan:
    """``dim`` is the rank of the lattice; top simplices have ``dim`` vertices.

    Construction does not enforce the invariants; call :func:`validate`.
    """

    dim: int
    complex: SimplicialComplex
    rays: Mapping[Hashable, tuple[int, ...]]
    weights: Mapping[frozenset, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "rays", {k: tuple(v) for k, v in self.rays.items()})
        weights = {frozenset(k): w for k, w in self.weights.items()}
        for f in self.complex.facets:
            weights.setdefault(f, 1)
        object.__setattr__(self, "weights", weights)

    @classmethod
    def build(cls, rays: Mapping, facets: Iterable[Iterable], weights: Mapping | None = None,
              dim: int | None = None) -> "MultiFan":
        rays = {k: tuple(v) for k, v in rays.items()}
        if dim is None:
            dim = len(next(iter(rays.values())))
        cx = SimplicialComplex(frozenset(frozenset(f) for f in facets))
        return cls(dim, cx, rays, {frozenset(k): w for k, w in (weights or {}).items()})

    def __eq__(self, other):
        if not isinstance(other, MultiFan):
            return NotImplemented
        return (self.dim, self.complex, self.rays, self.weights) == (
            other.dim, other.complex, other.rays, other.weights)

    @property
    def top_simplices(self) -> list[frozenset]:
        return sorted((f for f in self.complex.facets if len(f) == self.dim), key=sorted)

    def generators(self, simplex: Iterable[Hashable]) -> list[tuple[int, ...]]:
        return [self.rays[i] for i in sorted(simplex)]

    @cached_property
    def _top_inverses(self) -> dict:
        # top simplex -> (sorted ids, inverse of generator matrix); exact
        out = {}
        for f in self.top_simplices:
            ids = sorted(f)
            cols = [self.rays[i] for i in ids]
            out[f] = (ids, em.inverse(em.transpose(cols)))
        return out

    def coordinates(self, top: frozenset, v: Sequence) -> tuple[Fraction, ...]:
        """Coefficients of ``v`` in the basis of rays of a top simplex."""
        _, inv = self._top_inverses[top]
        return em.mat_vec(inv, em.rat_vector(v))

    def transform(self, u: Sequence[Sequence[int]]) -> "MultiFan":
        """Image under the linear map ``u`` (rays are mapped as column vectors)."""
        rays = {k: em.mat_vec(u, r) for k, r in self.rays.items()}
        return MultiFan(self.dim, self.complex, rays, dict(self.weights))


def validate(f: MultiFan) -> list[str]:
    """List of invariant violations; empty when ``f`` is a well-formed multi-fan."""
    out = []
    if f.dim < 1:
        out.append(f"dimension {f.dim} < 1")
        return out
    if not is_pure(f.complex, f.dim - 1):
        out.append(f"complex is not pure of dimension {f.dim - 1}")
    for v in sorted(f.complex.vertices):
        if v not in f.rays:
            out.append(f"missing ray for vertex {v}")
    for k in sorted(f.rays):
        r = f.rays[k]
        if len(r) != f.dim:
            out.append(f"ray {k} has length {len(r)}, expected {f.dim}")
        elif em.is_zero(r):
            out.append(f"zero ray {k}")
        elif not em.is_primitive(r):
            out.append(f"non-primitive ray {k}")
        if k not in f.complex.vertices:
            out.append(f"ray {k} is not a vertex of the complex")
    if out:
        return out
    for s in f.complex.sorted_facets():
        if em.rank(f.generators(s)) < len(s):
            out.append(f"dependent generators in facet {sorted(s)}")
    for s, w in sorted(f.weights.items(), key=lambda kv: sorted(kv[0])):
        if s not in f.complex.facets:
            out.append(f"weight given for non-facet {sorted(s)}")
        elif isinstance(w, bool) or not isinstance(w, int) or w < 1:
            out.append(f"weight {w!r} on facet {sorted(s)} is not a positive integer")
    return out


def _require_valid(f: MultiFan):
    problems = validate(f)
    if problems:
        raise ValueError("invalid multi-fan: " + "; ".join(problems))


def cone_contains(f: MultiFan, simplex: Iterable[Hashable], v: Sequence) -> bool:
    """Whether ``v`` lies in the closed cone spanned by the rays of ``simplex``."""
    s = frozenset(simplex)
    if s not in f.complex.faces:
        raise ValueError(f"{sorted(s)} is not a simplex")
    v = em.rat_vector(v)
    if not s:
        return em.is_zero(v)
    return em.solve_nonneg(f.generators(s), v) is not None


def is_generic(f: MultiFan, v: Sequence) -> bool:
    """``v`` is in no cone of a non-top simplex.

    In a pure complex every non-top simplex sits in a simplex with ``dim - 1``
    vertices and its cone is a face of that one, so only those are checked.
    """
    v = em.rat_vector(v)
    if em.is_zero(v):
        return False
    if is_pure(f.complex, f.dim - 1):
        candidates = f.complex.faces_of_size(f.dim - 1)
    else:
        candidates = [s for s in f.complex.faces if len(s) < f.dim]
    return not any(cone_contains(f, s, v) for s in candidates)


def _derived_rng(seed: int, index: int | None = None) -> random.Random:
    # string seeds are hashed deterministically, independent of PYTHONHASHSEED
    return random.Random(f"torusfan:{seed}" if index is None else f"torusfan:{seed}:{index}")


def sample_generic(f: MultiFan, seed: int = 0, retries: int = DEFAULT_RETRIES) -> tuple[Fraction, ...]:
    """Seeded rejection sampling of a generic integer vector."""
    rng = _derived_rng(seed)
    for attempt in range(retries):
        bound = 4 + attempt // 20
        v = tuple(rng.randint(-bound, bound) for _ in range(f.dim))
        if not em.is_zero(v) and is_generic(f, v):
            return em.rat_vector(v)
    raise RuntimeError("no generic vector found")


def todd_genus(f: MultiFan, v: Sequence) -> int:
    """Weighted count of top cones containing the generic vector ``v``."""
    if not is_generic(f, v):
        raise ValueError("vector not generic")
    return sum(f.weights[s] for s in f.top_simplices if all(a >= 0 for a in f.coordinates(s, v)))


class ToddSampling(NamedTuple):
    todd: int
    v_independent: bool


def todd_samples(f: MultiFan, sample_count: int, seed: int = 0) -> list[tuple[tuple, int]]:
    """``(v, todd_genus(f, v))`` for ``sample_count`` independently seeded generic ``v``."""
    if sample_count < 1:
        raise ValueError("sample_count must be >= 1")
    out = []
    for k in range(sample_count):
        v = sample_generic(f, seed=_derived_rng(seed, k).getrandbits(64))
        out.append((v, todd_genus(f, v)))
    return out


def todd_v_independence(f: MultiFan, sample_count: int = DEFAULT_SAMPLES, seed: int = 0) -> ToddSampling:
    """Todd count at many generic vectors.

    ``todd`` is the value at the first sample; ``v_independent`` says whether
    every sample agreed with it.
    """
    values = [t for _, t in todd_samples(f, sample_count, seed)]
    return ToddSampling(values[0], all(t == values[0] for t in values))


def is_nonsingular(f: MultiFan) -> bool:
    return all(abs(em.determinant(em.transpose(f.generators(s)))) == 1 for s in f.top_simplices)


def has_unit_weights(f: MultiFan) -> bool:
    return all(w == 1 for w in f.weights.values())


# --- cone intersection by double description ------------------------------


def cone_inequalities(generators: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Facet normals of the full-dimensional simplicial cone on ``generators``.

    The cone is ``{x : <a, x> >= 0 for every returned a}``; the normals are the
    rows of the inverse generator matrix, scaled to primitive integer vectors.
    """
    inv = em.inverse(em.transpose(generators))
    return [em.primitive_direction(row) for row in inv]


def _dd_add(rays: list[tuple[int, ...]], zero_sets: list[frozenset], a: Sequence[int], index: int):
    """One double-description step: intersect the cone with ``<a, x> >= 0``."""
    vals = [em.dot(a, r) for r in rays]
    pos = [k for k, x in enumerate(vals) if x > 0]
    neg = [k for k, x in enumerate(vals) if x < 0]
    zer = [k for k, x in enumerate(vals) if x == 0]
    new_rays = [rays[k] for k in pos + zer]
    new_zero = [zero_sets[k] for k in pos] + [zero_sets[k] | {index} for k in zer]
    for p in pos:
        for q in neg:
            common = zero_sets[p] & zero_sets[q]
            # combinatorial adjacency test
            if any(k not in (p, q) and common <= zero_sets[k] for k in range(len(rays))):
                continue
            r = em.add(em.scale(vals[p], rays[q]), em.scale(-vals[q], rays[p]))
            new_rays.append(em.primitive(r)[0])
            new_zero.append(common | {index})
    return new_rays, new_zero


def intersect_simplicial_cones(gens_a: Sequence[Sequence[int]],
                               gens_b: Sequence[Sequence[int]]) -> set[tuple[int, ...]]:
    """Extreme rays (primitive) of the intersection of two full-dimensional simplicial cones."""
    ineq_a = cone_inequalities(gens_a)
    ineq_b = cone_inequalities(gens_b)
    n = len(ineq_a)
    # start from cone A, whose k-th generator is tight on every A-facet but the k-th
    order = sorted(range(n), key=lambda k: tuple(gens_a[k]))
    rays = [em.primitive(gens_a[k])[0] for k in order]
    zero_sets = [frozenset(j for j in range(n) if j != k) for k in order]
    for j, a in enumerate(ineq_b):
        rays, zero_sets = _dd_add(rays, zero_sets, a, n + j)
    return set(rays)


def is_ordinary_fan(f: MultiFan) -> bool:
    """Top cones pairwise meet in the cone of the common face."""
    _require_valid(f)
    tops = f.top_simplices
    for s, t in combinations(tops, 2):
        meet = intersect_simplicial_cones(f.generators(s), f.generators(t))
        expected = {em.primitive(f.rays[i])[0] for i in s & t}
        if meet != expected:
            return False
    # two vertices with the same ray in a common simplex cannot occur (independence)
    return True


def is_complete(f: MultiFan, seed: int = 0) -> bool:
    """Completeness of an ordinary simplicial fan.

    Every ridge lies in exactly two top simplices, the facet adjacency graph is
    connected, and a generic vector is covered by some top cone.
    """
    if not is_ordinary_fan(f):
        raise ValueError("not an ordinary fan")
    if any(d != 2 for d in ridge_degrees(f.complex).values()):
        return False
    if not facet_graph_connected(f.complex):
        return False
    v = sample_generic(f, seed)
    return todd_genus(f, v) > 0


@dataclass(frozen=True)
class ClassificationReport:
    nonsingular: bool
    ordinary_fan: bool
    complete: bool
    unit_weights: bool
    todd: int
    samples_used: int
    v_independent: bool

    @property
    def is_toric_fan(self) -> bool:
        return self.nonsingular and self.ordinary_fan and self.complete and self.unit_weights

    def as_dict(self) -> dict:
        return {
            "nonsingular": self.nonsingular,
            "ordinary_fan": self.ordinary_fan,
            "complete": self.complete,
            "unit_weights": self.unit_weights,
            "todd": self.todd,
            "samples_used": self.samples_used,
            "v_independent": self.v_independent,
        }


def classify(f: MultiFan, sample_count: int = DEFAULT_SAMPLES, seed: int = 0) -> ClassificationReport:
    """All classification flags plus the sampled Todd genus.

    ``complete`` is only meaningful for ordinary fans and is reported False
    otherwise.
    """
    _require_valid(f)
    todd, indep = todd_v_independence(f, sample_count, seed)
    ordinary = is_ordinary_fan(f)
    return ClassificationReport(
        nonsingular=is_nonsingular(f),
        ordinary_fan=ordinary,
        complete=ordinary and is_complete(f, seed),
        unit_weights=has_unit_weights(f),
        todd=todd,
        samples_used=sample_count,
        v_independent=indep,
    )


# --- restriction and subdivision -------------------------------------------


def restrict(f: MultiFan, i: Hashable) -> MultiFan:
    """Multi-fan of the characteristic submanifold for vertex ``i``.

    The complex is the link of ``{i}``, rays are the images in the quotient
    lattice ``Z^n / Z ray_i`` (made primitive), and all weights are 1.
    """
    if i not in f.complex.vertices:
        raise ValueError(f"unknown vertex {i!r}")
    if f.dim < 2:
        raise ValueError("cannot restrict a one-dimensional multi-fan")
    lam = f.rays[i]
    if not em.is_primitive(lam):
        raise ValueError(f"non-primitive ray {i}")
    basis_inv = em.int_inverse(em.unimodular_extension(lam))
    lk = link(f.complex, {i})
    rays = {}
    for j in sorted(lk.vertices):
        image = em.mat_vec(basis_inv, f.rays[j])[1:]
        if em.is_zero(image):
            raise ValueError("restriction degenerate")
        rays[j] = em.primitive(image)[0]
    out = MultiFan(f.dim - 1, lk, rays, {s: 1 for s in lk.facets})
    if any(em.rank(out.generators(s)) < len(s) for s in lk.facets):
        raise ValueError("restriction degenerate")
    return out


def _fresh_id(existing: Iterable[Hashable]) -> Hashable:
    existing = set(existing)
    if all(isinstance(x, int) and not isinstance(x, bool) for x in existing):
        return max(existing, default=0) + 1
    k = len(existing) + 1
    while str(k) in existing:
        k += 1
    return str(k)


def stellar_subdivide(f: MultiFan, simplex: Iterable[Hashable], ray: Sequence[int],
                      new_id: Hashable | None = None) -> MultiFan:
    """Star subdivision of the cone of ``simplex`` through ``ray``.

    ``ray`` must lie in the relative interior of that cone. Every facet
    containing the simplex is replaced by the facets obtained by swapping one
    vertex of the simplex for the new vertex; weights are inherited.
    """
    s = frozenset(simplex)
    if len(s) < 2 or s not in f.complex.faces:
        raise ValueError(f"{sorted(s)} is not a simplex with at least two vertices")
    ray = em.int_vector(ray)
    if not em.is_primitive(ray):
        raise ValueError("subdivision ray must be primitive")
    coeffs = em.solve_nonneg(f.generators(s), ray)
    if coeffs is None or any(c == 0 for c in coeffs):
        raise ValueError("ray is not in the relative interior of the cone")
    if new_id is None:
        new_id = _fresh_id(f.complex.vertices | set(f.rays))
    elif new_id in f.rays or new_id in f.complex.vertices:
        raise ValueError(f"vertex id {new_id!r} already in use")
    facets, weights = [], {}
    for face in f.complex.sorted_facets():
        if s <= face:
            for k in sorted(s):
                g = (face - {k}) | {new_id}
                facets.append(g)
                weights[g] = f.weights.get(face, 1)
        else:
            facets.append(face)
            weights[face] = f.weights.get(face, 1)
    rays = dict(f.rays)
    rays[new_id] = ray
    return MultiFan(f.dim, SimplicialComplex(frozenset(facets)), rays, weights)


# --- exact chamber enumeration in the plane ---------------------------------


def _half(v) -> int:
    # 0 for angles in [0, pi), 1 for [pi, 2 pi)
    x, y = v
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def _cross(a, b):
    return a[0] * b[1] - a[1] * b[0]


def angular_order(vectors: Iterable[Sequence[int]]) -> list[tuple[int, ...]]:
    """Distinct primitive directions sorted by angle in ``[0, 2 pi)``, exact."""
    dirs = {em.primitive(v)[0] for v in vectors}
    from functools import cmp_to_key

    def cmp(a, b):
        ha, hb = _half(a), _half(b)
        if ha != hb:
            return ha - hb
        c = _cross(a, b)
        return -1 if c > 0 else (1 if c < 0 else 0)

    return sorted(dirs, key=cmp_to_key(cmp))


@dataclass(frozen=True)
class Chamber:
    start: tuple[int, ...]
    end: tuple[int, ...]
    representative: tuple[int, ...]
    count: int


def chamber_counts_2d(f: MultiFan) -> list[Chamber]:
    """Weighted number of 2-cones over each open chamber of the ray arrangement.

    Independent of the linear-algebra path: each cone is treated as a
    counterclockwise arc of consecutive directions in the angular order.
    """
    if f.dim != 2:
        raise ValueError("chamber enumeration is only available in dimension 2")
    dirs = angular_order(f.rays.values())
    pos = {d: k for k, d in enumerate(dirs)}
    m = len(dirs)
    counts = [0] * m  # chamber k lies between dirs[k] and dirs[k+1]
    for s in f.top_simplices:
        a, b = (em.primitive(r)[0] for r in f.generators(s))
        if _cross(a, b) < 0:
            a, b = b, a
        k = pos[a]
        while k != pos[b]:
            counts[k] += f.weights[s]
            k = (k + 1) % m
    out = []
    for k in range(m):
        a, b = dirs[k], dirs[(k + 1) % m]
        if m == 1:
            rep = tuple(-x for x in a)
        else:
            c = _cross(a, b)
            if c > 0:
                rep = em.add(a, b)
            elif c < 0:
                rep = tuple(-x for x in em.add(a, b))
            else:
                rep = (-a[1], a[0])
        out.append(Chamber(a, b, rep, counts[k]))
    return out
