"""The map from the geometric realisation of the complex to the unit sphere.

A point ``sum a_i e_i`` of a simplex goes to the direction of
``sum a_i ray_i``. Sphere points are kept as nonzero rational vectors up to
positive scaling, so everything stays exact; the splitting of the image over
the open star of a vertex into a part orthogonal to the central ray and a
part along it is computed with squared lengths only.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable, Mapping, NamedTuple

from . import exactmath as em
from .multifan import DEFAULT_SAMPLES, MultiFan, todd_v_independence, validate
from .simplicial import is_connected, link


@dataclass(frozen=True)
class BarycentricPoint:
    simplex: frozenset
    coefficients: Mapping[Hashable, Fraction]

    def __post_init__(self):
        coeffs = {k: Fraction(a) for k, a in self.coefficients.items()}
        s = frozenset(self.simplex)
        if set(coeffs) - s:
            raise ValueError("coefficient for a vertex outside the simplex")
        if any(a < 0 for a in coeffs.values()):
            raise ValueError("negative barycentric coefficient")
        if sum(coeffs.values()) != 1:
            raise ValueError("barycentric coefficients must sum to 1")
        object.__setattr__(self, "simplex", s)
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def vertex(cls, i: Hashable) -> "BarycentricPoint":
        return cls(frozenset([i]), {i: Fraction(1)})

    @classmethod
    def barycenter(cls, simplex: Iterable[Hashable]) -> "BarycentricPoint":
        s = frozenset(simplex)
        return cls(s, {v: Fraction(1, len(s)) for v in s})


@dataclass(frozen=True)
class StarPoint:
    """``(1 - t) e_center + t y`` with ``y`` in the link of ``center``."""

    center: Hashable
    t: Fraction
    y: BarycentricPoint

    def __post_init__(self):
        t = Fraction(self.t)
        if not 0 <= t < 1:
            raise ValueError("t must satisfy 0 <= t < 1")
        if self.center in self.y.simplex:
            raise ValueError("y must lie in the link of the center")
        object.__setattr__(self, "t", t)

    def as_barycentric(self) -> BarycentricPoint:
        coeffs = {self.center: 1 - self.t}
        for v, a in self.y.coefficients.items():
            coeffs[v] = self.t * a
        return BarycentricPoint(self.y.simplex | {self.center}, coeffs)


def eval_direction(f: MultiFan, x: BarycentricPoint) -> tuple[Fraction, ...]:
    """Unnormalised image ``sum a_i ray_i`` of ``x``."""
    if x.simplex not in f.complex.faces:
        raise ValueError(f"{sorted(x.simplex)} is not a simplex")
    out = (Fraction(0),) * f.dim
    for i, a in x.coefficients.items():
        out = em.add(out, em.scale(a, f.rays[i]))
    if em.is_zero(out):
        raise ValueError("map undefined at x")
    return out


def same_direction(u, w) -> bool:
    """Whether two nonzero vectors are positive multiples of each other."""
    if em.is_zero(u) or em.is_zero(w):
        raise ValueError("zero vector has no direction")
    return em.rank([u, w]) == 1 and em.dot(u, w) > 0


def project_off(lam, v) -> tuple[Fraction, ...]:
    """Orthogonal projection of ``v`` onto the complement of ``lam``."""
    c = Fraction(em.dot(v, lam), em.dot(lam, lam))
    return tuple(Fraction(a) - c * b for a, b in zip(v, lam))


class GHDecomposition(NamedTuple):
    g2: Fraction
    h2: Fraction
    h_sign: int
    projected: tuple  # sum_j a_j p(ray_j), the direction of the restricted map
    along: Fraction  # 1 - t + t sum_j a_j c_j


def gh_decompose(f: MultiFan, p: StarPoint) -> GHDecomposition:
    """Squared coefficients of the image of ``p`` along the restricted map and the central ray.

    With ``p(v)`` the orthogonal projection off ``ray_i`` and
    ``c_j = <ray_j, ray_i> / <ray_i, ray_i>``, the image direction is
    ``D = (1 - t) ray_i + t sum a_j ray_j``; then
    ``g^2 = t^2 |sum a_j p(ray_j)|^2 / |D|^2`` and
    ``h^2 = (1 - t + t sum a_j c_j)^2 |ray_i|^2 / |D|^2``.
    """
    i = p.center
    if i not in f.complex.vertices:
        raise ValueError(f"unknown vertex {i!r}")
    lk = link(f.complex, {i})
    if p.y.simplex not in lk.faces:
        raise ValueError("y is not in the link of the center")
    lam = f.rays[i]
    ll = em.dot(lam, lam)
    t = p.t
    proj = (Fraction(0),) * f.dim
    csum = Fraction(0)
    for j, a in p.y.coefficients.items():
        lj = f.rays[j]
        c = Fraction(em.dot(lj, lam), ll)
        proj = em.add(proj, em.scale(a, project_off(lam, lj)))
        csum += a * c
    along = 1 - t + t * csum
    denom = em.add(em.scale(1 - t, lam), em.scale(t, em.add(proj, em.scale(csum, lam))))
    dd = em.dot(denom, denom)
    if dd == 0:
        raise ValueError("degenerate denominator")
    g2 = t * t * em.dot(proj, proj) / dd
    h2 = along * along * ll / dd
    sign = (along > 0) - (along < 0)
    return GHDecomposition(g2, h2, sign, proj, along)


def pythagoras_check(f: MultiFan, p: StarPoint) -> bool:
    d = gh_decompose(f, p)
    return d.g2 + d.h2 == 1


def random_star_point(f: MultiFan, rng: random.Random, max_den: int = 50) -> StarPoint:
    """A random point of an open star with rational ``t`` and barycentric coordinates."""
    verts = sorted(f.complex.vertices)
    i = rng.choice(verts)
    lk = link(f.complex, {i})
    base = rng.choice(sorted((s for s in lk.faces if s), key=sorted))
    t = Fraction(rng.randrange(max_den), max_den)
    raw = [rng.randint(0, max_den) for _ in base]
    if not any(raw):
        raw[0] = 1
    total = sum(raw)
    y = BarycentricPoint(base, {v: Fraction(r, total) for v, r in zip(sorted(base), raw)})
    return StarPoint(i, t, y)


def sample_star_points(f: MultiFan, count: int, seed: int = 0) -> list[StarPoint]:
    rng = random.Random(f"torusfan-star:{seed}")
    return [random_star_point(f, rng) for _ in range(count)]


def parallel_pairs(f: MultiFan, points: Iterable[BarycentricPoint]) -> list[tuple]:
    """Pairs of distinct points with the same image direction (injectivity probe)."""
    pts = list(points)
    dirs = [em.primitive_direction(eval_direction(f, x)) for x in pts]
    seen: dict = {}
    out = []
    for x, d in zip(pts, dirs):
        for y in seen.get(d, []):
            if _support(y) != _support(x):
                out.append((y, x))
        seen.setdefault(d, []).append(x)
    return out


def _support(x: BarycentricPoint) -> frozenset:
    return frozenset((v, a) for v, a in x.coefficients.items() if a)


def homeomorphism_verdict(f: MultiFan, sample_count: int = DEFAULT_SAMPLES, seed: int = 0) -> bool:
    """Whether the sphere map is a homeomorphism, decided by the Todd count.

    The map is a homeomorphism exactly when the Todd genus is one; the count is
    sampled at ``sample_count`` generic vectors and must be 1 at all of them.
    No point-set topology is performed.
    """
    problems = validate(f)
    if problems:
        raise ValueError("invalid multi-fan: " + "; ".join(problems))
    if not is_connected(f.complex) and f.dim > 1:
        raise ValueError("the complex is not connected")
    todd, indep = todd_v_independence(f, sample_count, seed)
    return todd == 1 and indep
