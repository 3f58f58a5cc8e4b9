"""Characteristic pairs of quasitoric manifolds and the toricity verdict.

The orbit polytope enters only through the boundary complex of its dual
simplicial polytope; vertex ids of that complex are the facets of the
polytope, and top simplices are its vertices (the fixed points).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping

from . import exactmath as em
from .multifan import DEFAULT_SAMPLES, ClassificationReport, MultiFan, classify
from .simplicial import SimplicialComplex, is_connected, is_homology_sphere, is_pure

TORIC = "toric"
NOT_REALIZABLE = "not realizable by an invariant complex structure"


@dataclass(frozen=True, eq=False)
class CharacteristicPair:
    dual_complex: SimplicialComplex
    rays: Mapping[Hashable, tuple[int, ...]]
    dim: int

    def __post_init__(self):
        object.__setattr__(self, "rays", {k: tuple(v) for k, v in self.rays.items()})
        n = self.dim
        K = self.dual_complex
        if not is_pure(K, n - 1):
            raise ValueError(f"dual complex is not pure of dimension {n - 1}")
        if n > 1 and not is_connected(K):
            raise ValueError("dual complex is not connected")
        if not is_homology_sphere(K, n - 1):
            raise ValueError(f"dual complex is not a homology {n - 1}-sphere")
        if set(self.rays) != set(K.vertices):
            raise ValueError("rays must be given for exactly the vertices of the dual complex")
        for k, r in self.rays.items():
            if len(r) != n or not em.is_primitive(r):
                raise ValueError(f"ray {k} is not a primitive vector in Z^{n}")

    @classmethod
    def build(cls, rays: Mapping, facets: Iterable[Iterable]) -> "CharacteristicPair":
        rays = {k: tuple(v) for k, v in rays.items()}
        dim = len(next(iter(rays.values())))
        return cls(SimplicialComplex(frozenset(frozenset(f) for f in facets)), rays, dim)

    @classmethod
    def from_multifan(cls, f: MultiFan) -> "CharacteristicPair":
        return cls(f.complex, dict(f.rays), f.dim)


@dataclass(frozen=True)
class FaceSubgroup:
    """Subtorus fixing the face: generated by the circles of the rays of ``face``."""

    face: frozenset
    generators: tuple[tuple[int, ...], ...]


def validate_dj(p: CharacteristicPair) -> bool:
    """At every vertex of the polytope the rays form a lattice basis."""
    return all(
        abs(em.determinant(em.transpose([p.rays[i] for i in sorted(s)]))) == 1
        for s in p.dual_complex.facets
    )


def to_multifan(p: CharacteristicPair) -> MultiFan:
    """Multi-fan of the quasitoric manifold; each fixed point contributes weight 1."""
    if not validate_dj(p):
        raise ValueError("characteristic pair fails the lattice-basis condition")
    return MultiFan(p.dim, p.dual_complex, dict(p.rays), {s: 1 for s in p.dual_complex.facets})


def face_subgroup(p: CharacteristicPair, face: Iterable[Hashable]) -> FaceSubgroup:
    s = frozenset(face)
    if s not in p.dual_complex.faces:
        raise ValueError(f"{sorted(s)} is not a face")
    return FaceSubgroup(s, tuple(p.rays[i] for i in sorted(s)))


def fixed_point_count(p: CharacteristicPair) -> int:
    return len(p.dual_complex.facets)


@dataclass(frozen=True)
class ToricityReport:
    """``verdict`` is "toric" when the multi-fan is an ordinary complete
    nonsingular fan with Todd genus one. Otherwise no invariant complex
    structure exists, *or* the data did not come from a quasitoric manifold;
    the data alone cannot tell these apart.
    """

    report: ClassificationReport
    verdict: str


def toricity_report(p: CharacteristicPair, sample_count: int = DEFAULT_SAMPLES, seed: int = 0) -> ToricityReport:
    report = classify(to_multifan(p), sample_count, seed)
    toric = report.todd == 1 and report.v_independent and report.is_toric_fan
    return ToricityReport(report, TORIC if toric else NOT_REALIZABLE)
