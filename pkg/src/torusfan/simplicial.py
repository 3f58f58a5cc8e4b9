"""Abstract simplicial complexes: links, open stars, structure checks, homology.

Simplices are ``frozenset``s of vertex ids. Vertex ids may be any hashable,
mutually comparable values (ints in the built-in fixtures, strings when read
from JSON). Boundary matrices orient each simplex by the sorted order of its
vertices.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

Simplex = frozenset


def simplex(vertices: Iterable[Hashable]) -> frozenset:
    return frozenset(vertices)


@dataclass(frozen=True)
class SimplicialComplex:
    """A finite abstract simplicial complex given by its facets.

    All faces are implied by downward closure. The empty complex has no
    facets; every other complex contains the empty simplex.
    """

    facets: frozenset

    def __post_init__(self):
        facets = frozenset(frozenset(f) for f in self.facets)
        if any(not f for f in facets):
            raise ValueError("empty facet")
        for f in facets:
            for g in facets:
                if f < g:
                    raise ValueError(f"facet {sorted(f)} is contained in {sorted(g)}")
        object.__setattr__(self, "facets", facets)

    @classmethod
    def from_simplices(cls, simplices: Iterable[Iterable[Hashable]]) -> "SimplicialComplex":
        """Complex generated by arbitrary simplices (non-maximal ones are dropped)."""
        sims = {frozenset(s) for s in simplices}
        sims.discard(frozenset())
        return cls(frozenset(s for s in sims if not any(s < t for t in sims)))

    @cached_property
    def vertices(self) -> frozenset:
        return frozenset().union(*self.facets)

    @cached_property
    def dimension(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    @cached_property
    def faces(self) -> frozenset:
        out = {frozenset()}
        for f in self.facets:
            for k in range(1, len(f) + 1):
                out.update(frozenset(c) for c in combinations(f, k))
        return frozenset(out)

    def faces_of_size(self, k: int) -> list:
        """Faces with exactly ``k`` vertices, in a deterministic order."""
        return sorted((f for f in self.faces if len(f) == k), key=sorted)

    def __contains__(self, s) -> bool:
        return frozenset(s) in self.faces

    def __len__(self) -> int:
        return len(self.facets)

    def sorted_facets(self) -> list:
        return sorted(self.facets, key=sorted)

    def f_vector(self) -> tuple[int, ...]:
        counts = Counter(len(f) for f in self.faces if f)
        return tuple(counts[k] for k in range(1, self.dimension + 2))

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * c for i, c in enumerate(self.f_vector()))

    def relabel(self, mapping: Mapping) -> "SimplicialComplex":
        return SimplicialComplex(frozenset(frozenset(mapping[v] for v in f) for f in self.facets))


def link(K: SimplicialComplex, J: Iterable[Hashable]) -> SimplicialComplex:
    """``{I : I and J disjoint, I | J in K}``."""
    J = frozenset(J)
    if J not in K.faces:
        raise ValueError(f"{sorted(J)} is not a simplex")
    return SimplicialComplex.from_simplices(f - J for f in K.facets if J <= f)


def closed_star(K: SimplicialComplex, J: Iterable[Hashable]) -> SimplicialComplex:
    J = frozenset(J)
    if J not in K.faces:
        raise ValueError(f"{sorted(J)} is not a simplex")
    return SimplicialComplex(frozenset(f for f in K.facets if J <= f))


@dataclass(frozen=True)
class StarCell:
    """One cell of the open star of a vertex: the join of ``center`` with ``base``.

    Points are ``(1 - t) e_center + t y`` with ``0 <= t < 1`` and ``y`` a
    convex combination of the vertices of ``base`` (a simplex of the link).
    """

    center: Hashable
    base: frozenset

    def point(self, t, weights: Mapping[Hashable, Fraction] | None = None) -> dict:
        t = Fraction(t)
        if not 0 <= t < 1:
            raise ValueError("t must satisfy 0 <= t < 1")
        if t == 0:
            return {self.center: Fraction(1)}
        y = _barycentric(self.base, weights)
        out = {self.center: 1 - t}
        for v, a in y.items():
            out[v] = out.get(v, 0) + t * a
        return {v: a for v, a in out.items() if a != 0}


def _barycentric(base: frozenset, weights: Mapping | None) -> dict:
    if not base:
        raise ValueError("the link simplex must be nonempty when t > 0")
    if weights is None:
        return {v: Fraction(1, len(base)) for v in base}
    if set(weights) - base:
        raise ValueError("barycentric weights outside the link simplex")
    w = {v: Fraction(a) for v, a in weights.items()}
    if any(a < 0 for a in w.values()) or sum(w.values()) != 1:
        raise ValueError("barycentric weights must be nonnegative and sum to 1")
    return w


def open_star_points(K: SimplicialComplex, i: Hashable) -> Iterator[StarCell]:
    """Cells parametrising the open star of vertex ``i``, one per link simplex."""
    if i not in K.vertices:
        raise ValueError(f"unknown vertex {i!r}")
    lk = link(K, {i})
    for base in sorted(lk.faces, key=lambda s: (len(s), sorted(s))):
        yield StarCell(i, base)


def is_pure(K: SimplicialComplex, dim: int) -> bool:
    """Whether every facet has dimension ``dim`` (``dim + 1`` vertices)."""
    return bool(K.facets) and all(len(f) == dim + 1 for f in K.facets)


def _components(nodes: Sequence, edges: Iterable[tuple]) -> int:
    parent = {v: v for v in nodes}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return len({find(v) for v in nodes})


def is_connected(K: SimplicialComplex) -> bool:
    verts = sorted(K.vertices)
    edges = [tuple(sorted(e)) for e in K.faces if len(e) == 2]
    return _components(verts, edges) == 1


def ridge_degrees(K: SimplicialComplex) -> dict:
    """Number of facets containing each codimension-one face of the top dimension."""
    d = K.dimension + 1
    out = {r: 0 for r in K.faces if len(r) == d - 1}
    for f in K.facets:
        if len(f) == d:
            for v in f:
                out[f - {v}] += 1
    return out


def facet_graph_connected(K: SimplicialComplex) -> bool:
    """Connectivity of the graph on facets where adjacency is sharing a ridge."""
    facets = K.sorted_facets()
    idx = {f: n for n, f in enumerate(facets)}
    by_ridge: dict = {}
    for f in facets:
        for v in f:
            by_ridge.setdefault(f - {v}, []).append(idx[f])
    edges = [(ids[0], other) for ids in by_ridge.values() for other in ids[1:]]
    return _components(list(range(len(facets))), edges) == 1


# --- homology -------------------------------------------------------------


def boundary_matrix(K: SimplicialComplex, k: int) -> list[list[int]]:
    """Matrix of the boundary map from k-chains to (k-1)-chains (k >= 1)."""
    rows = [tuple(sorted(s)) for s in K.faces_of_size(k)]
    cols = [tuple(sorted(s)) for s in K.faces_of_size(k + 1)]
    row_idx = {r: i for i, r in enumerate(rows)}
    m = [[0] * len(cols) for _ in rows]
    for j, s in enumerate(cols):
        for pos in range(len(s)):
            face = s[:pos] + s[pos + 1:]
            m[row_idx[face]][j] = (-1) ** pos
    return m


def smith_diagonal(m: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero invariant factors of an integer matrix (each divides the next)."""
    a = [list(r) for r in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    t = 0
    while t < rows and t < cols:
        nz = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            p = a[t][t]
            done = True
            for i in range(t + 1, rows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    done = False
            for j in range(t + 1, cols):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    done = False
            if done:
                bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                            if a[i][j] % p), None)
                if bad is None:
                    break
                # pull a non-divisible entry into the pivot row
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            # move the smallest remaining entry of row/column t to the pivot
            cand = [(abs(a[i][t]), i, t) for i in range(t, rows) if a[i][t]]
            cand += [(abs(a[t][j]), t, j) for j in range(t, cols) if a[t][j]]
            _, pi, pj = min(cand)
            a[t], a[pi] = a[pi], a[t]
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


@dataclass(frozen=True)
class HomologyGroup:
    """``Z^rank`` plus cyclic torsion summands."""

    rank: int
    torsion: tuple[int, ...] = ()

    def __str__(self) -> str:
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


def homology(K: SimplicialComplex) -> list[HomologyGroup]:
    """Unreduced integral homology ``H_0 .. H_dim``."""
    if not K.facets:
        raise ValueError("homology of the empty complex")
    d = K.dimension
    counts = [len(K.faces_of_size(k + 1)) for k in range(d + 1)]
    # invariant factors of boundary map C_k -> C_{k-1}, k = 1..d
    factors = {k: smith_diagonal(boundary_matrix(K, k)) for k in range(1, d + 1)}
    out = []
    for k in range(d + 1):
        rank_out = len(factors.get(k, []))
        incoming = factors.get(k + 1, [])
        betti = counts[k] - rank_out - len(incoming)
        torsion = tuple(x for x in incoming if x > 1)
        out.append(HomologyGroup(betti, torsion))
    return out


def is_homology_sphere(K: SimplicialComplex, d: int) -> bool:
    """Whether ``K`` has the integral homology of the ``d``-sphere."""
    if not K.facets or K.dimension != d:
        return False
    H = homology(K)
    if d == 0:
        return H == [HomologyGroup(2)]
    expected = [HomologyGroup(1)] + [HomologyGroup(0)] * (d - 1) + [HomologyGroup(1)]
    return H == expected
