"""Invariants of simply connected 4-manifolds ``k CP2 # l CP2bar # m (S2 x S2)``.

Also the Donaldson-type admissibility filter: a decomposition into two
summands neither of which has a negative definite intersection form rules
the manifold out as a projective surface.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional


@dataclass(frozen=True, order=True)
class ConnectedSum:
    k: int  # copies of CP2
    l: int  # copies of CP2 with reversed orientation
    m: int  # copies of S2 x S2

    def __post_init__(self):
        for name in ("k", "l", "m"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                raise ValueError(f"{name} must be a nonnegative integer, got {v!r}")
        if (self.k, self.l, self.m) == (0, 0, 0):
            raise ValueError("the empty connected sum (S4) is not allowed")

    def __str__(self) -> str:
        parts = []
        if self.k:
            parts.append("CP2" if self.k == 1 else f"{self.k} CP2")
        if self.l:
            parts.append("CP2bar" if self.l == 1 else f"{self.l} CP2bar")
        if self.m:
            parts.append("S2xS2" if self.m == 1 else f"{self.m} (S2xS2)")
        return " # ".join(parts)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.k, self.l, self.m)


class SurfaceInvariants(NamedTuple):
    euler: int
    signature: int
    todd: Fraction


def invariants(c: ConnectedSum) -> SurfaceInvariants:
    """Euler characteristic, signature and ``(euler + signature) / 4``."""
    chi = c.k + c.l + 2 * c.m + 2
    sigma = c.k - c.l
    todd = Fraction(chi + sigma, 4)
    assert todd == Fraction(c.k + c.m + 1, 2)
    return SurfaceInvariants(chi, sigma, todd)


@dataclass(frozen=True)
class IntersectionForm:
    diagonal: tuple[int, ...]
    hyperbolic: int = 0

    def __post_init__(self):
        if any(d not in (1, -1) for d in self.diagonal):
            raise ValueError("diagonal entries must be +1 or -1")
        if self.hyperbolic < 0:
            raise ValueError("negative number of hyperbolic blocks")

    @property
    def rank(self) -> int:
        return len(self.diagonal) + 2 * self.hyperbolic

    @property
    def signature(self) -> int:
        return sum(self.diagonal)

    def matrix(self) -> list[list[int]]:
        n = self.rank
        out = [[0] * n for _ in range(n)]
        for i, d in enumerate(self.diagonal):
            out[i][i] = d
        base = len(self.diagonal)
        for b in range(self.hyperbolic):
            i = base + 2 * b
            out[i][i + 1] = out[i + 1][i] = 1
        return out


def form_of(c: ConnectedSum) -> IntersectionForm:
    return IntersectionForm((1,) * c.k + (-1,) * c.l, c.m)


def is_negative_definite(q: IntersectionForm) -> bool:
    # each hyperbolic block has a vector of square +2
    return q.rank > 0 and q.hyperbolic == 0 and all(d == -1 for d in q.diagonal)


class DonaldsonResult(NamedTuple):
    admissible: bool
    witness: Optional[tuple[ConnectedSum, ConnectedSum]]


def donaldson_split(c: ConnectedSum) -> Optional[tuple[ConnectedSum, ConnectedSum]]:
    """Splitting into two summands with no negative definite half, if one of the standard ones applies."""
    k, l, m = c.as_tuple()
    if k >= 2:
        return ConnectedSum(1, 0, 0), ConnectedSum(k - 1, l, m)
    if m >= 2:
        return ConnectedSum(0, 0, 1), ConnectedSum(k, l, m - 1)
    if (k, m) == (1, 1):
        return ConnectedSum(1, l, 0), ConnectedSum(0, 0, 1)
    return None


def donaldson_filter(c: ConnectedSum) -> DonaldsonResult:
    """Whether ``c`` can be a simply connected projective surface with a 2-torus action.

    Inadmissible triples come with a witness split whose halves are both
    checked to be non negative definite. A triple that no split applies to
    but whose Todd genus is not an integer (``k + m`` even, i.e. ``k = m = 0``)
    carries no almost complex structure at all and raises ``ValueError``.
    """
    split = donaldson_split(c)
    if split is None:
        if (c.k + c.m) % 2 == 0:
            raise ValueError("Todd not integral")
        return DonaldsonResult(True, None)
    y1, y2 = split
    if is_negative_definite(form_of(y1)) or is_negative_definite(form_of(y2)):
        raise AssertionError(f"split of {c} has a negative definite half")
    assert tuple(a + b for a, b in zip(y1.as_tuple(), y2.as_tuple())) == c.as_tuple()
    return DonaldsonResult(False, split)


def has_integral_todd(c: ConnectedSum) -> bool:
    return (c.k + c.m) % 2 == 1


def enumerate_admissible(k_max: int, l_max: int, m_max: int) -> list[ConnectedSum]:
    """Admissible ``(k, l, m)`` within the bounds, in lexicographic order.

    Only triples with integral Todd genus are candidates.
    """
    if min(k_max, l_max, m_max) < 0:
        raise ValueError("bounds must be nonnegative")
    out = []
    for k in range(k_max + 1):
        for l in range(l_max + 1):
            for m in range(m_max + 1):
                if (k + m) % 2 == 0:
                    continue
                c = ConnectedSum(k, l, m)
                if donaldson_filter(c).admissible:
                    out.append(c)
    return out
