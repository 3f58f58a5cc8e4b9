"""Exact integer and rational linear algebra.

Vectors are plain tuples of ``int`` (lattice vectors) or ``Fraction``
(rational vectors); matrices are tuples of row tuples. Nothing here ever
touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

IntVector = tuple[int, ...]
RatVector = tuple[Fraction, ...]
IntMatrix = tuple[IntVector, ...]


def int_vector(entries: Sequence[int]) -> IntVector:
    v = tuple(entries)
    if not v:
        raise ValueError("vector must have dimension >= 1")
    for x in v:
        if isinstance(x, bool) or not isinstance(x, int):
            raise TypeError(f"non-integer entry {x!r}")
    return v


def rat_vector(entries: Sequence) -> RatVector:
    v = tuple(Fraction(x) for x in entries)
    if not v:
        raise ValueError("vector must have dimension >= 1")
    return v


def is_zero(v: Sequence) -> bool:
    return all(x == 0 for x in v)


def dot(u: Sequence, w: Sequence):
    return sum((a * b for a, b in zip(u, w)), 0)


def add(u: Sequence, w: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(u, w))


def scale(c, v: Sequence) -> tuple:
    return tuple(c * x for x in v)


def mat_vec(m: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(dot(row, v) for row in m)


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> tuple:
    cols = list(zip(*b))
    return tuple(tuple(dot(row, col) for col in cols) for row in a)


def transpose(m: Sequence[Sequence]) -> tuple:
    return tuple(zip(*m))


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def primitive(v: Sequence[int]) -> tuple[IntVector, int]:
    """Split ``v`` into ``(w, s)`` with ``w`` primitive, ``s > 0`` and ``s*w == v``."""
    v = int_vector(v)
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero ray")
    return tuple(x // g for x in v), g


def is_primitive(v: Sequence[int]) -> bool:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g == 1


def primitive_direction(v: Sequence) -> IntVector:
    """Primitive integer vector on the ray through a nonzero rational vector."""
    v = rat_vector(v)
    if is_zero(v):
        raise ValueError("zero ray")
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    return primitive([int(x * den) for x in v])[0]


def determinant(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix by Bareiss elimination."""
    rows = [list(r) for r in m]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if rows[i][k] != 0), None)
            if swap is None:
                return 0
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                rows[i][j] = (rows[i][j] * pivot - rows[i][k] * rows[k][j]) // prev
            rows[i][k] = 0
        prev = pivot
    return sign * rows[n - 1][n - 1]


def _clear_row(row: Sequence) -> list[int]:
    """Scale a rational row by a positive integer so all entries are integers."""
    den = 1
    for x in row:
        d = Fraction(x).denominator
        den = den * d // gcd(den, d)
    return [int(Fraction(x) * den) for x in row]


def rank(vectors: Sequence[Sequence]) -> int:
    """Rank of a family of rational vectors (fraction-free elimination)."""
    rows = [_clear_row(v) for v in vectors]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r]
        for i in range(r + 1, len(rows)):
            if rows[i][c]:
                q = rows[i][c]
                rows[i] = [p[c] * a - q * b for a, b in zip(rows[i], p)]
        r += 1
        if r == len(rows):
            break
    return r


def solve(generators: Sequence[Sequence], v: Sequence) -> Optional[tuple[Fraction, ...]]:
    """Coefficients ``a`` with ``sum(a_i * gen_i) == v``.

    Returns ``None`` when ``v`` is outside the span of the generators.
    Raises ``ValueError("not simplicial")`` if the generators are dependent.
    """
    k = len(generators)
    v = rat_vector(v)
    n = len(v)
    if k == 0:
        return () if is_zero(v) else None
    if any(len(g) != n for g in generators):
        raise ValueError("dimension mismatch")
    # augmented system: n equations, k unknowns, integer rows
    rows = [_clear_row([generators[j][i] for j in range(k)] + [v[i]]) for i in range(n)]
    pivots = []
    r = 0
    for c in range(k):
        p = next((i for i in range(r, n) if rows[i][c] != 0), None)
        if p is None:
            raise ValueError("not simplicial")
        rows[r], rows[p] = rows[p], rows[r]
        pr = rows[r]
        for i in range(n):
            if i != r and rows[i][c]:
                q = rows[i][c]
                rows[i] = [pr[c] * a - q * b for a, b in zip(rows[i], pr)]
                g = 0
                for x in rows[i]:
                    g = gcd(g, x)
                if g > 1:
                    rows[i] = [x // g for x in rows[i]]
        pivots.append(r)
        r += 1
    if any(rows[i][k] != 0 for i in range(r, n)):
        return None
    return tuple(Fraction(rows[i][k], rows[i][c]) for c, i in enumerate(pivots))


def solve_nonneg(generators: Sequence[Sequence], v: Sequence) -> Optional[tuple[Fraction, ...]]:
    """Nonnegative coefficients expressing ``v`` in the positive hull of ``generators``.

    Boundary points (some coefficient zero) count as members. ``None`` means
    ``v`` is not in the closed cone.
    """
    a = solve(generators, v)
    if a is None or any(x < 0 for x in a):
        return None
    return a


def inverse(m: Sequence[Sequence]) -> tuple[RatVector, ...]:
    """Rational inverse of a nonsingular square matrix."""
    n = len(m)
    cols = transpose(m)
    inv_cols = []
    for e in identity(n):
        x = solve(cols, e)
        if x is None:  # pragma: no cover - solve raises on singular input
            raise ValueError("singular matrix")
        inv_cols.append(x)
    return transpose(inv_cols)


def unimodular_extension(v: Sequence[int]) -> IntMatrix:
    """Integer matrix of determinant +-1 whose first column is the primitive ``v``.

    Built by Euclid row operations driving ``v`` to ``e_1`` while
    accumulating the inverse operations as column operations.
    """
    v = int_vector(v)
    if not is_primitive(v):
        raise ValueError(f"non-primitive vector {v}")
    n = len(v)
    w = list(v)
    m = [list(r) for r in identity(n)]

    def sub_row(i, j, q):
        # w_i -= q w_j, so the inverse adds q * column i to column j
        w[i] -= q * w[j]
        for row in m:
            row[j] += q * row[i]

    def swap(i, j):
        w[i], w[j] = w[j], w[i]
        for row in m:
            row[i], row[j] = row[j], row[i]

    for j in range(1, n):
        while w[j] != 0:
            sub_row(0, j, w[0] // w[j])
            swap(0, j)
    if w[0] == -1:
        w[0] = 1
        for row in m:
            row[0] = -row[0]
    assert w[0] == 1 and not any(w[1:])
    return tuple(tuple(r) for r in m)


def int_inverse(m: Sequence[Sequence[int]]) -> IntMatrix:
    """Inverse of a unimodular integer matrix."""
    inv = inverse(m)
    out = []
    for row in inv:
        if any(x.denominator != 1 for x in row):
            raise ValueError("matrix is not unimodular")
        out.append(tuple(int(x) for x in row))
    return tuple(out)


def quotient_coordinates(v: Sequence[int], x: Sequence[int]) -> IntVector:
    """Coordinates of the class of ``x`` in ``Z^n / Z v`` (length ``n - 1``)."""
    basis_inv = int_inverse(unimodular_extension(v))
    return tuple(mat_vec(basis_inv, x)[1:])
