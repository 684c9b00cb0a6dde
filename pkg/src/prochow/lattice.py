"""Exact integer linear algebra kernel.

Matrices are numpy arrays with ``dtype=object`` holding Python ints, so all
arithmetic is arbitrary precision: Smith normal forms, lattice indices and
cokernel orders are computed exactly, never modulo a word size.  Only the
diagonal of the Smith form is canonical; the transformation certificates are
whatever the (deterministic, smallest-pivot) reduction produces.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

import numpy as np

from .errors import ZeroVector

__all__ = [
    "INFINITE",
    "vec",
    "mat",
    "eye",
    "primitive",
    "det",
    "smith_normal_form",
    "smith_transforms",
    "invariant_factors",
    "matrix_rank",
    "cokernel_order",
    "sublattice_index",
    "solve",
    "kernel_basis",
]


class _Infinite:
    """Sentinel for the order of an infinite group or index."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "INFINITE"


INFINITE = _Infinite()


def vec(coords: Iterable[int]) -> np.ndarray:
    """Integer vector as a 1-d object array."""
    coords = tuple(int(c) for c in coords)
    v = np.empty(len(coords), dtype=object)
    for i, c in enumerate(coords):
        v[i] = c
    return v


def mat(rows: Sequence[Sequence[int]], width: int | None = None) -> np.ndarray:
    """Build an object-dtype matrix from a sequence of rows.

    ``width`` disambiguates the column count when ``rows`` is empty.
    """
    rows = [tuple(r) for r in rows]
    if not rows:
        if width is None:
            raise ValueError("width required for a matrix with no rows")
        return np.empty((0, width), dtype=object)
    w = len(rows[0])
    if any(len(r) != w for r in rows):
        raise ValueError("ragged rows")
    if width is not None and w != width:
        raise ValueError(f"expected width {width}, got {w}")
    m = np.empty((len(rows), w), dtype=object)
    for i, r in enumerate(rows):
        for j, c in enumerate(r):
            m[i, j] = int(c)
    return m


def eye(n: int) -> np.ndarray:
    m = np.zeros((n, n), dtype=object)
    for i in range(n):
        m[i, i] = 1
    return m


def primitive(v: Sequence[int]) -> tuple:
    """Divide a nonzero integer vector by the gcd of its coordinates."""
    coords = tuple(int(c) for c in v)
    g = math.gcd(*coords) if coords else 0
    if g == 0:
        raise ZeroVector(f"cannot take the primitive vector of {coords}")
    return tuple(c // g for c in coords)


def det(a) -> int:
    """Exact determinant of a square integer matrix (fraction-free Bareiss)."""
    a = np.asarray(a, dtype=object)
    n, m = a.shape
    if n != m:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    work = [[int(x) for x in row] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if work[k][k] == 0:
            for i in range(k + 1, n):
                if work[i][k] != 0:
                    work[k], work[i] = work[i], work[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                work[i][j] = (work[i][j] * work[k][k] - work[i][k] * work[k][j]) // prev
            work[i][k] = 0
        prev = work[k][k]
    return sign * work[n - 1][n - 1]


def _snf(a) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Smith reduction with full certificates.

    Returns ``(U, D, V, Uinv, Vinv)`` with ``U @ a @ V == D`` diagonal,
    ``d_i >= 0`` and ``d_i | d_{i+1}``, and ``U``, ``V`` unimodular.
    """
    D = np.array(a, dtype=object, copy=True)
    if D.ndim != 2:
        raise ValueError("matrix must be 2-dimensional")
    m, n = D.shape
    U, V = eye(m), eye(n)
    Ui, Vi = eye(m), eye(n)

    def row_add(i, j, c):  # row i += c * row j
        D[i] += c * D[j]
        U[i] += c * U[j]
        Ui[:, j] -= c * Ui[:, i]

    def col_add(i, j, c):  # col i += c * col j
        D[:, i] += c * D[:, j]
        V[:, i] += c * V[:, j]
        Vi[j] -= c * Vi[i]

    def row_swap(i, j):
        D[[i, j]] = D[[j, i]]
        U[[i, j]] = U[[j, i]]
        Ui[:, [i, j]] = Ui[:, [j, i]]

    def col_swap(i, j):
        D[:, [i, j]] = D[:, [j, i]]
        V[:, [i, j]] = V[:, [j, i]]
        Vi[[i, j]] = Vi[[j, i]]

    def row_negate(i):
        D[i] = -D[i]
        U[i] = -U[i]
        Ui[:, i] = -Ui[:, i]

    t = 0
    while t < m and t < n:
        # Smallest-magnitude nonzero entry of the trailing block as pivot.
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = D[i, j]
                if x != 0 and (best is None or abs(x) < best):
                    best = abs(x)
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        if i != t:
            row_swap(t, i)
        if j != t:
            col_swap(t, j)
        if D[t, t] < 0:
            row_negate(t)

        dirty = False
        for i in range(t + 1, m):
            if D[i, t] != 0:
                row_add(i, t, -(D[i, t] // D[t, t]))
                if D[i, t] != 0:
                    dirty = True
        for j in range(t + 1, n):
            if D[t, j] != 0:
                col_add(j, t, -(D[t, j] // D[t, t]))
                if D[t, j] != 0:
                    dirty = True
        if dirty:
            continue  # a strictly smaller entry appeared; reselect the pivot

        offender = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if D[i, j] % D[t, t] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            row_add(t, offender, 1)  # drag the non-multiple into the pivot row
            continue
        t += 1
    return U, D, V, Ui, Vi


def smith_normal_form(a) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """``(U, D, V)`` with ``U @ a @ V == D`` in Smith normal form."""
    U, D, V, _, _ = _snf(a)
    return U, D, V


def smith_transforms(a) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Like :func:`smith_normal_form` but also returns the inverses of U and V."""
    return _snf(a)


def invariant_factors(a) -> tuple[int, ...]:
    """Nonzero diagonal entries of the Smith form, in divisibility order."""
    _, D, _, _, _ = _snf(a)
    k = min(D.shape)
    return tuple(int(D[i, i]) for i in range(k) if D[i, i] != 0)


def matrix_rank(a) -> int:
    return len(invariant_factors(a))


def cokernel_order(a):
    """Order of ``Z^rows / image(a)``: an int, or INFINITE if the rank drops."""
    a = np.asarray(a, dtype=object)
    facs = invariant_factors(a)
    if len(facs) < a.shape[0]:
        return INFINITE
    return math.prod(facs)


def sublattice_index(vectors: Sequence[Sequence[int]], ambient_rank: int):
    """Index in ``Z^ambient_rank`` of the lattice spanned by ``vectors``.

    INFINITE when the span has rank below ``ambient_rank``; otherwise the
    product of the invariant factors (= covolume) of the spanned sublattice.
    """
    vectors = [tuple(int(c) for c in v) for v in vectors]
    for v in vectors:
        if len(v) != ambient_rank:
            raise ValueError(f"vector {v} does not have length {ambient_rank}")
    facs = invariant_factors(mat(vectors, width=ambient_rank))
    if len(facs) < ambient_rank:
        return INFINITE
    return math.prod(facs)


def solve(a, b) -> tuple | None:
    """An integer solution x of ``a @ x == b``, or None if there is none."""
    a = np.asarray(a, dtype=object)
    m, n = a.shape
    U, D, V, _, _ = _snf(a)
    c = U @ vec(b)
    y = np.zeros(n, dtype=object)
    for i in range(m):
        d = D[i, i] if i < n else 0
        if d != 0:
            if c[i] % d != 0:
                return None
            y[i] = c[i] // d
        elif c[i] != 0:
            return None
    x = V @ y
    return tuple(int(t) for t in x)


def kernel_basis(a) -> list[tuple]:
    """Basis of the integer kernel of ``a`` (a saturated sublattice)."""
    a = np.asarray(a, dtype=object)
    m, n = a.shape
    _, D, V, _, _ = _snf(a)
    out = []
    for j in range(n):
        if j >= m or D[j, j] == 0:
            out.append(tuple(int(t) for t in V[:, j]))
    return out
