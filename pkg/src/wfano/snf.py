"""Exact integer linear algebra for lattice computations.

Everything here works on plain Python ints (arbitrary precision), so all
results are exact.  The main consumers are the quotient lattices
N = Z^m / Z*(a_0,...,a_{m-1}) attached to weighted projective spaces: we need
coordinates on N, indices of sublattices (cone multiplicities), and
primitivity certificates.
"""

from __future__ import annotations

import math
from typing import Sequence


def smith_normal_form(rows: Sequence[Sequence[int]]) -> list[int]:
    """Diagonal of the Smith normal form of an integer matrix.

    Returns the full list of diagonal entries d_1, d_2, ... (nonnegative,
    each dividing the next, zeros at the end for rank deficiency).  The
    matrix itself is not modified.
    """
    a = [[int(x) for x in row] for row in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    if any(len(row) != n for row in a):
        raise ValueError("ragged matrix")
    diag: list[int] = []
    t = 0
    while t < min(m, n):
        # pick the nonzero entry of smallest absolute value as pivot
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] != 0 and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        # clear row and column t
        dirty = False
        for i in range(t + 1, m):
            if a[i][t] != 0:
                q = a[i][t] // a[t][t]
                for j in range(t, n):
                    a[i][j] -= q * a[t][j]
                if a[i][t] != 0:
                    dirty = True
        for j in range(t + 1, n):
            if a[t][j] != 0:
                q = a[t][j] // a[t][t]
                for i in range(t, m):
                    a[i][j] -= q * a[i][t]
                if a[t][j] != 0:
                    dirty = True
        if dirty:
            continue
        # enforce divisibility of the remaining block by the pivot
        culprit = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if a[i][j] % a[t][t] != 0:
                    culprit = i
                    break
            if culprit is not None:
                break
        if culprit is not None:
            for j in range(t, n):
                a[t][j] += a[culprit][j]
            continue
        diag.append(abs(a[t][t]))
        t += 1
    diag.extend(0 for _ in range(min(m, n) - len(diag)))
    return diag


def clearing_transform(vector: Sequence[int]) -> tuple[int, list[list[int]]]:
    """Unimodular Q with ``vector @ Q == (g, 0, ..., 0)``, g = gcd >= 0.

    Q acts by column operations; it is returned as an m x m integer matrix.
    """
    v = [int(x) for x in vector]
    m = len(v)
    q = [[1 if i == j else 0 for j in range(m)] for i in range(m)]

    def _col_sub(dst: int, src: int, factor: int) -> None:
        v[dst] -= factor * v[src]
        for i in range(m):
            q[i][dst] -= factor * q[i][src]

    while True:
        nz = [j for j in range(m) if v[j] != 0]
        if len(nz) <= 1:
            break
        nz.sort(key=lambda j: abs(v[j]))
        j0, j1 = nz[0], nz[1]
        _col_sub(j1, j0, v[j1] // v[j0])
    nz = [j for j in range(m) if v[j] != 0]
    if nz and nz[0] != 0:
        j = nz[0]
        for i in range(m):
            q[i][0], q[i][j] = q[i][j], q[i][0]
        v[0], v[j] = v[j], v[0]
    if v and v[0] < 0:
        for i in range(m):
            q[i][0] = -q[i][0]
        v[0] = -v[0]
    return (v[0] if v else 0), q


class QuotientLattice:
    """The lattice N = Z^m / Z*a for a primitive integer vector a.

    Provides explicit coordinates N ~ Z^(m-1), which turn cone
    multiplicities and primitivity questions into Smith normal form
    computations.
    """

    def __init__(self, a: Sequence[int]):
        a = [int(x) for x in a]
        if len(a) < 2:
            raise ValueError("need at least two coordinates")
        g, q = clearing_transform(a)
        if g != 1:
            raise ValueError("quotient vector must be primitive (gcd 1)")
        self.modulus = tuple(a)
        self._q = q
        self.rank = len(a) - 1

    def coords(self, x: Sequence[int]) -> tuple[int, ...]:
        """Coordinates of the class of x in N ~ Z^(m-1)."""
        x = [int(v) for v in x]
        if len(x) != len(self.modulus):
            raise ValueError("length mismatch")
        y = [sum(x[i] * self._q[i][j] for i in range(len(x))) for j in range(len(x))]
        return tuple(y[1:])

    def sublattice_index(self, vectors: Sequence[Sequence[int]]) -> int:
        """Index of span(vectors) inside its saturation in N.

        This is the multiplicity of the simplicial cone spanned by the
        vectors.  Raises if the images are linearly dependent.
        """
        rows = [self.coords(v) for v in vectors]
        diag = smith_normal_form(rows)
        nonzero = [d for d in diag if d != 0]
        if len(nonzero) != len(rows):
            raise ValueError("vectors are linearly dependent in the quotient lattice")
        return math.prod(nonzero)

    def is_primitive(self, x: Sequence[int]) -> bool:
        """Whether the class of x is a primitive lattice element of N."""
        c = self.coords(x)
        if all(v == 0 for v in c):
            return False
        return math.gcd(*c) == 1 if len(c) > 1 else abs(c[0]) == 1
