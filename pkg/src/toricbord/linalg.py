"""Small exact integer linear algebra: determinants, unimodular inverses, HNF solves.

Matrices are lists (or tuples) of rows of Python ints.  Sizes are tiny (the
dimension of a torus), so clarity wins over asymptotics.
"""
from __future__ import annotations

from fractions import Fraction


class SingularMatrixError(ValueError):
    pass


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(a, b):
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def vecmat(x, a):
    """Row vector times matrix."""
    return [sum(xi * a[i][j] for i, xi in enumerate(x)) for j in range(len(a[0]))]


def det(m) -> int:
    """Exact determinant by elimination that skips zero entries.

    Pivots of absolute value 1 are preferred, which keeps the arithmetic in
    integers for the sparse unimodular matrices met in practice.
    """
    n = len(m)
    a = [list(row) for row in m]
    acc = 1
    for k in range(n):
        rows = [r for r in range(k, n) if a[r][k]]
        if not rows:
            return 0
        piv = next((r for r in rows if abs(a[r][k]) == 1), rows[0])
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            acc = -acc
        p = a[k][k]
        acc *= p
        nz = [j for j in range(k + 1, n) if a[k][j]]
        for i in range(k + 1, n):
            x = a[i][k]
            if not x:
                continue
            f = x // p if x % p == 0 else Fraction(x, p)
            row_i, row_k = a[i], a[k]
            for j in nz:
                row_i[j] -= f * row_k[j]
    return int(acc)


def unimodular_inverse(m):
    """Exact inverse of an integer matrix with determinant +-1."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrixError("matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    inv = [row[n:] for row in a]
    if any(x.denominator != 1 for row in inv for x in row):
        raise SingularMatrixError("matrix is not unimodular")
    return [[int(x) for x in row] for row in inv]


def hermite_form(a):
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular and ``U @ A == H``; ``H`` is in
    row echelon form with positive pivots and reduced entries above them.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    h = [list(r) for r in a]
    u = identity(rows)
    k = 0
    for j in range(cols):
        if k == rows:
            break
        while True:
            nz = [i for i in range(k, rows) if h[i][j]]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(h[i][j]))
            h[k], h[piv] = h[piv], h[k]
            u[k], u[piv] = u[piv], u[k]
            done = True
            for i in range(k + 1, rows):
                if h[i][j]:
                    q = h[i][j] // h[k][j]
                    h[i] = [x - q * y for x, y in zip(h[i], h[k])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[k])]
                    if h[i][j]:
                        done = False
            if done:
                break
        if not any(h[i][j] for i in range(k, rows)):
            continue
        if h[k][j] < 0:
            h[k] = [-x for x in h[k]]
            u[k] = [-x for x in u[k]]
        for i in range(k):
            q = h[i][j] // h[k][j]
            if q:
                h[i] = [x - q * y for x, y in zip(h[i], h[k])]
                u[i] = [x - q * y for x, y in zip(u[i], u[k])]
        k += 1
    return h, u


def solve_left(a, b):
    """An integer row vector ``x`` with ``x @ A == b``, or None if none exists."""
    h, u = hermite_form(a)
    rows = len(h)
    y = [0] * rows
    for i, row in enumerate(h):
        j = next((c for c, x in enumerate(row) if x), None)
        if j is None:
            break
        rest = b[j] - sum(y[t] * h[t][j] for t in range(i))
        if rest % row[j]:
            return None
        y[i] = rest // row[j]
    if vecmat(y, h) != list(b):
        return None
    return vecmat(y, u)
