"""Integer matrices as lists of lists of Python ints.

Nothing here touches floating point.  Matrices are plain ``list[list[int]]``;
functions never mutate their arguments.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

IntMatrix = list[list[int]]


class SingularMatrix(ValueError):
    pass


def shape(M: Sequence[Sequence[int]]) -> tuple[int, int]:
    return len(M), (len(M[0]) if M else 0)


def copy(M):
    return [list(row) for row in M]


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(r: int, c: int) -> IntMatrix:
    return [[0] * c for _ in range(r)]


def transpose(M):
    return [list(col) for col in zip(*M)] if M else []


def matmul(A, B):
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def matvec(A, v):
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def matpow(A, k: int):
    R = identity(len(A))
    while k:
        if k & 1:
            R = matmul(R, A)
        A = matmul(A, A)
        k >>= 1
    return R


def det(M) -> int:
    """Bareiss fraction-free determinant."""
    n = len(M)
    if n == 0:
        return 1
    A = copy(M)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def rational_inverse(M) -> list[list[Fraction]]:
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(M)]
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c] != 0), None)
        if piv is None:
            raise SingularMatrix("matrix is singular")
        A[c], A[piv] = A[piv], A[c]
        inv = 1 / A[c][c]
        A[c] = [x * inv for x in A[c]]
        for r in range(n):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return [row[n:] for row in A]


def solve_rational(A, b) -> list[Fraction] | None:
    """Solve A x = b over Q for square or overdetermined A; None if inconsistent."""
    rows, cols = shape(A)
    M = [[Fraction(x) for x in A[i]] + [Fraction(b[i])] for i in range(rows)]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(rows):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    if any(M[i][cols] != 0 for i in range(r, rows)):
        return None
    x = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x[c] = M[i][cols]
    return x


def is_unimodular(M) -> bool:
    return abs(det(M)) == 1


# -- Smith normal form --------------------------------------------------------

def _swap_rows(A, i, j):
    A[i], A[j] = A[j], A[i]


def _swap_cols(A, i, j):
    for row in A:
        row[i], row[j] = row[j], row[i]


def _add_row(A, src, dst, f):
    if f:
        A[dst] = [a + f * b for a, b in zip(A[dst], A[src])]


def _add_col(A, src, dst, f):
    if f:
        for row in A:
            row[dst] += f * row[src]


def smith_normal_form(M) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(U, D, V)`` with ``U @ M @ V == D``.

    ``U`` and ``V`` are unimodular and ``D`` is diagonal with nonnegative
    entries ``d1 | d2 | ...``.  Pivoting always picks the entry of least
    absolute value (first in row-major order on ties), so the output is
    deterministic.
    """
    m, n = shape(M)
    if m == 0 or n == 0:
        raise ValueError("empty matrix")
    D = copy(M)
    U = identity(m)
    V = identity(n)
    t = 0
    while t < min(m, n):
        nonzero = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
        if not nonzero:
            break
        _, pi, pj = min(nonzero)
        _swap_rows(D, t, pi)
        _swap_rows(U, t, pi)
        _swap_cols(D, t, pj)
        _swap_cols(V, t, pj)
        while True:
            done = True
            for i in range(t + 1, m):
                if D[i][t]:
                    q = D[i][t] // D[t][t]
                    _add_row(D, t, i, -q)
                    _add_row(U, t, i, -q)
                    if D[i][t]:
                        done = False
            for j in range(t + 1, n):
                if D[t][j]:
                    q = D[t][j] // D[t][t]
                    _add_col(D, t, j, -q)
                    _add_col(V, t, j, -q)
                    if D[t][j]:
                        done = False
            if done:
                # divisibility: fold a non-divisible entry into row t and go again
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                            if D[i][j] % D[t][t]), None)
                if bad is None:
                    break
                _add_row(D, bad[0], t, 1)
                _add_row(U, bad[0], t, 1)
                done = False
            # move the smallest nonzero entry of row/column t to the pivot
            cand = [(abs(D[i][t]), i, t) for i in range(t, m) if D[i][t]]
            cand += [(abs(D[t][j]), t, j) for j in range(t, n) if D[t][j]]
            _, pi, pj = min(cand)
            if pi != t:
                _swap_rows(D, t, pi)
                _swap_rows(U, t, pi)
            if pj != t:
                _swap_cols(D, t, pj)
                _swap_cols(V, t, pj)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return U, D, V


def invariant_factors(M) -> list[int]:
    _, D, _ = smith_normal_form(M)
    return [D[i][i] for i in range(min(shape(D)))]


def hermite_normal_form(M) -> IntMatrix:
    """Row-style HNF of an integer matrix; zero rows dropped.

    Two full-rank bases span the same lattice iff their HNFs coincide.
    """
    A = copy(M)
    m, n = shape(A)
    r = 0
    for c in range(n):
        while True:
            rows = [i for i in range(r, m) if A[i][c]]
            if not rows:
                break
            piv = min(rows, key=lambda i: abs(A[i][c]))
            _swap_rows(A, r, piv)
            again = False
            for i in range(r + 1, m):
                if A[i][c]:
                    _add_row(A, r, i, -(A[i][c] // A[r][c]))
                    again = again or A[i][c] != 0
            if not again:
                break
        if r < m and A[r][c]:
            if A[r][c] < 0:
                A[r] = [-x for x in A[r]]
            for i in range(r):
                _add_row(A, r, i, -(A[i][c] // A[r][c]))
            r += 1
        if r == m:
            break
    return [row for row in A if any(row)]
