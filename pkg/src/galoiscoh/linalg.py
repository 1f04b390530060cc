"""Gaussian elimination over an exact field.

Entries may be ``Fraction`` or ``FieldElement``; callers pass the field's
zero and one so that empty inputs still produce correctly typed output.
"""

from __future__ import annotations

from typing import Sequence


def rref(rows: Sequence[Sequence], zero, one):
    """Reduced row echelon form. Returns (matrix, pivot columns)."""
    A = [list(r) for r in rows]
    if not A:
        return A, []
    m, n = len(A), len(A[0])
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = one / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(m):
            if i != r and A[i][c]:
                f = A[i][c]
                row_r = A[r]
                A[i] = [x - f * y for x, y in zip(A[i], row_r)]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return A, pivots


def rank(rows: Sequence[Sequence], zero, one) -> int:
    return len(rref(rows, zero, one)[1])


def nullspace(rows: Sequence[Sequence], ncols: int, zero, one) -> list[list]:
    """Basis of {x : A x = 0}, each vector with a 1 in its free column."""
    if not rows:
        return [[one if i == j else zero for i in range(ncols)] for j in range(ncols)]
    R, pivots = rref(rows, zero, one)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for i, pc in enumerate(pivots):
            v[pc] = -R[i][f]
        basis.append(v)
    return basis


def solve(A: Sequence[Sequence], b: Sequence, zero, one):
    """Some solution of A x = b, or None."""
    n = len(A[0]) if A else 0
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, pivots = rref(aug, zero, one)
    if n in pivots:
        return None
    x = [zero] * n
    for i, pc in enumerate(pivots):
        x[pc] = R[i][n]
    return x


def mat_vec(A: Sequence[Sequence], v: Sequence, zero):
    out = []
    for row in A:
        s = zero
        for a, x in zip(row, v):
            if a and x:
                s = s + a * x
        out.append(s)
    return out


def mat_mul(A: Sequence[Sequence], B: Sequence[Sequence], zero):
    if not A:
        return []
    cols = list(zip(*B))
    return [[sum((a * b for a, b in zip(row, col) if a and b), zero) for col in cols] for row in A]


def inverse(A: Sequence[Sequence], zero, one):
    n = len(A)
    aug = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(A)]
    R, pivots = rref(aug, zero, one)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [r[n:] for r in R]


def determinant(A: Sequence[Sequence], zero, one):
    M = [list(r) for r in A]
    n = len(M)
    det = one
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c]), None)
        if piv is None:
            return zero
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = -det
        det = det * M[c][c]
        inv = one / M[c][c]
        for i in range(c + 1, n):
            if M[i][c]:
                f = M[i][c] * inv
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return det
