"""Exact integer linear algebra: Smith normal form and finitely generated
abelian groups.

Matrices are plain lists of rows of Python ints, so there is no overflow.
Everything here is deterministic; the Smith pivot is always the nonzero
entry of least absolute value (ties broken by lowest row, then column).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm, prod
from typing import Sequence

IntMatrix = list[list[int]]


class ConsistencyError(ValueError):
    """Raised when a containment precondition between lattices fails."""


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> IntMatrix:
    if not A:
        return []
    inner = len(B)
    cols = len(B[0]) if B else 0
    Bt = [[B[k][j] for k in range(inner)] for j in range(cols)]
    return [[sum(a * b for a, b in zip(row, col) if a) for col in Bt] for row in A]


def matvec(A: Sequence[Sequence[int]], v: Sequence[int]) -> list[int]:
    return [sum(a * x for a, x in zip(row, v) if a) for row in A]


def transpose(A: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
    if not A:
        return [[] for _ in range(cols or 0)]
    return [list(col) for col in zip(*A)]


def determinant(A: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(r) for r in A]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


@dataclass
class SmithForm:
    """U·M·V = S, plus the inverses of U and V when they were tracked."""

    S: IntMatrix
    U: IntMatrix
    V: IntMatrix
    U_inv: IntMatrix | None
    V_inv: IntMatrix | None
    diagonal: list[int]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)


def _sparse_add(row: dict, k: int, delta: int) -> int:
    v = row.get(k, 0) + delta
    if v:
        row[k] = v
    else:
        row.pop(k, None)
    return v


def smith_form(M: Sequence[Sequence[int]], rows: int | None = None,
               cols: int | None = None, track_inverses: bool = False) -> SmithForm:
    """Full Smith normal form computation.

    ``rows``/``cols`` are only needed to give shape to an empty matrix.
    Works on sparse rows with a column index; pivots are the least absolute
    nonzero entry (ties: lowest row, then lowest column).
    """
    m = len(M) if rows is None else rows
    n = (len(M[0]) if M else 0) if cols is None else cols
    if M and any(len(r) != n for r in M):
        raise ValueError("ragged matrix")
    A = [{j: int(x) for j, x in enumerate(r) if x} for r in M] if M else [{} for _ in range(m)]
    where = [set() for _ in range(n)]
    for i, r in enumerate(A):
        for j in r:
            where[j].add(i)
    # U and Vi change by row operations, V and Ui by column operations
    U = [{i: 1} for i in range(m)]
    Vc = [{j: 1} for j in range(n)]
    Uic = [{i: 1} for i in range(m)] if track_inverses else None
    Vi = [{j: 1} for j in range(n)] if track_inverses else None

    def swap_rows(i, j):
        if i == j:
            return
        for k in A[i]:
            where[k].discard(i)
        for k in A[j]:
            where[k].discard(j)
        A[i], A[j] = A[j], A[i]
        for k in A[i]:
            where[k].add(i)
        for k in A[j]:
            where[k].add(j)
        U[i], U[j] = U[j], U[i]
        if Uic is not None:
            Uic[i], Uic[j] = Uic[j], Uic[i]

    def swap_cols(i, j):
        if i == j:
            return
        for r in where[i] | where[j]:
            row = A[r]
            a, b = row.pop(i, 0), row.pop(j, 0)
            if a:
                row[j] = a
            if b:
                row[i] = b
        where[i], where[j] = where[j], where[i]
        Vc[i], Vc[j] = Vc[j], Vc[i]
        if Vi is not None:
            Vi[i], Vi[j] = Vi[j], Vi[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        a_dst = A[dst]
        for k, x in A[src].items():
            v = a_dst.get(k, 0) + q * x
            if v:
                a_dst[k] = v
                where[k].add(dst)
            else:
                del a_dst[k]
                where[k].discard(dst)
        u_dst = U[dst]
        for k, x in U[src].items():
            _sparse_add(u_dst, k, q * x)
        if Uic is not None:
            c_src = Uic[src]
            for k, x in Uic[dst].items():
                _sparse_add(c_src, k, -q * x)

    def add_col(dst, src, q):
        # col_dst += q * col_src
        for r in list(where[src]):
            if _sparse_add(A[r], dst, q * A[r][src]):
                where[dst].add(r)
            else:
                where[dst].discard(r)
        v_dst = Vc[dst]
        for k, x in Vc[src].items():
            _sparse_add(v_dst, k, q * x)
        if Vi is not None:
            v_src = Vi[src]
            for k, x in Vi[dst].items():
                _sparse_add(v_src, k, -q * x)

    def negate_row(i):
        A[i] = {k: -x for k, x in A[i].items()}
        U[i] = {k: -x for k, x in U[i].items()}
        if Uic is not None:
            Uic[i] = {k: -x for k, x in Uic[i].items()}

    def find_pivot(t):
        # rows below t have nothing left of column t, so every entry counts
        best, bi = None, None
        for i in range(t, m):
            row = A[i]
            if row:
                a = min(map(abs, row.values()))
                if best is None or a < best:
                    best, bi = a, i
                    if a == 1:
                        break
        if best is None:
            return None
        bj = min(j for j, x in A[bi].items() if abs(x) == best)
        return best, bi, bj

    t = 0
    known = 1
    while t < min(m, n):
        while True:
            best = find_pivot(t)
            if best is None:
                break
            _, pi, pj = best
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = A[t][t]
            clean = True
            for i in sorted(r for r in where[t] if r > t):
                add_row(i, t, -(A[i][t] // p))
                if t in A[i]:
                    clean = False
            for j in sorted(k for k in A[t] if k > t):
                add_col(j, t, -(A[t][j] // p))
                if j in A[t]:
                    clean = False
            if not clean:
                continue
            bad = None
            # integer row/column operations keep a verified divisor dividing
            # the whole block, so a repeat pivot needs no rescan
            if p != 1 and p != known:
                for i in range(t + 1, m):
                    if any(x % p for x in A[i].values()):
                        bad = i
                        break
            if bad is None:
                known = p
                break
            add_row(t, bad, 1)
        if best is None:
            break
        if A[t][t] < 0:
            negate_row(t)
        t += 1

    def dense_rows(rs, width):
        out = [[0] * width for _ in rs]
        for i, r in enumerate(rs):
            for k, x in r.items():
                out[i][k] = x
        return out

    def dense_cols(cs, height):
        out = [[0] * len(cs) for _ in range(height)]
        for j, c in enumerate(cs):
            for k, x in c.items():
                out[k][j] = x
        return out

    S = dense_rows(A, n)
    diagonal = [S[i][i] for i in range(min(m, n))]
    return SmithForm(S, dense_rows(U, m), dense_cols(Vc, n),
                     dense_cols(Uic, m) if Uic is not None else None,
                     dense_rows(Vi, n) if Vi is not None else None, diagonal)


def smith_normal_form(M: Sequence[Sequence[int]], rows: int | None = None,
                      cols: int | None = None) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (S, U, V) with U·M·V = S, U and V unimodular."""
    sf = smith_form(M, rows, cols)
    return sf.S, sf.U, sf.V


def integer_kernel(M: Sequence[Sequence[int]], rows: int, cols: int) -> IntMatrix:
    """Basis (as a list of column vectors) of {x in Z^cols : M x = 0}."""
    sf = smith_form(M, rows, cols)
    r = sf.rank
    return [[sf.V[i][j] for i in range(cols)] for j in range(r, cols)]


@dataclass(frozen=True)
class FgAbelianGroup:
    """Z/d1 + ... + Z/dk + Z^r in invariant-factor form (0 marks a free factor)."""

    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        fs = tuple(int(d) for d in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", fs)
        if any(d < 0 or d == 1 for d in fs):
            raise ValueError(f"invalid invariant factors {fs}")
        seen_free = False
        prev = None
        for d in fs:
            if d == 0:
                seen_free = True
                continue
            if seen_free:
                raise ValueError("free factors must come last")
            if prev is not None and d % prev:
                raise ValueError(f"invariant factors {fs} do not form a divisibility chain")
            prev = d

    @classmethod
    def from_diagonal(cls, diagonal: Sequence[int]) -> FgAbelianGroup:
        """Build from a Smith diagonal: units are dropped, zeros become free factors."""
        torsion = [abs(d) for d in diagonal if abs(d) > 1]
        free = [0 for d in diagonal if d == 0]
        return cls(tuple(sorted(torsion, key=lambda d: d)) + tuple(free))

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def free_rank(self) -> int:
        return sum(1 for d in self.invariant_factors if d == 0)

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int:
        if not self.is_finite:
            raise ValueError("infinite group")
        return prod(self.invariant_factors)

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors

    def reduce(self, v: Sequence[int]) -> tuple[int, ...]:
        return tuple(x % d if d else x for x, d in zip(v, self.invariant_factors))

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.rank

    def elements(self):
        """All elements in lexicographic coordinate order (finite groups only)."""
        from itertools import product
        return [tuple(t) for t in product(*(range(d) for d in self.invariant_factors))]

    def __str__(self):
        if not self.invariant_factors:
            return "0"
        return " + ".join(f"Z/{d}" if d else "Z" for d in self.invariant_factors)


class Cokernel:
    """Z^rows / image(M) together with the projection onto invariant-factor coordinates."""

    def __init__(self, M: Sequence[Sequence[int]], rows: int, cols: int | None = None):
        cols = (len(M[0]) if M else 0) if cols is None else cols
        sf = smith_form(M, rows, cols, track_inverses=True)
        self.rows = rows
        diag = sf.diagonal + [0] * (rows - len(sf.diagonal))
        self._keep = [i for i, d in enumerate(diag) if abs(d) != 1]
        self._U = sf.U
        self._Ui = sf.U_inv
        self.group = FgAbelianGroup.from_diagonal([diag[i] for i in self._keep])
        # from_diagonal sorts torsion before free; diagonal is already in that order
        # since Smith entries form a chain and zeros trail.

    def project(self, v: Sequence[int]) -> tuple[int, ...]:
        y = matvec(self._U, v)
        return self.group.reduce([y[i] for i in self._keep])

    def lift(self, element: Sequence[int]) -> list[int]:
        out = [0] * self.rows
        for coord, i in zip(element, self._keep):
            if coord:
                for r in range(self.rows):
                    out[r] += coord * self._Ui[r][i]
        return out


def cokernel_structure(M: Sequence[Sequence[int]], rows: int | None = None):
    """Return (group, projection) for Z^rows / image(M)."""
    rows = len(M) if rows is None else rows
    ck = Cokernel(M, rows)
    return ck.group, ck.project


def _relations(moduli: Sequence[int]) -> list[list[int]]:
    """Columns m_i e_i for every nonzero modulus, as column vectors."""
    n = len(moduli)
    return [[m if k == i else 0 for k in range(n)] for i, m in enumerate(moduli) if m]


def _columns_to_matrix(columns: Sequence[Sequence[int]], rows: int) -> IntMatrix:
    return [[c[i] for c in columns] for i in range(rows)]


class ModularSystem:
    """Reusable solver for M x = b modulo per-row moduli (0 means over Z).

    The Smith form of [M | diag(moduli)] is computed once; each solve is
    then a matrix-vector product.
    """

    def __init__(self, M: Sequence[Sequence[int]], moduli: Sequence[int],
                 rows: int | None = None, cols: int | None = None):
        self.rows = len(M) if rows is None else rows
        self.cols = (len(M[0]) if M else 0) if cols is None else cols
        if len(moduli) != self.rows:
            raise ValueError(f"moduli has length {len(moduli)}, matrix has {self.rows} rows")
        self.moduli = list(moduli)
        rel = _relations(moduli)
        A = [list(M[i]) + [c[i] for c in rel] for i in range(self.rows)] if self.rows else []
        self.total_cols = self.cols + len(rel)
        self._sf = smith_form(A, self.rows, self.total_cols)

    def solve(self, target: Sequence[int]) -> list[int] | None:
        if len(target) != self.rows:
            raise ValueError(f"target has length {len(target)}, expected {self.rows}")
        sf = self._sf
        y = matvec(sf.U, target)
        r = sf.rank
        w = [0] * self.total_cols
        for i in range(self.rows):
            if i < r:
                q, rem = divmod(y[i], sf.diagonal[i])
                if rem:
                    return None
                w[i] = q
            elif y[i]:
                return None
        x = matvec(sf.V, w)[: self.cols]
        if self.moduli and all(self.moduli):
            # shifting any coordinate by lcm(moduli) preserves every congruence
            L = lcm(*self.moduli)
            x = [xi % L for xi in x]
        return x


def solve_modular(M: Sequence[Sequence[int]], target: Sequence[int],
                  moduli: Sequence[int]) -> list[int] | None:
    """Solve M·x ≡ target componentwise modulo ``moduli``; None if unsolvable."""
    if len(target) != len(M) and not (len(M) == 0 and len(target) == len(moduli)):
        raise ValueError("target length does not match matrix rows")
    return ModularSystem(M, moduli, rows=len(target)).solve(target)


class Subquotient:
    """(kernel lattice) / (image lattice) inside Z^N / diag(moduli).

    Both lattices are given by generating columns; the ambient relations are
    added to each. ``lift`` maps invariant-factor coordinates back to ambient
    vectors and ``project`` sends an ambient vector of the kernel to its class.
    """

    def __init__(self, kernel_columns: Sequence[Sequence[int]],
                 image_columns: Sequence[Sequence[int]], moduli: Sequence[int]):
        N = len(moduli)
        self.moduli = list(moduli)
        rel = _relations(moduli)
        kcols = [list(c) for c in kernel_columns] + rel
        icols = [list(c) for c in image_columns] + rel
        # lattice basis of the kernel: columns of U^{-1}·S for the nonzero part
        ksf = smith_form(_columns_to_matrix(kcols, N), N, len(kcols), track_inverses=True)
        r = ksf.rank
        self._basis = [[ksf.U_inv[i][j] * ksf.diagonal[j] for i in range(N)] for j in range(r)]
        self._kU_cols = [{i: ksf.U[i][j] for i in range(N) if ksf.U[i][j]} for j in range(N)]
        self._N = N
        self._kdiag = ksf.diagonal[:r]
        self._r = r
        coords = []
        for idx, c in enumerate(icols):
            x = self._kernel_coords(c)
            if x is None:
                raise ConsistencyError(f"image generator {idx} does not lie in the kernel lattice")
            coords.append(x)
        C = _columns_to_matrix(coords, r)
        self._q = Cokernel(C, r, len(coords))
        self.group = self._q.group

    def _kernel_coords(self, v: Sequence[int]) -> list[int] | None:
        y = [0] * self._N
        for k, x in enumerate(v):
            if x:
                for i, u in self._kU_cols[k].items():
                    y[i] += x * u
        out = []
        for i, yi in enumerate(y):
            if i < self._r:
                q, rem = divmod(yi, self._kdiag[i])
                if rem:
                    return None
                out.append(q)
            elif yi:
                return None
        return out

    def contains(self, v: Sequence[int]) -> bool:
        return self._kernel_coords(v) is not None

    def project(self, v: Sequence[int]) -> tuple[int, ...]:
        c = self._kernel_coords(v)
        if c is None:
            raise ConsistencyError("vector is not in the kernel lattice")
        return self._q.project(c)

    def lift(self, element: Sequence[int]) -> list[int]:
        c = self._q.lift(element)
        N = len(self.moduli)
        out = [0] * N
        for j, cj in enumerate(c):
            if cj:
                b = self._basis[j]
                for i in range(N):
                    out[i] += cj * b[i]
        return [x % m if m else x for x, m in zip(out, self.moduli)]


def subquotient_structure(kernel_basis: Sequence[Sequence[int]],
                          image_basis: Sequence[Sequence[int]],
                          ambient_moduli: Sequence[int]):
    """Return (group, lift) for kernel / image.

    Bases are given as lists of column vectors in the ambient Z^N.
    """
    sq = Subquotient(kernel_basis, image_basis, ambient_moduli)
    return sq.group, sq.lift
