"""Inhomogeneous (bar) cochains, the twisted coboundary, and cohomology via
Smith normal form.

Cochain values are written additively in the abstract module; the
multiplicative notation of L^x is recovered through a unit embedding at the
boundary (see :mod:`galoiscoh.extensions`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Callable, NamedTuple, Sequence

from .abelian import FgAbelianGroup, ModularSystem, Subquotient, integer_kernel
from .gmodules import GModule, TwModMorphism, validate_twmorphism
from .groups import tuple_index

DEFAULT_MAX_TABLE_ENTRIES = 10 ** 6
max_table_entries = DEFAULT_MAX_TABLE_ENTRIES


class ResourceLimitError(RuntimeError):
    pass


class CocycleError(ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class Verdict(NamedTuple):
    ok: bool
    witness: object = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class Cochain:
    module: GModule
    degree: int
    values: tuple[tuple[int, ...], ...] = field(repr=False)

    def __post_init__(self):
        n = self.module.group.order ** self.degree
        if len(self.values) != n:
            raise ValueError(f"degree-{self.degree} cochain needs {n} values, got {len(self.values)}")
        red = self.module.reduce
        object.__setattr__(self, "values", tuple(red(v) for v in self.values))

    def __call__(self, *args: int) -> tuple[int, ...]:
        return self.values[tuple_index(args, self.module.group.order)]

    def _check(self, other: Cochain):
        if other.module != self.module or other.degree != self.degree:
            raise ValueError("cochains live in different modules or degrees")

    def __add__(self, other: Cochain) -> Cochain:
        self._check(other)
        add = self.module.add
        return Cochain(self.module, self.degree, tuple(add(a, b) for a, b in zip(self.values, other.values)))

    def __neg__(self) -> Cochain:
        neg = self.module.neg
        return Cochain(self.module, self.degree, tuple(neg(a) for a in self.values))

    def __sub__(self, other: Cochain) -> Cochain:
        return self + (-other)

    def scale(self, k: int) -> Cochain:
        return Cochain(self.module, self.degree, tuple(self.module.scale(k, a) for a in self.values))

    def is_zero(self) -> bool:
        z = self.module.zero()
        return all(v == z for v in self.values)

    def is_normalized(self) -> bool:
        z = self.module.zero()
        G = self.module.group
        return all(v == z for t, v in zip(product(range(G.order), repeat=self.degree), self.values)
                   if 0 in t)

    def flat(self) -> list[int]:
        return [x for v in self.values for x in v]

    def items(self):
        G = self.module.group
        return zip(product(range(G.order), repeat=self.degree), self.values)


def zero_cochain(M: GModule, n: int) -> Cochain:
    return Cochain(M, n, (M.zero(),) * M.group.order ** n)


def cochain_from_function(M: GModule, n: int, fn: Callable) -> Cochain:
    return Cochain(M, n, tuple(tuple(fn(*t)) for t in product(range(M.group.order), repeat=n)))


def cochain_from_flat(M: GModule, n: int, flat: Sequence[int]) -> Cochain:
    r = M.rank
    return Cochain(M, n, tuple(tuple(flat[i * r:(i + 1) * r]) for i in range(M.group.order ** n)))


def cochain_from_dict(M: GModule, n: int, values: dict) -> Cochain:
    """Sparse construction: keys are n-tuples, omitted tuples are zero."""
    G = M.group
    vals = [M.zero()] * G.order ** n
    for t, v in values.items():
        t = tuple(t)
        if len(t) != n or any(not 0 <= x < G.order for x in t):
            raise ValueError(f"bad cochain argument {t}")
        if len(v) != M.rank:
            raise ValueError(f"value {v} has wrong length for {M.underlying}")
        vals[tuple_index(t, G.order)] = tuple(v)
    return Cochain(M, n, tuple(vals))


def coboundary(c: Cochain) -> Cochain:
    """(dc)(g1..g_{n+1}) = g1·c(g2..) + sum_i (-1)^i c(.., g_i g_{i+1}, ..) + (-1)^{n+1} c(g1..gn)."""
    M, n = c.module, c.degree
    G = M.group
    q, tab = G.order, G.table
    vals = c.values
    r = M.rank
    out = []
    for t in product(range(q), repeat=n + 1):
        acc = list(M.act(t[0], vals[tuple_index(t[1:], q)]))
        for i in range(1, n + 1):
            merged = t[:i - 1] + (tab[t[i - 1]][t[i]],) + t[i + 1:]
            v = vals[tuple_index(merged, q)]
            s = -1 if i % 2 else 1
            for k in range(r):
                acc[k] += s * v[k]
        v = vals[tuple_index(t[:n], q)]
        s = -1 if (n + 1) % 2 else 1
        for k in range(r):
            acc[k] += s * v[k]
        out.append(tuple(acc))
    return Cochain(M, n + 1, tuple(out))


def is_cocycle(c: Cochain) -> Verdict:
    """True iff dc = 0; otherwise the first (n+1)-tuple where dc is nonzero."""
    d = coboundary(c)
    zero = c.module.zero()
    for t, v in d.items():
        if v != zero:
            return Verdict(False, t)
    return Verdict(True)


def _guard(M: GModule, n: int, limit: int | None):
    limit = max_table_entries if limit is None else limit
    size = M.group.order ** (n + 1) * max(M.rank, 1)
    if size > limit:
        raise ResourceLimitError(
            f"degree {n} over a group of order {M.group.order} needs {size} table entries (limit {limit})")


@lru_cache(maxsize=256)
def coboundary_matrix(M: GModule, n: int) -> tuple[list[list[int]], int, int]:
    """Integer matrix of d^n: C^n -> C^{n+1} on ambient coordinates."""
    G = M.group
    q, tab, r = G.order, G.table, M.rank
    rows, cols = q ** (n + 1) * r, q ** n * r
    D = [[0] * cols for _ in range(rows)]
    for ti, t in enumerate(product(range(q), repeat=n + 1)):
        base = ti * r
        blk = tuple_index(t[1:], q) * r
        A = M.action[t[0]]
        for i in range(r):
            for j in range(r):
                D[base + i][blk + j] += A[i][j]
        for i in range(1, n + 1):
            blk = tuple_index(t[:i - 1] + (tab[t[i - 1]][t[i]],) + t[i + 1:], q) * r
            s = -1 if i % 2 else 1
            for k in range(r):
                D[base + k][blk + k] += s
        blk = tuple_index(t[:n], q) * r
        s = -1 if (n + 1) % 2 else 1
        for k in range(r):
            D[base + k][blk + k] += s
    return D, rows, cols


def _moduli(M: GModule, n: int) -> list[int]:
    return list(M.factors) * (M.group.order ** n)


@lru_cache(maxsize=256)
def _coboundary_system(M: GModule, n: int) -> ModularSystem:
    """Solver for d^n(x) = target in C^{n+1}."""
    D, rows, cols = coboundary_matrix(M, n)
    return ModularSystem(D, _moduli(M, n + 1), rows, cols)


@dataclass(frozen=True, eq=False)
class CohomologyGroup:
    module: GModule
    degree: int
    structure: FgAbelianGroup
    generators: tuple[Cochain, ...]
    _sq: Subquotient = field(repr=False)

    @property
    def order(self) -> int:
        return self.structure.order

    def classify(self, z: Cochain) -> tuple[int, ...]:
        """Coordinates of the class of the cocycle z in terms of the generators."""
        if z.module != self.module or z.degree != self.degree:
            raise ValueError("cochain does not belong to this cohomology group")
        if not is_cocycle(z):
            raise CocycleError("not a cocycle")
        return self._sq.project(z.flat())

    def cocycle(self, coords: Sequence[int]) -> Cochain:
        """A representative cocycle for the given class coordinates."""
        return cochain_from_flat(self.module, self.degree, self._sq.lift(coords))


def compute_cohomology(M: GModule, n: int, max_entries: int | None = None) -> CohomologyGroup:
    """H^n(G; M) = ker d^n / im d^{n-1}; H^0 is the fixed submodule."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    _guard(M, n, max_entries)
    return _compute_cohomology(M, n)


@lru_cache(maxsize=128)
def _compute_cohomology(M: GModule, n: int) -> CohomologyGroup:
    D, rows, cols = coboundary_matrix(M, n)
    mod_next = _moduli(M, n + 1)
    rel = [i for i, m in enumerate(mod_next) if m]
    aug = [D[i] + [mod_next[i] if i == k else 0 for k in rel] for i in range(rows)]
    kern = integer_kernel(aug, rows, cols + len(rel))
    kernel_cols = [v[:cols] for v in kern]
    if n > 0:
        P, prow, pcol = coboundary_matrix(M, n - 1)
        image_cols = [[P[i][j] for i in range(prow)] for j in range(pcol)]
    else:
        image_cols = []
    sq = Subquotient(kernel_cols, image_cols, _moduli(M, n))
    gens = []
    for i in range(sq.group.rank):
        e = [int(i == j) for j in range(sq.group.rank)]
        gens.append(cochain_from_flat(M, n, sq.lift(e)))
    return CohomologyGroup(M, n, sq.group, tuple(gens), sq)


def express_as_coboundary(z: Cochain, check: bool = True) -> Cochain | None:
    """Some tau with d(tau) = z, or None when z is not a coboundary."""
    if z.degree == 0:
        raise ValueError("degree-0 cochains are never coboundaries")
    if check:
        v = is_cocycle(z)
        if not v:
            raise CocycleError(f"not a cocycle (fails at {v.witness})", v.witness)
    M, n = z.module, z.degree
    _guard(M, n - 1, None)
    x = _coboundary_system(M, n - 1).solve(z.flat())
    if x is None:
        return None
    tau = cochain_from_flat(M, n - 1, x)
    assert coboundary(tau) == z, "coboundary solver produced a wrong witness"
    return tau


def cohomologous(z1: Cochain, z2: Cochain) -> Cochain | None:
    """Witness tau with z1 - z2 = d(tau), or None."""
    for z in (z1, z2):
        v = is_cocycle(z)
        if not v:
            raise CocycleError(f"not a cocycle (fails at {v.witness})", v.witness)
    if z1.module != z2.module or z1.degree != z2.degree:
        raise ValueError("cocycles live in different modules or degrees")
    return express_as_coboundary(z1 - z2, check=False)


def normalize_cocycle(z: Cochain) -> tuple[Cochain, Cochain]:
    """Return (z', tau) with z' = z - d(tau) vanishing whenever an argument is
    the identity. Already-normalized input comes back unchanged."""
    M, n = z.module, z.degree
    if n == 0 or z.is_normalized():
        return z, zero_cochain(M, max(n - 1, 0))
    v = is_cocycle(z)
    if not v:
        raise CocycleError(f"not a cocycle (fails at {v.witness})", v.witness)
    D, rows, cols = coboundary_matrix(M, n - 1)
    r = M.rank
    q = M.group.order
    keep = []
    for ti, t in enumerate(product(range(q), repeat=n)):
        if 0 in t:
            keep.extend(range(ti * r, (ti + 1) * r))
    sub = [D[i] for i in keep]
    flat = z.flat()
    mods = _moduli(M, n)
    x = ModularSystem(sub, [mods[i] for i in keep], len(keep), cols).solve([flat[i] for i in keep])
    if x is None:
        raise AssertionError("cocycles are always cohomologous to normalized ones")
    tau = cochain_from_flat(M, n - 1, x)
    out = z - coboundary(tau)
    assert out.is_normalized()
    return out, tau


def inflate(m: TwModMorphism, c: Cochain) -> Cochain:
    """(infl c)(h1..hn) = phi(c(f(h1), ..., f(hn)))."""
    if c.module != m.source:
        raise ValueError("cochain module does not match the morphism's source pair")
    H = m.target.group
    f = m.group_map.images
    q = m.source.group.order
    vals = c.values
    return Cochain(m.target, c.degree, tuple(
        m.apply(vals[tuple_index([f[h] for h in t], q)])
        for t in product(range(H.order), repeat=c.degree)))


def checked_inflate(m: TwModMorphism, c: Cochain) -> Cochain:
    validate_twmorphism(m)
    return inflate(m, c)
