"""Exact arithmetic in finite fields F_{p^n} and cyclotomic fields Q(zeta_N).

Both kinds are stored as polynomial residues in the power basis of a fixed
generator (x for finite fields, zeta for cyclotomic fields), low degree first.
The rationals are the cyclotomic field of conductor 1 and F_p is the finite
field of degree 1, so base fields need no separate type.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product
from typing import Sequence

from .groups import FiniteGroup, make_cyclic, unit_residues, units_group


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def _poly_mod_p(a: list[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of a by the monic polynomial m over F_p (low-first lists)."""
    a = [x % p for x in a]
    d = len(m) - 1
    for k in range(len(a) - 1, d - 1, -1):
        c = a[k]
        if c:
            for i in range(d + 1):
                a[k - d + i] = (a[k - d + i] - c * m[i]) % p
    return (a[:d] + [0] * d)[:d]


def _divides_mod_p(f: Sequence[int], g: Sequence[int], p: int) -> bool:
    """Whether the monic polynomial f divides g over F_p."""
    return not any(_poly_mod_p(list(g), f, p))


@lru_cache(maxsize=None)
def least_irreducible(p: int, n: int) -> tuple[int, ...]:
    """Monic irreducible of degree n over F_p with the least (c0, ..., c_{n-1})."""
    for low in product(range(p), repeat=n):
        f = list(low) + [1]
        if n > 1 and low[0] == 0:
            continue
        if all(not _divides_mod_p(list(h) + [1], f, p)
               for d in range(1, n // 2 + 1)
               for h in product(range(p), repeat=d)):
            return tuple(f)
    raise AssertionError("unreachable: irreducibles exist in every degree")


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, low degree first."""
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            den = cyclotomic_polynomial(d)
            q = [0] * (len(num) - len(den) + 1)
            r = list(num)
            for k in range(len(q) - 1, -1, -1):
                c = r[k + len(den) - 1]
                q[k] = c
                for i, b in enumerate(den):
                    r[k + i] -= c * b
            assert not any(r), "cyclotomic division left a remainder"
            num = q
    return tuple(num)


def euler_phi(n: int) -> int:
    return len(unit_residues(n)) if n > 2 else 1


@dataclass(frozen=True)
class FieldSpec:
    kind: str
    p: int = 0
    n: int = 1
    conductor: int = 1
    modulus: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if self.kind == "finite":
            if not is_prime(self.p):
                raise ValueError(f"{self.p} is not prime")
            if self.n < 1:
                raise ValueError("extension degree must be positive")
            object.__setattr__(self, "modulus", least_irreducible(self.p, self.n))
        elif self.kind == "cyclotomic":
            if self.conductor < 1:
                raise ValueError("conductor must be positive")
            object.__setattr__(self, "modulus", cyclotomic_polynomial(self.conductor))
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    # -- construction helpers
    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    @property
    def characteristic(self) -> int:
        return self.p if self.is_finite else 0

    @property
    def size(self) -> int:
        if not self.is_finite:
            raise ValueError("cyclotomic fields are infinite")
        return self.p ** self.n

    def base_field(self) -> FieldSpec:
        return finite_field(self.p, 1) if self.is_finite else rationals()

    def _coerce_scalar(self, c):
        return c % self.p if self.is_finite else Fraction(c)

    def element(self, coeffs: Sequence) -> FieldElement:
        d = self.degree
        cs = [self._coerce_scalar(c) for c in coeffs]
        if len(cs) > d:
            if self.is_finite:
                cs = _poly_mod_p([int(c) for c in cs], self.modulus, self.p)
            else:
                cs = _reduce_rational(cs, self.modulus)
        cs = list(cs) + [self._coerce_scalar(0)] * (d - len(cs))
        return FieldElement(self, tuple(cs))

    def scalar(self, c) -> FieldElement:
        return self.element([c])

    @cached_property
    def zero(self) -> FieldElement:
        return self.element([])

    @cached_property
    def one(self) -> FieldElement:
        return self.element([1])

    @cached_property
    def gen(self) -> FieldElement:
        """x (finite) or zeta_N (cyclotomic)."""
        return self.element([0, 1])

    def elements(self):
        """All elements, ordered by coefficient tuple (finite fields only)."""
        if not self.is_finite:
            raise ValueError("cannot enumerate an infinite field")
        return [FieldElement(self, c) for c in product(range(self.p), repeat=self.degree)]

    @cached_property
    def _zeta_powers(self) -> tuple[FieldElement, ...]:
        N = self.conductor
        out, z = [], self.one
        for _ in range(N):
            out.append(z)
            z = z * self.gen
        return tuple(out)

    def zeta_power(self, k: int) -> FieldElement:
        return self._zeta_powers[k % self.conductor]

    def to_json(self) -> dict:
        if self.is_finite:
            return {"kind": "finite", "p": self.p, "n": self.n}
        return {"kind": "cyclotomic", "conductor": self.conductor}

    def __repr__(self):
        if self.is_finite:
            return f"F_{self.p}^{self.n}" if self.n > 1 else f"F_{self.p}"
        return f"Q(zeta_{self.conductor})" if self.conductor > 2 else "Q"


def finite_field(p: int, n: int = 1) -> FieldSpec:
    return FieldSpec("finite", p=p, n=n)


def cyclotomic_field(conductor: int) -> FieldSpec:
    return FieldSpec("cyclotomic", conductor=conductor)


def rationals() -> FieldSpec:
    return FieldSpec("cyclotomic", conductor=1)


def _reduce_rational(cs: list, m: Sequence[int]) -> list:
    cs = list(cs)
    d = len(m) - 1
    for k in range(len(cs) - 1, d - 1, -1):
        c = cs[k]
        if c:
            for i in range(d + 1):
                cs[k - d + i] -= c * m[i]
    return cs[:d]


class ZeroDivisionInField(ZeroDivisionError):
    pass


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    coeffs: tuple

    def _other(self, b) -> FieldElement:
        if isinstance(b, FieldElement):
            if b.spec != self.spec:
                raise ValueError(f"field mismatch: {self.spec} vs {b.spec}")
            return b
        return self.spec.scalar(b)

    def __add__(self, b):
        b = self._other(b)
        if self.spec.is_finite:
            p = self.spec.p
            return FieldElement(self.spec, tuple((x + y) % p for x, y in zip(self.coeffs, b.coeffs)))
        return FieldElement(self.spec, tuple(x + y for x, y in zip(self.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        if self.spec.is_finite:
            p = self.spec.p
            return FieldElement(self.spec, tuple(-x % p for x in self.coeffs))
        return FieldElement(self.spec, tuple(-x for x in self.coeffs))

    def __sub__(self, b):
        return self + (-self._other(b))

    def __rsub__(self, b):
        return self._other(b) - self

    def __mul__(self, b):
        b = self._other(b)
        a_c, b_c = self.coeffs, b.coeffs
        d = len(a_c)
        prod_ = [0] * (2 * d - 1) if d else []
        for i, x in enumerate(a_c):
            if x:
                for j, y in enumerate(b_c):
                    if y:
                        prod_[i + j] += x * y
        return self.spec.element(prod_)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.spec.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> FieldElement:
        if not self:
            raise ZeroDivisionInField("inverse of zero")
        spec = self.spec
        if spec.is_finite:
            return self ** (spec.size - 2)
        # solve (multiplication by self) · y = 1 over Q
        from .linalg import solve
        M = self.multiplication_matrix()
        y = solve(M, [Fraction(1)] + [Fraction(0)] * (spec.degree - 1), Fraction(0), Fraction(1))
        return FieldElement(spec, tuple(y))

    def __truediv__(self, b):
        return self * self._other(b).inverse()

    def __rtruediv__(self, b):
        return self._other(b) * self.inverse()

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, b):
        if isinstance(b, FieldElement):
            return self.spec == b.spec and self.coeffs == b.coeffs
        if isinstance(b, (int, Fraction)):
            return self.coeffs == self.spec.scalar(b).coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, self.coeffs))

    def multiplication_matrix(self) -> list[list]:
        """Matrix over the base field of y -> self·y in the power basis."""
        d = self.spec.degree
        cols = [(self * self.spec.element([0] * k + [1])).coeffs for k in range(d)]
        return [[cols[j][i] for j in range(d)] for i in range(d)]

    def base_coords(self) -> list[FieldElement]:
        """Coordinates in the power basis as elements of the base field."""
        base = self.spec.base_field()
        return [base.scalar(c) for c in self.coeffs]

    def to_json(self) -> list:
        if self.spec.is_finite:
            return [int(c) for c in self.coeffs]
        return [int(c) if c.denominator == 1 else str(c) for c in self.coeffs]

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                v = "x" if self.spec.is_finite else "z"
                mono = "" if i == 0 else (v if i == 1 else f"{v}^{i}")
                coef = str(c) if (c != 1 or i == 0) else ""
                terms.append(coef + ("*" if coef and mono else "") + mono)
        return " + ".join(terms) or "0"


@dataclass(frozen=True)
class FieldAut:
    """Frobenius power k (finite) or zeta -> zeta^k (cyclotomic)."""

    spec: FieldSpec
    k: int

    def __post_init__(self):
        if self.spec.is_finite:
            if not 0 <= self.k < self.spec.n:
                raise ValueError(f"Frobenius power {self.k} out of range")
        else:
            N = self.spec.conductor
            if N > 2 and not (0 < self.k < N and _gcd(self.k, N) == 1):
                raise ValueError(f"{self.k} is not a unit mod {N}")

    def __call__(self, a: FieldElement) -> FieldElement:
        return apply_aut(self, a)

    def compose(self, other: FieldAut) -> FieldAut:
        """self ∘ other."""
        if self.spec.is_finite:
            return FieldAut(self.spec, (self.k + other.k) % self.spec.n)
        N = self.spec.conductor
        return FieldAut(self.spec, self.k * other.k % N if N > 2 else 1)

    @property
    def is_identity(self) -> bool:
        return self.k == (0 if self.spec.is_finite else 1)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def apply_aut(g: FieldAut, a: FieldElement) -> FieldElement:
    spec = a.spec
    if g.spec != spec:
        raise ValueError("automorphism and element live in different fields")
    if spec.is_finite:
        return a ** (spec.p ** g.k)
    if spec.conductor <= 2:
        return a
    out = spec.zero
    for i, c in enumerate(a.coeffs):
        if c:
            out = out + spec.zeta_power(i * g.k) * c
    return out


def identity_aut(spec: FieldSpec) -> FieldAut:
    return FieldAut(spec, 0 if spec.is_finite else 1)


@lru_cache(maxsize=None)
def galois_group(spec: FieldSpec) -> tuple[FiniteGroup, tuple[FieldAut, ...]]:
    """Gal(L/K) over the prime field (finite) or Q (cyclotomic), with the
    automorphism attached to each group index."""
    if spec.is_finite:
        return make_cyclic(spec.n), tuple(FieldAut(spec, k) for k in range(spec.n))
    G, res = units_group(spec.conductor)
    return G, tuple(FieldAut(spec, k) for k in res)


def primitive_element(spec: FieldSpec) -> FieldElement:
    """Least generator of the unit group under the coefficient-tuple order."""
    q = spec.size
    order = q - 1
    primes = [r for r in range(2, order + 1) if order % r == 0 and is_prime(r)]
    for a in spec.elements():
        if a and all(a ** (order // r) != spec.one for r in primes):
            return a
    raise AssertionError("unreachable: unit groups of finite fields are cyclic")


@dataclass(frozen=True)
class UnitsTable:
    """Discrete-log dictionary k <-> alpha^k for F_q^x."""

    spec: FieldSpec
    alpha: FieldElement
    powers: tuple[FieldElement, ...]

    @cached_property
    def logs(self) -> dict:
        return {a: k for k, a in enumerate(self.powers)}

    def exp(self, k: int) -> FieldElement:
        return self.powers[k % len(self.powers)]

    def log(self, a: FieldElement) -> int:
        try:
            return self.logs[a]
        except KeyError:
            raise ValueError(f"{a!r} is not a unit of {self.spec}") from None


@lru_cache(maxsize=None)
def units_table(spec: FieldSpec) -> UnitsTable:
    if not spec.is_finite:
        raise ValueError("the unit group of a cyclotomic field is not finitely tabulable")
    alpha = primitive_element(spec)
    pw, x = [], spec.one
    for _ in range(spec.size - 1):
        pw.append(x)
        x = x * alpha
    return UnitsTable(spec, alpha, tuple(pw))


def units_dictionary(spec: FieldSpec):
    """Pair make_finite_field_units(p, n) with its field realization.

    Returns (module, table) where ``table.exp(k)`` is the field element for
    module coordinate k and ``table.log`` inverts it.
    """
    from .gmodules import make_finite_field_units

    if not spec.is_finite:
        raise ValueError("units_dictionary needs a finite field")
    module, table = make_finite_field_units(spec.p, spec.n)
    return module, table
