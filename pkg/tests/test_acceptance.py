"""One test per acceptance criterion; each asserts its exact claim and its time budget.

The terminal summary (see conftest.py) prints one PASS/FAIL line per test.
"""

import time
from fractions import Fraction
from itertools import product

import pytest

import oracles
from galoiscoh import (coboundary, cochain_from_dict, cochain_from_flat, cohomologous,
                       compute_cohomology, crossed_product, cyclotomic_extension,
                       cyclotomic_tower, deligne_diagonal, diagonal_isomorphism_check,
                       entrywise_lift, express_as_coboundary, finite_extension,
                       finite_field_tower, identity_tower, inflate, inverse_category,
                       is_cocycle, is_simple, make_category, make_finite_field_units,
                       matrix_algebra, morita_trivial, pentagon_check, perturb_lift,
                       teichmuller_cocycle, trivial_category, validate_twmorphism, zero_cochain)
from galoiscoh import linalg
from galoiscoh.algebras import AlgebraError, center_basis
from helpers import module_catalog, random_cochain, random_cocycle, rng

FINITE_FIELDS = [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)]


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert elapsed < self.seconds, f"took {elapsed:.1f}s, budget {self.seconds}s"


def test_oracle_equivalence():
    with Budget(60):
        for label, M in module_catalog():
            for n in range(4):
                counts, order = oracles.brute_cohomology(M.group.table, M.action, M.factors, n)
                H = compute_cohomology(M, n)
                assert H.order == order, (label, n)
                assert oracles.abelian_order_counts(H.structure.invariant_factors) == counts, (label, n)


def _cyclic_tate(M):
    """(|ker N / (s-1)M|, |M^G / N M|) for a cyclic group with generator 1, by enumeration."""
    G = M.group
    elems = list(M.elements())

    def norm(v):
        out = M.zero()
        for g in G.elements():
            out = M.add(out, M.act(g, v))
        return out

    ker_n = [v for v in elems if norm(v) == M.zero()]
    im_s = {M.add(M.act(1, v), M.neg(v)) for v in elems}
    fixed = [v for v in elems if M.act(1, v) == v]
    im_n = {norm(v) for v in elems}
    return len(ker_n) // len(im_s), len(fixed) // len(im_n)


def test_hilbert_90():
    with Budget(10):
        for p, n in FINITE_FIELDS:
            M, _ = make_finite_field_units(p, n)
            H = compute_cohomology(M, 1)
            assert H.structure.invariant_factors == (), (p, n)
            assert _cyclic_tate(M)[0] == 1


def test_brauer_vanishing_finite_fields():
    with Budget(30):
        for p, n in FINITE_FIELDS:
            M, _ = make_finite_field_units(p, n)
            H = compute_cohomology(M, 2)
            assert H.structure.invariant_factors == (), (p, n)
            assert _cyclic_tate(M)[1] == 1


def test_pentagon_iff_cocycle():
    with Budget(300):
        for ext in (finite_extension(2, 2), cyclotomic_extension(4)):
            M = ext.coefficients
            assert M.group.order == 2
            d = M.factors[0]
            assert M.action[1] == ((d - 1,),)
            agree = accepted = 0
            for vals in product(range(d), repeat=8):
                c = cochain_from_flat(M, 3, vals)
                p = bool(pentagon_check(ext, c))
                assert p == bool(is_cocycle(c)), vals
                agree += 1
                accepted += p
            assert agree == d ** 8
            assert accepted > 1


PSI_EXTENSIONS = [
    lambda: finite_extension(2, 2),
    lambda: finite_extension(2, 3),
    lambda: finite_extension(3, 2, 2),
    lambda: cyclotomic_extension(4),
]


def test_psi_homomorphism():
    with Budget(60):
        r = rng(11)
        for make in PSI_EXTENSIONS:
            ext = make()
            M = ext.coefficients
            for _ in range(50):
                z1, z2 = random_cocycle(M, 3, r), random_cocycle(M, 3, r)
                c1, c2 = make_category(ext, z1), make_category(ext, z2)
                prod = deligne_diagonal(c1, c2)
                tau = cohomologous(prod.omega, z1 + z2)
                assert tau is not None
                assert coboundary(tau) == prod.omega - (z1 + z2)
                inv = deligne_diagonal(c1, inverse_category(c1))
                w = express_as_coboundary(inv.omega)
                assert w is not None and coboundary(w) == inv.omega


def _towers():
    return [
        ("F4<F16<F256", finite_field_tower(2, 2, 4), finite_field_tower(2, 4, 8)),
        ("F2<F4<F16", finite_field_tower(2, 1, 2), finite_field_tower(2, 2, 4)),
        ("Q4<Q8<Q16", cyclotomic_tower(4, 4, 8, 8), cyclotomic_tower(8, 8, 16, 16)),
    ]


def test_inflation_coherence():
    with Budget(30):
        r = rng(5)
        # values pushed through Z/3 -> Z/15 by the index-5 inclusion
        assert finite_field_tower(2, 2, 4).morphism.module_map == ((5,),)
        for label, t1, t2 in _towers():
            t12 = t1.then(t2)
            for t in (t1, t2, t12):
                validate_twmorphism(t.morphism)
            for n in range(4):
                for _ in range(3):
                    c = random_cochain(t1.lower.coefficients, n, r)
                    for t in (t1, t12):
                        m = t.morphism
                        assert coboundary(inflate(m, c)) == inflate(m, coboundary(c)), (label, n)
                    assert inflate(t12.morphism, c) == inflate(t2.morphism, inflate(t1.morphism, c))
                    d = random_cochain(t2.lower.coefficients, n, r)
                    assert coboundary(inflate(t2.morphism, d)) == inflate(t2.morphism, coboundary(d))


def _random_unit(A, r):
    F = A.field
    elems = F.elements()
    while True:
        x = tuple(r.choice(elems) for _ in range(A.dim))
        try:
            A.inverse(x)
            return x
        except AlgebraError:
            continue


def _lift_family(A, ext, r):
    return [perturb_lift(entrywise_lift(A, ext.auts[g]), _random_unit(A, r))
            for g in ext.group.elements()]


def test_teichmuller_suite():
    with Budget(120):
        r = rng(3)
        for p in (2, 3):
            ext = finite_extension(p, 2)
            for n in (1, 2):
                A = matrix_algebra(ext.field, n)
                strict = [entrywise_lift(A, ext.auts[g]) for g in ext.group.elements()]
                t0 = teichmuller_cocycle(A, strict, ext)
                assert is_cocycle(t0)
                assert t0.is_zero()
                families = [_lift_family(A, ext, r) for _ in range(4)]
                values = [teichmuller_cocycle(A, fam, ext) for fam in families]
                for t in values:
                    assert is_cocycle(t)
                    tau = express_as_coboundary(t - t0)
                    assert tau is not None and coboundary(tau) == t - t0
                for a, b in zip(values, values[1:]):
                    tau = cohomologous(a, b)
                    assert tau is not None and coboundary(tau) == a - b


def _random_rational(r):
    return Fraction(r.randint(-20, 20), r.randint(1, 9))


def test_crossed_product_suite():
    with Budget(60):
        # beta = 1 over F_4 / F_2
        ext = finite_extension(2, 2)
        cp = crossed_product(ext, zero_cochain(ext.coefficients, 2))
        A = cp.algebra
        assert A.associativity_violation() is None
        assert cp.l_dimension == 2 and A.dim == 4
        center = center_basis(A)
        assert len(center) == 1
        assert A.mul(center[0], A.unit) == center[0]
        assert is_simple(A)

        # quaternions over Q(i): beta(s, s) = -1 = zeta_4^2
        qext = cyclotomic_extension(4)
        beta = cochain_from_dict(qext.coefficients, 2, {(1, 1): (2,)})
        qp = crossed_product(qext, beta)
        Q = qp.algebra
        assert len(center_basis(Q)) == 1 and is_simple(Q)
        u = qp.u(1)
        assert Q.mul(u, u) == qp.embed(-qext.field.one)
        i = qext.field.gen
        assert Q.mul(u, qp.embed(i)) == Q.mul(qp.embed(-i), u)
        r = rng(8)
        F = qext.field
        K = Q.field
        for _ in range(100):
            a, b, c, d = (_random_rational(r) for _ in range(4))
            if not any((a, b, c, d)):
                a = Fraction(1)
            x = qp.element({0: F.element([a, b]), 1: F.element([c, d])})
            det = linalg.determinant(Q.left_matrix(x), K.zero, K.one)
            nrd = a * a + b * b + c * c + d * d
            assert nrd != 0
            assert det == K.scalar(nrd * nrd)

        # cohomologous factor sets give isomorphic crossed products
        for e in (ext, finite_extension(3, 2), qext):
            for _ in range(3):
                b1 = random_cocycle(e.coefficients, 2, r)
                tau = random_cochain(e.coefficients, 1, r)
                b2 = b1 - coboundary(tau)
                assert diagonal_isomorphism_check(e, b1, b2, tau)
                wrong = tau + random_cochain(e.coefficients, 1, r)
                if coboundary(wrong) != coboundary(tau):
                    assert not diagonal_isomorphism_check(e, b1, b2, wrong)


def test_morita_semantics():
    with Budget(30):
        r = rng(2)
        for ext in (finite_extension(2, 2), finite_extension(3, 2), cyclotomic_extension(4)):
            rep = morita_trivial(trivial_category(ext))
            assert rep.trivial is True and rep.level == 0
            assert coboundary(rep.witness).is_zero()
            for _ in range(3):
                tau = random_cochain(ext.coefficients, 2, r)
                cat = make_category(ext, coboundary(tau))
                rep = morita_trivial(cat)
                assert rep.trivial is True and rep.level == 0
                assert coboundary(rep.witness) == cat.omega

        # mu_2 in F_9^x: a class that dies in F_81 but not in F_729
        ext = finite_extension(3, 2, 2)
        H = compute_cohomology(ext.coefficients, 3)
        assert H.structure.invariant_factors == (2,)
        cat = make_category(ext, H.cocycle([1]))
        kill = finite_field_tower(3, 2, 4, 2, 2)
        other = finite_field_tower(3, 2, 6, 2, 2)
        for probes in ([], [identity_tower(ext)], [other], [identity_tower(ext), other]):
            rep = morita_trivial(cat, probes)
            assert rep.trivial is None and rep.status == "inconclusive"
        rep = morita_trivial(cat, [other, kill])
        assert rep.trivial is True and rep.level == 2
        assert coboundary(rep.witness) == inflate(kill.morphism, cat.omega)
        rep = morita_trivial(cat, [kill, other])
        assert rep.level == 1


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
