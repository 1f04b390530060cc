"""Shared builders for tests: a small module catalog and random cochains."""

import random
from itertools import product

from galoiscoh import (coboundary, cochain_from_flat, compute_cohomology, make_cyclic,
                       make_module, make_trivial_module)


def module_catalog():
    """(label, module) for every group of order <= 3 and coefficient module of
    order <= 4 considered: all trivial actions plus the nontrivial ones."""
    out = []
    for q in (1, 2, 3):
        G = make_cyclic(q)
        for fs in ([], [2], [3], [4], [2, 2]):
            out.append((f"C{q} trivial {fs}", make_trivial_module(G, fs)))
    C2, C3 = make_cyclic(2), make_cyclic(3)
    out += [
        ("C2 on Z/3 by -1", make_module(C2, [3], {1: [[2]]})),
        ("C2 on Z/4 by -1", make_module(C2, [4], {1: [[3]]})),
        ("C2 swapping (Z/2)^2", make_module(C2, [2, 2], {1: [[0, 1], [1, 0]]})),
        ("C2 shearing (Z/2)^2", make_module(C2, [2, 2], {1: [[1, 1], [0, 1]]})),
        ("C3 rotating (Z/2)^2", make_module(C3, [2, 2], {1: [[0, 1], [1, 1]]})),
    ]
    return out


def random_flat(M, n, rng):
    size = M.group.order ** n
    out = []
    for _ in range(size):
        out.extend(rng.randrange(d) if d else rng.randrange(-5, 6) for d in M.factors)
    return out


def random_cochain(M, n, rng):
    return cochain_from_flat(M, n, random_flat(M, n, rng))


def random_cocycle(M, n, rng):
    """A random class representative plus a random coboundary."""
    H = compute_cohomology(M, n)
    coords = [rng.randrange(d) if d else rng.randrange(-3, 4) for d in H.structure.invariant_factors]
    z = H.cocycle(coords)
    if n > 0:
        z = z + coboundary(random_cochain(M, n - 1, rng))
    return z


def rng(seed=0):
    return random.Random(seed)


def all_flat(M, n):
    return product(*[range(d) for _ in range(M.group.order ** n) for d in M.factors])
