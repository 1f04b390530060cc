"""Brute-force reference computations, written without the library's linear algebra.

Cochains here are plain dicts keyed by argument tuples; the coboundary is
re-implemented from the bar-complex formula.
"""

from collections import Counter
from itertools import product
from math import gcd

ENUMERATION_LIMIT = 2 ** 16
FULL_COMPLEX_LIMIT = 2 ** 12


def module_elements(factors):
    return list(product(*[range(d) for d in factors]))


def act(action, factors, g, v):
    A = action[g]
    return tuple(sum(a * x for a, x in zip(row, v)) % d for row, d in zip(A, factors))


def add(factors, u, v, sign=1):
    return tuple((a + sign * b) % d for a, b, d in zip(u, v, factors))


def coboundary(table, action, factors, n, c, at=None):
    """(dc)(g1..g_{n+1}) from the bar formula, c a dict on n-tuples; ``at``
    restricts evaluation to the given (n+1)-tuples."""
    q = len(table)
    out = {}
    for t in (product(range(q), repeat=n + 1) if at is None else at):
        v = act(action, factors, t[0], c[t[1:]])
        for i in range(1, n + 1):
            merged = t[:i - 1] + (table[t[i - 1]][t[i]],) + t[i + 1:]
            v = add(factors, v, c[merged], -1 if i % 2 else 1)
        v = add(factors, v, c[t[:n]], -1 if (n + 1) % 2 else 1)
        out[t] = v
    return out


def _domain(q, n, normalized):
    return [t for t in product(range(q), repeat=n) if not normalized or 0 not in t]


def all_cochains(q, factors, n, normalized):
    """Every cochain of degree n (normalized ones vanish on tuples containing 0)."""
    zero = tuple(0 for _ in factors)
    full = list(product(range(q), repeat=n))
    dom = _domain(q, n, normalized)
    elems = module_elements(factors)
    for vals in product(elems, repeat=len(dom)):
        c = dict.fromkeys(full, zero)
        c.update(zip(dom, vals))
        yield c


def cochain_count(q, factors, n, normalized):
    size = 1
    for d in factors:
        size *= d
    return size ** len(_domain(q, n, normalized))


def choose_complex(q, factors, n):
    """Full bar complex when it is small enough, otherwise the normalized one."""
    if cochain_count(q, factors, n, False) <= FULL_COMPLEX_LIMIT:
        return False
    if cochain_count(q, factors, n, True) <= ENUMERATION_LIMIT:
        return True
    raise ValueError("instance too large for brute force")


def brute_cohomology(table, action, factors, n):
    """Return the sorted multiset of element orders of H^n, and |H^n|."""
    q = len(table)
    normalized = choose_complex(q, factors, n)
    check_at = _domain(q, n + 1, normalized)
    flat_keys = list(product(range(q), repeat=n))

    def key(c):
        return tuple(c[t] for t in flat_keys)

    cocycles = []
    for c in all_cochains(q, factors, n, normalized):
        if all(not any(coboundary(table, action, factors, n, c, (t,))[t]) for t in check_at):
            cocycles.append(key(c))
    if n == 0:
        boundaries = {key(dict.fromkeys(flat_keys, tuple(0 for _ in factors)))}
    else:
        boundaries = set()
        for b in all_cochains(q, factors, n - 1, normalized):
            d = coboundary(table, action, factors, n - 1, b)
            boundaries.add(tuple(d[t] for t in flat_keys))
    assert len(cocycles) % len(boundaries) == 0
    order = len(cocycles) // len(boundaries)

    def scale(k, z):
        return tuple(tuple((k * x) % f for x, f in zip(v, factors)) for v in z)

    # element orders of cosets; each coset is counted |B| times
    counts = Counter()
    for z in cocycles:
        k = 1
        while scale(k, z) not in boundaries:
            k += 1
        counts[k] += 1
    return {k: v // len(boundaries) for k, v in counts.items()}, order


def abelian_order_counts(invariant_factors):
    """Element-order histogram of Z/d1 x ... x Z/dk, by enumeration."""
    counts = Counter()
    for v in product(*[range(d) for d in invariant_factors]):
        o = 1
        for x, d in zip(v, invariant_factors):
            o = o * (d // gcd(x, d)) // gcd(o, d // gcd(x, d))
        counts[o] += 1
    return dict(counts)


def determinantal_divisors(M):
    """d_k = gcd of all k x k minors, by expansion (small matrices only)."""
    from itertools import combinations

    def det(rows):
        if len(rows) == 1:
            return rows[0][0]
        return sum((-1) ** j * rows[0][j] * det([r[:j] + r[j + 1:] for r in rows[1:]])
                   for j in range(len(rows)))

    m = len(M)
    n = len(M[0]) if M else 0
    out = []
    for k in range(1, min(m, n) + 1):
        g = 0
        for rs in combinations(range(m), k):
            for cs in combinations(range(n), k):
                g = gcd(g, det([[M[r][c] for c in cs] for r in rs]))
        out.append(g)
    return out


def coset_count(M, moduli_box):
    """|Z^r / (col span of M)| restricted to a finite box: counts the image of the
    columns in prod Z/moduli_box (used when the cokernel is finite and the box
    is a multiple of the exponent)."""
    r = len(moduli_box)
    cols = [[M[i][j] for i in range(r)] for j in range(len(M[0]) if M else 0)]
    span = {tuple(0 for _ in range(r))}
    frontier = list(span)
    while frontier:
        nxt = []
        for v in frontier:
            for c in cols:
                w = tuple((a + b) % m for a, b, m in zip(v, c, moduli_box))
                if w not in span:
                    span.add(w)
                    nxt.append(w)
        frontier = nxt
    total = 1
    for m in moduli_box:
        total *= m
    return total // len(span)


def group_type_by_orders(table):
    """Element-order histogram of a group given by its table."""
    q = len(table)
    counts = Counter()
    for a in range(q):
        x, k = a, 1
        while x != 0:
            x = table[x][a]
            k += 1
        counts[k] += 1
    return dict(counts)
